#pragma once

#include <vector>

#include "clusterent/types.hpp"

namespace clusterent {

namespace gates {
CMatrix identity(Eigen::Index dim);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix cz();
}  // namespace gates

/// Tensor product with the first factor on the most significant qubits.
/// Both inputs must be square with power-of-two dimension; the result is
/// refused beyond the dense limit 2^kMaxDenseQubits.
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct HermitianEig {
    Eigen::VectorXd values;  // ascending
    CMatrix vectors;         // orthonormal columns, same order
};

/// Dedicated Hermitian eigensolve; rejects inputs with max |M - M^dag| > 1e-10.
HermitianEig hermitian_eig(const CMatrix& m);

struct SupportLog {
    CMatrix log2_matrix;        // sum over support of log2(lambda) |v><v|
    CMatrix support_projector;  // sum over support of |v><v|
    int rank = 0;
};

/// log2 of a density operator on its support; eigenvalues below
/// kSupportCutoff (relative to the largest) are treated as kernel.
SupportLog matrix_log2_on_support(const DensityOp& rho);

/// Transposes the indices of the listed qubits (1-indexed). The result is
/// Hermitian and trace preserving but in general not positive.
CMatrix partial_transpose(const DensityOp& rho, const std::vector<int>& qubits);

/// Applies a 2^k x 2^k unitary to the ordered qubit list `sites`; sites[0]
/// maps to the gate's most significant bit. Rejects non-unitary gates and
/// repeated site indices.
Ket apply_gate(const Ket& state, const CMatrix& gate, const std::vector<int>& sites);

/// (I x u x I) m, with u acting on one qubit.
CMatrix multiply_single_qubit_left(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits);
/// m (I x u x I).
CMatrix multiply_single_qubit_right(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits);
/// (I x u x I) m (I x u x I)^dag.
CMatrix conjugate_single_qubit(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits);

struct SpectralLine {
    double value = 0.0;
    int multiplicity = 0;
};

/// Groups an ascending eigenvalue list into (level, multiplicity) pairs.
std::vector<SpectralLine> group_spectrum(const Eigen::VectorXd& values, double tol);

}  // namespace clusterent
