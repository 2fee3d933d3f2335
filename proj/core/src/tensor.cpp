#include "clusterent/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace clusterent {

namespace gates {

CMatrix identity(Eigen::Index dim) {
    if (dim < 1) throw std::invalid_argument("identity: dimension must be positive");
    return CMatrix::Identity(dim, dim);
}

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2, 2);
    m << s, s, s, -s;
    return m;
}

CMatrix cz() {
    CMatrix m = CMatrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
}

}  // namespace gates

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) {
        throw std::invalid_argument("kron: inputs must be square");
    }
    if (!is_power_of_two(static_cast<std::size_t>(a.rows())) ||
        !is_power_of_two(static_cast<std::size_t>(b.rows()))) {
        throw std::invalid_argument("kron: dimensions must be powers of two");
    }
    const std::size_t dim = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    if (dim > (std::size_t{1} << kMaxDenseQubits)) {
        throw std::domain_error("kron: result dimension " + std::to_string(dim) +
                                " exceeds the dense limit 2^" + std::to_string(kMaxDenseQubits));
    }
    return Eigen::kroneckerProduct(a, b);
}

HermitianEig hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
    const double herm = max_abs(m - m.adjoint());
    if (herm > 1e-10) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian, max |M - M^dag| = " +
                                    std::to_string(herm));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver((m + m.adjoint()) * 0.5);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver failed");
    }
    return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

SupportLog matrix_log2_on_support(const DensityOp& rho) {
    const HermitianEig eig = hermitian_eig(rho.matrix());
    const double lambda_max = eig.values.maxCoeff();
    const double cutoff = kSupportCutoff * std::max(lambda_max, 0.0);

    const Eigen::Index dim = eig.values.size();
    SupportLog result;
    result.log2_matrix = CMatrix::Zero(dim, dim);
    result.support_projector = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double lambda = eig.values(i);
        if (lambda <= cutoff) continue;
        const CVector v = eig.vectors.col(i);
        result.log2_matrix += std::log2(lambda) * (v * v.adjoint());
        result.support_projector += v * v.adjoint();
        ++result.rank;
    }
    return result;
}

CMatrix partial_transpose(const DensityOp& rho, const std::vector<int>& qubits) {
    const int n = rho.n_qubits();
    std::set<int> unique(qubits.begin(), qubits.end());
    std::size_t mask = 0;
    for (int q : unique) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("partial_transpose: qubit index " + std::to_string(q) +
                                        " outside [1, " + std::to_string(n) + "]");
        }
        mask |= std::size_t{1} << (n - q);
    }
    const std::size_t dim = rho.dim();
    const CMatrix& m = rho.matrix();
    CMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            const std::size_t rt = (r & ~mask) | (c & mask);
            const std::size_t ct = (c & ~mask) | (r & mask);
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m(static_cast<Eigen::Index>(rt), static_cast<Eigen::Index>(ct));
        }
    }
    return out;
}

Ket apply_gate(const Ket& state, const CMatrix& gate, const std::vector<int>& sites) {
    const int n = state.n_qubits();
    const int k = static_cast<int>(sites.size());
    if (k < 1) throw std::invalid_argument("apply_gate: empty site list");
    std::set<int> unique(sites.begin(), sites.end());
    if (static_cast<int>(unique.size()) != k) {
        throw std::invalid_argument("apply_gate: repeated site index");
    }
    for (int s : sites) {
        if (s < 1 || s > n) {
            throw std::invalid_argument("apply_gate: site " + std::to_string(s) + " outside [1, " +
                                        std::to_string(n) + "]");
        }
    }
    const Eigen::Index gdim = Eigen::Index{1} << k;
    if (gate.rows() != gdim || gate.cols() != gdim) {
        throw std::invalid_argument("apply_gate: gate dimension does not match 2^|sites|");
    }
    if (max_abs(gate.adjoint() * gate - CMatrix::Identity(gdim, gdim)) > 1e-10) {
        throw std::invalid_argument("apply_gate: gate is not unitary within 1e-10");
    }

    // offset[g] places the gate basis index g onto the global site bits;
    // sites[0] is the most significant gate bit.
    std::size_t site_mask = 0;
    std::vector<std::size_t> offsets(static_cast<std::size_t>(gdim), 0);
    for (int i = 0; i < k; ++i) {
        const std::size_t bit = std::size_t{1} << (n - sites[static_cast<std::size_t>(i)]);
        site_mask |= bit;
        for (std::size_t g = 0; g < static_cast<std::size_t>(gdim); ++g) {
            if ((g >> (k - 1 - i)) & 1) offsets[g] |= bit;
        }
    }

    const CVector& in = state.amplitudes();
    CVector out(in.size());
    CVector slot(gdim);
    const std::size_t dim = state.dim();
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & site_mask) continue;
        for (Eigen::Index g = 0; g < gdim; ++g) {
            slot(g) = in(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(g)]));
        }
        slot = (gate * slot).eval();
        for (Eigen::Index g = 0; g < gdim; ++g) {
            out(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(g)])) = slot(g);
        }
    }
    return Ket(n, std::move(out));
}

CMatrix multiply_single_qubit_left(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("multiply_single_qubit_left: operator must be 2x2");
    }
    if (qubit < 1 || qubit > n_qubits) {
        throw std::invalid_argument("multiply_single_qubit_left: qubit out of range");
    }
    const std::size_t bit = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = static_cast<std::size_t>(m.rows());
    CMatrix out(m.rows(), m.cols());
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
        if (r0 & bit) continue;
        const auto i0 = static_cast<Eigen::Index>(r0);
        const auto i1 = static_cast<Eigen::Index>(r0 | bit);
        out.row(i0) = u(0, 0) * m.row(i0) + u(0, 1) * m.row(i1);
        out.row(i1) = u(1, 0) * m.row(i0) + u(1, 1) * m.row(i1);
    }
    return out;
}

CMatrix multiply_single_qubit_right(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("multiply_single_qubit_right: operator must be 2x2");
    }
    if (qubit < 1 || qubit > n_qubits) {
        throw std::invalid_argument("multiply_single_qubit_right: qubit out of range");
    }
    const std::size_t bit = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = static_cast<std::size_t>(m.cols());
    CMatrix out(m.rows(), m.cols());
    for (std::size_t c0 = 0; c0 < dim; ++c0) {
        if (c0 & bit) continue;
        const auto j0 = static_cast<Eigen::Index>(c0);
        const auto j1 = static_cast<Eigen::Index>(c0 | bit);
        out.col(j0) = m.col(j0) * u(0, 0) + m.col(j1) * u(1, 0);
        out.col(j1) = m.col(j0) * u(0, 1) + m.col(j1) * u(1, 1);
    }
    return out;
}

CMatrix conjugate_single_qubit(const CMatrix& m, const CMatrix& u, int qubit, int n_qubits) {
    const CMatrix left = multiply_single_qubit_left(m, u, qubit, n_qubits);
    return multiply_single_qubit_right(left, u.adjoint(), qubit, n_qubits);
}

std::vector<SpectralLine> group_spectrum(const Eigen::VectorXd& values, double tol) {
    std::vector<SpectralLine> lines;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (!lines.empty() && values(i) - lines.back().value <= tol) {
            // running mean keeps the representative centred on the level
            auto& line = lines.back();
            line.value = (line.value * line.multiplicity + values(i)) / (line.multiplicity + 1);
            ++line.multiplicity;
        } else {
            lines.push_back(SpectralLine{values(i), 1});
        }
    }
    return lines;
}

}  // namespace clusterent
