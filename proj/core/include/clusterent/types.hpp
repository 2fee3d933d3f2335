#pragma once

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

// Core value types for dense qubit algebra.
//
// Convention used throughout: qubit 1 is the most significant bit of a
// computational basis index, so |q1 q2 ... qn> has index
// q1*2^(n-1) + ... + qn.

namespace clusterent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// A 2^12 square complex matrix is ~268 MB; dense operator work stops there.
inline constexpr int kMaxDenseQubits = 12;
// State vectors stay cheap for longer.
inline constexpr int kMaxKetQubits = 20;

// Relative cutoff (vs the largest eigenvalue) for support and rank decisions.
inline constexpr double kSupportCutoff = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitTraceTol = 1e-12;
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
// Gradient certificates tolerate numerical noise down to this floor.
inline constexpr double kGradientFloor = -1e-8;

bool is_power_of_two(std::size_t value);

// log2 of an exact power of two; throws std::invalid_argument otherwise.
int exact_log2(std::size_t value);

std::uint64_t binomial(int n, int k);

bool all_finite(const CMatrix& m);
double max_abs(const CMatrix& m);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// Unit-norm amplitude vector over the 2^n computational basis states.
class Ket {
  public:
    Ket(int n_qubits, CVector amplitudes);

    static Ket basis_state(int n_qubits, std::size_t index);
    /// |+>^n, the uniform superposition.
    static Ket plus_state(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amplitudes() const { return amps_; }
    Complex amplitude(std::size_t basis_index) const {
        return amps_(static_cast<Eigen::Index>(basis_index));
    }

    /// <this|other>
    Complex inner(const Ket& other) const;

  private:
    int n_qubits_;
    CVector amps_;
};

/// Hermitian, unit-trace operator on n qubits.
///
/// Construction checks Hermiticity, trace and finiteness. Positivity is an
/// O(dim^3) eigensolve and is checked on demand via validate() or
/// min_eigenvalue(); library constructions are positive by construction and
/// the test suites assert it.
class DensityOp {
  public:
    DensityOp(int n_qubits, CMatrix matrix);

    static DensityOp pure(const Ket& psi);
    static DensityOp maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
    const CMatrix& matrix() const { return mat_; }

    double min_eigenvalue() const;
    /// Full invariant check including positivity (min eigenvalue >= -1e-10).
    void validate() const;

  private:
    int n_qubits_;
    CMatrix mat_;
};

}  // namespace clusterent
