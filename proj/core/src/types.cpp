#include "clusterent/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace clusterent {

bool is_power_of_two(std::size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

int exact_log2(std::size_t value) {
    if (!is_power_of_two(value)) {
        throw std::invalid_argument("dimension " + std::to_string(value) +
                                    " is not a power of two");
    }
    int log = 0;
    while (value > 1) {
        value >>= 1;
        ++log;
    }
    return log;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

bool all_finite(const CMatrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const Complex& v = m(r, c);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        }
    }
    return true;
}

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    }
    return (a - b).norm();
}

namespace {

void check_qubit_count(int n_qubits, int max_qubits, const char* what) {
    if (n_qubits < 1 || n_qubits > max_qubits) {
        throw std::invalid_argument(std::string(what) + ": qubit count " +
                                    std::to_string(n_qubits) + " outside [1, " +
                                    std::to_string(max_qubits) + "]");
    }
}

}  // namespace

Ket::Ket(int n_qubits, CVector amplitudes) : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits_, kMaxKetQubits, "Ket");
    const auto dim = std::size_t{1} << n_qubits_;
    if (static_cast<std::size_t>(amps_.size()) != dim) {
        throw std::invalid_argument("Ket: amplitude count " + std::to_string(amps_.size()) +
                                    " does not match 2^" + std::to_string(n_qubits_));
    }
    double norm2 = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        const Complex& v = amps_(i);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("Ket: non-finite amplitude");
        }
        norm2 += std::norm(v);
    }
    if (std::abs(norm2 - 1.0) > 2.0 * kUnitNormTol) {
        throw std::invalid_argument("Ket: squared norm " + std::to_string(norm2) +
                                    " is not 1 within tolerance");
    }
}

Ket Ket::basis_state(int n_qubits, std::size_t index) {
    check_qubit_count(n_qubits, kMaxKetQubits, "Ket");
    const auto dim = std::size_t{1} << n_qubits;
    if (index >= dim) throw std::invalid_argument("Ket::basis_state: index out of range");
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return Ket(n_qubits, std::move(amps));
}

Ket Ket::plus_state(int n_qubits) {
    check_qubit_count(n_qubits, kMaxKetQubits, "Ket");
    const auto dim = std::size_t{1} << n_qubits;
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    return Ket(n_qubits, CVector::Constant(static_cast<Eigen::Index>(dim), Complex(amp, 0.0)));
}

Complex Ket::inner(const Ket& other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("Ket::inner: qubit count mismatch");
    }
    return amps_.dot(other.amps_);  // Eigen's dot conjugates the left argument
}

DensityOp::DensityOp(int n_qubits, CMatrix matrix) : n_qubits_(n_qubits), mat_(std::move(matrix)) {
    check_qubit_count(n_qubits_, kMaxDenseQubits, "DensityOp");
    const auto dim = Eigen::Index{1} << n_qubits_;
    if (mat_.rows() != dim || mat_.cols() != dim) {
        throw std::invalid_argument("DensityOp: matrix is not 2^n x 2^n");
    }
    if (!all_finite(mat_)) throw std::invalid_argument("DensityOp: non-finite entry");
    const double herm = max_abs(mat_ - mat_.adjoint());
    if (herm > kHermitianTol) {
        throw std::invalid_argument("DensityOp: not Hermitian, max |M - M^dag| = " +
                                    std::to_string(herm));
    }
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kUnitTraceTol) {
        throw std::invalid_argument("DensityOp: trace deviates from 1");
    }
}

DensityOp DensityOp::pure(const Ket& psi) {
    if (psi.n_qubits() > kMaxDenseQubits) {
        throw std::invalid_argument("DensityOp::pure: dense limit is 12 qubits");
    }
    CMatrix m = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityOp(psi.n_qubits(), std::move(m));
}

DensityOp DensityOp::maximally_mixed(int n_qubits) {
    check_qubit_count(n_qubits, kMaxDenseQubits, "DensityOp");
    const auto dim = Eigen::Index{1} << n_qubits;
    CMatrix m = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityOp(n_qubits, std::move(m));
}

double DensityOp::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("DensityOp::min_eigenvalue: eigensolver failed");
    }
    return solver.eigenvalues().minCoeff();
}

void DensityOp::validate() const {
    const double lo = min_eigenvalue();
    if (lo < kPsdFloor) {
        throw std::invalid_argument("DensityOp: min eigenvalue " + std::to_string(lo) +
                                    " below the positivity floor");
    }
}

}  // namespace clusterent
