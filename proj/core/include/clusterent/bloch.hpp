#pragma once

#include <random>
#include <vector>

#include "clusterent/types.hpp"

namespace clusterent {

struct BlochAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

/// Pure product state, one (theta, phi) pair per qubit:
/// tau_q = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
class BlochProduct {
  public:
    explicit BlochProduct(std::vector<BlochAngles> angles);

    /// Haar product measure: cos(theta) uniform on [-1,1], phi uniform.
    static BlochProduct random(int n_qubits, std::mt19937_64& rng);
    /// Recovers angles from per-site unit vectors (global phases dropped).
    static BlochProduct from_site_vectors(const std::vector<Eigen::Vector2cd>& sites);

    int n_qubits() const { return static_cast<int>(angles_.size()); }
    const std::vector<BlochAngles>& angles() const { return angles_; }

    Eigen::Vector2cd site_vector(int qubit) const;
    Ket ket() const;
    DensityOp density() const;

    /// Angle concatenation, left block on the most significant qubits.
    static BlochProduct concat(const BlochProduct& left, const BlochProduct& right);

  private:
    std::vector<BlochAngles> angles_;
};

}  // namespace clusterent
