#pragma once

#include <cstdint>
#include <optional>

#include "clusterent/bloch.hpp"
#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

/// S(sigma||rho) = tr[sigma log2 sigma - sigma log2 rho] in bits.
/// Returns +infinity when sigma has weight above 1e-10 in rho's kernel.
double relative_entropy(const DensityOp& sigma, const DensityOp& rho);

/// d/dx S(sigma || (1-x) rho + x tau) at x = 0, in bits.
///
/// Evaluated in rho's eigenbasis via divided differences of the natural log:
/// entry (i,j) of the transformed (rho - tau) is scaled by
/// (ln l_i - ln l_j)/(l_i - l_j), by 1/l_i on coincident eigenvalues,
/// restricted to rho's support, traced against sigma and divided by ln 2.
/// Returns +infinity when sigma's support leaves rho's support.
double directional_gradient(const DensityOp& sigma, const DensityOp& rho, const DensityOp& tau);

/// Closed form of the gradient at a flat-spectrum candidate whose support
/// carries the pure state: (1 - 2^flat_rank_log2 |<psi|tau>|^2) / ln 2.
double cluster_gradient_closed_form(const Ket& cluster, int flat_rank_log2,
                                    const BlochProduct& tau);

struct GradientCertificate {
    DensityOp candidate;
    int samples = 0;
    double min_gradient = 0.0;
    /// Pure-cluster closed-form minimum, set where the flat-spectrum form
    /// applies.
    std::optional<double> analytic_min;
    BlochProduct worst_sample;

    bool passes() const { return min_gradient >= kGradientFloor; }
};

struct ScanOptions {
    int samples = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Samples product directions (Haar per qubit; sample i drawn from
/// derive_seed(seed, i)) and records the minimum directional gradient at rho
/// together with the worst sample.
GradientCertificate gradient_scan(const DensityOp& sigma, const DensityOp& rho,
                                  const ScanOptions& options = {});

struct ReeResult {
    double entanglement_bits = 0.0;
    int predicted_bits = 0;  // |A| of the graph coloring
    GradientCertificate certificate;
};

/// Relative entropy between the pure cluster state and its dephased
/// candidate. Checks the |A|-bit prediction to 1e-9 and attaches a gradient
/// certificate with the closed-form minimum derived from the maximal product
/// overlap.
ReeResult ree_pure_cluster(const QubitGraph& graph, const ScanOptions& options = {});

}  // namespace clusterent
