#pragma once

#include <cstdint>
#include <vector>

#include "clusterent/bloch.hpp"
#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

struct OverlapOptions {
    int restarts = 64;
    std::uint64_t seed = 1;
    int threads = 1;
    double tol = 1e-12;
    int max_sweeps = 500;
};

struct OverlapResult {
    double value = 0.0;  // max over product states of |<psi|tau>|^2
    BlochProduct argmax;
    int restarts = 0;
};

/// Maximises |<psi|tau>|^2 over pure product states by alternating
/// single-site updates: with all other sites fixed the optimal site vector is
/// the normalised conjugate environment, so each update is exact and the
/// value climbs monotonically. Restart r uses the stream derive_seed(seed, r)
/// regardless of thread count; ties between restarts break toward the lower
/// index.
OverlapResult max_product_overlap(const Ket& state, const OverlapOptions& options = {});

struct SurfaceRow {
    double a = 0.0;
    double b = 0.0;
    double two_tr = 0.0;  // 2 |<psi_2| (a,sqrt(1-a^2)) x (b,sqrt(1-b^2)) >|^2
};

/// Real-amplitude product overlap surface for the two-qubit cluster state on
/// a resolution x resolution grid over [0,1]^2.
std::vector<SurfaceRow> overlap_surface(int resolution);

/// |<psi_{k+2}| tau_k x tau_2 |psi_{k+2}> - <psi_k|tau_k|psi_k><psi_2|tau_2|psi_2>|
/// for open chains joined by a CZ between qubits k and k+1.
double factorization_deviation(int k, const BlochProduct& tau_k, const BlochProduct& tau_2);

struct FactorizationResult {
    double max_deviation = 0.0;
    BlochProduct worst_tau_k;
    BlochProduct worst_tau_2;
    int trials = 0;
};

/// Max deviation over random product pairs. This is a numerical probe of the
/// chain-join factorisation identity; nonzero maxima are reported as found.
FactorizationResult factorization_check(int k, int trials, std::uint64_t seed);

}  // namespace clusterent
