#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "clusterent/cluster.hpp"
#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

/// Two-qubit thermal parameter where the partial transpose loses positivity.
inline double omega_critical() { return std::sqrt(2.0) - 1.0; }

struct CriticalPoint {
    double omega_c = 0.0;
    double t_critical = 0.0;
    double coupling = 1.0;
    double k_boltzmann = 1.0;
};

/// Bisection root of the minimal partial-transpose eigenvalue of the
/// two-qubit thermal state on [0,1] to 1e-12 in omega; cross-checked against
/// the analytic root sqrt(2)-1 to 1e-10.
CriticalPoint critical_omega_2qubit(double coupling = 1.0, double k_boltzmann = 1.0);

/// Closed form T_c = -2J / (k_B ln(sqrt(2)-1)), equivalently
/// 2J / (k_B ln(1+sqrt(2))).
CriticalPoint critical_temperature(double coupling, double k_boltzmann);

struct PptRow {
    std::vector<int> subset;     // transposed qubits, 1-indexed
    double min_eigenvalue = 0.0;
};

/// Minimal partial-transpose eigenvalue for every nonempty proper subset up
/// to complement symmetry, in deterministic subset order. Requires n <= 10.
std::vector<PptRow> ppt_report(const DensityOp& rho);

/// Min over the ppt_report rows.
double min_ppt_eigenvalue(const DensityOp& rho);

struct SweepRow {
    double omega = 0.0;
    double temperature = 0.0;
    double entanglement_bits = 0.0;
    double min_ppt_eig = 0.0;
};

/// Per grid point: divergence of the thermal state to the omega_c reference,
/// the matching temperature (J = k_B = 1) and the minimal PPT eigenvalue.
/// The grid must be strictly increasing inside [0,1]. For n > 2 the
/// divergence column is an upper-bound proxy rather than a certified measure.
std::vector<SweepRow> thermal_entanglement_curve(const QubitGraph& graph,
                                                 const std::vector<double>& omega_grid,
                                                 int threads = 1);

struct LambdaResult {
    double omega = 0.0;
    double lambda_star = 0.0;
    double objective_at_min = 0.0;  // bits
    double formula_value = 0.0;     // |2 / ((sqrt(2)-2)(3+omega))|
    /// Set when the objective is flat to 1e-12 (pure limit); any lambda in
    /// the interval attains the minimum.
    std::optional<std::pair<double, double>> flat_interval;
};

/// Minimises S(sigma_2(omega) || (1-lambda) rho*_2 + lambda sigma_2(omega_c))
/// over lambda in [0,1] by golden-section search to 1e-10. The objective is
/// convex in lambda, so the search is exact up to tolerance. Accepts
/// omega in (omega_c, 1].
LambdaResult lambda_star(double omega);

/// |2 / ((sqrt(2)-2)(3+omega))|, the closed-form candidate magnitude.
double lambda_formula_magnitude(double omega);

}  // namespace clusterent
