#pragma once

#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

/// CZ on every edge applied to |+>^n. Every computational amplitude has
/// magnitude 2^(-n/2).
Ket cluster_state(const QubitGraph& graph);

/// H = -J * sum_j X_j (x) Z_neighbors. Spectrum is J(-n+2k) with binomial
/// degeneracies.
CMatrix hamiltonian(const QubitGraph& graph, double coupling);

/// Thermal parameter bundle; omega = tanh(beta * J).
struct ThermalParams {
    double coupling = 1.0;      // J
    double beta = 0.0;          // inverse temperature
    double omega = 0.0;         // tanh(beta * J)
    double k_boltzmann = 1.0;

    static ThermalParams from_beta(double coupling, double beta, double k_boltzmann = 1.0);
    static ThermalParams from_omega(double omega, double coupling = 1.0, double k_boltzmann = 1.0);
    /// Validates omega = tanh(beta * J) to 1e-12 when both are supplied.
    static ThermalParams checked(double coupling, double beta, double omega,
                                 double k_boltzmann = 1.0);

    double temperature() const;
};

/// Product form 2^-n * prod_j (I + omega K_j); eigenvalues are
/// (1+omega)^(n-k) (1-omega)^k / 2^n with multiplicity C(n,k).
DensityOp thermal_state(const QubitGraph& graph, double omega);

/// exp(-beta H) / tr exp(-beta H) by eigendecomposition of H. Equals
/// thermal_state(graph, tanh(beta*J)) because the generators commute.
DensityOp gibbs_state(const QubitGraph& graph, const ThermalParams& params);

}  // namespace clusterent
