#pragma once

#include <string>
#include <vector>

#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

/// Local frame that applies Hadamards to one color class (the larger one,
/// B). In this frame a cluster state has 2^|A| nonzero amplitudes and its
/// dephasing is the closest separable candidate.
struct MixedBasisFrame {
    QubitGraph graph;
    std::vector<int> hadamard_class;

    static MixedBasisFrame of(const QubitGraph& graph);
};

/// Hadamard on every qubit of the frame's class; self-inverse.
Ket to_mixed_basis(const Ket& state, const MixedBasisFrame& frame);
DensityOp to_mixed_basis(const DensityOp& rho, const MixedBasisFrame& frame);

/// Dephasing of the cluster projector in the mixed basis, transformed back.
/// Rank 2^|A| with flat spectrum 2^-|A|; commutes with the cluster projector.
DensityOp closest_separable_pure(const QubitGraph& graph);

/// Chain-of-pairs construction: CZ joins between qubits (2,3), (4,5), ...
/// applied to n/2 copies of the two-qubit dephased state. Equals
/// closest_separable_pure(chain:n).
DensityOp operational_construction(int n_qubits);

struct ProductBasisReport {
    bool is_product_basis = false;
    /// Largest |off-diagonal| of rho in the certified local frame (frame
    /// certificate only).
    double max_offdiagonal = 0.0;
    /// Worst Frobenius residual of [rho, n.sigma_q] over qubits (frame
    /// certificate only).
    double max_commutator_residual = 0.0;
    /// Min over eigenvectors above the support cutoff of the min single-qubit
    /// reduced purity.
    double min_purity = 0.0;
    std::string detail;
};

/// Certifies that rho admits an eigenbasis of exact product states, i.e.
/// every eigenvector above the support cutoff is a product across all
/// single-qubit cuts (reduced purity 1 within 1e-9).
///
/// The spectrum of interest here is flat, so solver eigenvectors inside a
/// degenerate eigenspace are basis-arbitrary; checking them directly is
/// ill-posed. Instead this searches, per qubit, for a Bloch direction whose
/// Pauli operator commutes with rho. When every qubit has one, the joint
/// local frame diagonalises rho and its columns are the product eigenbasis.
/// A nondegenerate spectrum with product eigenvectors is also accepted via
/// the direct check.
ProductBasisReport verify_product_eigenbasis(const DensityOp& rho);

}  // namespace clusterent
