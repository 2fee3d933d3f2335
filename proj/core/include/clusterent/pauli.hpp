#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterent/graph.hpp"
#include "clusterent/types.hpp"

namespace clusterent {

enum class Pauli : char { I = 'I', X = 'X', Z = 'Z' };

/// Signed tensor product of single-site {I, X, Z} letters. X flips a basis
/// bit, Z contributes a sign, so the whole string acts as a signed
/// permutation of basis states; everything stays real.
class PauliString {
  public:
    PauliString(std::vector<Pauli> letters, int sign = +1);

    int n_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int qubit) const { return letters_.at(static_cast<std::size_t>(qubit - 1)); }
    const std::vector<Pauli>& letters() const { return letters_; }
    int sign() const { return sign_; }

    CMatrix to_matrix() const;
    Ket apply(const Ket& state) const;
    /// this * m without materialising the dense operator.
    CMatrix apply_left(const CMatrix& m) const;

    /// Letterwise product. Defined only when no site multiplies X against Z
    /// (such a collision leaves the {I, X, Z} alphabet); returns nullopt in
    /// that case.
    std::optional<PauliString> multiply(const PauliString& other) const;

    std::string str() const;

  private:
    std::vector<Pauli> letters_;
    int sign_;
    std::uint64_t x_mask_ = 0;  // bit n-q set when qubit q carries X
    std::uint64_t z_mask_ = 0;
};

/// One generator per qubit: X at the site, Z on every neighbor, sign +1.
std::vector<PauliString> stabilizers(const QubitGraph& graph);

}  // namespace clusterent
