#pragma once

#include <string>
#include <utility>
#include <vector>

namespace clusterent {

enum class Color { A, B };

/// Bipartite qubit graph with a fixed two-coloring.
///
/// The color classes satisfy |A| <= |B|; when the classes tie, qubit 1 lands
/// in A. Qubits are 1-indexed.
class QubitGraph {
  public:
    static QubitGraph chain(int length);
    /// Open-boundary grid, row-major numbering, 4-neighbor edges.
    static QubitGraph lattice(int rows, int cols);
    /// Explicit edge list; rejects self-loops, duplicates and odd cycles.
    static QubitGraph from_edges(int n, std::vector<std::pair<int, int>> edges);
    /// Plain-text format: `n <count>` line, then one `i j` pair per line,
    /// 1-indexed; `#` starts a comment.
    static QubitGraph from_file(const std::string& path);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    Color color(int qubit) const;
    std::vector<int> class_a() const;
    std::vector<int> class_b() const;
    const std::vector<int>& neighbors(int qubit) const;

  private:
    QubitGraph(int n, std::vector<std::pair<int, int>> edges);

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Color> color_;
    std::vector<std::vector<int>> adjacency_;
};

/// Grammar: `chain:N`, `lattice:RxC`, `file:<path>`.
QubitGraph make_graph(const std::string& spec);

}  // namespace clusterent
