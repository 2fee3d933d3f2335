#include "clusterent/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterent {

namespace {

std::pair<int, int> ordered_edge(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

}  // namespace

QubitGraph::QubitGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("QubitGraph: need at least one qubit");

    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.first < 1 || e.first > n_ || e.second < 1 || e.second > n_) {
            throw std::invalid_argument("QubitGraph: edge endpoint outside [1, " +
                                        std::to_string(n_) + "]");
        }
        if (e.first == e.second) {
            throw std::invalid_argument("QubitGraph: self-loop at qubit " +
                                        std::to_string(e.first));
        }
        e = ordered_edge(e.first, e.second);
        if (!seen.insert(e).second) {
            throw std::invalid_argument("QubitGraph: duplicate edge (" +
                                        std::to_string(e.first) + ", " +
                                        std::to_string(e.second) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());

    adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    // Breadth-first two-coloring, component by component.
    std::vector<int> side(static_cast<std::size_t>(n_) + 1, -1);
    for (int start = 1; start <= n_; ++start) {
        if (side[static_cast<std::size_t>(start)] != -1) continue;
        side[static_cast<std::size_t>(start)] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const int q = frontier.front();
            frontier.pop();
            for (int nb : adjacency_[static_cast<std::size_t>(q)]) {
                if (side[static_cast<std::size_t>(nb)] == -1) {
                    side[static_cast<std::size_t>(nb)] = 1 - side[static_cast<std::size_t>(q)];
                    frontier.push(nb);
                } else if (side[static_cast<std::size_t>(nb)] ==
                           side[static_cast<std::size_t>(q)]) {
                    throw std::invalid_argument(
                        "QubitGraph: not bipartite, qubits " + std::to_string(q) + " and " +
                        std::to_string(nb) +
                        " share an edge but sit on an odd cycle; a proper two-coloring "
                        "does not exist");
                }
            }
        }
    }

    int count0 = 0;
    for (int q = 1; q <= n_; ++q) count0 += (side[static_cast<std::size_t>(q)] == 0) ? 1 : 0;
    const int count1 = n_ - count0;
    // A is the smaller class; equal sizes put qubit 1 in A.
    int a_side;
    if (count0 != count1) {
        a_side = (count0 < count1) ? 0 : 1;
    } else {
        a_side = side[1];
    }
    color_.assign(static_cast<std::size_t>(n_) + 1, Color::B);
    for (int q = 1; q <= n_; ++q) {
        color_[static_cast<std::size_t>(q)] =
            (side[static_cast<std::size_t>(q)] == a_side) ? Color::A : Color::B;
    }
}

QubitGraph QubitGraph::chain(int length) {
    if (length < 1) throw std::invalid_argument("chain: length must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < length; ++i) edges.emplace_back(i, i + 1);
    return QubitGraph(length, std::move(edges));
}

QubitGraph QubitGraph::lattice(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("lattice: dimensions must be >= 1");
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return QubitGraph(rows * cols, std::move(edges));
}

QubitGraph QubitGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    return QubitGraph(n, std::move(edges));
}

QubitGraph QubitGraph::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph file: cannot open '" + path + "'");

    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        if (n < 0) {
            std::string tag;
            if (!(ss >> tag)) continue;  // blank line before the header
            int count = 0;
            if (tag != "n" || !(ss >> count)) {
                throw std::invalid_argument("graph file: line " + std::to_string(line_no) +
                                            ": expected header 'n <count>'");
            }
            n = count;
            continue;
        }
        int i = 0, j = 0;
        if (!(ss >> i)) continue;  // blank line
        if (!(ss >> j)) {
            throw std::invalid_argument("graph file: line " + std::to_string(line_no) +
                                        ": expected 'i j' edge pair");
        }
        edges.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("graph file: missing 'n <count>' header");
    return QubitGraph(n, std::move(edges));
}

Color QubitGraph::color(int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::invalid_argument("color: qubit out of range");
    return color_[static_cast<std::size_t>(qubit)];
}

std::vector<int> QubitGraph::class_a() const {
    std::vector<int> out;
    for (int q = 1; q <= n_; ++q) {
        if (color_[static_cast<std::size_t>(q)] == Color::A) out.push_back(q);
    }
    return out;
}

std::vector<int> QubitGraph::class_b() const {
    std::vector<int> out;
    for (int q = 1; q <= n_; ++q) {
        if (color_[static_cast<std::size_t>(q)] == Color::B) out.push_back(q);
    }
    return out;
}

const std::vector<int>& QubitGraph::neighbors(int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::invalid_argument("neighbors: qubit out of range");
    return adjacency_[static_cast<std::size_t>(qubit)];
}

QubitGraph make_graph(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("graph spec '" + spec +
                                    "': expected chain:N, lattice:RxC or file:<path>");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "chain") {
        try {
            std::size_t used = 0;
            const int len = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("");
            return QubitGraph::chain(len);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("graph spec '" + spec + "': chain wants chain:N");
        }
    }
    if (kind == "lattice") {
        const auto x = rest.find('x');
        if (x == std::string::npos) {
            throw std::invalid_argument("graph spec '" + spec + "': lattice wants lattice:RxC");
        }
        try {
            std::size_t ur = 0, uc = 0;
            const std::string rs = rest.substr(0, x);
            const std::string cs = rest.substr(x + 1);
            const int rows = std::stoi(rs, &ur);
            const int cols = std::stoi(cs, &uc);
            if (ur != rs.size() || uc != cs.size()) throw std::invalid_argument("");
            return QubitGraph::lattice(rows, cols);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("graph spec '" + spec + "': lattice wants lattice:RxC");
        }
    }
    if (kind == "file") {
        return QubitGraph::from_file(rest);
    }
    throw std::invalid_argument("graph spec '" + spec +
                                "': unknown kind '" + kind + "'");
}

}  // namespace clusterent
