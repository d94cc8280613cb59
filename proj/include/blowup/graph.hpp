#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "blowup/errors.hpp"

namespace blowup {

// Finite simple graph on vertices 0..n-1. Adjacency is kept as one bitset
// row per vertex, so n is limited to 62 (the graph6 single-byte range).
class Graph {
  public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;
    explicit Graph(int n);

    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;

    // Edges as sorted (u < v) pairs in lexicographic order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::pair<int, int>> edges_;
};

// Subset of the vertices of a graph with parent_n vertices.
struct VertexSubset {
    int parent_n = 0;
    std::uint64_t members = 0;

    int count() const { return __builtin_popcountll(members); }
    bool contains(int v) const { return (members >> v) & 1u; }
    bool empty() const { return members == 0; }
    int min_vertex() const { return __builtin_ctzll(members); }
    std::vector<int> vertices() const;

    static VertexSubset full(int n);
    static VertexSubset of(int parent_n, std::initializer_list<int> vs);

    bool operator==(const VertexSubset&) const = default;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_labels;  // induced label -> parent label, ascending
};

// Text parsing ---------------------------------------------------------

// Lines of "u v" with optional first line "n <count>"; '#' starts a
// comment line; blank lines are ignored. Duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

// graph6 interchange format, single-byte size form only (n <= 62).
Graph parse_graph6(std::string_view text);

// Subgraphs ------------------------------------------------------------

// Vertices of `sub` relabeled 0..k-1 in ascending order of parent labels.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& sub);

// Every nonempty vertex subset whose induced subgraph is connected, each
// exactly once. Order: by minimum vertex, then ascending bitmask.
std::vector<VertexSubset> enumerate_connected_subsets(const Graph& g);

// Every nonempty vertex subset, same ordering (for cross-validation runs).
std::vector<VertexSubset> enumerate_all_subsets(const Graph& g);

bool is_connected(const Graph& g);

// Largest adjacency eigenvalue (0 for edgeless graphs).
double spectral_radius(const Graph& g);

}  // namespace blowup
