#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circsym/common.hpp"

namespace circsym {

// Immutable undirected graph with stable vertex indexing. Adjacency is kept
// as sorted neighbor lists; no self-loops, no multi-edges.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<int>& neighbors(int v) const;
    std::vector<int> closed_neighborhood(int v) const;
    bool adjacent(int u, int v) const;

    const std::string& label(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // each pair (a, b) with a < b, sorted

    // DOT: undirected graph, vertex label lines first, one edge per line,
    // edge lines sorted lexicographically. Byte-stable across runs.
    std::string to_dot() const;
    // JSON: {"vertices":[names], "edges":[[a,b],...]} with a < b, sorted.
    std::string to_json() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

enum class TwinKind { Adjacent, Nonadjacent, Singleton };

// Partition of the vertices by the twin relation: u ~ v when N(u) = N(v)
// (nonadjacent twins) or N[u] = N[v] (adjacent twins).
struct TwinPartition {
    std::vector<std::vector<int>> classes;  // sorted members, ordered by min member
    std::vector<TwinKind> kinds;            // parallel to classes
    std::vector<int> class_of;              // vertex -> class index

    bool twin_free() const;
    std::vector<std::vector<int>> nontrivial_classes() const;
};

TwinPartition twin_partition(const Graph& g);

/// All unordered pairs {u, v} with N[u] equal to the complement of N[v].
std::vector<std::pair<int, int>> co_twin_pairs(const Graph& g);

struct TwinQuotient {
    Graph quotient;
    std::vector<int> class_map;     // vertex -> quotient vertex
    std::optional<int> uniform_k;   // class size when all classes agree
};

/// Quotient by the twin relation; the result is twin-free.
TwinQuotient twin_quotient(const Graph& g);

// Small-shape recognitions used to identify quotient graphs.
bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);   // single cycle covering all vertices, n >= 3
bool is_path(const Graph& g);    // single path covering all vertices
bool is_complete_bipartite(const Graph& g, int a, int b);

}  // namespace circsym
