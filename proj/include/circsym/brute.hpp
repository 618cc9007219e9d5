#pragma once

#include <vector>

#include "circsym/graph.hpp"

namespace circsym {

struct BruteBudget {
    int max_vertices = 60;
    long long max_nodes = 100'000'000LL;

    // max_nodes falls back to the CIRCSYM_BUDGET_NODES environment variable
    // when that is set.
    static BruteBudget from_env();
};

// A fully enumerated permutation group on the vertices of some graph.
struct PermGroupRaw {
    long long order = 0;
    std::vector<std::vector<int>> perms;  // sorted lexicographically; identity first
};

/// Every automorphism of g, found by backtracking over vertex images with
/// degree/neighbor-degree refinement and incremental adjacency consistency.
/// Throws budget_exceeded_error when the graph or the search is out of budget.
PermGroupRaw brute_automorphisms(const Graph& g, const BruteBudget& budget = {});

/// Elements with element(S) = S as a set.
std::vector<std::vector<int>> setwise_stabilizer(const std::vector<std::vector<int>>& group,
                                                 const std::vector<int>& s);

/// Elements fixing every vertex of S.
std::vector<std::vector<int>> pointwise_stabilizer(const std::vector<std::vector<int>>& group,
                                                   const std::vector<int>& s);

}  // namespace circsym
