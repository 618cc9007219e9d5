#include "circsym/brute.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>

namespace circsym {

BruteBudget BruteBudget::from_env() {
    BruteBudget b;
    if (const char* env = std::getenv("CIRCSYM_BUDGET_NODES")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_nodes = v;
    }
    return b;
}

namespace {

struct Searcher {
    int n;
    const Graph& g;
    std::vector<uint64_t> adj;       // adjacency rows as bitmasks
    std::vector<int> order;          // assignment order (BFS from 0)
    std::vector<int> anchor;         // earlier assigned neighbor, -1 for roots
    std::vector<int> cls;            // refinement class per vertex
    std::vector<int> image;          // current partial map
    long long nodes = 0;
    long long max_nodes;
    std::vector<std::vector<int>> found;

    Searcher(const Graph& graph, long long node_budget)
        : n(graph.vertex_count()), g(graph), max_nodes(node_budget) {
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= uint64_t{1} << w;

        // one round of refinement: (degree, sorted neighbor-degree multiset)
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(g.degree(v));
            std::vector<int> nd;
            for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
            std::sort(nd.begin(), nd.end());
            sig[v].insert(sig[v].end(), nd.begin(), nd.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        cls.resize(n);
        for (int v = 0; v < n; ++v)
            cls[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                      distinct.begin());

        // BFS assignment order so each non-root vertex has an assigned neighbor
        anchor.assign(n, -1);
        std::vector<bool> queued(n, false);
        for (int root = 0; root < n; ++root) {
            if (queued[root]) continue;
            queued[root] = true;
            order.push_back(root);
            for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
                int v = order[head];
                for (int w : g.neighbors(v)) {
                    if (queued[w]) continue;
                    queued[w] = true;
                    anchor[w] = v;
                    order.push_back(w);
                }
            }
        }
        image.assign(n, -1);
    }

    void run() {
        extend(0, 0);
    }

    void extend(std::size_t depth, uint64_t used_mask) {
        if (++nodes > max_nodes)
            throw budget_exceeded_error("brute_automorphisms: node budget exceeded");
        if (depth == order.size()) {
            found.push_back(image);
            return;
        }
        const int v = order[depth];
        if (anchor[v] >= 0) {
            // images restricted to unused neighbors of the anchor's image
            uint64_t cands = adj[image[anchor[v]]] & ~used_mask;
            while (cands) {
                int w = std::countr_zero(cands);
                cands &= cands - 1;
                if (consistent(v, w, used_mask)) {
                    image[v] = w;
                    extend(depth + 1, used_mask | (uint64_t{1} << w));
                    image[v] = -1;
                }
            }
        } else {
            for (int w = 0; w < n; ++w) {
                if (used_mask >> w & 1) continue;
                if (consistent(v, w, used_mask)) {
                    image[v] = w;
                    extend(depth + 1, used_mask | (uint64_t{1} << w));
                    image[v] = -1;
                }
            }
        }
    }

    // For every already-assigned u: u ~ v must hold iff image[u] ~ w.
    bool consistent(int v, int w, uint64_t used_mask) const {
        if (cls[v] != cls[w]) return false;
        uint64_t want = 0;
        for (int u : g.neighbors(v))
            if (image[u] >= 0) want |= uint64_t{1} << image[u];
        return (adj[w] & used_mask) == want;
    }
};

}  // namespace

PermGroupRaw brute_automorphisms(const Graph& g, const BruteBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices || n > 64)
        throw budget_exceeded_error("brute_automorphisms: vertex budget exceeded");
    PermGroupRaw out;
    if (n == 0) {
        out.order = 1;
        out.perms = {{}};
        return out;
    }
    Searcher s(g, budget.max_nodes);
    s.run();
    std::sort(s.found.begin(), s.found.end());
    out.perms = std::move(s.found);
    out.order = static_cast<long long>(out.perms.size());
    return out;
}

std::vector<std::vector<int>> setwise_stabilizer(const std::vector<std::vector<int>>& group,
                                                 const std::vector<int>& s) {
    std::vector<std::vector<int>> out;
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& perm : group) {
        std::vector<int> image;
        image.reserve(sorted.size());
        for (int v : sorted) image.push_back(perm[v]);
        std::sort(image.begin(), image.end());
        if (image == sorted) out.push_back(perm);
    }
    return out;
}

std::vector<std::vector<int>> pointwise_stabilizer(const std::vector<std::vector<int>>& group,
                                                   const std::vector<int>& s) {
    std::vector<std::vector<int>> out;
    for (const auto& perm : group) {
        bool fixes = true;
        for (int v : s)
            if (perm[v] != v) { fixes = false; break; }
        if (fixes) out.push_back(perm);
    }
    return out;
}

}  // namespace circsym
