#include "circsym/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace circsym {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (n < 0) throw invalid_spec_error("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n)
        throw invalid_spec_error("Graph: label count mismatch");
    g.labels_ = std::move(labels);

    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw invalid_spec_error("Graph: edge endpoint out of range");
        if (a == b) throw invalid_spec_error("Graph: self-loop");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) continue;
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edge_count_ = static_cast<int>(seen.size());
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw invalid_spec_error("Graph: vertex out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph {\n";
    for (int v = 0; v < n_; ++v)
        os << "  \"" << labels_[v] << "\";\n";
    std::vector<std::string> lines;
    for (auto [a, b] : edges())
        lines.push_back("  \"" + labels_[a] + "\" -- \"" + labels_[b] + "\";");
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) os << line << '\n';
    os << "}\n";
    return os.str();
}

std::string Graph::to_json() const {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (int v = 0; v < n_; ++v) {
        if (v) os << ',';
        os << '"' << labels_[v] << '"';
    }
    os << "],\"edges\":[";
    bool first = true;
    for (auto [a, b] : edges()) {
        if (!first) os << ',';
        first = false;
        os << '[' << a << ',' << b << ']';
    }
    os << "]}";
    return os.str();
}

bool TwinPartition::twin_free() const {
    for (const auto& c : classes)
        if (c.size() > 1) return false;
    return true;
}

std::vector<std::vector<int>> TwinPartition::nontrivial_classes() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : classes)
        if (c.size() > 1) out.push_back(c);
    return out;
}

TwinPartition twin_partition(const Graph& g) {
    const int n = g.vertex_count();
    TwinPartition part;
    part.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (part.class_of[v] >= 0) continue;
        const int idx = static_cast<int>(part.classes.size());
        std::vector<int> members{v};
        TwinKind kind = TwinKind::Singleton;
        for (int w = v + 1; w < n; ++w) {
            if (part.class_of[w] >= 0) continue;
            if (g.neighbors(v) == g.neighbors(w)) {
                members.push_back(w);
                kind = TwinKind::Nonadjacent;
            } else if (g.closed_neighborhood(v) == g.closed_neighborhood(w)) {
                members.push_back(w);
                kind = TwinKind::Adjacent;
            }
        }
        for (int m : members) part.class_of[m] = idx;
        part.classes.push_back(std::move(members));
        part.kinds.push_back(kind);
    }
    return part;
}

std::vector<std::pair<int, int>> co_twin_pairs(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        auto closed_u = g.closed_neighborhood(u);
        for (int v = u + 1; v < n; ++v) {
            auto closed_v = g.closed_neighborhood(v);
            // N[u] = V \ N[v]
            if (closed_u.size() + closed_v.size() != static_cast<std::size_t>(n)) continue;
            std::vector<int> both(closed_u);
            both.insert(both.end(), closed_v.begin(), closed_v.end());
            std::sort(both.begin(), both.end());
            if (std::adjacent_find(both.begin(), both.end()) == both.end())
                out.emplace_back(u, v);
        }
    }
    return out;
}

TwinQuotient twin_quotient(const Graph& g) {
    TwinPartition part = twin_partition(g);
    const int q = static_cast<int>(part.classes.size());

    std::vector<std::pair<int, int>> qedges;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            bool adj = false;
            for (int u : part.classes[a]) {
                for (int v : part.classes[b])
                    if (g.adjacent(u, v)) { adj = true; break; }
                if (adj) break;
            }
            if (adj) qedges.emplace_back(a, b);
        }

    std::vector<std::string> labels;
    labels.reserve(q);
    for (const auto& c : part.classes) labels.push_back("[" + g.label(c.front()) + "]");

    TwinQuotient out;
    out.quotient = Graph::from_edges(q, qedges, std::move(labels));
    out.class_map = part.class_of;

    std::size_t k = part.classes.front().size();
    bool uniform = true;
    for (const auto& c : part.classes)
        if (c.size() != k) { uniform = false; break; }
    if (uniform) out.uniform_k = static_cast<int>(k);

    // the quotient can still carry adjacent twins (K_2, K_3, ...), but
    // collapsing again never finds nonadjacent ones
    TwinPartition check = twin_partition(out.quotient);
    for (std::size_t c = 0; c < check.classes.size(); ++c)
        if (check.kinds[c] == TwinKind::Nonadjacent)
            throw std::logic_error("twin_quotient: quotient has nonadjacent twins");
    return out;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

namespace {

// Walks the unique 2-regular / path structure; returns vertices visited.
int traverse_chain(const Graph& g, int start) {
    int prev = -1, cur = start, count = 1;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) { next = w; break; }
        if (next == -1 || next == start) return count;
        prev = cur;
        cur = next;
        ++count;
    }
}

}  // namespace

bool is_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return traverse_chain(g, 0) == n;
}

bool is_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return true;
    if (g.edge_count() != n - 1) return false;
    int ends = 0, start = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1) { ++ends; start = v; }
        else if (d != 2) return false;
    }
    return ends == 2 && traverse_chain(g, start) == n;
}

bool is_complete_bipartite(const Graph& g, int a, int b) {
    const int n = g.vertex_count();
    if (n != a + b || g.edge_count() != a * b) return false;
    // sides are determined by the neighborhood of vertex 0
    std::vector<int> side(n, -1);
    side[0] = 0;
    for (int w : g.neighbors(0)) side[w] = 1;
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) side[v] = (g.neighbors(v) == g.neighbors(0)) ? 0 : 1;
    int count0 = static_cast<int>(std::count(side.begin(), side.end(), 0));
    if (!((count0 == a && n - count0 == b) || (count0 == b && n - count0 == a))) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == (side[u] == side[v])) return false;
    return true;
}

}  // namespace circsym
