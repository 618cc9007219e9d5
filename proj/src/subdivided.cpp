#include "circsym/subdivided.hpp"

#include <algorithm>

namespace circsym {

std::string SubdividedSpec::name() const {
    auto gen = [&](int g, bool sub) {
        std::string s = std::to_string(g);
        if (sub) s += "%" + std::to_string(p);
        return s;
    };
    return "C_" + std::to_string(base.n) + "(" + gen(base.i, arc == Arc::I) + "," +
           gen(base.j, arc == Arc::J) + ")";
}

SubdividedSpec make_subdivided(const CirculantSpec& base, Arc arc, int p) {
    if (normalize(base.n, base.i, base.j) != base)
        throw invalid_spec_error("make_subdivided: base spec is not normalized");
    if (!base.connected())
        throw invalid_spec_error("make_subdivided: base spec is disconnected");
    if (p < 1) throw invalid_spec_error("make_subdivided: p must be >= 1");
    return {base, arc, p};
}

Graph build_subdivided(const SubdividedSpec& spec) {
    const int n = spec.base.n;
    const int p = spec.p;
    const int g_sub = spec.subdivided_generator();
    const int g_plain = spec.plain_generator();

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        // path u_a, v_a^1, ..., v_a^p, u_{a+g_sub}
        edges.emplace_back(spec.u_index(a), spec.v_index(a, 1));
        for (int r = 1; r < p; ++r)
            edges.emplace_back(spec.v_index(a, r), spec.v_index(a, r + 1));
        edges.emplace_back(spec.v_index(a, p), spec.u_index(a + g_sub));
        // plain edge; duplicate collapses when g_plain = n/2
        edges.emplace_back(spec.u_index(a), spec.u_index(a + g_plain));
    }

    std::vector<std::string> labels(spec.vertex_count());
    for (int a = 0; a < n; ++a) labels[a] = "u_" + std::to_string(a);
    for (int a = 0; a < n; ++a)
        for (int r = 1; r <= p; ++r)
            labels[spec.v_index(a, r)] = "v_" + std::to_string(a) + "_" + std::to_string(r);

    return Graph::from_edges(spec.vertex_count(), edges, std::move(labels));
}

std::vector<std::vector<int>> SubdividedTwinClassification::nontrivial_classes() const {
    std::vector<std::vector<int>> out;
    for (auto [a, b] : v_pairs) out.push_back({a, b});
    for (auto [a, b] : u_pairs) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

SubdividedTwinClassification twin_classification_subdivided(const SubdividedSpec& spec) {
    SubdividedTwinClassification out;
    if (!spec.half_sum_arc() || spec.p >= 2) return out;

    const int n = spec.base.n;
    const int j = spec.base.j;
    out.twin_free = false;
    for (int a = 0; a < j; ++a) {
        int x = spec.v_index(a, 1), y = spec.v_index(a + j, 1);
        out.v_pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
    if (spec.base == CirculantSpec{4, 1, 2})
        for (int a = 0; a < n / 2; ++a)
            out.u_pairs.emplace_back(a, a + 2);
    return out;
}

}  // namespace circsym
