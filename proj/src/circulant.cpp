#include "circsym/circulant.hpp"

#include <algorithm>
#include <set>

namespace circsym {

std::string CirculantSpec::name() const {
    return "C_" + std::to_string(n) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

CirculantSpec normalize(int n, int raw_i, int raw_j) {
    if (n < 3) throw invalid_spec_error("normalize: order must be >= 3");
    int a = mod_reduce(raw_i, n);
    int b = mod_reduce(raw_j, n);
    if (a == 0 || b == 0) throw invalid_spec_error("normalize: generator is 0 mod n");
    if (a == b || a == n - b) throw invalid_spec_error("normalize: generators coincide up to sign");
    a = std::min(a, n - a);
    b = std::min(b, n - b);
    if (a > b) std::swap(a, b);
    return {n, a, b};
}

Connectivity connectivity(const CirculantSpec& spec) {
    Connectivity c;
    const int g = spec.gcd();
    c.connected = g == 1;
    c.component_count = g;
    if (g > 1) c.component_spec = normalize(spec.n / g, spec.i / g, spec.j / g);
    return c;
}

Graph build_circulant(const CirculantSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < spec.n; ++a) {
        edges.emplace_back(a, mod_reduce(a + spec.i, spec.n));
        edges.emplace_back(a, mod_reduce(a + spec.j, spec.n));
    }
    return Graph::from_edges(spec.n, edges);
}

std::string twin_variant_name(TwinVariant v) {
    switch (v) {
        case TwinVariant::CompleteGraph: return "complete";
        case TwinVariant::Six13: return "six13";
        case TwinVariant::Eight13: return "eight13";
        case TwinVariant::HalfSum: return "half_sum";
        case TwinVariant::CoTwin1013: return "co_twin";
        case TwinVariant::TwinFree: return "twin_free";
    }
    return "?";
}

TwinClassification twin_classification(const CirculantSpec& spec) {
    if (!spec.connected()) throw invalid_spec_error("twin_classification: spec is disconnected");
    TwinClassification out;
    const int n = spec.n;

    auto classes_by_step = [&](int step) {
        // classes {a, a+step, a+2*step, ...} inside Z_n
        std::vector<std::vector<int>> classes;
        std::vector<bool> seen(n, false);
        for (int a = 0; a < n; ++a) {
            if (seen[a]) continue;
            std::vector<int> cls;
            for (int x = a; !seen[x]; x = mod_reduce(x + step, n)) {
                seen[x] = true;
                cls.push_back(x);
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        return classes;
    };

    if (n == 4 || n == 5) {
        out.variant = TwinVariant::CompleteGraph;
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        out.classes = {all};
    } else if (spec == CirculantSpec{6, 1, 3}) {
        out.variant = TwinVariant::Six13;
        out.classes = classes_by_step(2);
    } else if (spec == CirculantSpec{8, 1, 3}) {
        out.variant = TwinVariant::Eight13;
        out.classes = classes_by_step(2);
    } else if (spec.half_sum()) {
        out.variant = TwinVariant::HalfSum;
        out.classes = classes_by_step(n / 2);
    } else if (spec == CirculantSpec{10, 1, 3}) {
        out.variant = TwinVariant::CoTwin1013;
    } else {
        out.variant = TwinVariant::TwinFree;
    }
    return out;
}

bool is_edge_transitive(const CirculantSpec& spec) {
    if (!spec.connected()) throw invalid_spec_error("is_edge_transitive: spec is disconnected");
    if (spec == CirculantSpec{4, 1, 2} || spec == CirculantSpec{6, 1, 3}) return true;
    for (int k : units(spec.n).elements) {
        CirculantSpec s = normalize(spec.n, mod_reduce(static_cast<long long>(k) * spec.i, spec.n),
                                    mod_reduce(static_cast<long long>(k) * spec.j, spec.n));
        if (s.i != 1) continue;
        if (mod_reduce(static_cast<long long>(s.j) * s.j - 1, s.n) == 0) return true;
        if (mod_reduce(static_cast<long long>(s.j) * s.j + 1, s.n) == 0) return true;
        if (s.n % 2 == 0 && s.n >= 6 && s.j == s.n / 2 - 1) return true;
    }
    return false;
}

namespace {

// One column of the common-neighbor table, evaluated at base vertex a.
// Positive offsets only; negative offsets reuse the column at b.
std::vector<int> column_2i(const CirculantSpec& s, const SpecialConditionSet& c, int a) {
    std::vector<int> out{mod_reduce(a + s.i, s.n)};
    if (c.four_i) out.push_back(mod_reduce(a - s.i, s.n));
    if (c.three_i_minus_j) { out.push_back(mod_reduce(a - s.i, s.n)); out.push_back(mod_reduce(a - s.j, s.n)); }
    if (c.three_i_j) { out.push_back(mod_reduce(a - s.i, s.n)); out.push_back(mod_reduce(a + s.j, s.n)); }
    return out;
}

std::vector<int> column_2j(const CirculantSpec& s, const SpecialConditionSet& c, int a) {
    std::vector<int> out{mod_reduce(a + s.j, s.n)};
    if (c.four_j) out.push_back(mod_reduce(a - s.j, s.n));
    if (c.three_j_minus_i) { out.push_back(mod_reduce(a - s.i, s.n)); out.push_back(mod_reduce(a - s.j, s.n)); }
    if (c.three_j_i) { out.push_back(mod_reduce(a + s.i, s.n)); out.push_back(mod_reduce(a - s.j, s.n)); }
    return out;
}

std::vector<int> column_i_plus_j(const CirculantSpec& s, const SpecialConditionSet& c, int a) {
    std::vector<int> out{mod_reduce(a + s.i, s.n), mod_reduce(a + s.j, s.n)};
    if (c.three_i_minus_j) out.push_back(mod_reduce(a - s.i, s.n));
    if (c.three_j_minus_i) out.push_back(mod_reduce(a - s.j, s.n));
    return out;
}

std::vector<int> column_i_minus_j(const CirculantSpec& s, const SpecialConditionSet& c, int a) {
    std::vector<int> out{mod_reduce(a + s.i, s.n), mod_reduce(a - s.j, s.n)};
    if (c.three_i_j) out.push_back(mod_reduce(a - s.i, s.n));
    if (c.three_j_i) out.push_back(mod_reduce(a + s.j, s.n));
    return out;
}

}  // namespace

std::optional<CommonNeighborReport> common_neighbors_closed(const CirculantSpec& spec, int a, int b) {
    if (!spec.connected()) throw invalid_spec_error("common_neighbors_closed: spec is disconnected");
    TwinClassification tc = twin_classification(spec);
    if (tc.has_twins())
        throw wrong_regime_error("common_neighbors_closed: spec has twins");
    const int n = spec.n;
    a = mod_reduce(a, n);
    b = mod_reduce(b, n);
    if (a == b) throw invalid_spec_error("common_neighbors_closed: vertices coincide");
    const int delta = mod_reduce(b - a, n);

    std::set<int> acc;
    auto add = [&](const std::vector<int>& v) { acc.insert(v.begin(), v.end()); };

    if (spec.half_modulus()) {
        const int two_i = mod_reduce(2 * spec.i, n);
        const int ipj = mod_reduce(spec.i + spec.j, n);
        if (delta == two_i) acc.insert(mod_reduce(a + spec.i, n));
        if (delta == mod_reduce(-2 * spec.i, n)) acc.insert(mod_reduce(a - spec.i, n));
        if (delta == ipj) { acc.insert(mod_reduce(a + spec.i, n)); acc.insert(mod_reduce(a + spec.j, n)); }
        if (delta == mod_reduce(-(spec.i + spec.j), n)) {
            acc.insert(mod_reduce(b + spec.i, n));
            acc.insert(mod_reduce(b + spec.j, n));
        }
    } else {
        const SpecialConditionSet cond = special_conditions(n, spec.i, spec.j);
        struct Column {
            int offset;
            std::vector<int> (*eval)(const CirculantSpec&, const SpecialConditionSet&, int);
        };
        const Column columns[] = {
            {mod_reduce(2 * spec.i, n), column_2i},
            {mod_reduce(2 * spec.j, n), column_2j},
            {mod_reduce(spec.i + spec.j, n), column_i_plus_j},
            {mod_reduce(spec.i - spec.j, n), column_i_minus_j},
        };
        for (const auto& col : columns) {
            if (delta == col.offset) add(col.eval(spec, cond, a));
            if (delta == mod_reduce(-col.offset, n)) add(col.eval(spec, cond, b));
        }
    }

    if (acc.empty()) return std::nullopt;
    CommonNeighborReport rep;
    rep.offset = delta;
    rep.neighbors.assign(acc.begin(), acc.end());
    return rep;
}

std::vector<CirculantSpec> scan_double_special_conditions(int n_max) {
    if (n_max < 6) throw invalid_spec_error("scan_double_special_conditions: requires n_max >= 6");
    std::vector<CirculantSpec> out;
    for (int n = 6; n <= n_max; ++n)
        for (int i = 1; 2 * i < n; ++i)
            for (int j = i + 1; 2 * j < n; ++j) {
                CirculantSpec spec{n, i, j};
                if (!spec.connected()) continue;
                TwinClassification tc = twin_classification(spec);
                if (tc.has_twins()) continue;
                if (special_conditions(n, i, j).count() >= 2) out.push_back(spec);
            }
    return out;
}

}  // namespace circsym
