#include "circsym/autgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace circsym {

ActionContext ActionContext::subdivided(const SubdividedSpec& s) {
    Kind k = s.half_sum_arc()   ? Kind::SubdividedHalfSum
             : s.arc == Arc::I ? Kind::SubdividedArcI
                               : Kind::SubdividedArcJ;
    return {k, s.base.n, s.base.i, s.base.j, s.p};
}

namespace {

SubdividedSpec spec_of(const ActionContext& ctx) {
    Arc arc = ctx.kind == ActionContext::Kind::SubdividedArcI ? Arc::I : Arc::J;
    return {{ctx.n, ctx.i, ctx.j}, arc, ctx.p};
}

int act_affine_base(const Affine& e, int v, int n) {
    return mod_reduce(e.s + static_cast<long long>(e.t) * v, n);
}

// The unique extension of (s, t) to a single-path subdivision: when t
// negates the subdivided generator, each path is traversed in reverse.
int act_affine_subdivided(const Affine& e, int v, const ActionContext& ctx) {
    const int n = ctx.n;
    const SubdividedSpec sp = spec_of(ctx);
    if (sp.is_u(v)) return act_affine_base(e, v, n);
    const int a = sp.v_subscript(v);
    const int r = sp.v_superscript(v);
    const int g = sp.subdivided_generator();
    const int tg = mod_reduce(static_cast<long long>(e.t) * g, n);
    if (tg == g)
        return sp.v_index(mod_reduce(e.s + static_cast<long long>(e.t) * a, n), r);
    if (tg == mod_reduce(-g, n))
        return sp.v_index(mod_reduce(e.s + static_cast<long long>(e.t) * a - g, n), ctx.p + 1 - r);
    throw invalid_spec_error("act: affine t does not preserve the subdivided generator up to sign");
}

int act_flip_affine(const FlipAffine& e, int v, const ActionContext& ctx) {
    const int n = ctx.n;
    int b = mod_reduce(e.s + static_cast<long long>(e.t) * v, n);
    if (e.flips >> (b % (n / 2)) & 1u) b = mod_reduce(b + n / 2, n);
    return b;
}

int act_beta_affine(const BetaAffine& e, int v, const ActionContext& ctx) {
    const int n = ctx.n;  // = 2j
    const int j = ctx.j;
    const SubdividedSpec sp = spec_of(ctx);
    if (sp.is_u(v)) return mod_reduce(e.s + static_cast<long long>(e.t) * v, n);
    const int a = sp.v_subscript(v);
    const int r = sp.v_superscript(v);
    int b = mod_reduce(e.s + static_cast<long long>(e.t) * a, n);
    if (e.flips >> (b % j) & 1u) return sp.v_index(mod_reduce(b + j, n), ctx.p + 1 - r);
    return sp.v_index(b, r);
}

}  // namespace

int act(const GroupElement& e, int v, const ActionContext& ctx) {
    if (v < 0 || v >= ctx.vertex_count()) throw invalid_spec_error("act: vertex out of range");
    switch (ctx.kind) {
        case ActionContext::Kind::Base:
            if (const auto* a = std::get_if<Affine>(&e)) return act_affine_base(*a, v, ctx.n);
            if (const auto* f = std::get_if<FlipAffine>(&e)) return act_flip_affine(*f, v, ctx);
            if (const auto* p = std::get_if<PermElement>(&e)) return p->map[v];
            break;
        case ActionContext::Kind::SubdividedArcI:
        case ActionContext::Kind::SubdividedArcJ:
            if (const auto* a = std::get_if<Affine>(&e)) return act_affine_subdivided(*a, v, ctx);
            if (const auto* p = std::get_if<PermElement>(&e)) return p->map[v];
            break;
        case ActionContext::Kind::SubdividedHalfSum:
            if (const auto* b = std::get_if<BetaAffine>(&e)) return act_beta_affine(*b, v, ctx);
            if (const auto* p = std::get_if<PermElement>(&e)) return p->map[v];
            break;
    }
    throw invalid_spec_error("act: element variant does not match the action context");
}

std::vector<int> induced_permutation(const GroupElement& e, const ActionContext& ctx) {
    const int count = ctx.vertex_count();
    std::vector<int> perm(count);
    for (int v = 0; v < count; ++v) perm[v] = act(e, v, ctx);
    return perm;
}

namespace {

std::string bits_string(uint32_t mask, int width) {
    std::string s(width, '0');
    for (int k = 0; k < width; ++k)
        if (mask >> k & 1u) s[k] = '1';
    return s;
}

}  // namespace

std::string render_element(const GroupElement& e, const ActionContext& ctx) {
    std::ostringstream os;
    if (const auto* a = std::get_if<Affine>(&e)) {
        os << "affine(" << a->s << "," << a->t << ")";
    } else if (const auto* f = std::get_if<FlipAffine>(&e)) {
        os << "flipaffine(" << bits_string(f->flips, ctx.n / 2) << "," << f->s << "," << f->t << ")";
    } else if (const auto* b = std::get_if<BetaAffine>(&e)) {
        os << "betaaffine(" << bits_string(b->flips, ctx.j) << "," << b->s << "," << b->t << ")";
    } else {
        const auto& p = std::get<PermElement>(e);
        os << "perm([";
        for (std::size_t k = 0; k < p.map.size(); ++k) {
            if (k) os << ',';
            os << p.map[k];
        }
        os << "])";
    }
    return os.str();
}

std::string structure_tag_name(StructureTag t) {
    switch (t) {
        case StructureTag::ZnH: return "ZnH";
        case StructureTag::ZnHprime: return "ZnHprime";
        case StructureTag::Symmetric: return "Symmetric";
        case StructureTag::Z2xS5: return "Z2xS5";
        case StructureTag::WreathLike: return "WreathLike";
        case StructureTag::FlipZnPm: return "FlipZnPm";
        case StructureTag::BetaZ2jPm: return "BetaZ2jPm";
    }
    return "?";
}

std::vector<std::vector<int>> AutGroup::permutations() const {
    std::vector<std::vector<int>> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(induced_permutation(e, ctx));
    return out;
}

std::string AutGroup::report_json() const {
    std::ostringstream os;
    os << "{\"structure_tag\":\"" << structure_tag_name(tag) << "\",\"order\":" << order
       << ",\"generators\":[";
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (k) os << ',';
        os << '"' << render_element(generators[k], ctx) << '"';
    }
    os << "]}";
    return os.str();
}

namespace {

void check_limit(long long order, long long max_elements, const char* what) {
    if (order > max_elements)
        throw budget_exceeded_error(std::string(what) + ": enumeration limit exceeded");
}

// Cache for the three fixed graphs whose groups are materialized from the
// brute oracle: (6,1,3), (8,1,3), (10,1,3).
const std::vector<std::vector<int>>& cached_brute_perms(const CirculantSpec& spec) {
    static std::mutex mu;
    static std::map<CirculantSpec, std::vector<std::vector<int>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(spec);
    if (it == cache.end())
        it = cache.emplace(spec, brute_automorphisms(build_circulant(spec)).perms).first;
    return it->second;
}

std::vector<GroupElement> perm_elements(const std::vector<std::vector<int>>& perms) {
    std::vector<GroupElement> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(PermElement{p});
    return out;
}

// Greedy generating set of an explicitly listed group.
std::vector<GroupElement> perm_generators(const std::vector<std::vector<int>>& perms) {
    const std::size_t target = perms.size();
    std::set<std::vector<int>> generated;
    const int n = static_cast<int>(perms.front().size());
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    generated.insert(identity);

    std::vector<GroupElement> gens;
    for (const auto& candidate : perms) {
        if (generated.size() == target) break;
        if (generated.count(candidate)) continue;
        gens.push_back(PermElement{candidate});
        // closure under the new generator
        std::vector<std::vector<int>> frontier(generated.begin(), generated.end());
        frontier.push_back(candidate);
        generated.insert(candidate);
        while (!frontier.empty()) {
            std::vector<int> g = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& e : gens) {
                std::vector<int> h = compose(std::get<PermElement>(e).map, g);
                if (generated.insert(h).second) frontier.push_back(std::move(h));
                std::vector<int> h2 = compose(g, std::get<PermElement>(e).map);
                if (generated.insert(h2).second) frontier.push_back(std::move(h2));
            }
        }
    }
    return gens;
}

AutGroup half_sum_group(const CirculantSpec& spec, long long max_elements) {
    AutGroup g;
    g.tag = StructureTag::FlipZnPm;
    g.ctx = ActionContext::base(spec);
    const int n = spec.n;
    const int half = n / 2;
    g.order = (1LL << half) * n;
    check_limit(g.order, max_elements, "closed_form_group(half-sum)");
    g.elements.reserve(g.order);
    for (int s = 0; s < n; ++s)
        for (int t : {1, n - 1})
            for (uint32_t m = 0; m < (1u << (half - 1)); ++m)
                g.elements.push_back(FlipAffine{m << 1, s, t});
    g.generators = {GroupElement{Affine{1, 1}}, GroupElement{Affine{0, n - 1}},
                    GroupElement{FlipAffine{(1u << half) - 2u, half, 1}}};  // single flip of class 0
    return g;
}

}  // namespace

std::vector<int> compose(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    std::vector<int> out(rhs.size());
    for (std::size_t v = 0; v < rhs.size(); ++v) out[v] = lhs[rhs[v]];
    return out;
}

long long group_order(const CirculantSpec& spec) {
    if (!spec.connected()) throw invalid_spec_error("group_order: spec is disconnected");
    TwinClassification tc = twin_classification(spec);
    switch (tc.variant) {
        case TwinVariant::CompleteGraph: {
            long long f = 1;
            for (int k = 2; k <= spec.n; ++k) f *= k;
            return f;
        }
        case TwinVariant::Six13: return 72;
        case TwinVariant::Eight13: return 1152;
        case TwinVariant::CoTwin1013: return 240;
        case TwinVariant::HalfSum: return (1LL << (spec.n / 2)) * spec.n;
        case TwinVariant::TwinFree: {
            auto st = symbol_stabilizer(spec.n, spec.i, spec.j);
            return static_cast<long long>(spec.n) * static_cast<long long>(st.h.size());
        }
    }
    throw std::logic_error("group_order: unreachable");
}

long long group_order(const SubdividedSpec& spec) {
    if (spec.half_sum_arc()) {
        const int j = spec.base.j;
        return (1LL << j) * 4 * j;
    }
    auto st = symbol_stabilizer(spec.base.n, spec.base.i, spec.base.j);
    return static_cast<long long>(spec.base.n) * static_cast<long long>(st.h_prime.size());
}

AutGroup closed_form_group(const CirculantSpec& spec, long long max_elements) {
    if (!spec.connected()) throw invalid_spec_error("closed_form_group: spec is disconnected");
    TwinClassification tc = twin_classification(spec);
    AutGroup g;
    g.ctx = ActionContext::base(spec);
    g.order = group_order(spec);
    check_limit(g.order, max_elements, "closed_form_group");

    switch (tc.variant) {
        case TwinVariant::CompleteGraph: {
            g.tag = StructureTag::Symmetric;
            std::vector<int> perm(spec.n);
            for (int v = 0; v < spec.n; ++v) perm[v] = v;
            do {
                g.elements.push_back(PermElement{perm});
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
        case TwinVariant::Six13:
        case TwinVariant::Eight13:
        case TwinVariant::CoTwin1013: {
            g.tag = tc.variant == TwinVariant::CoTwin1013 ? StructureTag::Z2xS5
                                                          : StructureTag::WreathLike;
            const auto& perms = cached_brute_perms(spec);
            if (static_cast<long long>(perms.size()) != g.order)
                throw std::logic_error("closed_form_group: materialized order mismatch for " + spec.name());
            g.elements = perm_elements(perms);
            g.generators = perm_generators(perms);
            return g;
        }
        case TwinVariant::HalfSum:
            return half_sum_group(spec, max_elements);
        case TwinVariant::TwinFree: {
            g.tag = StructureTag::ZnH;
            auto st = symbol_stabilizer(spec.n, spec.i, spec.j);
            for (int s = 0; s < spec.n; ++s)
                for (int t : st.h) g.elements.push_back(Affine{s, t});
            g.generators.push_back(Affine{1, 1});
            for (int t : st.h)
                if (t != 1) g.generators.push_back(Affine{0, t});
            return g;
        }
    }
    // complete-graph fallthrough: generators are a transposition and an n-cycle
    std::vector<int> cyc(spec.n), swap01(spec.n);
    for (int v = 0; v < spec.n; ++v) {
        cyc[v] = (v + 1) % spec.n;
        swap01[v] = v;
    }
    std::swap(swap01[0], swap01[1]);
    g.generators = {PermElement{cyc}, PermElement{swap01}};
    return g;
}

AutGroup closed_form_group(const SubdividedSpec& spec, long long max_elements) {
    AutGroup g;
    g.ctx = ActionContext::subdivided(spec);
    g.order = group_order(spec);
    check_limit(g.order, max_elements, "closed_form_group(subdivided)");

    if (spec.half_sum_arc()) {
        g.tag = StructureTag::BetaZ2jPm;
        const int n = spec.base.n;
        const int j = spec.base.j;
        for (int s = 0; s < n; ++s)
            for (int t : {1, n - 1})
                for (uint32_t m = 0; m < (1u << j); ++m)
                    g.elements.push_back(BetaAffine{m, s, t});
        g.generators = {GroupElement{BetaAffine{0, 1, 1}}, GroupElement{BetaAffine{0, 0, n - 1}},
                        GroupElement{BetaAffine{1u, 0, 1}}};  // β_0
        return g;
    }

    g.tag = StructureTag::ZnHprime;
    auto st = symbol_stabilizer(spec.base.n, spec.base.i, spec.base.j);
    for (int s = 0; s < spec.base.n; ++s)
        for (int t : st.h_prime) g.elements.push_back(Affine{s, t});
    g.generators.push_back(Affine{1, 1});
    for (int t : st.h_prime)
        if (t != 1) g.generators.push_back(Affine{0, t});
    return g;
}

namespace {

GroupVerification verify_group_impl(const AutGroup& group, const Graph& graph,
                                    const BruteBudget& budget) {
    GroupVerification v;
    v.closed_order = group.order;

    std::set<std::vector<int>> distinct;
    for (const auto& e : group.elements) {
        std::vector<int> perm = induced_permutation(e, group.ctx);
        for (auto [a, b] : graph.edges()) {
            if (!graph.adjacent(perm[a], perm[b])) {
                v.detail = "element " + render_element(e, group.ctx) + " is not an automorphism";
                return v;
            }
        }
        if (!distinct.insert(std::move(perm)).second) {
            v.detail = "duplicate induced permutation from " + render_element(e, group.ctx);
            return v;
        }
    }

    PermGroupRaw brute = brute_automorphisms(graph, budget);
    v.brute_order = brute.order;
    if (brute.order != static_cast<long long>(distinct.size())) {
        v.detail = "closed-form count differs from brute enumeration";
        return v;
    }
    v.ok = true;
    v.detail = "ok";
    return v;
}

}  // namespace

GroupVerification verify_group(const CirculantSpec& spec, const BruteBudget& budget) {
    return verify_group_impl(closed_form_group(spec), build_circulant(spec), budget);
}

GroupVerification verify_group(const SubdividedSpec& spec, const BruteBudget& budget) {
    return verify_group_impl(closed_form_group(spec), build_subdivided(spec), budget);
}

}  // namespace circsym
