#include <fstream>
#include <sstream>

#include "circsym/symparams.hpp"
#include "doctest.h"

using namespace circsym;

namespace {

std::vector<std::vector<int>> brute_group(const CirculantSpec& spec) {
    return brute_automorphisms(build_circulant(spec)).perms;
}

}  // namespace

TEST_CASE("determining number by search") {
    auto r = determining_number(build_circulant({7, 1, 2}), brute_group({7, 1, 2}));
    CHECK(r.value == 2);
    CHECK(r.witness == std::vector<int>{0, 1});

    CHECK(determining_number(build_circulant({6, 1, 3}), brute_group({6, 1, 3})).value == 4);

    SubdividedSpec sub = make_subdivided({4, 1, 2}, Arc::J, 1);
    Graph g = build_subdivided(sub);
    auto group = brute_automorphisms(g).perms;
    auto det = determining_number(g, group);
    CHECK(det.value == 4);
    CHECK(det.witness == std::vector<int>{sub.u_index(0), sub.u_index(1), sub.v_index(0, 1),
                                          sub.v_index(1, 1)});
}

TEST_CASE("distinguishing number by search") {
    CHECK(distinguishing_number(build_circulant({8, 1, 3}), brute_group({8, 1, 3})).value == 5);
    CHECK(distinguishing_number(build_circulant({10, 1, 3}), brute_group({10, 1, 3})).value == 3);
    CHECK(distinguishing_number(build_circulant({5, 1, 2}), brute_group({5, 1, 2})).value == 5);

    auto r = distinguishing_number(build_circulant({13, 1, 5}), brute_group({13, 1, 5}));
    CHECK(r.value == 2);
    CHECK(coloring_distinguishing(brute_group({13, 1, 5}), r.coloring));
}

TEST_CASE("cost of 2-distinguishing by search") {
    auto r = cost_2dist(build_circulant({7, 1, 2}), brute_group({7, 1, 2}));
    REQUIRE(r.has_value());
    CHECK(r->value == 3);

    CHECK_FALSE(cost_2dist(build_circulant({6, 1, 3}), brute_group({6, 1, 3})).has_value());

    SubdividedSpec sub = make_subdivided({10, 1, 5}, Arc::J, 1);
    Graph g = build_subdivided(sub);
    auto cost = cost_2dist(g, brute_automorphisms(g).perms);
    REQUIRE(cost.has_value());
    CHECK(cost->value == 8);  // j + 3
}

TEST_CASE("search budget refusal") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(determining_number(build_circulant({8, 1, 3}), brute_group({8, 1, 3}), tiny),
                    budget_exceeded_error);
}

TEST_CASE("dist_from_quotient") {
    CHECK(dist_from_quotient(3, 2) == 4);
    CHECK(dist_from_quotient(4, 2) == 5);
    CHECK(dist_from_quotient(1, 7) == 7);
    CHECK(dist_from_quotient(2, 2) == 3);
    CHECK(dist_from_quotient(2, 3) == 3);
    CHECK_THROWS_AS(dist_from_quotient(0, 1), invalid_spec_error);
    // monotone in the quotient requirement
    for (int k = 1; k <= 4; ++k)
        for (int d = 1; d < 30; ++d)
            CHECK(dist_from_quotient(k, d) <= dist_from_quotient(k, d + 1));
}

TEST_CASE("closed-form parameters: base rows") {
    auto r = closed_form_params(CirculantSpec{8, 1, 3});
    CHECK(r.det == 6);
    CHECK(r.dist == 5);
    CHECK_FALSE(r.cost.has_value());

    r = closed_form_params(CirculantSpec{12, 1, 5});
    CHECK(r.det == 6);
    CHECK(r.dist == 3);

    r = closed_form_params(CirculantSpec{10, 1, 3});
    CHECK(r.det == 4);
    CHECK(r.dist == 3);

    r = closed_form_params(CirculantSpec{4, 1, 2});
    CHECK(r.det == 3);
    CHECK(r.dist == 4);

    r = closed_form_params(CirculantSpec{7, 1, 2});
    CHECK(r.det == 2);
    CHECK(r.dist == 2);
    CHECK(r.cost == 3);
    CHECK(r.det_witness == std::vector<int>{0, 1});
}

TEST_CASE("closed-form parameters: subdivided rows") {
    // p >= 2 with trivial H' on an edge-transitive base
    auto r = closed_form_params(make_subdivided({13, 1, 5}, Arc::I, 2));
    CHECK(r.det == 1);
    CHECK(r.dist == 2);
    CHECK(r.cost == 1);

    // p = 1 keeps determining number 2
    r = closed_form_params(make_subdivided({13, 1, 5}, Arc::I, 1));
    CHECK(r.det == 2);
    CHECK(r.cost == 2);

    // nontrivial H': witness uses the unit-with-nonunit-shift vertex
    r = closed_form_params(make_subdivided({12, 2, 3}, Arc::I, 3));
    CHECK(r.det == 2);
    REQUIRE(r.det_witness.has_value());
    SubdividedSpec sub = make_subdivided({12, 2, 3}, Arc::I, 3);
    CHECK(r.det_witness == std::vector<int>{sub.u_index(0), sub.v_index(1, 1)});

    // half-sum arc ladder
    r = closed_form_params(make_subdivided({4, 1, 2}, Arc::J, 1));
    CHECK(r.det == 4);
    CHECK(r.dist == 3);
    CHECK_FALSE(r.cost.has_value());

    r = closed_form_params(make_subdivided({10, 1, 5}, Arc::J, 1));
    CHECK(r.det == 6);
    CHECK(r.dist == 2);
    CHECK(r.cost == 8);

    r = closed_form_params(make_subdivided({14, 3, 7}, Arc::J, 2));
    CHECK(r.det == 7);
    CHECK(r.dist == 2);
    CHECK(r.cost == 7);

    r = closed_form_params(make_subdivided({6, 1, 3}, Arc::J, 3));
    CHECK(r.det == 3);
    CHECK(r.cost == 4);  // p = j = 3

    r = closed_form_params(make_subdivided({8, 1, 4}, Arc::J, 2));
    CHECK(r.det == 4);
    CHECK(r.cost == 5);  // p = 2, j in {2..5}

    // the flip fixes the middle superscript layer when p = 3, which pushes
    // the j = 2 cost up to j+1; p = 4 drops back to j
    r = closed_form_params(make_subdivided({4, 1, 2}, Arc::J, 3));
    CHECK(r.det == 2);
    CHECK(r.cost == 3);
    r = closed_form_params(make_subdivided({4, 1, 2}, Arc::J, 4));
    CHECK(r.cost == 2);
}

TEST_CASE("2-distinguishing witness class") {
    CHECK(witness_2dist_class({7, 1, 2}) == std::vector<int>{0, 1, 5});
    CHECK(witness_2dist_class({13, 1, 5}) == std::vector<int>{0, 1, 5});
    // swap case: some t in H exchanges the generators
    CHECK(witness_2dist_class({15, 1, 4}) == std::vector<int>{0, 1, 3});
    CHECK_THROWS_AS(witness_2dist_class({10, 1, 3}), wrong_regime_error);
    CHECK_THROWS_AS(witness_2dist_class({12, 1, 5}), wrong_regime_error);
}

TEST_CASE("closed-form witnesses validate against the closed-form group") {
    for (int n = 4; n <= 16; ++n)
        for (int i = 1; 2 * i < n; ++i)
            for (int j = i + 1; 2 * j <= n; ++j) {
                CirculantSpec spec{n, i, j};
                if (!spec.connected()) continue;
                auto perms = closed_form_group(spec).permutations();
                auto r = closed_form_params(spec);
                if (r.det_witness) CHECK(pointwise_trivial(perms, *r.det_witness));
                if (r.cost_witness) CHECK(setwise_trivial(perms, *r.cost_witness));
                if (r.dist_witness) CHECK(coloring_distinguishing(perms, *r.dist_witness));
            }
}

TEST_CASE("closed-form witnesses validate on subdivisions") {
    for (int n = 4; n <= 12; ++n)
        for (int i = 1; 2 * i < n; ++i)
            for (int j = i + 1; 2 * j <= n; ++j) {
                CirculantSpec base{n, i, j};
                if (!base.connected()) continue;
                for (Arc arc : {Arc::I, Arc::J})
                    for (int p = 1; p <= 2; ++p) {
                        SubdividedSpec spec = make_subdivided(base, arc, p);
                        auto perms = closed_form_group(spec).permutations();
                        auto r = closed_form_params(spec);
                        if (r.det_witness) CHECK(pointwise_trivial(perms, *r.det_witness));
                        if (r.cost_witness) CHECK(setwise_trivial(perms, *r.cost_witness));
                        if (r.dist_witness) CHECK(coloring_distinguishing(perms, *r.dist_witness));
                    }
            }
}

TEST_CASE("determining lower-bound facts") {
    for (auto spec : {CirculantSpec{7, 1, 2}, {13, 1, 5}, {12, 2, 3}}) {
        auto perms = closed_form_group(spec).permutations();
        ActionContext ctx = ActionContext::base(spec);
        for (int a = 0; a < spec.n; ++a) {
            // {a} is fixed by (2a, -1)
            auto fix = induced_permutation(Affine{mod_reduce(2 * a, spec.n), spec.n - 1}, ctx);
            CHECK(fix[a] == a);
            CHECK_FALSE(pointwise_trivial(perms, {a}));
            // every pair is preserved by (a+b, -1)
            for (int b = a + 1; b < spec.n; ++b) CHECK_FALSE(setwise_trivial(perms, {a, b}));
        }
    }
}

TEST_CASE("quotient route agreement") {
    for (auto spec : {CirculantSpec{4, 1, 2}, {5, 1, 2}, {6, 1, 3}, {8, 1, 3}, {10, 1, 4}, {12, 1, 5}}) {
        Graph g = build_circulant(spec);
        auto quotient = twin_quotient(g);
        REQUIRE(quotient.uniform_k.has_value());
        auto d_full = distinguishing_number(g, brute_automorphisms(g).perms).value;
        auto d_tilde =
            distinguishing_number(quotient.quotient, brute_automorphisms(quotient.quotient).perms).value;
        CHECK(d_full == dist_from_quotient(*quotient.uniform_k, d_tilde));
    }
    // subdivided half-sum arc with p = 1 and the (4,1,2) base
    SubdividedSpec sub = make_subdivided({4, 1, 2}, Arc::J, 1);
    Graph g = build_subdivided(sub);
    auto quotient = twin_quotient(g);
    REQUIRE(quotient.uniform_k == 2);
    CHECK(is_path(quotient.quotient));
    auto d_tilde =
        distinguishing_number(quotient.quotient, brute_automorphisms(quotient.quotient).perms).value;
    CHECK(dist_from_quotient(2, d_tilde) == 3);
}

TEST_CASE("minimum twin covers are minimum determining sets") {
    for (auto spec : {CirculantSpec{4, 1, 2}, {6, 1, 3}, {8, 1, 3}, {12, 1, 5}, {14, 3, 4}}) {
        Graph g = build_circulant(spec);
        auto part = twin_partition(g);
        std::vector<int> cover;
        for (const auto& cls : part.classes)
            for (std::size_t k = 0; k + 1 < cls.size(); ++k) cover.push_back(cls[k]);
        auto group = brute_automorphisms(g).perms;
        CHECK(pointwise_trivial(group, cover));
        CHECK(static_cast<int>(cover.size()) == determining_number(g, group).value);
    }
}

TEST_CASE("verify_spec cross-validation") {
    auto rep = verify_spec(CirculantSpec{10, 1, 4});
    CHECK(rep.match);
    CHECK(rep.searched.det == 5);
    CHECK(rep.searched.dist == 3);
    CHECK_FALSE(rep.searched.cost.has_value());

    rep = verify_spec(make_subdivided({6, 1, 3}, Arc::J, 3));
    CHECK(rep.match);
    CHECK(rep.searched.det == 3);
    CHECK(rep.searched.dist == 2);
    CHECK(rep.searched.cost == 4);

    rep = verify_spec(make_subdivided({4, 1, 2}, Arc::J, 1));
    CHECK(rep.match);
    CHECK(rep.searched.det == 4);
    CHECK(rep.searched.dist == 3);
}

TEST_CASE("appendix: shipped table matches the golden file and regenerates") {
    std::ifstream in(std::string(CIRCSYM_TEST_DATA_DIR) + "/table3.tsv", std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == table3_render());

    auto rep = verify_appendix_table3();
    CHECK(rep.ok);
}

TEST_CASE("appendix: lift, C2 and C3 checks") {
    CHECK(verify_appendix_repset_lift().ok);
    CHECK(verify_appendix_c2(6, 12).ok);
    CHECK(verify_appendix_c3().ok);
}
