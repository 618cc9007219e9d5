#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circsym/circulant.hpp"

namespace circsym {

enum class Arc { I, J };

// A circulant spec with one generator's arcs subdivided by p degree-2
// vertices. Vertex indexing is fixed: u_a = a, v_a^r = n + a*p + (r-1).
struct SubdividedSpec {
    CirculantSpec base;
    Arc arc = Arc::I;
    int p = 1;

    // Arc J on a j = n/2 base replaces each u_a -- u_{a+j} edge by two
    // parallel paths; everything else is the generic single-path regime.
    bool half_sum_arc() const { return arc == Arc::J && base.half_modulus(); }

    int subdivided_generator() const { return arc == Arc::I ? base.i : base.j; }
    int plain_generator() const { return arc == Arc::I ? base.j : base.i; }

    int vertex_count() const { return base.n * (1 + p); }
    int u_index(int a) const { return mod_reduce(a, base.n); }
    int v_index(int a, int r) const { return base.n + mod_reduce(a, base.n) * p + (r - 1); }
    bool is_u(int vertex) const { return vertex < base.n; }
    int v_subscript(int vertex) const { return (vertex - base.n) / p; }
    int v_superscript(int vertex) const { return (vertex - base.n) % p + 1; }

    std::string name() const;  // "C_n(i%p,j)" style
    bool operator==(const SubdividedSpec&) const = default;
};

/// Validates base connectivity/normalization and p >= 1.
SubdividedSpec make_subdivided(const CirculantSpec& base, Arc arc, int p);

/// The derived graph: n(1+p) vertices, labels "u_a" and "v_a_r".
Graph build_subdivided(const SubdividedSpec& spec);

struct SubdividedTwinClassification {
    bool twin_free = true;
    std::vector<std::pair<int, int>> v_pairs;  // vertex indices, a < b
    std::vector<std::pair<int, int>> u_pairs;

    std::vector<std::vector<int>> nontrivial_classes() const;
};

/// Twin structure: generic-arc subdivisions are twin-free; arc J on j = n/2
/// with p = 1 has v-pairs {v_a^1, v_{a+j}^1}, plus u-pairs {u_a, u_{a+2}}
/// exactly for the (4,1,2) base.
SubdividedTwinClassification twin_classification_subdivided(const SubdividedSpec& spec);

}  // namespace circsym
