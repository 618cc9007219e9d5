#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circsym/graph.hpp"
#include "circsym/zmod.hpp"

namespace circsym {

// Normalized parameters of a two-generator circulant graph: vertices Z_n,
// a ~ b iff a - b ≡ ±i or ±j, with 0 < i < j <= n/2.
struct CirculantSpec {
    int n = 0;
    int i = 0;
    int j = 0;

    int gcd() const { return gcd3(n, i, j); }
    bool connected() const { return gcd() == 1; }
    bool half_modulus() const { return 2 * j == n; }   // j = n/2 (3-regular)
    bool half_sum() const { return i + j == n / 2 && n % 2 == 0; }

    bool operator==(const CirculantSpec&) const = default;
    auto operator<=>(const CirculantSpec&) const = default;
    std::string name() const;  // "C_n(i,j)"
};

/// Replaces each generator g by min(g, n-g) and orders them.
/// Throws invalid_spec_error when a generator is ≡ 0 or the two coincide mod ±.
CirculantSpec normalize(int n, int raw_i, int raw_j);

struct Connectivity {
    bool connected = false;
    int component_count = 1;
    std::optional<CirculantSpec> component_spec;  // set when disconnected
};

Connectivity connectivity(const CirculantSpec& spec);

/// The circulant graph itself: n vertices labeled 0..n-1, 4-regular when
/// j < n/2 and 3-regular when j = n/2.
Graph build_circulant(const CirculantSpec& spec);

// Twin structure of a connected spec. The co-twin graph C_10(1,3) is kept
// as its own variant: it is twin-free but excluded from every twin-free
// closed form downstream.
enum class TwinVariant {
    CompleteGraph,  // n in {4, 5}
    Six13,          // (6,1,3): nonadjacent classes {0,2,4}, {1,3,5}
    Eight13,        // (8,1,3): nonadjacent classes {0,2,4,6}, {1,3,5,7}
    HalfSum,        // i + j = n/2, n != 8: pairs {a, a + n/2}
    CoTwin1013,     // (10,1,3)
    TwinFree,
};

std::string twin_variant_name(TwinVariant v);

struct TwinClassification {
    TwinVariant variant = TwinVariant::TwinFree;
    std::vector<std::vector<int>> classes;  // nontrivial classes, sorted

    bool has_twins() const {
        return variant != TwinVariant::TwinFree && variant != TwinVariant::CoTwin1013;
    }
};

TwinClassification twin_classification(const CirculantSpec& spec);

/// Per the arc-transitive classification restricted to two generators:
/// true iff the spec is (4,1,2) or (6,1,3), or some unit multiple normalizes
/// to (n, 1, j') with j'^2 ≡ ±1 (mod n) or n = 2m, j' = m-1, m >= 3.
bool is_edge_transitive(const CirculantSpec& spec);

struct CommonNeighborReport {
    int offset = 0;              // (b - a) mod n
    std::vector<int> neighbors;  // sorted
};

/// Closed-form N(a) ∩ N(b) for a twin-free connected spec; nullopt when the
/// pair has no common neighbors. Matches the direct intersection exactly.
std::optional<CommonNeighborReport> common_neighbors_closed(const CirculantSpec& spec, int a, int b);

/// All connected specs with j < n/2, twin-free (co-twin case included),
/// 6 <= n <= n_max, satisfying at least two special conditions.
std::vector<CirculantSpec> scan_double_special_conditions(int n_max);

}  // namespace circsym
