#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circsym/common.hpp"

namespace circsym {

// A residue class mod n, always stored as the canonical representative in [0, n).
struct Residue {
    int value = 0;
    int modulus = 1;

    Residue() = default;
    Residue(long long v, int n) : value(mod_reduce(v, n)), modulus(n) {
        if (n < 1) throw invalid_spec_error("Residue: modulus must be >= 1");
    }

    Residue operator+(Residue rhs) const { return {static_cast<long long>(value) + check(rhs).value, modulus}; }
    Residue operator-(Residue rhs) const { return {static_cast<long long>(value) - check(rhs).value, modulus}; }
    Residue operator*(Residue rhs) const { return {static_cast<long long>(value) * check(rhs).value, modulus}; }
    Residue operator-() const { return {-static_cast<long long>(value), modulus}; }
    bool operator==(const Residue&) const = default;

private:
    Residue check(Residue rhs) const {
        if (rhs.modulus != modulus) throw invalid_spec_error("Residue: modulus mismatch");
        return rhs;
    }
};

// The multiplicative group U(n) of units mod n, elements sorted ascending.
struct UnitGroup {
    int modulus = 1;
    std::vector<int> elements;

    bool contains(int t) const;
};

/// All residues in [1, n) coprime to n. Requires n >= 3.
UnitGroup units(int n);

// H  = units preserving {±i, ±j} under multiplication,
// H' = units preserving {±i} and {±j} separately. Both sorted ascending.
struct SymbolStabilizer {
    int modulus = 0;
    int gen_i = 0;
    int gen_j = 0;
    std::vector<int> h;
    std::vector<int> h_prime;
};

/// Computes H and H' by direct filtration of U(n).
/// Requires a normalized spec: 0 < i < j <= n/2, gcd(n, i, j) = 1.
SymbolStabilizer symbol_stabilizer(int n, int i, int j);

// Which of the six linear conditions on (i, j) hold mod n. Each condition
// adds a row to the common-neighbor table when j < n/2.
struct SpecialConditionSet {
    bool four_i = false;          // 4i ≡ 0
    bool four_j = false;          // 4j ≡ 0
    bool three_i_j = false;       // 3i ≡ j
    bool three_i_minus_j = false; // 3i ≡ -j
    bool three_j_i = false;       // 3j ≡ i
    bool three_j_minus_i = false; // 3j ≡ -i

    int count() const;
    std::vector<std::string> names() const;
    bool operator==(const SpecialConditionSet&) const = default;
};

/// Requires 0 < i < j < n/2 and gcd(n, i, j) = 1; throws wrong_regime_error
/// when j = n/2 (the three-regular table applies there instead).
SpecialConditionSet special_conditions(int n, int i, int j);

/// If some prime divides n but not i, returns a = b - i where b is the
/// product of all such primes; then a is a unit and a + i is not.
/// Returns nullopt when every prime of n divides i (no such unit exists).
std::optional<int> unit_with_nonunit_shift(int n, int i);

// A set of representatives of Z_j in Z_{2j}: one of {k, k+j} for each k,
// stored in class order (members[k] is the class-k representative).
struct RepSet {
    int j = 0;
    std::vector<int> members;

    bool contains(int a) const;
    void validate() const;  // throws invalid_spec_error on a malformed set
};

/// All 2^j representative sets, ordered by the bitmask choosing k+j over k.
std::vector<RepSet> representative_sets(int j);

// An element (s, t) of Z_{2j} ⋊ {±1} acting as a ↦ s + t·a. Here t is
// stored literally as +1 or -1.
struct AffinePair {
    int s = 0;
    int t = 1;
    bool operator==(const AffinePair&) const = default;
};

/// All (s, t) in Z_{2j} ⋊ {±1} with {s + t·a : a in S} = S, identity included,
/// ordered by (t descending from +1, s ascending).
std::vector<AffinePair> preserving_affines(int j, const RepSet& s);

}  // namespace circsym
