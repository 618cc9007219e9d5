#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "circsym/brute.hpp"
#include "circsym/subdivided.hpp"

namespace circsym {

// Which graph a group element acts on; carries everything the action
// formulas need.
struct ActionContext {
    enum class Kind { Base, SubdividedArcI, SubdividedArcJ, SubdividedHalfSum };
    Kind kind = Kind::Base;
    int n = 0;  // base order
    int i = 0;
    int j = 0;
    int p = 0;  // 0 for base graphs

    int vertex_count() const { return kind == Kind::Base ? n : n * (1 + p); }
    static ActionContext base(const CirculantSpec& s) { return {Kind::Base, s.n, s.i, s.j, 0}; }
    static ActionContext subdivided(const SubdividedSpec& s);
};

// a ↦ s + t·a. On subdivisions t acts through the unique extension
// (superscripts reverse when t negates the subdivided generator).
struct Affine {
    int s = 0;
    int t = 1;  // canonical residue in [0, n)
};

// Affine map with t = ±1 followed by twin swaps: vertices whose class
// (image mod n/2) has its flip bit set are moved by n/2. Canonical form
// has bit 0 clear; flipping all bits equals shifting s by n/2.
struct FlipAffine {
    uint32_t flips = 0;  // n/2 bits
    int s = 0;
    int t = 1;
};

// For C_{2j}(i, j%p): affine map on subscripts (no superscript reversal,
// since t·j ≡ j) followed by path flips β_c on the classes with set bits.
struct BetaAffine {
    uint32_t flips = 0;  // j bits
    int s = 0;
    int t = 1;
};

struct PermElement {
    std::vector<int> map;
};

using GroupElement = std::variant<Affine, FlipAffine, BetaAffine, PermElement>;

int act(const GroupElement& e, int v, const ActionContext& ctx);
std::vector<int> induced_permutation(const GroupElement& e, const ActionContext& ctx);
std::string render_element(const GroupElement& e, const ActionContext& ctx);

enum class StructureTag {
    ZnH,        // Z_n ⋊ H on a twin-free base
    ZnHprime,   // Z_n ⋊ H' on a generic-arc subdivision
    Symmetric,  // S_n for the complete bases
    Z2xS5,      // C_10(1,3)
    WreathLike, // C_6(1,3) / C_8(1,3)
    FlipZnPm,   // twin flips ⋊ (Z_n ⋊ ±1) on a half-sum base
    BetaZ2jPm,  // B ⋊ (Z_2j ⋊ ±1) on a half-sum-arc subdivision
};

std::string structure_tag_name(StructureTag t);

struct AutGroup {
    StructureTag tag = StructureTag::ZnH;
    long long order = 0;
    ActionContext ctx;
    std::vector<GroupElement> elements;
    std::vector<GroupElement> generators;

    std::vector<std::vector<int>> permutations() const;
    std::string report_json() const;  // {structure_tag, order, generators:[...]}
};

// Guard on full enumeration; group_order never enumerates.
inline constexpr long long kDefaultEnumerationLimit = 2'000'000;

AutGroup closed_form_group(const CirculantSpec& spec, long long max_elements = kDefaultEnumerationLimit);
AutGroup closed_form_group(const SubdividedSpec& spec, long long max_elements = kDefaultEnumerationLimit);

long long group_order(const CirculantSpec& spec);
long long group_order(const SubdividedSpec& spec);

struct GroupVerification {
    bool ok = false;
    long long closed_order = 0;
    long long brute_order = 0;
    std::string detail;
};

/// Checks that every closed-form element is an automorphism, that induced
/// permutations are pairwise distinct, and that their count matches the
/// brute-force enumeration.
GroupVerification verify_group(const CirculantSpec& spec, const BruteBudget& budget = {});
GroupVerification verify_group(const SubdividedSpec& spec, const BruteBudget& budget = {});

/// Composition via induced permutations: result maps v to lhs(rhs(v)).
std::vector<int> compose(const std::vector<int>& lhs, const std::vector<int>& rhs);

}  // namespace circsym
