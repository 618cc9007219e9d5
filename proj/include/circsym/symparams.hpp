#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circsym/autgroup.hpp"

namespace circsym {

struct SearchBudget {
    long long max_nodes = 100'000'000LL;
    static SearchBudget from_env();
};

// ---- searches over an explicitly enumerated group -------------------------
//
// All three searches take the acting group as a plain permutation list so the
// same code runs against either a closed-form group or the brute oracle.
// Subset and coloring enumeration is lexicographic and size-ascending, so
// witnesses are reproducible.

struct DeterminingResult {
    int value = 0;
    std::vector<int> witness;  // lexicographically least minimum set
};

DeterminingResult determining_number(const Graph& g, const std::vector<std::vector<int>>& group,
                                     const SearchBudget& budget = {});

struct DistinguishingResult {
    int value = 0;
    std::vector<int> coloring;  // per-vertex colors 0..value-1
};

DistinguishingResult distinguishing_number(const Graph& g, const std::vector<std::vector<int>>& group,
                                           const SearchBudget& budget = {});

struct CostResult {
    int value = 0;
    std::vector<int> witness;  // lexicographically least minimum color class
};

/// Minimum color-class size over 2-distinguishing colorings; nullopt when no
/// 2-distinguishing coloring exists.
std::optional<CostResult> cost_2dist(const Graph& g, const std::vector<std::vector<int>>& group,
                                     const SearchBudget& budget = {});

/// Smallest d with binom(d, k) >= d_tilde.
int dist_from_quotient(int k, int d_tilde);

// ---- witness validation ----------------------------------------------------

bool pointwise_trivial(const std::vector<std::vector<int>>& group, const std::vector<int>& w);
bool setwise_trivial(const std::vector<std::vector<int>>& group, const std::vector<int>& r);
bool coloring_distinguishing(const std::vector<std::vector<int>>& group, const std::vector<int>& colors);

// ---- closed forms ----------------------------------------------------------

enum class Method { ClosedForm, Search };

struct SymmetryReport {
    int det = 0;
    int dist = 0;
    std::optional<int> cost;  // present iff dist == 2
    std::optional<std::vector<int>> det_witness;
    std::optional<std::vector<int>> dist_witness;  // a full coloring
    std::optional<std::vector<int>> cost_witness;
    Method method = Method::ClosedForm;
};

SymmetryReport closed_form_params(const CirculantSpec& spec);
SymmetryReport closed_form_params(const SubdividedSpec& spec);

/// The 3-vertex color class certifying cost 3 on a twin-free base
/// (not C_10(1,3)): {-j, 0, i} when 2i ≡ j; {0, i, 3i} when some t in H
/// swaps i and j; {0, i, j} otherwise.
std::vector<int> witness_2dist_class(const CirculantSpec& spec);

/// det/dist/cost by search, bundled.
SymmetryReport search_params(const Graph& g, const std::vector<std::vector<int>>& group,
                             const SearchBudget& budget = {});

// ---- oracle cross-validation -----------------------------------------------

struct VerifySpecReport {
    bool match = false;
    SymmetryReport closed;
    SymmetryReport searched;
    std::vector<std::string> issues;
};

VerifySpecReport verify_spec(const CirculantSpec& spec, const BruteBudget& brute_budget = {},
                             const SearchBudget& search_budget = {});
VerifySpecReport verify_spec(const SubdividedSpec& spec, const BruteBudget& brute_budget = {},
                             const SearchBudget& search_budget = {});

// ---- appendix checks ---------------------------------------------------------

struct AppendixReport {
    std::string check;
    bool ok = false;
    std::string detail;
};

// Shipped preserver table: for j in {2..5} one (s,-1) preserver per
// representative set.
struct Table3Row {
    int j = 0;
    int s = 0;
    std::vector<int> rep;  // class order a_0..a_{j-1}
};

const std::vector<Table3Row>& table3_rows();
std::string table3_render();  // canonical text form of the shipped table

/// Regenerates the preserver table for j in {2..5} and compares it against
/// the shipped rows: every listed incidence must hold and every
/// representative set must be covered.
AppendixReport verify_appendix_table3();

/// The p = 2 lift: for j in {2..5} and every candidate class R with
/// superscripts in {1,2}, the shipped preserver lifts through path flips to
/// a nontrivial element of the full group preserving R.
AppendixReport verify_appendix_repset_lift();

/// For j_min <= j <= j_max, the representative set {0,1,j+2,3,...,j-1} is
/// preserved only by the identity affine pair.
AppendixReport verify_appendix_c2(int j_min = 6, int j_max = 12);

/// On C_6(1,3%3) and C_6(2,3%3): every size-3 candidate class with
/// representative-set subscripts has a nontrivial setwise preserver, and the
/// searched cost is 4.
AppendixReport verify_appendix_c3();

}  // namespace circsym
