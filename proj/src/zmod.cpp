#include "circsym/zmod.hpp"

#include <algorithm>
#include <numeric>

namespace circsym {

int mod_inverse(int a, int n) {
    a = mod_reduce(a, n);
    // extended Euclid
    int r0 = n, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int q = r0 / r1;
        int r2 = r0 - q * r1;
        int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw invalid_spec_error("mod_inverse: argument is not a unit");
    return mod_reduce(s0, n);
}

bool UnitGroup::contains(int t) const {
    t = mod_reduce(t, modulus);
    return std::binary_search(elements.begin(), elements.end(), t);
}

UnitGroup units(int n) {
    if (n < 3) throw invalid_spec_error("units: modulus must be >= 3");
    UnitGroup g;
    g.modulus = n;
    for (int t = 1; t < n; ++t)
        if (std::gcd(t, n) == 1) g.elements.push_back(t);
    return g;
}

namespace {

bool preserves_pair_set(int t, int a, int b, int n) {
    // t · {±a, ±b} = {±a, ±b}
    auto in = [&](int x) {
        x = mod_reduce(x, n);
        return x == a || x == mod_reduce(-a, n) || x == b || x == mod_reduce(-b, n);
    };
    return in(static_cast<long long>(t) * a % n) && in(static_cast<long long>(t) * b % n);
}

bool preserves_sign_pair(int t, int a, int n) {
    int ta = mod_reduce(static_cast<long long>(t) * a, n);
    return ta == a || ta == mod_reduce(-a, n);
}

}  // namespace

SymbolStabilizer symbol_stabilizer(int n, int i, int j) {
    if (!(0 < i && i < j && 2 * j <= n) || gcd3(n, i, j) != 1)
        throw invalid_spec_error("symbol_stabilizer: spec must be normalized and connected");
    SymbolStabilizer st;
    st.modulus = n;
    st.gen_i = i;
    st.gen_j = j;
    for (int t : units(n).elements) {
        if (!preserves_pair_set(t, i, j, n)) continue;
        st.h.push_back(t);
        if (preserves_sign_pair(t, i, n) && preserves_sign_pair(t, j, n))
            st.h_prime.push_back(t);
    }
    return st;
}

int SpecialConditionSet::count() const {
    return int(four_i) + int(four_j) + int(three_i_j) + int(three_i_minus_j) +
           int(three_j_i) + int(three_j_minus_i);
}

std::vector<std::string> SpecialConditionSet::names() const {
    std::vector<std::string> out;
    if (four_i) out.push_back("4i=0");
    if (four_j) out.push_back("4j=0");
    if (three_i_j) out.push_back("3i=j");
    if (three_i_minus_j) out.push_back("3i=-j");
    if (three_j_i) out.push_back("3j=i");
    if (three_j_minus_i) out.push_back("3j=-i");
    return out;
}

SpecialConditionSet special_conditions(int n, int i, int j) {
    if (!(0 < i && i < j) || gcd3(n, i, j) != 1)
        throw invalid_spec_error("special_conditions: spec must be normalized and connected");
    if (2 * j >= n)
        throw wrong_regime_error("special_conditions: requires j < n/2");
    SpecialConditionSet c;
    c.four_i = mod_reduce(4LL * i, n) == 0;
    c.four_j = mod_reduce(4LL * j, n) == 0;
    c.three_i_j = mod_reduce(3LL * i - j, n) == 0;
    c.three_i_minus_j = mod_reduce(3LL * i + j, n) == 0;
    c.three_j_i = mod_reduce(3LL * j - i, n) == 0;
    c.three_j_minus_i = mod_reduce(3LL * j + i, n) == 0;
    return c;
}

std::optional<int> unit_with_nonunit_shift(int n, int i) {
    if (!(0 < i && i < n)) throw invalid_spec_error("unit_with_nonunit_shift: requires 0 < i < n");
    long long b = 1;
    bool found = false;
    int m = n;
    for (int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        if (i % p != 0) {
            b *= p;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return mod_reduce(b - i, n);
}

bool RepSet::contains(int a) const {
    return std::find(members.begin(), members.end(), a) != members.end();
}

void RepSet::validate() const {
    if (j < 1 || static_cast<int>(members.size()) != j)
        throw invalid_spec_error("RepSet: needs exactly one member per class");
    for (int k = 0; k < j; ++k)
        if (members[k] != k && members[k] != k + j)
            throw invalid_spec_error("RepSet: class-" + std::to_string(k) + " member must be k or k+j");
}

std::vector<RepSet> representative_sets(int j) {
    if (j < 2) throw invalid_spec_error("representative_sets: requires j >= 2");
    std::vector<RepSet> out;
    out.reserve(std::size_t{1} << j);
    for (unsigned mask = 0; mask < (1u << j); ++mask) {
        RepSet s;
        s.j = j;
        s.members.resize(j);
        for (int k = 0; k < j; ++k)
            s.members[k] = (mask >> k & 1u) ? k + j : k;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<AffinePair> preserving_affines(int j, const RepSet& s) {
    s.validate();
    if (s.j != j) throw invalid_spec_error("preserving_affines: RepSet has wrong half-modulus");
    const int n = 2 * j;
    std::vector<AffinePair> out;
    for (int t : {1, -1}) {
        for (int shift = 0; shift < n; ++shift) {
            bool ok = true;
            for (int a : s.members) {
                if (!s.contains(mod_reduce(shift + static_cast<long long>(t) * a, n))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back({shift, t});
        }
    }
    return out;
}

}  // namespace circsym
