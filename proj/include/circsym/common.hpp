#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circsym {

// Invalid or degenerate input parameters (bad modulus, degenerate generators,
// spec not normalized, ...).
class invalid_spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called outside the parameter regime it is defined for
// (e.g. a closed form that assumes j < n/2 or a twin-free graph).
class wrong_regime_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Search or enumeration refused because it would exceed the configured budget.
// Callers that sweep many specs convert this into an explicit SKIPPED marker.
class budget_exceeded_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical representative of x mod n in [0, n).
inline int mod_reduce(long long x, int n) {
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

inline int gcd3(int a, int b, int c) {
    return std::gcd(a, std::gcd(b, c));
}

// Inverse of a mod n; requires gcd(a, n) = 1.
int mod_inverse(int a, int n);

}  // namespace circsym
