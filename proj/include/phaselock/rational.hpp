#pragma once

#include <string>
#include <vector>

namespace phaselock::locking {

// Nonnegative rational in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);  // reduces; throws on n < 0 or d <= 0

    double value() const { return (double)num / (double)den; }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
};

bool operator<(const Rational& a, const Rational& b);
Rational abs_diff(const Rational& a, const Rational& b);

// Partial quotients [a0; a1, a2, ...]. Canonical form: all entries after a0
// positive and the last entry >= 2 unless the expansion is just [a0].
struct ContinuedFraction {
    std::vector<long long> a;
};

ContinuedFraction cf_expand(const Rational& x);
Rational cf_value(const ContinuedFraction& cf);

// Convergents p_i/q_i for i = 0..len-1 via the standard recurrence.
std::vector<Rational> cf_convergents(const ContinuedFraction& cf);

}  // namespace phaselock::locking
