#include "phaselock/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace phaselock::locking {

Rational::Rational(long long n, long long d) {
    if (n < 0) throw std::invalid_argument("Rational: numerator must be >= 0");
    if (d <= 0) throw std::invalid_argument("Rational: denominator must be > 0");
    long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

Rational abs_diff(const Rational& a, const Rational& b) {
    __int128 diff = (__int128)a.num * b.den - (__int128)b.num * a.den;
    if (diff < 0) diff = -diff;
    auto d = (long long)((__int128)a.den * b.den);
    return {(long long)diff, d};
}

ContinuedFraction cf_expand(const Rational& x) {
    ContinuedFraction cf;
    long long n = x.num, d = x.den;
    while (d != 0) {
        cf.a.push_back(n / d);
        long long r = n % d;
        n = d;
        d = r;
    }
    // Euclid can end with a final quotient of 1; fold it into the previous
    // entry so each rational has one expansion.
    if (cf.a.size() > 1 && cf.a.back() == 1) {
        cf.a.pop_back();
        cf.a.back() += 1;
    }
    return cf;
}

Rational cf_value(const ContinuedFraction& cf) {
    if (cf.a.empty()) throw std::invalid_argument("cf_value: empty expansion");
    auto convergents = cf_convergents(cf);
    return convergents.back();
}

std::vector<Rational> cf_convergents(const ContinuedFraction& cf) {
    if (cf.a.empty()) throw std::invalid_argument("cf_convergents: empty expansion");
    if (cf.a[0] < 0) throw std::invalid_argument("cf_convergents: a0 must be >= 0");
    for (std::size_t i = 1; i < cf.a.size(); ++i)
        if (cf.a[i] < 1) throw std::invalid_argument("cf_convergents: entries after a0 must be >= 1");

    std::vector<Rational> result;
    long long p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    long long p = cf.a[0], q = 1;
    result.push_back(Rational(p, q));
    for (std::size_t i = 1; i < cf.a.size(); ++i) {
        long long p_next = cf.a[i] * p + p_prev;
        long long q_next = cf.a[i] * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        result.push_back(Rational(p, q));
    }
    return result;
}

}  // namespace phaselock::locking
