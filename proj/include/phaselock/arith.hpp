#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace phaselock::arith {

// Residue constraint n == p (mod q). q = 1 with p = 0 means no constraint.
struct ResidueClass {
    long long q = 1;
    long long p = 0;

    ResidueClass() = default;
    ResidueClass(long long q_, long long p_);
};

// Smallest-prime-factor sieve, immutable after construction.
class Sieve {
public:
    explicit Sieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Process-wide sieve up to 1e7, built on first use.
const Sieve& shared_sieve();

// Prime factorization as (prime, exponent) pairs with ascending primes.
// Supports 1 <= n <= 1e14.
std::vector<std::pair<long long, int>> factorize(long long n);

long long euler_phi(long long n);
int moebius(long long n);

// Log of the prime power's base when n is a prime power, else 0.
double mangoldt(long long n);

// mangoldt(n) restricted to the residue class, 0 off the class.
double mangoldt_general(long long n, const ResidueClass& r);

// c_q(n), computed from the moebius/phi closed form. Defined for all
// integer n (periodic in n with period q); q >= 1.
long long ramanujan_sum(long long q, long long n);

// Dual Mangoldt coefficient b(n) = phi(n)/n * mangoldt(n); b(1) = 0.
double mangoldt_dual_b(long long n);

// mu(1..t) via a linear sieve; independent of shared_sieve().
std::vector<signed char> moebius_table(long long t);

// M(t) = sum of mu(n) for n <= t.
long long mertens(long long t);

struct CouplingAverage {
    double average;  // (1/t) * sum of mangoldt_general(n; r) for n <= t
    double epsilon;  // average - 1/phi(q)
};
CouplingAverage coupling_average(long long t, const ResidueClass& r);

enum class ArithFn { moebius, mangoldt };

// Partial Dirichlet sum f(n)/n^s for n <= n_max; requires s > 1.
double dirichlet_partial(ArithFn kind, double s, long long n_max);

}  // namespace phaselock::arith
