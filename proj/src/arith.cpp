#include "phaselock/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace phaselock::arith {

namespace {

constexpr long long kFactorLimit = 100'000'000'000'000LL;  // 1e14

long long positive_mod(long long n, long long q) {
    long long r = n % q;
    return r < 0 ? r + q : r;
}

}  // namespace

ResidueClass::ResidueClass(long long q_, long long p_) : q(q_), p(p_) {
    if (q < 1) throw std::invalid_argument("ResidueClass: q must be >= 1");
    if (p < 0 || p >= q) throw std::invalid_argument("ResidueClass: p must satisfy 0 <= p < q");
    if (q > 1 && std::gcd(p, q) != 1)
        throw std::invalid_argument("ResidueClass: p must be coprime to q");
}

Sieve::Sieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || (std::uint64_t)p * i > limit) break;
            spf_[p * i] = p;
        }
    }
}

const Sieve& shared_sieve() {
    static const Sieve sieve(10'000'000);
    return sieve;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    if (n > kFactorLimit) throw std::out_of_range("factorize: n exceeds supported range");

    std::vector<std::pair<long long, int>> factors;
    const Sieve& sieve = shared_sieve();
    if (n <= sieve.limit()) {
        auto m = (std::uint32_t)n;
        while (m > 1) {
            std::uint32_t p = sieve.smallest_factor(m);
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        return factors;
    }

    long long m = n;
    for (std::uint32_t p : sieve.primes()) {
        if ((long long)p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    // Any leftover above the sieve has no factor <= 1e7, so it is prime
    // within the supported range.
    if (m > 1) factors.emplace_back(m, 1);
    return factors;
}

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long long result = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        result -= result / p;
    }
    return result;
}

int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    auto factors = factorize(n);
    for (auto [p, e] : factors) {
        (void)p;
        if (e > 1) return 0;
    }
    return factors.size() % 2 == 0 ? 1 : -1;
}

double mangoldt(long long n) {
    if (n < 1) throw std::invalid_argument("mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    auto factors = factorize(n);
    if (factors.size() != 1) return 0.0;
    return std::log((double)factors[0].first);
}

double mangoldt_general(long long n, const ResidueClass& r) {
    if (n < 1) throw std::invalid_argument("mangoldt_general: n must be >= 1");
    if (n % r.q != r.p % r.q) return 0.0;
    return mangoldt(n);
}

long long ramanujan_sum(long long q, long long n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    long long g = std::gcd(q, positive_mod(n, q));
    if (g == 0) g = q;  // n == 0 (mod q)
    long long q1 = q / g;
    int mu = moebius(q1);
    if (mu == 0) return 0;
    return mu * (euler_phi(q) / euler_phi(q1));
}

double mangoldt_dual_b(long long n) {
    if (n < 1) throw std::invalid_argument("mangoldt_dual_b: n must be >= 1");
    if (n == 1) return 0.0;
    return (double)euler_phi(n) / (double)n * mangoldt(n);
}

std::vector<signed char> moebius_table(long long t) {
    if (t < 1) throw std::invalid_argument("moebius_table: t must be >= 1");
    if (t > 200'000'000) throw std::out_of_range("moebius_table: t too large");
    auto limit = (std::size_t)t;
    std::vector<signed char> mu(limit + 1, 0);
    std::vector<std::uint32_t> spf(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    mu[1] = 1;
    for (std::size_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = (std::uint32_t)i;
            primes.push_back((std::uint32_t)i);
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || p * i > limit) break;
            spf[p * i] = p;
            mu[p * i] = (p == spf[i]) ? 0 : (signed char)(-mu[i]);
        }
    }
    return mu;
}

long long mertens(long long t) {
    auto mu = moebius_table(t);
    long long sum = 0;
    for (long long n = 1; n <= t; ++n) sum += mu[(std::size_t)n];
    return sum;
}

CouplingAverage coupling_average(long long t, const ResidueClass& r) {
    if (t < 1) throw std::invalid_argument("coupling_average: t must be >= 1");
    double sum = 0.0;
    for (long long n = r.p == 0 ? r.q : r.p; n <= t; n += r.q) sum += mangoldt(n);
    double average = sum / (double)t;
    return {average, average - 1.0 / (double)euler_phi(r.q)};
}

double dirichlet_partial(ArithFn kind, double s, long long n_max) {
    if (!(s > 1.0)) throw std::invalid_argument("dirichlet_partial: s must be > 1");
    if (n_max < 1) throw std::invalid_argument("dirichlet_partial: n_max must be >= 1");
    double sum = 0.0;
    if (kind == ArithFn::moebius) {
        auto mu = moebius_table(n_max);
        for (long long n = 1; n <= n_max; ++n)
            if (mu[(std::size_t)n] != 0) sum += mu[(std::size_t)n] / std::pow((double)n, s);
    } else {
        for (long long n = 2; n <= n_max; ++n) {
            double lam = mangoldt(n);
            if (lam != 0.0) sum += lam / std::pow((double)n, s);
        }
    }
    return sum;
}

}  // namespace phaselock::arith
