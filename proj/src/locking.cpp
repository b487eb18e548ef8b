#include "phaselock/locking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phaselock::locking {

FilterConfig::FilterConfig(double f0, double fc) : f0_hz(f0), fc_hz(fc) {
    if (!(f0 > 0.0)) throw std::invalid_argument("FilterConfig: f0 must be > 0");
    if (!(fc > 0.0)) throw std::invalid_argument("FilterConfig: fc must be > 0");
    if (fc > f0) throw std::invalid_argument("FilterConfig: fc must not exceed f0");
}

namespace {

long long truncation_floor(const FilterConfig& cfg, long long q) {
    if (q < 1) throw std::invalid_argument("truncation_index: q must be >= 1");
    return (long long)std::floor(cfg.f0_hz / (cfg.fc_hz * (double)q));
}

}  // namespace

long long truncation_index(const FilterConfig& cfg, long long q) {
    long long a = truncation_floor(cfg, q);
    if (a < 1) throw std::domain_error("truncation_index: basin unresolvable at this q");
    return a;
}

std::pair<Rational, Rational> basin_edges(const Rational& center, long long a_next) {
    if (a_next < 1) throw std::invalid_argument("basin_edges: a_next must be >= 1");

    ContinuedFraction cf = cf_expand(center);
    if (center.num == 0) {
        return {cf_value({{0, a_next}}), center};
    }

    ContinuedFraction first = cf;
    first.a.push_back(a_next);

    // Rewrite the last quotient a as (a-1),1; canonical form keeps the
    // decremented entry >= 1 except for a length-1 expansion, where a
    // leading 0 is legal.
    ContinuedFraction second = cf;
    second.a.back() -= 1;
    second.a.push_back(1);
    second.a.push_back(a_next);

    return {cf_value(first), cf_value(second)};
}

std::vector<LockingBasin> spectrum_scan(const FilterConfig& cfg, long long q_max,
                                        double lo, double hi) {
    if (q_max < 1) throw std::invalid_argument("spectrum_scan: q_max must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("spectrum_scan: empty range");
    if (lo < -0.5) lo = -0.5;  // centers are nonnegative rationals

    std::vector<LockingBasin> basins;
    for (long long q = 1; q <= q_max; ++q) {
        long long a_next = truncation_floor(cfg, q);
        if (a_next < 1) continue;
        auto p_lo = (long long)std::ceil(lo * (long double)q);
        auto p_hi = (long long)std::floor(hi * (long double)q);
        for (long long p = std::max(0LL, p_lo); p <= p_hi; ++p) {
            if (std::gcd(p, q) != 1 && !(p == 0 && q == 1)) continue;
            long double v = (long double)p / (long double)q;
            if (!(v > lo && v < hi)) continue;
            LockingBasin basin;
            basin.center = Rational(p, q);
            auto [nu1, nu2] = basin_edges(basin.center, a_next);
            basin.nu1 = nu1;
            basin.nu2 = nu2;
            basin.width_hz = abs_diff(nu1, nu2).value() * cfg.f0_hz;
            basins.push_back(basin);
        }
    }
    std::sort(basins.begin(), basins.end(),
              [](const LockingBasin& a, const LockingBasin& b) { return a.center < b.center; });
    mark_overlaps(basins);
    return basins;
}

void mark_overlaps(std::vector<LockingBasin>& basins) {
    auto low = [](const LockingBasin& b) { return std::min(b.nu1, b.nu2); };
    auto high = [](const LockingBasin& b) { return std::max(b.nu1, b.nu2); };
    for (std::size_t i = 0; i + 1 < basins.size(); ++i) {
        if (low(basins[i + 1]) < high(basins[i])) {
            basins[i].overlap = true;
            basins[i + 1].overlap = true;
        }
    }
}

}  // namespace phaselock::locking
