#pragma once

#include <optional>
#include <vector>

#include "phaselock/rational.hpp"

namespace phaselock::locking {

struct FilterConfig {
    double f0_hz;  // reference frequency
    double fc_hz;  // low-pass cutoff

    FilterConfig(double f0, double fc);
};

struct LockingBasin {
    Rational center;
    Rational nu1;
    Rational nu2;
    double width_hz = 0.0;
    bool overlap = false;
};

// floor(f0 / (fc * q)); throws domain_error when the floor is 0 (basin
// unresolvable at this q).
long long truncation_index(const FilterConfig& cfg, long long q);

// Edge rationals of the basin around `center`: the canonical expansion with
// a_next appended, and the alternate expansion (last quotient rewritten as
// quotient-1, 1) with a_next appended. center = 0 gets a one-sided basin
// (nu2 = center).
std::pair<Rational, Rational> basin_edges(const Rational& center, long long a_next);

// All basins with reduced centers p/q in the open interval (lo, hi), q <=
// q_max, that survive the truncation rule; sorted by center, overlap flags
// set.
std::vector<LockingBasin> spectrum_scan(const FilterConfig& cfg, long long q_max,
                                        double lo, double hi);

// Marks basins whose edge intervals intersect a neighbor's interior
// (basins must be sorted by center).
void mark_overlaps(std::vector<LockingBasin>& basins);

}  // namespace phaselock::locking
