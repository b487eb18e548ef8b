#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "phaselock/locking.hpp"
#include "phaselock/rational.hpp"

using namespace phaselock::locking;

TEST_SUITE("locking") {

TEST_CASE("rational construction and order") {
    Rational r(6, 4);
    CHECK(r.num == 3);
    CHECK(r.den == 2);
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK_THROWS_AS(Rational(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_FALSE(Rational(1, 2) < Rational(1, 2));
    CHECK(abs_diff(Rational(3, 5), Rational(19, 32)) == Rational(1, 160));
    CHECK(Rational(3, 5).str() == "3/5");
}

TEST_CASE("continued fraction expansion") {
    CHECK(cf_expand(Rational(19, 32)).a == std::vector<long long>{0, 1, 1, 2, 6});
    CHECK(cf_expand(Rational(3, 5)).a == std::vector<long long>{0, 1, 1, 2});
    CHECK(cf_expand(Rational(7, 1)).a == std::vector<long long>{7});
    CHECK(cf_expand(Rational(0, 1)).a == std::vector<long long>{0});
    // canonical form never ends in 1 except for [a0]
    CHECK(cf_expand(Rational(1, 1)).a == std::vector<long long>{1});
    CHECK(cf_expand(Rational(5, 4)).a == std::vector<long long>{1, 4});
}

TEST_CASE("continued fraction round trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(0, 100'000);
    for (int trial = 0; trial < 10'000; ++trial) {
        Rational x(dist(rng), dist(rng) + 1);
        auto cf = cf_expand(x);
        REQUIRE(cf_value(cf) == x);
        if (cf.a.size() > 1) REQUIRE(cf.a.back() >= 2);
        for (std::size_t i = 1; i < cf.a.size(); ++i) REQUIRE(cf.a[i] >= 1);
    }
}

TEST_CASE("convergents") {
    ContinuedFraction cf{{0, 1, 1, 2}};
    auto conv = cf_convergents(cf);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == Rational(0, 1));
    CHECK(conv[1] == Rational(1, 1));
    CHECK(conv[2] == Rational(1, 2));
    CHECK(conv[3] == Rational(3, 5));
    CHECK_THROWS_AS(cf_convergents(ContinuedFraction{{}}), std::invalid_argument);
    CHECK_THROWS_AS(cf_convergents(ContinuedFraction{{1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("convergents approximate better than 1/(q_i q_{i+1})") {
    Rational x(355, 113);
    auto conv = cf_convergents(cf_expand(x));
    for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
        auto err = abs_diff(conv[i], x);
        // |x - p_i/q_i| <= 1/(q_i q_{i+1})
        CHECK_FALSE(Rational(1, conv[i].den * conv[i + 1].den) < err);
    }
}

TEST_CASE("filter config") {
    CHECK_NOTHROW(FilterConfig(1e7, 1e7));
    CHECK_THROWS_AS(FilterConfig(1e7, 2e7), std::invalid_argument);
    CHECK_THROWS_AS(FilterConfig(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FilterConfig(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("truncation index") {
    FilterConfig cfg(1e7, 3e5);
    CHECK(truncation_index(cfg, 1) == 33);
    CHECK(truncation_index(cfg, 5) == 6);
    CHECK(truncation_index(cfg, 33) == 1);
    CHECK_THROWS_AS(truncation_index(cfg, 34), std::domain_error);
}

TEST_CASE("basin edges") {
    auto [lo, hi] = basin_edges(Rational(3, 5), 6);
    CHECK(lo == Rational(19, 32));
    CHECK(hi == Rational(20, 33));
    auto [lo1, hi1] = basin_edges(Rational(1, 1), 33);
    CHECK(lo1 == Rational(34, 33));
    CHECK(hi1 == Rational(33, 34));
    auto [lo0, hi0] = basin_edges(Rational(0, 1), 33);
    CHECK(lo0 == Rational(1, 33));
    CHECK(hi0 == Rational(0, 1));
}

TEST_CASE("basin edges straddle the center") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(1, 400);
    for (int trial = 0; trial < 2000; ++trial) {
        Rational center(dist(rng), dist(rng));
        long long a_next = 1 + (long long)(rng() % 30);
        auto [e1, e2] = basin_edges(center, a_next);
        REQUIRE(e1 != e2);
        Rational low = e1 < e2 ? e1 : e2;
        Rational high = e1 < e2 ? e2 : e1;
        REQUIRE(low < center);
        REQUIRE(center < high);
    }
}

TEST_CASE("spectrum scan Farey count") {
    FilterConfig cfg(1e7, 3e5);
    auto basins = spectrum_scan(cfg, 5, 0.0, 1.0);
    // 1/5 2/5 3/5 4/5 1/4 3/4 1/3 2/3 1/2 inside the open interval
    CHECK(basins.size() == 9);
    for (std::size_t i = 1; i < basins.size(); ++i)
        CHECK(basins[i - 1].center < basins[i].center);
}

TEST_CASE("spectrum scan single basin") {
    FilterConfig cfg(1e7, 3e5);
    auto basins = spectrum_scan(cfg, 1, 0.0, 2.0);
    REQUIRE(basins.size() == 1);
    CHECK(basins[0].center == Rational(1, 1));
    CHECK(basins[0].nu1 == Rational(34, 33));
    CHECK(basins[0].nu2 == Rational(33, 34));
    CHECK_FALSE(basins[0].overlap);
}

TEST_CASE("spectrum scan widths") {
    FilterConfig cfg(1e7, 3e5);
    auto basins = spectrum_scan(cfg, 5, 0.0, 1.0);
    for (const auto& b : basins) {
        CHECK(b.width_hz == doctest::Approx(abs_diff(b.nu1, b.nu2).value() * 1e7).epsilon(1e-12));
        if (b.center == Rational(3, 5)) {
            CHECK(b.nu1 == Rational(19, 32));
            CHECK(b.nu2 == Rational(20, 33));
            CHECK(b.width_hz == doctest::Approx(123106.060606).epsilon(1e-9));
        }
    }
}

TEST_CASE("overlap marking") {
    std::vector<LockingBasin> basins(3);
    basins[0] = {Rational(1, 4), Rational(24, 100), Rational(26, 100), 0.0, false};
    basins[1] = {Rational(1, 2), Rational(45, 100), Rational(55, 100), 0.0, false};
    basins[2] = {Rational(3, 4), Rational(74, 100), Rational(76, 100), 0.0, false};
    mark_overlaps(basins);
    CHECK_FALSE(basins[0].overlap);
    CHECK_FALSE(basins[1].overlap);
    CHECK_FALSE(basins[2].overlap);
    basins[1] = {Rational(1, 2), Rational(25, 100), Rational(55, 100), 0.0, false};
    mark_overlaps(basins);
    CHECK(basins[0].overlap);
    CHECK(basins[1].overlap);
    CHECK_FALSE(basins[2].overlap);
}

TEST_CASE("wider filter widens basins") {
    auto narrow = spectrum_scan(FilterConfig(1e7, 1e5), 3, 0.0, 1.0);
    auto wide = spectrum_scan(FilterConfig(1e7, 1e6), 3, 0.0, 1.0);
    REQUIRE(narrow.size() == wide.size());
    for (std::size_t i = 0; i < narrow.size(); ++i) {
        REQUIRE(narrow[i].center == wide[i].center);
        CHECK(narrow[i].width_hz < wide[i].width_hz);
    }
}

}
