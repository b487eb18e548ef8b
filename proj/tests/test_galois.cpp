#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "phaselock/galois.hpp"

using namespace phaselock;
using namespace phaselock::galois;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("galois") {

TEST_CASE("field construction") {
    GaloisField f7(7, 1);
    CHECK(f7.q() == 7);
    CHECK(f7.modulus() == std::vector<int>{0, 1});
    CHECK(f7.generator() == 3);

    GaloisField f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
    CHECK(f9.generator() == 4);
    CHECK(f9.coeffs(f9.generator()) == std::vector<int>{1, 1});

    GaloisField f27(3, 3);
    CHECK(f27.modulus() == std::vector<int>{1, 2, 0, 1});

    CHECK_THROWS_AS(GaloisField(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(7, 5), std::invalid_argument);
}

TEST_CASE("field axioms") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {3, 3}}) {
        GaloisField f(p, m);
        int q = f.q();
        for (int a = 0; a < q; ++a) {
            REQUIRE(f.add(a, 0) == a);
            REQUIRE(f.mul(a, 1) == a);
            REQUIRE(f.add(a, f.neg(a)) == 0);
            REQUIRE(f.element(f.coeffs(a)) == a);
            if (a != 0) {
                REQUIRE(f.mul(a, f.inverse(a)) == 1);
                REQUIRE(f.exp(f.log(a)) == a);
            }
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
            }
        // sampled associativity and distributivity
        for (int a = 1; a < q; a += 2)
            for (int b = 2; b < q; b += 3)
                for (int c = 0; c < q; c += 2) {
                    REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
        // characteristic p
        for (int a = 0; a < q; ++a) {
            int acc = 0;
            for (int i = 0; i < p; ++i) acc = f.add(acc, a);
            REQUIRE(acc == 0);
        }
    }
}

TEST_CASE("generator spans the unit group") {
    GaloisField f(3, 2);
    std::vector<bool> seen(9, false);
    int x = 1;
    for (int s = 0; s < 8; ++s) {
        CHECK_FALSE(seen[x]);
        seen[x] = true;
        CHECK(f.exp(s) == x);
        CHECK(f.log(x) == s);
        x = f.mul(x, f.generator());
    }
    CHECK(x == 1);
    CHECK(f.pow(f.generator(), 8) == 1);
    CHECK(f.pow(f.generator(), 4) != 1);
}

TEST_CASE("trace") {
    GaloisField f9(3, 2);
    CHECK(f9.trace(0) == 0);
    CHECK(f9.trace(1) == 2);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
        GaloisField f(p, m);
        std::map<int, int> fibers;
        for (int x = 0; x < f.q(); ++x) {
            int t = f.trace(x);
            REQUIRE(t >= 0);
            REQUIRE(t < p);
            ++fibers[t];
            // Frobenius invariance
            REQUIRE(f.trace(f.pow(x, p)) == t);
        }
        REQUIRE((int)fibers.size() == p);
        for (auto [value, count] : fibers) {
            (void)value;
            REQUIRE(count == f.q() / p);
        }
        for (int x = 0; x < f.q(); x += 2)
            for (int y = 1; y < f.q(); y += 3)
                REQUIRE(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p);
    }
}

TEST_CASE("characters") {
    GaloisField f(3, 2);
    CharacterSpec add_chi{CharacterSpec::additive, 0};
    CharacterSpec triv{CharacterSpec::multiplicative, 0};
    CharacterSpec psi{CharacterSpec::multiplicative, 1};

    Complex add_sum = 0.0, mul_sum = 0.0;
    for (int x = 0; x < 9; ++x) {
        add_sum += char_eval(f, add_chi, x);
        CHECK(char_eval(f, triv, x) == Complex(1.0, 0.0));
        for (int y = 0; y < 9; ++y)
            CHECK(std::abs(char_eval(f, add_chi, f.add(x, y)) -
                           char_eval(f, add_chi, x) * char_eval(f, add_chi, y)) < 1e-13);
        if (x != 0) {
            mul_sum += char_eval(f, psi, x);
            CHECK(std::abs(std::abs(char_eval(f, psi, x)) - 1.0) < 1e-13);
            for (int y = 1; y < 9; ++y)
                CHECK(std::abs(char_eval(f, psi, f.mul(x, y)) -
                               char_eval(f, psi, x) * char_eval(f, psi, y)) < 1e-13);
        }
    }
    CHECK(char_eval(f, psi, 0) == Complex(0.0, 0.0));
    CHECK(std::abs(add_sum) < 1e-12);
    CHECK(std::abs(mul_sum) < 1e-12);
    // index is periodic mod q-1
    CHECK(std::abs(char_eval(f, CharacterSpec{CharacterSpec::multiplicative, 9}, 5) -
                   char_eval(f, psi, 5)) < 1e-13);
}

TEST_CASE("mub state amplitudes") {
    GaloisField f3(3, 1);
    CharacterSpec triv{CharacterSpec::multiplicative, 0};
    auto s = mub_state(f3, 1, 0, triv);
    double r = 1.0 / std::sqrt(3.0);
    Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);
    CHECK(std::abs(s.amps(0) - Complex(r, 0.0)) < 1e-14);
    CHECK(std::abs(s.amps(1) - r * omega) < 1e-14);
    CHECK(std::abs(s.amps(2) - r * omega) < 1e-14);
    CHECK(s.normalized);

    CharacterSpec psi{CharacterSpec::multiplicative, 1};
    auto raw = mub_state(f3, 1, 0, psi);
    CHECK_FALSE(raw.normalized);
    CHECK(raw.norm() == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
    auto renorm = mub_state(f3, 1, 0, psi, true);
    CHECK(renorm.normalized);
    CHECK(renorm.norm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("mutually unbiased bases") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}}) {
        GaloisField f(p, m);
        auto report = mub_verify(f);
        CHECK(report.q == f.q());
        CHECK(report.n_bases == f.q() + 1);
        CHECK(report.max_dev < 1e-10);
    }
}

TEST_CASE("incomplete gauss sum endpoints") {
    GaloisField f7(7, 1);
    CharacterSpec triv{CharacterSpec::multiplicative, 0};
    auto t0 = gauss_T(f7, 1, triv, 0);
    CHECK(t0.value.real() == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(t0.value.imag() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(t0.bound == doctest::Approx(6.0).epsilon(1e-13));
    // k = p-1 leaves an empty summation range
    auto edge = gauss_T(f7, 1, triv, 6);
    CHECK(std::abs(edge.value) == 0.0);
    CHECK_THROWS_AS(gauss_T(f7, 1, triv, 7), std::invalid_argument);
    CHECK_THROWS_AS(gauss_T(GaloisField(3, 2), 1, triv, 1), std::invalid_argument);
}

TEST_CASE("gauss sum conjugate symmetry") {
    GaloisField f(11, 1);
    for (int psi_k : {0, 1, 3}) {
        CharacterSpec psi{CharacterSpec::multiplicative, psi_k};
        for (int a : {1, 2, 7})
            for (int k = 1; k < 11; ++k) {
                auto plus = gauss_T(f, a, psi, k);
                auto minus = gauss_T(f, a, psi, -k);
                CHECK(std::abs(minus.value - std::conj(plus.value)) < 1e-12);
            }
    }
}

TEST_CASE("gauss sum bounds at small primes") {
    for (int p : {3, 5, 7, 11, 13}) {
        GaloisField f(p, 1);
        for (int a = 1; a < p; ++a) {
            for (int k = 1; k < p; ++k) {
                CharacterSpec triv{CharacterSpec::multiplicative, 0};
                auto t = gauss_T(f, a, triv, k);
                CHECK(std::abs(t.value) <= t.bound + 1e-9);
                for (int psi_k = 1; psi_k < p - 1; ++psi_k) {
                    CharacterSpec psi{CharacterSpec::multiplicative, psi_k};
                    auto tn = gauss_T(f, a, psi, k);
                    CHECK(std::abs(tn.value) <= 3.0 * std::sqrt((double)p) * std::log((double)p));
                }
            }
        }
    }
}

TEST_CASE("gauss scan matches brute force") {
    int p = 7;
    auto scan = gauss_scan(p);
    CHECK(scan.weil_bound == doctest::Approx(3.0 * std::sqrt(7.0) * std::log(7.0)).epsilon(1e-13));
    CHECK(scan.max_trivial_excess <= 1e-9);
    GaloisField f(p, 1);
    double brute = 0.0;
    for (int a = 1; a < p; ++a)
        for (int psi_k = 1; psi_k < p - 1; ++psi_k)
            for (int k = 1; k < p; ++k) {
                CharacterSpec psi{CharacterSpec::multiplicative, psi_k};
                brute = std::max(brute, std::abs(gauss_T(f, a, psi, k).value));
            }
    CHECK(scan.max_abs_nontrivial == doctest::Approx(brute).epsilon(1e-10));
    CHECK(scan.max_abs_nontrivial <= scan.weil_bound);
}

TEST_CASE("partial sums closed forms") {
    for (int p : {3, 7, 11, 31}) {
        auto zero = partial_sums_uv(p, 0);
        CHECK(zero.u.real() == doctest::Approx((double)p * (p + 1) / 2.0).epsilon(1e-12));
        CHECK(zero.v.real() ==
              doctest::Approx((double)p * (p + 1) * (2 * p + 1) / 6.0).epsilon(1e-12));
        for (int k = 1; k < p; ++k) {
            Complex eps = std::polar(1.0, 2.0 * kPi * k / p);
            auto sums = partial_sums_uv(p, k);
            Complex u_closed = (double)p * eps / (eps - 1.0);
            Complex v_closed = (double)(p * p) * eps / (eps - 1.0) -
                               2.0 * (double)p * eps / ((eps - 1.0) * (eps - 1.0));
            CHECK(std::abs(sums.u - u_closed) < 1e-9);
            CHECK(std::abs(sums.v - v_closed) < 1e-9);
        }
    }
}

TEST_CASE("phase probabilities collapse for the aligned state") {
    for (int p : {5, 7}) {
        GaloisField f(p, 1);
        CharacterSpec triv{CharacterSpec::multiplicative, 0};
        auto pts = phase_prob(f, 0, triv, 0.0);
        REQUIRE((int)pts.size() == p);
        for (const auto& pt : pts) {
            double expected = pt.b == 0 ? 1.0 : 0.0;
            CHECK(pt.s_direct == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("phase probability decomposition identity") {
    for (int p : {3, 5, 7}) {
        GaloisField f(p, 1);
        for (int psi_k : {0, 1}) {
            CharacterSpec psi{CharacterSpec::multiplicative, psi_k};
            for (int a : {1, p - 1})
                for (double beta : {0.0, 1.0, 2.5}) {
                    auto pts = phase_prob(f, a, psi, beta);
                    double total = 0.0;
                    for (const auto& pt : pts) {
                        CHECK(std::abs(pt.s_direct - pt.s_decomp) < 1e-10);
                        total += pt.s_direct;
                    }
                    CHECK(std::abs(total - 1.0) < 1e-10);
                }
        }
    }
}

TEST_CASE("uniform overlap gives the mean phase") {
    GaloisField f(7, 1);
    CharacterSpec triv{CharacterSpec::multiplicative, 0};
    double expectation = phase_expectation_gal(f, 1, triv, 0.0);
    CHECK(expectation == doctest::Approx(kPi * 6.0 / 7.0).epsilon(1e-10));
}

TEST_CASE("variance identity") {
    GaloisField f(7, 1);
    for (int psi_k : {0, 1}) {
        CharacterSpec psi{CharacterSpec::multiplicative, psi_k};
        auto rep = phase_variance_gal(f, 2, psi, 1.3);
        double reconstructed =
            rep.second_moment - 2.0 * rep.mean * rep.mean + rep.mean * rep.mean * rep.total_prob;
        CHECK(rep.direct == doctest::Approx(reconstructed).epsilon(1e-9));
        CHECK(rep.total_prob == doctest::Approx(1.0).epsilon(1e-10));
    }
}

}
