#include "phaselock/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaselock/arith.hpp"
#include "phaselock/qphase.hpp"

namespace phaselock::galois {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Poly = std::vector<int>;  // coefficients, ascending powers

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    a = trim(std::move(a));
    Poly g = trim(f);
    if (g.empty()) throw std::logic_error("poly_mod: zero modulus");
    int inv_lead = 1;
    for (int i = 1; i < p; ++i)
        if (g.back() * i % p == 1) inv_lead = i;
    while (a.size() >= g.size()) {
        int coef = a.back() * inv_lead % p;
        std::size_t shift = a.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            a[shift + i] = ((a[shift + i] - coef * g[i]) % p + p) % p;
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), f, p);
}

Poly poly_pow(Poly base, long long e, const Poly& f, int p) {
    Poly result = {1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mul(result, base, f, p);
        base = poly_mul(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree m is irreducible iff x^{p^m} = x (mod f) and
// gcd(x^{p^d} - x, f) = 1 for every proper divisor d of m.
bool irreducible(const Poly& f, int p, int m) {
    Poly x = {0, 1};
    Poly frob = x;  // x^{p^d} as d grows
    for (int d = 1; d <= m; ++d) {
        frob = poly_pow(frob, p, f, p);
        Poly diff = frob;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        diff = poly_mod(std::move(diff), f, p);
        if (d < m && m % d == 0 && poly_gcd(f, diff, p).size() != 1) return false;
        if (d == m && !diff.empty()) return false;
    }
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("GaloisField: p must be an odd prime");
    if (m < 1) throw std::invalid_argument("GaloisField: m must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 10'000) throw std::invalid_argument("GaloisField: p^m must be <= 1e4");
    }
    q_ = (int)q;

    // modulus: smallest tail t whose digits give an irreducible x^m + tail
    for (int t = 0; t < q_; ++t) {
        Poly f(m + 1, 0);
        f[m] = 1;
        int v = t;
        for (int j = 0; j < m; ++j) {
            f[j] = v % p;
            v /= p;
        }
        if (irreducible(f, p, m)) {
            modulus_ = f;
            break;
        }
    }
    if (modulus_.empty()) throw std::logic_error("GaloisField: no irreducible modulus found");

    auto to_poly = [this](int n) {
        Poly c(m_, 0);
        for (int j = 0; j < m_; ++j) {
            c[j] = n % p_;
            n /= p_;
        }
        return trim(std::move(c));
    };
    auto from_poly = [this](const Poly& c) {
        int n = 0;
        for (int j = (int)c.size() - 1; j >= 0; --j) n = n * p_ + c[j];
        return n;
    };

    // generator: smallest element whose order is exactly q-1
    auto factors = arith::factorize(q_ - 1);
    for (int g = 2; g < q_; ++g) {
        bool full = true;
        for (auto [prime, e] : factors) {
            (void)e;
            Poly r = poly_pow(to_poly(g), (q_ - 1) / prime, modulus_, p_);
            if (from_poly(r) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("GaloisField: no generator found");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    Poly cur = {1};
    Poly gen = to_poly(generator_);
    for (int s = 0; s < q_ - 1; ++s) {
        int idx = from_poly(cur);
        exp_[s] = idx;
        exp_[s + q_ - 1] = idx;
        log_[idx] = s;
        cur = poly_mul(cur, gen, modulus_, p_);
    }
    if (from_poly(cur) != 1) throw std::logic_error("GaloisField: generator order mismatch");

    trace_.assign(q_, 0);
    for (int x = 1; x < q_; ++x) {
        int acc = 0;
        long long pe = 1;
        for (int i = 0; i < m_; ++i) {
            int conj = exp_[(int)((log_[x] * pe) % (q_ - 1))];
            acc = add(acc, conj);
            pe = (pe * p_) % (q_ - 1);
        }
        if (acc >= p_) throw std::logic_error("GaloisField: trace outside base field");
        trace_[x] = acc;
    }
}

int GaloisField::add(int a, int b) const {
    int result = 0, mult = 1;
    for (int j = 0; j < m_; ++j) {
        result += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return result;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::neg(int a) const {
    int result = 0, mult = 1;
    for (int j = 0; j < m_; ++j) {
        result += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return result;
}

int GaloisField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

int GaloisField::inverse(int a) const {
    if (a == 0) throw std::invalid_argument("GaloisField: zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GaloisField::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("GaloisField: zero to a negative power");
        return 0;
    }
    long long r = ((long long)log_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[(int)r];
}

int GaloisField::trace(int x) const {
    if (x < 0 || x >= q_) throw std::invalid_argument("GaloisField: element out of range");
    return trace_[x];
}

int GaloisField::log(int x) const {
    if (x <= 0 || x >= q_) throw std::invalid_argument("GaloisField: log needs a unit");
    return log_[x];
}

int GaloisField::exp(int s) const {
    int r = s % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[r];
}

std::vector<int> GaloisField::coeffs(int x) const {
    if (x < 0 || x >= q_) throw std::invalid_argument("GaloisField: element out of range");
    std::vector<int> c(m_);
    for (int j = 0; j < m_; ++j) {
        c[j] = x % p_;
        x /= p_;
    }
    return c;
}

int GaloisField::element(const std::vector<int>& coeffs) const {
    if ((int)coeffs.size() != m_) throw std::invalid_argument("GaloisField: wrong coefficient count");
    int n = 0;
    for (int j = m_ - 1; j >= 0; --j) {
        if (coeffs[j] < 0 || coeffs[j] >= p_)
            throw std::invalid_argument("GaloisField: coefficient out of range");
        n = n * p_ + coeffs[j];
    }
    return n;
}

Complex char_eval(const GaloisField& f, const CharacterSpec& spec, int x) {
    if (x < 0 || x >= f.q()) throw std::invalid_argument("char_eval: element out of range");
    if (spec.kind == CharacterSpec::additive)
        return std::polar(1.0, kTwoPi * (double)f.trace(x) / (double)f.p());
    int k = spec.index % (f.q() - 1);
    if (k < 0) k += f.q() - 1;
    if (k == 0) return 1.0;
    if (x == 0) return 0.0;
    return std::polar(1.0, kTwoPi * (double)((long long)k * f.log(x) % (f.q() - 1)) / (double)(f.q() - 1));
}

StateVector mub_state(const GaloisField& f, int a, int b, const CharacterSpec& psi,
                      bool renormalize) {
    if (psi.kind != CharacterSpec::multiplicative)
        throw std::invalid_argument("mub_state: psi must be multiplicative");
    int q = f.q();
    StateVector state;
    state.amps.resize(q);
    double scale = 1.0 / std::sqrt((double)q);
    for (int n = 0; n < q; ++n) {
        int quad = f.add(f.mul(a, f.mul(n, n)), f.mul(b, n));
        Complex phase = std::polar(scale, kTwoPi * (double)f.trace(quad) / (double)f.p());
        state.amps[n] = char_eval(f, psi, n) * phase;
    }
    int k = psi.index % (q - 1);
    if (k != 0) {
        if (renormalize) {
            state.amps /= state.amps.norm();
        } else {
            state.normalized = false;
        }
    }
    return state;
}

MubReport mub_verify(const GaloisField& f) {
    int q = f.q();
    CharacterSpec trivial{CharacterSpec::multiplicative, 0};

    std::vector<Eigen::VectorXcd> states;  // q bases of q states, then computational
    states.reserve((std::size_t)q * q + q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) states.push_back(mub_state(f, a, b, trivial).amps);
    for (int n = 0; n < q; ++n) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(q);
        e[n] = 1.0;
        states.push_back(e);
    }

    MubReport report;
    report.q = q;
    report.n_bases = q + 1;
    auto basis_of = [q](std::size_t idx) { return (int)(idx / q); };
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
            double olap2 = std::norm(states[i].dot(states[j]));
            double target;
            if (basis_of(i) == basis_of(j))
                target = (i == j) ? 1.0 : 0.0;
            else
                target = 1.0 / (double)q;
            report.max_dev = std::max(report.max_dev, std::abs(olap2 - target));
        }
    }
    return report;
}

namespace {

double trivial_bound(int p, int a, int k) {
    double s = std::abs(std::sin(kTwoPi * (double)(((long long)a * k % p + p) % p) / (double)p));
    return 1.0 / s;
}

void require_prime_field(const GaloisField& f, const char* who) {
    if (f.m() != 1) throw std::invalid_argument(std::string(who) + ": prime field required");
}

}  // namespace

GaussSumReport gauss_T(const GaloisField& f, int a, const CharacterSpec& psi, int k) {
    require_prime_field(f, "gauss_T");
    int p = f.p();
    if (k <= -p || k >= p) throw std::invalid_argument("gauss_T: need |k| < p");
    if (psi.kind != CharacterSpec::multiplicative)
        throw std::invalid_argument("gauss_T: psi must be multiplicative");

    Complex value = 0.0;
    int lo = std::max(1, 1 - k), hi = std::min(p - 1, p - 1 - k);
    for (int n = lo; n <= hi; ++n) {
        long long e = (long long)a * k % p * ((2LL * n + k) % p) % p;
        e = (e % p + p) % p;
        value += char_eval(f, psi, n) * std::conj(char_eval(f, psi, n + k)) *
                 std::polar(1.0, kTwoPi * (double)e / (double)p);
    }

    GaussSumReport report;
    report.k = k;
    report.value = value;
    int kpsi = psi.index % (p - 1);
    if (kpsi < 0) kpsi += p - 1;
    if (kpsi == 0)
        report.bound = (k == 0) ? (double)(p - 1) : trivial_bound(p, a, k);
    else
        report.bound = 3.0 * std::sqrt((double)p) * std::log((double)p);
    return report;
}

GaussScanResult gauss_scan(int p) {
    GaloisField f(p, 1);
    GaussScanResult result;
    result.weil_bound = 3.0 * std::sqrt((double)p) * std::log((double)p);

    int order = p - 1;
    std::vector<Complex> unit_root(order);
    for (int j = 0; j < order; ++j)
        unit_root[j] = std::polar(1.0, kTwoPi * (double)j / (double)order);
    std::vector<Complex> p_root(p);
    for (int j = 0; j < p; ++j) p_root[j] = std::polar(1.0, kTwoPi * (double)j / (double)p);

    std::vector<Complex> bucket(order);
    for (int a = 1; a < p; ++a) {
        for (int k = -(p - 1); k <= p - 1; ++k) {
            if (k == 0) continue;
            std::fill(bucket.begin(), bucket.end(), Complex(0.0));
            int lo = std::max(1, 1 - k), hi = std::min(p - 1, p - 1 - k);
            for (int n = lo; n <= hi; ++n) {
                int d = f.log(n) - f.log(n + k);
                if (d < 0) d += order;
                long long e = ((long long)a * k % p * ((2LL * n + k) % p) % p + p) % p;
                bucket[d] += p_root[e];
            }
            // T for character index kpsi is the kpsi-th twisted sum of the
            // buckets, trivial included at kpsi = 0
            Complex trivial_sum = 0.0;
            for (int d = 0; d < order; ++d) trivial_sum += bucket[d];
            result.max_trivial_excess = std::max(
                result.max_trivial_excess, std::abs(trivial_sum) - trivial_bound(p, a, k));
            for (int kpsi = 1; kpsi < order; ++kpsi) {
                Complex t = 0.0;
                int idx = 0;
                for (int d = 0; d < order; ++d) {
                    t += bucket[d] * unit_root[idx];
                    idx += kpsi;
                    if (idx >= order) idx -= order;
                }
                result.max_abs_nontrivial = std::max(result.max_abs_nontrivial, std::abs(t));
            }
        }
    }
    return result;
}

std::vector<PhasePoint> phase_prob(const GaloisField& f, int a, const CharacterSpec& psi,
                                   double beta, bool renormalize) {
    require_prime_field(f, "phase_prob");
    int p = f.p();
    if (psi.kind != CharacterSpec::multiplicative)
        throw std::invalid_argument("phase_prob: psi must be multiplicative");
    int kpsi = psi.index % (p - 1);
    if (kpsi < 0) kpsi += p - 1;
    bool trivial = (kpsi == 0);

    auto beta_vec = qphase::beta_state(p, beta);

    // support-matched inner sums W(k), shared across b
    int lo_n = trivial ? 0 : 1;
    std::vector<Complex> w(2 * p - 1);  // index k + (p-1)
    for (int k = -(p - 1); k <= p - 1; ++k) {
        Complex acc = 0.0;
        for (int n = std::max(lo_n, lo_n - k); n <= std::min(p - 1, p - 1 - k); ++n) {
            long long e = (((long long)(p - a % p) % p) * k % p * ((2LL * n + k) % p) % p + p) % p;
            acc += char_eval(f, psi, n) * std::conj(char_eval(f, psi, n + k)) *
                   std::polar(1.0, kTwoPi * (double)e / (double)p);
        }
        w[k + p - 1] = acc;
    }

    double renorm = (!trivial && renormalize) ? (double)p / (double)(p - 1) : 1.0;
    std::vector<PhasePoint> points(p);
    for (int b = 0; b < p; ++b) {
        auto state = mub_state(f, a, b, psi, renormalize);
        Complex olap = state.amps.dot(beta_vec.amps);
        points[b].b = b;
        points[b].s_direct = std::norm(olap);

        Complex acc = 0.0;
        for (int k = -(p - 1); k <= p - 1; ++k) {
            double angle = (double)k * (beta - kTwoPi * (double)b / (double)p);
            acc += std::polar(1.0, angle) * w[k + p - 1];
        }
        points[b].s_decomp = renorm * acc.real() / ((double)p * (double)p);
    }
    return points;
}

double phase_expectation_gal(const GaloisField& f, int a, const CharacterSpec& psi,
                             double beta, bool renormalize) {
    auto points = phase_prob(f, a, psi, beta, renormalize);
    double mean = 0.0;
    for (const auto& pt : points)
        mean += kTwoPi * (double)pt.b / (double)f.p() * pt.s_direct;
    return mean;
}

VarianceReport phase_variance_gal(const GaloisField& f, int a, const CharacterSpec& psi,
                                  double beta, bool renormalize) {
    auto points = phase_prob(f, a, psi, beta, renormalize);
    VarianceReport report;
    for (const auto& pt : points) {
        double theta = kTwoPi * (double)pt.b / (double)f.p();
        report.mean += theta * pt.s_direct;
        report.second_moment += theta * theta * pt.s_direct;
        report.total_prob += pt.s_direct;
    }
    for (const auto& pt : points) {
        double theta = kTwoPi * (double)pt.b / (double)f.p();
        report.direct += (theta - report.mean) * (theta - report.mean) * pt.s_direct;
    }
    return report;
}

PartialSums partial_sums_uv(int p, int k) {
    if (p < 2) throw std::invalid_argument("partial_sums_uv: p must be >= 2");
    int r = (k % p + p) % p;
    PartialSums sums{0.0, 0.0};
    for (int b = 1; b <= p; ++b) {
        Complex term = std::polar(1.0, kTwoPi * (double)r * (double)b / (double)p);
        sums.u += (double)b * term;
        sums.v += (double)b * (double)b * term;
    }
    return sums;
}

}  // namespace phaselock::galois
