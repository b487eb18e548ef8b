#include "phaselock/dynamics.hpp"

#include <fftw3.h>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>

namespace phaselock::dynamics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_step(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (!(t_end > dt)) throw std::invalid_argument("integrate: t_end must exceed dt");
}

}  // namespace

TimeSeries::TimeSeries(double dt_, std::vector<double> samples_)
    : dt(dt_), samples(std::move(samples_)) {
    if (!(dt > 0.0)) throw std::invalid_argument("TimeSeries: dt must be > 0");
    if (samples.size() < 2) throw std::invalid_argument("TimeSeries: need at least 2 samples");
}

TimeSeries vanderpol_integrate(const VdpParams& p, double t_end, double dt) {
    validate_step(t_end, dt);
    if (!(p.omega > 0.0)) throw std::invalid_argument("vanderpol: omega must be > 0");
    if (p.beta_prime < 0.0) throw std::invalid_argument("vanderpol: beta_prime must be >= 0");
    if (dt * p.omega >= 0.1) throw std::invalid_argument("vanderpol: dt too large for omega");

    auto accel = [&p](double t, double v, double w) {
        return (p.g - 3.0 * p.beta_prime * v * v) * w - p.omega * p.omega * v +
               p.omega0 * p.omega0 * p.v0 * std::sin(p.omega0 * t);
    };

    auto n = (std::size_t)std::llround(t_end / dt);
    std::vector<double> samples;
    samples.reserve(n + 1);
    double v = 0.1, w = 0.0;
    samples.push_back(v);
    const double guard = 1e6 * (1.0 + std::abs(p.v0));
    for (std::size_t i = 0; i < n; ++i) {
        double t = (double)i * dt;
        double k1v = w, k1w = accel(t, v, w);
        double k2v = w + 0.5 * dt * k1w, k2w = accel(t + 0.5 * dt, v + 0.5 * dt * k1v, w + 0.5 * dt * k1w);
        double k3v = w + 0.5 * dt * k2w, k3w = accel(t + 0.5 * dt, v + 0.5 * dt * k2v, w + 0.5 * dt * k2w);
        double k4v = w + dt * k3w, k4w = accel(t + dt, v + dt * k3v, w + dt * k3w);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        w += dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        if (!std::isfinite(v) || std::abs(v) > guard)
            throw std::runtime_error("vanderpol: integration diverged");
        samples.push_back(v);
    }
    return TimeSeries(dt, std::move(samples));
}

AdlerResult adler_integrate(const AdlerParams& p, double t_end, double dt) {
    validate_step(t_end, dt);
    if (p.k < 0.0) throw std::invalid_argument("adler: k must be >= 0");

    auto rate = [&p](double phi) { return p.omega_lf - p.k * std::sin(phi); };

    auto n = (std::size_t)std::llround(t_end / dt);
    std::vector<double> samples;
    samples.reserve(n + 1);
    double phi = p.phi0;
    samples.push_back(phi);
    for (std::size_t i = 0; i < n; ++i) {
        double k1 = rate(phi);
        double k2 = rate(phi + 0.5 * dt * k1);
        double k3 = rate(phi + 0.5 * dt * k2);
        double k4 = rate(phi + dt * k3);
        phi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        samples.push_back(phi);
    }
    std::size_t half = samples.size() / 2;
    double window = (double)(samples.size() - 1 - half) * dt;
    double mean_rate = (samples.back() - samples[half]) / window;
    return {TimeSeries(dt, std::move(samples)), mean_rate};
}

BeatFrequency beat_frequency(double omega_lf, double k) {
    if (k < 0.0) throw std::invalid_argument("beat_frequency: k must be >= 0");
    double a = std::abs(omega_lf);
    if (a < k) return {0.0, true};
    return {std::sqrt(omega_lf * omega_lf - k * k), a == k};
}

double noise_magnification(double delta_omega, double k, double beat) {
    if (!(beat > 0.0)) throw std::invalid_argument("noise_magnification: beat must be > 0");
    return delta_omega * std::sqrt(1.0 + (k * k) / (beat * beat));
}

double arnold_winding(const ArnoldParams& p, long long n_transient, long long n_iter) {
    if (p.c < 0.0) throw std::invalid_argument("arnold: c must be >= 0");
    if (n_iter < 1000) throw std::invalid_argument("arnold: n_iter must be >= 1000");
    if (n_transient < 0) throw std::invalid_argument("arnold: n_transient must be >= 0");
    if (p.c > 1.0)
        std::cerr << "arnold_winding: c > 1, basins may overlap; winding can depend on the orbit\n";
    if (p.c == 0.0) return p.omega;  // rigid rotation

    double phi = p.phi0;
    for (long long i = 0; i < n_transient; ++i) phi += kTwoPi * p.omega - p.c * std::sin(phi);
    double start = phi;
    for (long long i = 0; i < n_iter; ++i) phi += kTwoPi * p.omega - p.c * std::sin(phi);
    return (phi - start) / (kTwoPi * (double)n_iter);
}

std::vector<StaircasePoint> staircase_scan(double c, const std::vector<double>& omega_grid,
                                           long long n_transient, long long n_iter) {
    for (std::size_t i = 1; i < omega_grid.size(); ++i)
        if (omega_grid[i] < omega_grid[i - 1])
            throw std::invalid_argument("staircase_scan: grid must be sorted");
    std::vector<StaircasePoint> result;
    result.reserve(omega_grid.size());
    for (double omega : omega_grid)
        result.push_back({omega, arnold_winding({omega, c, 0.0}, n_transient, n_iter)});
    return result;
}

double plateau_width(double c, long long target_p, long long target_q,
                     double omega_lo, double omega_hi, double omega_tol,
                     long long n_transient, long long n_iter) {
    if (target_q < 1 || target_p < 0) throw std::invalid_argument("plateau_width: bad target");
    if (!(omega_tol > 0.0)) throw std::invalid_argument("plateau_width: omega_tol must be > 0");
    double target = (double)target_p / (double)target_q;
    if (!(omega_lo < target && target < omega_hi))
        throw std::invalid_argument("plateau_width: target outside bracket");

    auto locked = [&](double omega) {
        double w = arnold_winding({omega, c, 0.0}, n_transient, n_iter);
        return std::abs(w - target) < 1e-4;
    };
    if (!locked(target)) return 0.0;

    double lo = omega_lo, hi = target;
    while (hi - lo > omega_tol) {
        double mid = 0.5 * (lo + hi);
        (locked(mid) ? hi : lo) = mid;
    }
    double left = 0.5 * (lo + hi);

    lo = target, hi = omega_hi;
    while (hi - lo > omega_tol) {
        double mid = 0.5 * (lo + hi);
        (locked(mid) ? lo : hi) = mid;
    }
    double right = 0.5 * (lo + hi);
    return right - left;
}

AllanCurve allan_deviation(const TimeSeries& ts, const std::vector<double>& taus,
                           bool overlapping) {
    AllanCurve curve;
    for (double tau : taus) {
        double ratio = tau / ts.dt;
        auto m = (std::size_t)std::llround(ratio);
        if (m < 1 || std::abs(ratio - (double)m) > 1e-9 * ratio)
            throw std::invalid_argument("allan_deviation: tau must be a multiple of dt");
        std::size_t blocks = ts.samples.size() / m;
        if (blocks < 11) throw std::invalid_argument("allan_deviation: need at least 10 pairs per tau");

        std::vector<double> means(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            double sum = 0.0;
            for (std::size_t i = 0; i < m; ++i) sum += ts.samples[b * m + i];
            means[b] = sum / (double)m;
        }
        double acc = 0.0;
        std::size_t pairs = 0;
        if (overlapping) {
            // overlapping variant: adjacent averages recomputed at every
            // start offset
            std::size_t max_start = ts.samples.size() - 2 * m;
            for (std::size_t s = 0; s <= max_start; ++s) {
                double a = 0.0, b = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    a += ts.samples[s + i];
                    b += ts.samples[s + m + i];
                }
                double d = (b - a) / (double)m;
                acc += d * d;
                ++pairs;
            }
        } else {
            for (std::size_t b = 0; b + 1 < blocks; ++b) {
                double d = means[b + 1] - means[b];
                acc += d * d;
                ++pairs;
            }
        }
        curve.taus.push_back(tau);
        curve.sigmas.push_back(std::sqrt(acc / (2.0 * (double)pairs)));
    }
    return curve;
}

TimeSeries synth_one_over_f(std::size_t n, std::uint64_t seed, double exponent, double dt) {
    if (n < 1024 || (n & (n - 1)) != 0)
        throw std::invalid_argument("synth_one_over_f: n must be a power of two >= 1024");

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return ((double)(rng() >> 11) + 1.0) * 0x1p-53; };
    auto gauss_pair = [&uniform](double& a, double& b) {
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        a = r * std::cos(kTwoPi * u2);
        b = r * std::sin(kTwoPi * u2);
    };

    std::vector<std::complex<double>> spectrum(n, 0.0);
    for (std::size_t k = 1; k <= n / 2; ++k) {
        double re, im;
        gauss_pair(re, im);
        double scale = std::pow((double)k, -0.5 * exponent);
        if (k == n / 2) {
            spectrum[k] = scale * re;
        } else {
            spectrum[k] = scale * std::complex<double>(re, im);
            spectrum[n - k] = std::conj(spectrum[k]);
        }
    }
    auto samples_c = fft(spectrum, true);
    std::vector<double> samples(n);
    for (std::size_t i = 0; i < n; ++i) samples[i] = samples_c[i].real() / std::sqrt((double)n);
    return TimeSeries(dt, std::move(samples));
}

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x, bool inverse) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    std::vector<std::complex<double>> out(x.size());
    auto* in_ptr = (fftw_complex*)const_cast<std::complex<double>*>(x.data());
    auto* out_ptr = (fftw_complex*)out.data();
    fftw_plan plan = fftw_plan_dft_1d((int)x.size(), in_ptr, out_ptr,
                                      inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    if (plan == nullptr) throw std::runtime_error("fft: plan creation failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

std::vector<double> periodogram(const TimeSeries& ts) {
    std::vector<std::complex<double>> x(ts.samples.begin(), ts.samples.end());
    auto spectrum = fft(x);
    std::size_t half = ts.samples.size() / 2;
    std::vector<double> power(half + 1);
    for (std::size_t k = 0; k <= half; ++k) power[k] = std::norm(spectrum[k]);
    return power;
}

double dominant_angular_frequency(const TimeSeries& ts) {
    auto power = periodogram(ts);
    if (power.size() < 3) throw std::invalid_argument("dominant_angular_frequency: series too short");
    std::size_t peak = 1;
    for (std::size_t k = 2; k + 1 < power.size(); ++k)
        if (power[k] > power[peak]) peak = k;

    double offset = 0.0;
    double pm = power[peak - 1], p0 = power[peak], pp = power[peak + 1];
    if (pm > 0.0 && p0 > 0.0 && pp > 0.0) {
        double lm = std::log(pm), l0 = std::log(p0), lp = std::log(pp);
        double denom = lm - 2.0 * l0 + lp;
        if (denom < 0.0) offset = 0.5 * (lm - lp) / denom;
    }
    double bin = kTwoPi / ((double)ts.samples.size() * ts.dt);
    return ((double)peak + offset) * bin;
}

}  // namespace phaselock::dynamics
