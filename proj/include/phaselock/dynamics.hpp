#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace phaselock::dynamics {

struct TimeSeries {
    double dt = 1.0;
    std::vector<double> samples;

    TimeSeries() = default;
    TimeSeries(double dt_, std::vector<double> samples_);
};

struct AllanCurve {
    std::vector<double> taus;
    std::vector<double> sigmas;
};

struct VdpParams {
    double g;           // linear net gain, 1/s
    double beta_prime;  // saturation coefficient
    double omega;       // resonance frequency, rad/s
    double omega0;      // drive frequency, rad/s
    double v0;          // drive amplitude
};

// Fixed-step RK4 on v'' - (g - 3*beta_prime*v^2) v' + omega^2 v =
// omega0^2 * v0 * sin(omega0 t). Throws on divergence.
TimeSeries vanderpol_integrate(const VdpParams& p, double t_end, double dt);

struct AdlerParams {
    double omega_lf;  // detuning, rad/s
    double k;         // open-loop gain, rad/s
    double phi0;      // initial phase, rad
};

struct AdlerResult {
    TimeSeries phase;
    double mean_rate;  // estimated over the final half of the run, rad/s
};

// Fixed-step RK4 on dPhi/dt = omega_lf - k sin Phi.
AdlerResult adler_integrate(const AdlerParams& p, double t_end, double dt);

struct BeatFrequency {
    double value;  // rad/s; 0 when locked
    bool locked;
};

BeatFrequency beat_frequency(double omega_lf, double k);

// delta_omega * sqrt(1 + k^2 / beat^2); beat must be > 0
double noise_magnification(double delta_omega, double k, double beat);

struct ArnoldParams {
    double omega;  // bare frequency ratio
    double c;      // coupling
    double phi0;   // initial phase, rad
};

// Winding number of the lifted map Phi -> Phi + 2*pi*omega - c*sin(Phi),
// averaged over n_iter steps after n_transient. Warns on stderr for c > 1.
double arnold_winding(const ArnoldParams& p, long long n_transient, long long n_iter);

struct StaircasePoint {
    double omega;
    double winding;
};

std::vector<StaircasePoint> staircase_scan(double c, const std::vector<double>& omega_grid,
                                           long long n_transient, long long n_iter);

// Width of the mode-locked plateau with winding target_p/target_q, located
// by bisection on both edges to omega_tol.
double plateau_width(double c, long long target_p, long long target_q,
                     double omega_lo, double omega_hi, double omega_tol,
                     long long n_transient, long long n_iter);

// Two-sample Allan deviation on tau-averaged block means. Non-overlapping
// adjacent blocks by default; the overlapping estimator is optional.
// Each tau must be an integer multiple of dt with at least 10 pairs.
AllanCurve allan_deviation(const TimeSeries& ts, const std::vector<double>& taus,
                           bool overlapping = false);

// Gaussian noise shaped to PSD proportional to 1/f^exponent; n a power of
// two >= 1024; deterministic per seed.
TimeSeries synth_one_over_f(std::size_t n, std::uint64_t seed, double exponent,
                            double dt = 1.0);

// In-order DFT (sign -1 forward) via FFTW.
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x,
                                      bool inverse = false);

// One-sided power spectrum |X_k|^2 for k = 0..n/2 (no windowing).
std::vector<double> periodogram(const TimeSeries& ts);

// Peak angular frequency of the periodogram, refined by parabolic
// interpolation on log power; rad/s.
double dominant_angular_frequency(const TimeSeries& ts);

}  // namespace phaselock::dynamics
