#include "phaselock/qphase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "phaselock/arith.hpp"

namespace phaselock::qphase {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int q) {
    if (q < 1) throw std::invalid_argument("qphase: q must be >= 1");
}

}  // namespace

StateVector phase_state(int q, int k, double theta0) {
    check_dim(q);
    if (k < 0 || k >= q) throw std::invalid_argument("phase_state: need 0 <= k < q");
    StateVector state;
    state.theta0 = theta0;
    state.amps.resize(q);
    double theta = theta0 + 2.0 * kPi * (double)k / (double)q;
    double scale = 1.0 / std::sqrt((double)q);
    for (int n = 0; n < q; ++n)
        state.amps[n] = std::polar(scale, theta * (double)n);
    return state;
}

OperatorMatrix pegg_operator(int q, double theta0) {
    check_dim(q);
    OperatorMatrix op = OperatorMatrix::Zero(q, q);
    for (int k = 0; k < q; ++k) {
        double theta = theta0 + 2.0 * kPi * (double)k / (double)q;
        auto v = phase_state(q, k, theta0).amps;
        op += theta * v * v.adjoint();
    }
    return op;
}

OperatorMatrix lock_operator(int q) {
    check_dim(q);
    OperatorMatrix op = OperatorMatrix::Zero(q, q);
    for (int k = 0; k < q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        double theta = 2.0 * kPi * (double)k / (double)q;
        auto v = phase_state(q, k).amps;
        op += theta * v * v.adjoint();
    }
    return op;
}

OperatorMatrix ramanujan_kernel_matrix(int q, int range_size) {
    check_dim(q);
    if (range_size < 0) range_size = (int)arith::euler_phi(q);
    if (range_size < 1) throw std::invalid_argument("ramanujan_kernel_matrix: empty range");
    OperatorMatrix op(range_size, range_size);
    for (int n = 0; n < range_size; ++n)
        for (int l = 0; l < range_size; ++l)
            op(n, l) = (double)arith::ramanujan_sum(q, n - l) / (double)q;
    return op;
}

StateVector beta_state(int q, double beta) {
    check_dim(q);
    StateVector state;
    state.amps.resize(q);
    double scale = 1.0 / std::sqrt((double)q);
    for (int n = 0; n < q; ++n) state.amps[n] = std::polar(scale, beta * (double)n);
    return state;
}

double lock_expectation_direct(int q, double beta) {
    check_dim(q);
    auto b = beta_state(q, beta);
    double total = 0.0;
    for (int k = 0; k < q; ++k) {
        if (std::gcd(k, q) != 1) continue;
        double theta = 2.0 * kPi * (double)k / (double)q;
        Complex overlap = phase_state(q, k).amps.dot(b.amps);
        total += theta * std::norm(overlap);
    }
    return total;
}

double lock_expectation_closed(int q, double beta, int range_size) {
    check_dim(q);
    if (range_size < 0) range_size = (int)arith::euler_phi(q);
    Complex total = 0.0;
    for (int n = 0; n < range_size; ++n)
        for (int l = 0; l < range_size; ++l)
            total += (double)arith::ramanujan_sum(q, l - n) *
                     std::polar(1.0, beta * (double)(n - l));
    total *= kPi / ((double)q * (double)q);
    if (std::abs(total.imag()) > 1e-10)
        throw std::runtime_error("lock_expectation_closed: imaginary residual too large");
    return total.real();
}

double kms_value(long long q, const KmsParams& p) {
    if (q < 1) throw std::invalid_argument("kms_value: q must be >= 1");
    if (!(p.beta0 > 1.0)) throw std::invalid_argument("kms_value: beta0 must be > 1");
    double result = std::pow((double)q, -p.beta0);
    for (auto [prime, e] : arith::factorize(q)) {
        (void)e;
        double pd = (double)prime;
        result *= (1.0 - std::pow(pd, p.beta0 - 1.0)) / (1.0 - 1.0 / pd);
    }
    return result;
}

KmsLimits kms_limits(long long q) {
    if (q < 1) throw std::invalid_argument("kms_limits: q must be >= 1");
    double low = (double)arith::moebius(q) / (double)arith::euler_phi(q);
    double critical = -arith::mangoldt(q) / (double)q;
    return {low, critical};
}

BostConnesOps bost_connes_ops(int q, int a, int k) {
    check_dim(q);
    if (a < 0 || a >= q || k < 0 || k >= q)
        throw std::invalid_argument("bost_connes_ops: need 0 <= a,k < q");
    OperatorMatrix shift = OperatorMatrix::Zero(q, q);
    OperatorMatrix phase = OperatorMatrix::Zero(q, q);
    for (int n = 0; n < q; ++n) {
        shift((a * n) % q, n) = 1.0;
        phase(n, n) = std::polar(1.0, 2.0 * kPi * (double)(k * n) / (double)q);
    }
    return {shift, phase};
}

}  // namespace phaselock::qphase
