#pragma once

#include "phaselock/state.hpp"

namespace phaselock::qphase {

// |theta_k> with theta_k = theta0 + 2*pi*k/q; amplitudes e^{i n theta_k}/sqrt(q).
StateVector phase_state(int q, int k, double theta0 = 0.0);

// Sum of theta_k |theta_k><theta_k| over all k.
OperatorMatrix pegg_operator(int q, double theta0 = 0.0);

// Same sum restricted to k coprime with q, theta0 = 0.
OperatorMatrix lock_operator(int q);

// Entries c_q(n-l)/q for n,l in [0, range_size); range_size < 0 means phi(q).
OperatorMatrix ramanujan_kernel_matrix(int q, int range_size = -1);

// Amplitudes e^{i n beta}/sqrt(q).
StateVector beta_state(int q, double beta);

// Sum over coprime k of theta_k |<theta_k|beta>|^2, from the states.
double lock_expectation_direct(int q, double beta);

// (pi/q^2) * sum over n,l in the index range of c_q(l-n) e^{i beta (n-l)};
// the imaginary residual stays below 1e-10 by kernel symmetry.
double lock_expectation_closed(int q, double beta, int range_size = -1);

struct KmsParams {
    double beta0;  // inverse temperature, > 1
};

// q^{-beta0} * prod over primes p|q of (1 - p^{beta0-1})/(1 - p^{-1}).
double kms_value(long long q, const KmsParams& p);

struct KmsLimits {
    double low_temp;        // mu(q)/phi(q)
    double critical_coeff;  // -mangoldt(q)/q
};

KmsLimits kms_limits(long long q);

struct BostConnesOps {
    OperatorMatrix shift;  // |n> -> |a n mod q>
    OperatorMatrix phase;  // diagonal e^{2 pi i k n / q}
};

BostConnesOps bost_connes_ops(int q, int a, int k);

}  // namespace phaselock::qphase
