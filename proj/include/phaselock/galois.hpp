#pragma once

#include <vector>

#include "phaselock/state.hpp"

namespace phaselock::galois {

// F_{p^m}, p an odd prime, p^m <= 1e4. Elements are indices in the
// canonical enumeration n = sum of c_j p^j over the polynomial coefficients
// c_j (ascending powers). The modulus is the lexicographically smallest
// monic irreducible polynomial of degree m (descending-power comparison),
// the generator the smallest full-order element in the same order.
class GaloisField {
public:
    GaloisField(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }  // length m+1, monic
    int generator() const { return generator_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inverse(int a) const;  // a != 0
    int pow(int a, long long e) const;

    // x + x^p + ... + x^{p^(m-1)}, a base-field residue in [0, p)
    int trace(int x) const;

    int log(int x) const;  // discrete log base generator(), x != 0
    int exp(int s) const;  // generator()^s

    std::vector<int> coeffs(int x) const;
    int element(const std::vector<int>& coeffs) const;

private:
    int p_, m_, q_;
    std::vector<int> modulus_;
    int generator_ = 0;
    std::vector<int> exp_;
    std::vector<int> log_;
    std::vector<int> trace_;
};

struct CharacterSpec {
    enum Kind { additive, multiplicative };
    Kind kind;
    int index;  // multiplicative: mod q-1; ignored for additive
};

// Additive: omega_p^{trace(x)}. Multiplicative with x = g^s:
// omega_{q-1}^{index*s}; value 0 at x = 0 unless the character is trivial
// (index 0), which is 1 everywhere.
Complex char_eval(const GaloisField& f, const CharacterSpec& spec, int x);

// Amplitudes psi(n) * omega_p^{trace(a n^2 + b n)} / sqrt(q) over the
// canonical enumeration; nontrivial psi leaves the vector unnormalized
// (flagged) unless renormalize is set.
StateVector mub_state(const GaloisField& f, int a, int b, const CharacterSpec& psi,
                      bool renormalize = false);

struct MubReport {
    int q = 0;
    int n_bases = 0;        // q trivial-psi bases plus the computational basis
    double max_dev = 0.0;   // of |<.|.>|^2 from the {0, 1, 1/q} patterns
};

MubReport mub_verify(const GaloisField& f);

struct GaussSumReport {
    int k = 0;
    Complex value;
    double bound = 0.0;
};

// T(k) = sum of psi(n) conj(psi(n+k)) e^{2 pi i a k (2n+k)/p} over
// n in [max(1,1-k), min(p-1, p-1-k)]; prime fields only, |k| < p.
GaussSumReport gauss_T(const GaloisField& f, int a, const CharacterSpec& psi, int k);

struct GaussScanResult {
    double max_abs_nontrivial = 0.0;  // over all a != 0, nontrivial psi, k != 0
    double weil_bound = 0.0;          // 3 sqrt(p) ln p
    double max_trivial_excess = 0.0;  // max of |T(k)| - 1/|sin(2 pi a k / p)|
};

// Bound check over every a != 0, character index, and k != 0 at once.
GaussScanResult gauss_scan(int p);

struct PhasePoint {
    int b = 0;
    double s_direct = 0.0;
    double s_decomp = 0.0;
};

// S(b) = |<theta_b^a|beta>|^2 for every b, computed directly and through
// the T(k) decomposition; renormalize rescales nontrivial-psi states to
// unit norm.
std::vector<PhasePoint> phase_prob(const GaloisField& f, int a, const CharacterSpec& psi,
                                   double beta, bool renormalize = true);

double phase_expectation_gal(const GaloisField& f, int a, const CharacterSpec& psi,
                             double beta, bool renormalize = true);

struct VarianceReport {
    double direct = 0.0;         // sum of (theta_b - mean)^2 S(b)
    double second_moment = 0.0;  // sum of theta_b^2 S(b)
    double mean = 0.0;           // sum of theta_b S(b)
    double total_prob = 0.0;     // sum of S(b)
};

VarianceReport phase_variance_gal(const GaloisField& f, int a, const CharacterSpec& psi,
                                  double beta, bool renormalize = true);

struct PartialSums {
    Complex u;
    Complex v;
};

// U = sum b eps^b, V = sum b^2 eps^b for b = 1..p, eps = e^{2 pi i k/p}.
PartialSums partial_sums_uv(int p, int k);

}  // namespace phaselock::galois
