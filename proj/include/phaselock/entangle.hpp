#pragma once

#include <string>
#include <vector>

#include "phaselock/galois.hpp"
#include "phaselock/state.hpp"

namespace phaselock::entangle {

// Bipartite state of two q-level systems; the pair (n, n2) is flattened as
// n*q + n2.
struct BipartiteState {
    int q = 0;
    Eigen::VectorXcd amps;
};

using DensityMatrix = Eigen::MatrixXcd;

// (1/sqrt q) sum_n omega_q^{k n} |n, n+u mod q>
BipartiteState bell_fourier(int q, int u, int k);

// (1/sqrt q) sum_n omega_p^{tr[(a n + b) n]} |n, n+u>, field addition
BipartiteState bell_galois(const galois::GaloisField& f, int u, int a, int b);

// Reduced density matrix of subsystem 1.
DensityMatrix partial_trace_2(const BipartiteState& state);

double purity(const DensityMatrix& rho);

struct EntangleReport {
    std::string family;          // "fourier" or "galois"
    int q = 0;
    int n_bases = 0;
    double max_gram_dev = 0.0;      // intra-basis orthonormality
    double max_unbiased_dev = 0.0;  // across fixed-u sets (galois family)
    double max_ptrace_dev = 0.0;    // entrywise vs I_q/q
};

EntangleReport verify_entangled_bases_fourier(int q);
EntangleReport verify_entangled_bases_galois(const galois::GaloisField& f);

}  // namespace phaselock::entangle
