#include "phaselock/entangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaselock::entangle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

BipartiteState bell_fourier(int q, int u, int k) {
    if (q < 1) throw std::invalid_argument("bell_fourier: q must be >= 1");
    if (u < 0 || u >= q || k < 0 || k >= q)
        throw std::invalid_argument("bell_fourier: need 0 <= u,k < q");
    BipartiteState state;
    state.q = q;
    state.amps = Eigen::VectorXcd::Zero((Eigen::Index)q * q);
    double scale = 1.0 / std::sqrt((double)q);
    for (int n = 0; n < q; ++n) {
        int partner = (n + u) % q;
        state.amps[(Eigen::Index)n * q + partner] =
            std::polar(scale, kTwoPi * (double)k * (double)n / (double)q);
    }
    return state;
}

BipartiteState bell_galois(const galois::GaloisField& f, int u, int a, int b) {
    int q = f.q();
    if (u < 0 || u >= q || a < 0 || a >= q || b < 0 || b >= q)
        throw std::invalid_argument("bell_galois: element out of range");
    BipartiteState state;
    state.q = q;
    state.amps = Eigen::VectorXcd::Zero((Eigen::Index)q * q);
    double scale = 1.0 / std::sqrt((double)q);
    for (int n = 0; n < q; ++n) {
        int partner = f.add(n, u);
        int quad = f.mul(f.add(f.mul(a, n), b), n);
        state.amps[(Eigen::Index)n * q + partner] =
            std::polar(scale, kTwoPi * (double)f.trace(quad) / (double)f.p());
    }
    return state;
}

DensityMatrix partial_trace_2(const BipartiteState& state) {
    int q = state.q;
    if ((Eigen::Index)q * q != state.amps.size())
        throw std::invalid_argument("partial_trace_2: inconsistent dimensions");
    DensityMatrix rho = DensityMatrix::Zero(q, q);
    for (int n = 0; n < q; ++n)
        for (int l = 0; l < q; ++l) {
            Complex acc = 0.0;
            for (int j = 0; j < q; ++j)
                acc += state.amps[(Eigen::Index)n * q + j] *
                       std::conj(state.amps[(Eigen::Index)l * q + j]);
            rho(n, l) = acc;
        }
    return rho;
}

double purity(const DensityMatrix& rho) { return (rho * rho).trace().real(); }

namespace {

double ptrace_dev(const BipartiteState& state) {
    auto rho = partial_trace_2(state);
    int q = state.q;
    DensityMatrix target = DensityMatrix::Identity(q, q) / (double)q;
    return (rho - target).cwiseAbs().maxCoeff();
}

// max |<i|j>|^2 deviation from the identity pattern within one basis
double gram_dev(const std::vector<Eigen::VectorXcd>& basis) {
    double dev = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            double olap2 = std::norm(basis[i].dot(basis[j]));
            dev = std::max(dev, std::abs(olap2 - (i == j ? 1.0 : 0.0)));
        }
    return dev;
}

}  // namespace

EntangleReport verify_entangled_bases_fourier(int q) {
    EntangleReport report;
    report.family = "fourier";
    report.q = q;
    report.n_bases = q;  // one basis per u, states labeled by k
    for (int u = 0; u < q; ++u) {
        std::vector<Eigen::VectorXcd> basis;
        basis.reserve(q);
        for (int k = 0; k < q; ++k) {
            auto state = bell_fourier(q, u, k);
            report.max_ptrace_dev = std::max(report.max_ptrace_dev, ptrace_dev(state));
            basis.push_back(std::move(state.amps));
        }
        report.max_gram_dev = std::max(report.max_gram_dev, gram_dev(basis));
    }
    return report;
}

EntangleReport verify_entangled_bases_galois(const galois::GaloisField& f) {
    int q = f.q();
    EntangleReport report;
    report.family = "galois";
    report.q = q;
    report.n_bases = q * q;  // bases labeled by (u, a), states by b
    for (int u = 0; u < q; ++u) {
        std::vector<std::vector<Eigen::VectorXcd>> bases(q);
        for (int a = 0; a < q; ++a) {
            bases[a].reserve(q);
            for (int b = 0; b < q; ++b) {
                auto state = bell_galois(f, u, a, b);
                report.max_ptrace_dev = std::max(report.max_ptrace_dev, ptrace_dev(state));
                bases[a].push_back(std::move(state.amps));
            }
            report.max_gram_dev = std::max(report.max_gram_dev, gram_dev(bases[a]));
        }
        // fixed u: bases with different a are mutually unbiased
        for (int a = 0; a < q; ++a)
            for (int a2 = a + 1; a2 < q; ++a2)
                for (int b = 0; b < q; ++b)
                    for (int b2 = 0; b2 < q; ++b2) {
                        double olap2 = std::norm(bases[a][b].dot(bases[a2][b2]));
                        report.max_unbiased_dev =
                            std::max(report.max_unbiased_dev, std::abs(olap2 - 1.0 / (double)q));
                    }
    }
    return report;
}

}  // namespace phaselock::entangle
