#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "phaselock/arith.hpp"
#include "phaselock/dynamics.hpp"
#include "phaselock/entangle.hpp"
#include "phaselock/galois.hpp"
#include "phaselock/locking.hpp"
#include "phaselock/qphase.hpp"
#include "phaselock/table.hpp"

namespace {

using phaselock::Table;
namespace arith = phaselock::arith;
namespace locking = phaselock::locking;
namespace dynamics = phaselock::dynamics;
namespace qphase = phaselock::qphase;
namespace galois = phaselock::galois;
namespace entangle = phaselock::entangle;

struct OutputConfig {
    std::string path = "-";
    std::string format = "csv";
};

void write_text(const OutputConfig& out, const std::string& text) {
    if (out.path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out.path);
    file << text;
}

void emit(const OutputConfig& out, const Table& table) {
    std::ostringstream buffer;
    if (out.format == "json")
        table.write_json(buffer);
    else
        table.write_csv(buffer);
    write_text(out, buffer.str());
}

void add_output_flags(CLI::App* cmd, OutputConfig& out) {
    cmd->add_option("--out", out.path, "output path, - for stdout");
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void run_spectrum(double f0, double fc, long long qmax, double lo, double hi,
                  const OutputConfig& out) {
    auto basins = locking::spectrum_scan(locking::FilterConfig(f0, fc), qmax, lo, hi);
    Table table;
    table.columns = {"p", "q", "nu1_num", "nu1_den", "nu2_num", "nu2_den", "width_hz", "overlap"};
    for (const auto& b : basins)
        table.add_row({b.center.num, b.center.den, b.nu1.num, b.nu1.den, b.nu2.num, b.nu2.den,
                       b.width_hz, (long long)(b.overlap ? 1 : 0)});
    emit(out, table);
}

Table series_table(const dynamics::TimeSeries& ts) {
    Table table;
    table.columns = {"t", "value"};
    for (std::size_t i = 0; i < ts.samples.size(); ++i)
        table.add_row({(double)i * ts.dt, ts.samples[i]});
    return table;
}

void run_adler(double omega_lf, double k, double phi0, double t_end, double dt,
               const OutputConfig& out) {
    auto result = dynamics::adler_integrate({omega_lf, k, phi0}, t_end, dt);
    emit(out, series_table(result.phase));
}

void run_vdp(double g, double beta_prime, double omega, double omega0, double v0,
             double t_end, double dt, const OutputConfig& out) {
    auto ts = dynamics::vanderpol_integrate({g, beta_prime, omega, omega0, v0}, t_end, dt);
    emit(out, series_table(ts));
}

void run_arnold(double c, double omega_min, double omega_max, long long steps,
                long long transient, long long iters, const OutputConfig& out) {
    if (steps < 2) throw std::invalid_argument("arnold: need at least 2 grid steps");
    std::vector<double> grid(steps);
    for (long long i = 0; i < steps; ++i)
        grid[i] = omega_min + (omega_max - omega_min) * (double)i / (double)(steps - 1);
    auto points = dynamics::staircase_scan(c, grid, transient, iters);
    Table table;
    table.columns = {"Omega", "winding"};
    for (const auto& pt : points) table.add_row({pt.omega, pt.winding});
    emit(out, table);
}

void run_allan(long long n, double exponent, std::uint64_t seed, double dt,
               const OutputConfig& out) {
    auto ts = dynamics::synth_one_over_f((std::size_t)n, seed, exponent, dt);
    std::vector<double> taus;
    for (std::size_t m = 1; m * 11 <= ts.samples.size(); m *= 2) taus.push_back((double)m * dt);
    auto curve = dynamics::allan_deviation(ts, taus);
    Table table;
    table.columns = {"tau", "sigma"};
    for (std::size_t i = 0; i < curve.taus.size(); ++i)
        table.add_row({curve.taus[i], curve.sigmas[i]});
    emit(out, table);
}

void run_arith_table(long long nmax, long long q, const OutputConfig& out) {
    Table table;
    table.columns = {"n", "phi", "moebius", "mangoldt", "b_dual", "c_q"};
    for (long long n = 1; n <= nmax; ++n)
        table.add_row({n, arith::euler_phi(n), (long long)arith::moebius(n), arith::mangoldt(n),
                       arith::mangoldt_dual_b(n), arith::ramanujan_sum(q, n)});
    emit(out, table);
}

void run_fig2(long long qmax, double beta, long long range_size, const OutputConfig& out) {
    Table table;
    table.columns = {"q", "beta", "expec_direct", "expec_closed", "mangoldt_norm"};
    for (long long q = 2; q <= qmax; ++q) {
        double norm = arith::mangoldt(q) > 0.0
                          ? std::numbers::pi * arith::mangoldt(q) / std::log((double)q)
                          : 0.0;
        table.add_row({q, beta, qphase::lock_expectation_direct((int)q, beta),
                       qphase::lock_expectation_closed((int)q, beta, (int)range_size), norm});
    }
    emit(out, table);
}

void run_kms(long long qmax, double beta0, double eps, const OutputConfig& out) {
    Table table;
    table.columns = {"q", "beta0", "kms", "mu_over_phi", "neg_lambda_eps_over_q"};
    for (long long q = 1; q <= qmax; ++q) {
        auto limits = qphase::kms_limits(q);
        table.add_row({q, beta0, qphase::kms_value(q, {beta0}), limits.low_temp,
                       limits.critical_coeff * eps});
    }
    emit(out, table);
}

void run_mub(int p, int m, const OutputConfig& out) {
    galois::GaloisField field(p, m);
    auto report = galois::mub_verify(field);
    nlohmann::ordered_json doc;
    doc["p"] = p;
    doc["m"] = m;
    doc["modulus_coeffs"] = field.modulus();
    doc["generator_coeffs"] = field.coeffs(field.generator());
    doc["q"] = report.q;
    doc["n_bases"] = report.n_bases;
    doc["max_dev"] = report.max_dev;
    write_text(out, doc.dump(1) + "\n");
}

void run_gauss(int p, int a, int psi_index, const OutputConfig& out) {
    galois::GaloisField field(p, 1);
    galois::CharacterSpec psi{galois::CharacterSpec::multiplicative, psi_index};
    Table table;
    table.columns = {"p", "k", "re_T", "im_T", "abs_T", "bound"};
    for (int k = -(p - 1); k <= p - 1; ++k) {
        auto report = galois::gauss_T(field, a, psi, k);
        table.add_row({(long long)p, (long long)k, report.value.real(), report.value.imag(),
                       std::abs(report.value), report.bound});
    }
    emit(out, table);
}

void run_bell(const std::string& family, int q, int p, int m, const OutputConfig& out) {
    Table table;
    table.columns = {"family", "q", "u", "a_or_k", "b", "max_gram_dev", "max_ptrace_dev", "purity"};
    auto target_dev = [](const entangle::BipartiteState& state) {
        auto rho = entangle::partial_trace_2(state);
        auto target =
            entangle::DensityMatrix::Identity(state.q, state.q) / (double)state.q;
        return (rho - target).cwiseAbs().maxCoeff();
    };
    if (family == "fourier") {
        for (int u = 0; u < q; ++u) {
            std::vector<entangle::BipartiteState> basis;
            for (int k = 0; k < q; ++k) basis.push_back(entangle::bell_fourier(q, u, k));
            for (int k = 0; k < q; ++k) {
                double gram = 0.0;
                for (int k2 = 0; k2 < q; ++k2) {
                    double olap2 = std::norm(basis[k].amps.dot(basis[k2].amps));
                    gram = std::max(gram, std::abs(olap2 - (k == k2 ? 1.0 : 0.0)));
                }
                auto rho = entangle::partial_trace_2(basis[k]);
                table.add_row({std::string("fourier"), (long long)q, (long long)u, (long long)k,
                               std::string(), gram, target_dev(basis[k]),
                               entangle::purity(rho)});
            }
        }
    } else {
        galois::GaloisField field(p, m);
        q = field.q();
        for (int u = 0; u < q; ++u)
            for (int a = 0; a < q; ++a) {
                std::vector<entangle::BipartiteState> basis;
                for (int b = 0; b < q; ++b) basis.push_back(entangle::bell_galois(field, u, a, b));
                for (int b = 0; b < q; ++b) {
                    double gram = 0.0;
                    for (int b2 = 0; b2 < q; ++b2) {
                        double olap2 = std::norm(basis[b].amps.dot(basis[b2].amps));
                        gram = std::max(gram, std::abs(olap2 - (b == b2 ? 1.0 : 0.0)));
                    }
                    auto rho = entangle::partial_trace_2(basis[b]);
                    table.add_row({std::string("galois"), (long long)q, (long long)u, (long long)a,
                                   (long long)b, gram, target_dev(basis[b]),
                                   entangle::purity(rho)});
                }
            }
    }
    emit(out, table);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-locking laboratory scans"};
    app.require_subcommand(1);

    OutputConfig out;
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for noise synthesis")->capture_default_str();

    double f0 = 1e7, fc = 3e5, lo = 0.0, hi = 1.0;
    long long qmax_spectrum = 10;
    auto* spectrum = app.add_subcommand("spectrum", "mode-locking basin table");
    spectrum->add_option("--f0", f0, "reference frequency, Hz")->capture_default_str();
    spectrum->add_option("--fc", fc, "low-pass cutoff, Hz")->capture_default_str();
    spectrum->add_option("--qmax", qmax_spectrum, "max denominator")->capture_default_str();
    spectrum->add_option("--lo", lo, "open range start")->capture_default_str();
    spectrum->add_option("--hi", hi, "open range end")->capture_default_str();
    add_output_flags(spectrum, out);

    double ad_omega = 0.5, ad_k = 1.0, ad_phi0 = 0.1, ad_tend = 100.0, ad_dt = 0.001;
    auto* adler = app.add_subcommand("adler", "phase-difference ODE trace");
    adler->add_option("--omega-lf", ad_omega, "detuning, rad/s")->capture_default_str();
    adler->add_option("--k", ad_k, "open-loop gain, rad/s")->capture_default_str();
    adler->add_option("--phi0", ad_phi0, "initial phase, rad")->capture_default_str();
    adler->add_option("--t-end", ad_tend, "run length, s")->capture_default_str();
    adler->add_option("--dt", ad_dt, "step, s")->capture_default_str();
    add_output_flags(adler, out);

    double vdp_g = 0.2, vdp_beta = 0.05, vdp_omega = 5.0, vdp_omega0 = 4.7, vdp_v0 = 0.0,
           vdp_tend = 120.0, vdp_dt = 0.005;
    auto* vdp = app.add_subcommand("vdp", "driven oscillator trace");
    vdp->add_option("--g", vdp_g, "linear net gain, 1/s")->capture_default_str();
    vdp->add_option("--beta-prime", vdp_beta, "saturation coefficient")->capture_default_str();
    vdp->add_option("--omega", vdp_omega, "resonance frequency, rad/s")->capture_default_str();
    vdp->add_option("--omega0", vdp_omega0, "drive frequency, rad/s")->capture_default_str();
    vdp->add_option("--v0", vdp_v0, "drive amplitude")->capture_default_str();
    vdp->add_option("--t-end", vdp_tend, "run length, s")->capture_default_str();
    vdp->add_option("--dt", vdp_dt, "step, s")->capture_default_str();
    add_output_flags(vdp, out);

    double ar_c = 0.9, ar_min = 0.0, ar_max = 1.0;
    long long ar_steps = 201, ar_transient = 1000, ar_iters = 20000;
    auto* arnold = app.add_subcommand("arnold", "circle-map winding staircase");
    arnold->add_option("--c", ar_c, "coupling")->capture_default_str();
    arnold->add_option("--omega-min", ar_min, "grid start")->capture_default_str();
    arnold->add_option("--omega-max", ar_max, "grid end")->capture_default_str();
    arnold->add_option("--steps", ar_steps, "grid points")->capture_default_str();
    arnold->add_option("--transient", ar_transient, "discarded iterations")->capture_default_str();
    arnold->add_option("--iters", ar_iters, "averaged iterations")->capture_default_str();
    add_output_flags(arnold, out);

    long long al_n = 131072;
    double al_exponent = 1.0, al_dt = 1.0;
    auto* allan = app.add_subcommand("allan", "Allan deviation of synthetic noise");
    allan->add_option("--n", al_n, "sample count, power of two")->capture_default_str();
    allan->add_option("--exponent", al_exponent, "PSD exponent")->capture_default_str();
    allan->add_option("--dt", al_dt, "sample period, s")->capture_default_str();
    add_output_flags(allan, out);

    long long at_nmax = 50, at_q = 1;
    auto* arith_cmd = app.add_subcommand("arith-table", "arithmetic function table");
    arith_cmd->add_option("--nmax", at_nmax, "last n")->capture_default_str();
    arith_cmd->add_option("--q", at_q, "Ramanujan sum modulus")->capture_default_str();
    add_output_flags(arith_cmd, out);

    long long f2_qmax = 50, f2_range = -1;
    double f2_beta = 1.0;
    auto* fig2 = app.add_subcommand("fig2", "lock-operator expectation scan");
    fig2->add_option("--qmax", f2_qmax, "last q")->capture_default_str();
    fig2->add_option("--beta", f2_beta, "coherent phase, rad")->capture_default_str();
    fig2->add_option("--range-size", f2_range, "kernel index range, -1 for phi(q)")
        ->capture_default_str();
    add_output_flags(fig2, out);

    long long kms_qmax = 30;
    double kms_beta0 = 20.0, kms_eps = 0.1;
    auto* kms = app.add_subcommand("kms", "KMS phase expectation scan");
    kms->add_option("--qmax", kms_qmax, "last q")->capture_default_str();
    kms->add_option("--beta0", kms_beta0, "inverse temperature")->capture_default_str();
    kms->add_option("--eps", kms_eps, "offset for the critical coefficient column")
        ->capture_default_str();
    add_output_flags(kms, out);

    int mub_p = 3, mub_m = 1;
    auto* mub = app.add_subcommand("mub", "mutually unbiased bases report (JSON)");
    mub->add_option("--p", mub_p, "field characteristic, odd prime")->capture_default_str();
    mub->add_option("--m", mub_m, "extension degree")->capture_default_str();
    add_output_flags(mub, out);

    int ga_p = 7, ga_a = 1, ga_psi = 1;
    auto* gauss = app.add_subcommand("gauss", "incomplete Gauss sum table");
    gauss->add_option("--p", ga_p, "prime")->capture_default_str();
    gauss->add_option("--a", ga_a, "quadratic coefficient")->capture_default_str();
    gauss->add_option("--psi", ga_psi, "multiplicative character index")->capture_default_str();
    add_output_flags(gauss, out);

    std::string bell_family = "fourier";
    int bell_q = 3, bell_p = 3, bell_m = 1;
    auto* bell = app.add_subcommand("bell", "entangled-basis verification table");
    bell->add_option("--family", bell_family, "fourier or galois")
        ->check(CLI::IsMember({"fourier", "galois"}))
        ->capture_default_str();
    bell->add_option("--q", bell_q, "local dimension (fourier)")->capture_default_str();
    bell->add_option("--p", bell_p, "field characteristic (galois)")->capture_default_str();
    bell->add_option("--m", bell_m, "extension degree (galois)")->capture_default_str();
    add_output_flags(bell, out);

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) run_spectrum(f0, fc, qmax_spectrum, lo, hi, out);
        if (adler->parsed()) run_adler(ad_omega, ad_k, ad_phi0, ad_tend, ad_dt, out);
        if (vdp->parsed())
            run_vdp(vdp_g, vdp_beta, vdp_omega, vdp_omega0, vdp_v0, vdp_tend, vdp_dt, out);
        if (arnold->parsed())
            run_arnold(ar_c, ar_min, ar_max, ar_steps, ar_transient, ar_iters, out);
        if (allan->parsed()) run_allan(al_n, al_exponent, seed, al_dt, out);
        if (arith_cmd->parsed()) run_arith_table(at_nmax, at_q, out);
        if (fig2->parsed()) run_fig2(f2_qmax, f2_beta, f2_range, out);
        if (kms->parsed()) run_kms(kms_qmax, kms_beta0, kms_eps, out);
        if (mub->parsed()) run_mub(mub_p, mub_m, out);
        if (gauss->parsed()) run_gauss(ga_p, ga_a, ga_psi, out);
        if (bell->parsed()) run_bell(bell_family, bell_q, bell_p, bell_m, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
