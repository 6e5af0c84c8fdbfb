// Acceptance suite: every release gate in one binary, one line per
// criterion, nonzero exit on any failure. Gates and tolerances are fixed
// here, not read from configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "core/harness.hpp"
#include "core/parametrix.hpp"
#include "core/quantizer.hpp"
#include "core/reference_dtn.hpp"
#include "core/utils.hpp"
#include "core/version.hpp"
#include "support/bessel_series.hpp"

using namespace edtn;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds, double budget) {
    const bool in_budget = seconds < budget;
    if (!pass || !in_budget) ++g_failures;
    std::printf("[%s] criterion %d (%s): %s (%.2f s%s of %.0f s budget)\n",
                pass && in_budget ? "PASS" : "FAIL", index, name.c_str(), detail.c_str(),
                seconds, in_budget ? "" : " OVER BUDGET", budget);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

MediumPoint random_medium(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    MediumPoint m;
    m.mu = 0.5 + 1.5 * u(rng);
    m.lambda = -0.9 * m.mu + (3.0 + 0.9 * m.mu) * u(rng);
    m.n = 0.5 + 1.5 * u(rng);
    return m;
}

double relmax(const CMat& a, const CMat& b) {
    return norm_max(a - b) / std::max(1.0, std::max(norm_max(a), norm_max(b)));
}

// criteria 1 + 2: one harness run carries both suites
void criteria_algebra_and_identities() {
    Timer t;
    RunOptions opts;
    opts.seed = 2024;
    const auto rep = run_verify_algebra(default_config("verify-algebra"), opts);
    const double secs = t.seconds();

    double alg_max = 0, id_max = 0, floor = 0;
    bool alg_pass = true, id_pass = true;
    for (const auto& c : rep.checks) {
        if (c.name == "identity_product_split" || c.name == "identity_difference_factorization") {
            id_max = std::max(id_max, c.value);
            id_pass = id_pass && c.pass;
        } else if (c.name == "denominator_floor_random" || c.name == "denominator_floor_grid") {
            floor = c.value;
            id_pass = id_pass && c.pass;
        } else {
            alg_max = std::max(alg_max, c.value);
            alg_pass = alg_pass && c.pass;
        }
    }
    report(1, "algebra suite", alg_pass,
           "max relative residual " + fmt(alg_max) + " <= 1e-11 over seeded random instances",
           secs, 5.0);
    report(2, "identity suite", id_pass,
           "max relative residual " + fmt(id_max) + " <= 1e-12; denominator floor " + fmt(floor) +
               " > 0",
           secs, 5.0);
}

void criterion_halfspace_oracle() {
    Timer t;
    RunOptions opts;
    opts.seed = 2024;
    const auto rep = run_oracle_halfspace(default_config("oracle-halfspace"), opts);
    double value = 0;
    int points = 0;
    for (const auto& c : rep.checks) {
        if (c.name == "halfspace_oracle_rel_diff") value = c.value;
        if (c.name == "grid_size") points = static_cast<int>(c.value);
    }
    report(3, "half-space oracle equivalence", rep.pass,
           "max frame-matched relative difference " + fmt(value) + " <= 1e-8 over " +
               std::to_string(points) + " points",
           t.seconds(), 10.0);
}

void criterion_disk_rate() {
    Timer t;
    RunOptions opts;
    opts.seed = 2024;
    opts.threads = 2;
    const auto rep = run_converge_disk(default_config("converge-disk"), opts);
    double s1 = 0, s2 = 0, ratio = 0;
    for (const auto& c : rep.checks) {
        if (c.name == "h_slope_per_mode") s1 = c.value;
        if (c.name == "h_slope_operator") s2 = c.value;
        if (c.name == "theta_envelope_ratio") ratio = c.value;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "h-slopes %.3f / %.3f in [0.9, 1.5]; err*theta^2 spread %.2f <= 10", s1, s2,
                  ratio);
    report(4, "disk approximation rate", rep.pass, detail, t.seconds(), 120.0);
}

void criterion_eikonal() {
    Timer t;
    RunOptions opts;
    opts.seed = 2024;
    const auto rep = run_eikonal_residual(default_config("eikonal-residual"), opts);
    double dev = 0, flat = 0;
    for (const auto& c : rep.checks) {
        if (c.name == "residual_halving_ratio") dev = c.value;
        if (c.name == "flat_residual") flat = c.value;
    }
    report(5, "eikonal residual order", rep.pass,
           "max |log2 ratio + N| " + fmt(dev) + " <= 1; flat residual " + fmt(flat) +
               " < 1e-15; collar bounds hold",
           t.seconds(), 10.0);
}

void criterion_amplitudes() {
    Timer t;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> us(0.0, 2.0 * M_PI), uxi(-3.0, 3.0), uth(0.05, 1.0),
        u01(0.0, 1.0);
    const auto chart = CurveChart::circle(1.0);

    double worst_sum = 0, worst_pol = 0, worst_dual_m = 0, worst_dual_q = 0, worst_qzero = 0;
    for (int i = 0; i < 100; ++i) {
        SymbolInput in;
        in.params = params_from_h_theta(0.01, uth(rng));
        in.med = random_medium(rng);
        in.pt = frame_point_on_curve(chart, us(rng), uxi(rng));

        EikonalProblem base;
        base.params = in.params;
        base.kappa = 1.0;
        base.r0 = in.pt.r0();
        base.n_jet = {in.med.n};
        EikonalProblem ps = base, pp = base;
        ps.c_jet = {in.med.cs()};
        pp.c_jet = {in.med.cp()};
        const auto sol_s = solve_eikonal(ps, 6);
        const auto sol_p = solve_eikonal(pp, 6);

        const auto amp0 = amplitudes_at(in, sol_s, sol_p, 1.0, 0.0);
        worst_sum = std::max(worst_sum,
                             norm_max(amp0.A_s + amp0.A_p - CMat::identity(2)));

        const double x1 = 0.01;
        const auto amp = amplitudes_at(in, sol_s, sol_p, 1.0, x1);
        const CVec gs = phase_gradient(in.pt, sol_s, 1.0, x1);
        const CVec gp = phase_gradient(in.pt, sol_p, 1.0, x1);
        const double ss = std::max(1e-300, norm_max(amp.A_s)) *
                          std::max(1.0, std::pow(norm2(gs), 2.0));
        const double sp = std::max(1e-300, norm_max(amp.A_p)) *
                          std::max(1.0, std::pow(norm2(gp), 2.0));
        worst_pol = std::max(worst_pol, norm_max(outer(gs, gs) * amp.A_s) / ss);
        const CMat psg = square(gp) * CMat::identity(2) - outer(gp, gp);
        worst_pol = std::max(worst_pol, norm_max(psg * amp.A_p) / sp);

        // dual route: traction reduction vs closed forms
        const auto sym = assemble_symbol(in);
        const auto red = boundary_dn_reduction(in);
        worst_dual_m = std::max(worst_dual_m, relmax(red.m_check, sym.md));
        worst_dual_q = std::max(worst_dual_q, norm_max(red.q_check - sym.q));
        worst_qzero = std::max(worst_qzero, norm_max(sym.q));
    }

    const bool pass = worst_sum <= 1e-12 && worst_pol <= 1e-10 && worst_dual_m <= 1e-11 &&
                      worst_dual_q <= 1e-11 && worst_qzero == 0.0;
    char detail[220];
    std::snprintf(detail, sizeof detail,
                  "boundary sum %.1e <= 1e-12; polarization %.1e <= 1e-10; dual-path m %.1e, q "
                  "%.1e <= 1e-11; q == 0 on constant circles (%.1e)",
                  worst_sum, worst_pol, worst_dual_m, worst_dual_q, worst_qzero);
    report(6, "amplitude constraints", pass, detail, t.seconds(), 10.0);
}

void criterion_quantizer() {
    Timer t;
    const auto p = params_from_h_theta(0.05, 0.5);
    const double L = 2.0 * M_PI;
    const int nmax = 32;

    FourierBoundaryData f(2, L, nmax);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = -nmax; n <= nmax; ++n)
        for (int i = 0; i < 2; ++i) f.coeff(n)[i] = cd(u(rng), u(rng));

    // identity symbol
    auto op = apply_symbol([](double, double) { return CMat::identity(2); }, f, p);
    double worst_id = 0;
    for (int j = 0; j < 32; ++j) {
        const double s = L * j / 32;
        worst_id = std::max(worst_id, norm_max(op(s) - f.synthesize(s)) /
                                          std::max(1.0, norm_max(f.synthesize(s))));
    }

    // analysis/synthesis round trip
    const auto samples = f.sample_grid(2 * nmax + 9);
    const auto back = FourierBoundaryData::analyze_grid(samples, L, nmax);
    double worst_rt = 0;
    for (int n = -nmax; n <= nmax; ++n)
        worst_rt = std::max(worst_rt, norm_max(back.coeff(n) - f.coeff(n)));

    // exact diagonal action per mode
    auto weight = [&](double xi) { return std::pow(japanese_bracket(xi), 3.0); };
    const auto wf = apply_symbol_diagonal(
        [&](double xi) { return weight(xi) * CMat::identity(2); }, f, p);
    double worst_diag = 0;
    for (int n = -nmax; n <= nmax; ++n) {
        const double xi = 2.0 * M_PI * p.h * n / L;
        const CVec expect = weight(xi) * f.coeff(n);
        worst_diag = std::max(worst_diag, norm_max(wf.coeff(n) - expect) /
                                              std::max(1.0, norm_max(expect)));
    }

    const bool pass = worst_id <= 1e-13 && worst_rt <= 1e-12 && worst_diag <= 1e-15;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "identity %.1e <= 1e-13; round trip %.1e <= 1e-12; diagonal action %.1e",
                  worst_id, worst_rt, worst_diag);
    report(7, "quantizer", pass, detail, t.seconds(), 2.0);
}

void criterion_bessel() {
    Timer t;

    // power-series checkpoint
    const cd oracle = testsupport::bessel_j_derivative_series(0, 1.0) /
                      testsupport::bessel_j_series(0, 1.0);
    const double e_series = std::abs(bessel_log_derivative(0, cd(1.0)).value - oracle);

    // recurrence consistency at large argument
    const cd w(500.0, 5.0);
    double e_rec = 0;
    for (long n : {0L, 5L}) {
        const cd rn = static_cast<double>(n) / w - bessel_log_derivative(n, w).value;
        const cd rn1 = static_cast<double>(n + 1) / w - bessel_log_derivative(n + 1, w).value;
        e_rec = std::max(e_rec, std::abs(rn - 1.0 / (2.0 * static_cast<double>(n + 1) / w - rn1)));
    }

    // disk mode zero decoupling
    const auto p = params_from_h_theta(0.05, 0.5);
    const MediumPoint m{1.0, 2.0, 1.0};
    const auto mode0 = disk_dn_mode(p, m, 1.0, 0);
    const double e_mode0 =
        std::max(std::abs(mode0.matrix(0, 1)), std::abs(mode0.matrix(1, 0)));

    // flat limit of the disk solver
    const auto pl = params_from_h_theta(0.03125, 0.5);
    std::vector<double> lr, ld;
    for (double R : {8.0, 16.0, 32.0, 64.0}) {
        const long n = std::lround(0.7 * R / pl.h);
        const double xi = pl.h * static_cast<double>(n) / R;
        const auto mode = disk_dn_mode(pl, m, R, n);
        const auto chart = CurveChart::circle(R);
        SymbolInput in;
        in.params = pl;
        in.med = m;
        in.pt = frame_point_on_curve(chart, 0.0, xi);
        const auto sym = assemble_symbol(in);
        lr.push_back(std::log2(R));
        ld.push_back(std::log2(norm_max(mode.matrix - frame_components(in.pt, sym.md))));
    }
    const double slope = ols_slope(lr, ld);

    const bool pass = e_series <= 1e-12 && e_rec <= 1e-12 && e_mode0 <= 1e-12 &&
                      slope >= -1.3 && slope <= -0.7;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "series checkpoint %.1e <= 1e-12; recurrence %.1e <= 1e-12; mode-0 coupling "
                  "%.1e <= 1e-12; flat-limit slope %.3f in -1 +/- 0.3",
                  e_series, e_rec, e_mode0, slope);
    report(8, "bessel kernel and disk limit", pass, detail, t.seconds(), 10.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite (library version %s)\n", kVersion);
    criteria_algebra_and_identities();
    criterion_halfspace_oracle();
    criterion_disk_rate();
    criterion_eikonal();
    criterion_amplitudes();
    criterion_quantizer();
    criterion_bessel();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
