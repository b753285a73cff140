// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. argv[1] is the path of the gft executable, used by
// the determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <gft/gft.hpp>

#include "oracles.hpp"

using gft::AlphaMode;
using gft::ClassMember;
using gft::Complex;
using gft::ExampleId;
using gft::ExprKind;
using gft::PowerPoly;
using gft::SamplingConfig;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double v)
{
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

std::string secs(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Complex> coeffs_of(const ClassMember& f) { return {f.poly().coeffs().begin(), f.poly().coeffs().end()}; }

// z + sum_{j>n} a_j z^j rescaled so that sum j|a_j| = weight.
ClassMember random_weighted(std::mt19937_64& rng, int n, int extra, double weight)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(n + extra + 2));
    c[1] = 1.0;
    double w = 0.0;
    for (std::size_t j = static_cast<std::size_t>(n) + 1; j < c.size(); ++j) {
        c[j] = {u(rng), u(rng)};
        w += static_cast<double>(j) * std::abs(c[j]);
    }
    for (std::size_t j = 2; j < c.size(); ++j)
        c[j] *= weight / w;
    return ClassMember(PowerPoly(c), n);
}

std::vector<Complex> random_points(std::mt19937_64& rng, int m)
{
    std::uniform_real_distribution<double> t(0.0, 1.0);
    std::vector<Complex> pts;
    for (int j = 0; j < m; ++j)
        pts.push_back(gft::unit_point_from_turns(t(rng)));
    return pts;
}

Outcome example_one()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const double rho = gft::rho_min(ExampleId::Ex1, 1, 0.2);
    const auto rep = gft::example_end_to_end(ExampleId::Ex1, 1, 0.2);
    const double elapsed = seconds_since(t0);
    o.require(rep.alpha == Complex(1.2, 0.2), "alpha " + num(rep.alpha.real()) + "+" + num(rep.alpha.imag()) + "i");
    o.require(near(Complex(1.0) - rep.alpha, Complex(-0.2, -0.2), 1e-12), "1 - alpha");
    o.require(near(rho, std::numbers::sqrt2 / 0.2, 1e-12), "rho_min " + num(rho));
    o.require(rep.rho == rho, "rho used");
    o.require(near(rep.hypothesis_bound, 2.0 / 3.0, 1e-12), "hypothesis_bound " + num(rep.hypothesis_bound));
    o.require(rep.hypothesis_sup.value > 0.66 && rep.hypothesis_sup.value < 2.0 / 3.0,
              "hypothesis_sup " + num(rep.hypothesis_sup.value));
    o.require(rep.hypothesis_sup.radius == 1.0 - 1e-4, "sup radius");
    o.require(near(rep.conclusion_sup.value, 0.4 * (1.0 - 1e-4), 1e-9), "conclusion_sup " + num(rep.conclusion_sup.value));
    o.require(near(rep.conclusion_bound, 2.0, 1e-12) && rep.conclusion_ok, "conclusion 0.4(1-eps) < 2");
    o.require(rep.hypothesis_ok && rep.chain_ok.value_or(false), "chain");
    o.require(elapsed < 5.0, "runtime " + secs(elapsed));
    if (o.pass)
        o.detail = "sup " + num(rep.hypothesis_sup.value) + " < 2/3, " + secs(elapsed);
    return o;
}

Outcome example_two()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const double rho = gft::rho_min(ExampleId::Ex2, 1, 0.2);
    const auto rep = gft::example_end_to_end(ExampleId::Ex2, 1, 0.2);
    const double elapsed = seconds_since(t0);
    o.require(near(rho, std::numbers::sqrt2 / 0.6, 1e-12), "rho_min " + num(rho));
    o.require(near(rep.hypothesis_bound, 4.0 / 15.0, 1e-12), "hypothesis_bound " + num(rep.hypothesis_bound));
    o.require(rep.hypothesis_sup.value > 0.266 && rep.hypothesis_sup.value < 4.0 / 15.0,
              "hypothesis_sup " + num(rep.hypothesis_sup.value));
    o.require(near(rep.conclusion_bound, 2.0 / 3.0, 1e-12), "conclusion_bound " + num(rep.conclusion_bound));
    o.require(rep.conclusion_ok && rep.hypothesis_ok, "verdict");
    o.require(elapsed < 5.0, "runtime " + secs(elapsed));
    if (o.pass)
        o.detail = "sup " + num(rep.hypothesis_sup.value) + " < 4/15, " + secs(elapsed);
    return o;
}

Outcome example_five()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = gft::example_end_to_end(ExampleId::Ex5, 1, 0.2);
    const double elapsed = seconds_since(t0);
    o.require(rep.alpha == Complex(1.1, 0.1), "beta " + num(rep.alpha.real()) + "+" + num(rep.alpha.imag()) + "i");
    o.require(near(rep.hypothesis_bound, 0.25, 1e-12), "hypothesis_bound " + num(rep.hypothesis_bound));
    o.require(rep.conclusion_sup.value < 0.2 && 0.2 < rep.conclusion_bound,
              "conclusion " + num(rep.conclusion_sup.value) + " < 0.2 < " + num(rep.conclusion_bound));
    o.require(near(rep.conclusion_bound, 1.0 / 3.0, 1e-12), "conclusion_bound 1/3");
    o.require(rep.hypothesis_ok && rep.conclusion_ok, "verdict");
    o.require(elapsed < 5.0, "runtime " + secs(elapsed));
    if (o.pass)
        o.detail = "conclusion sup " + num(rep.conclusion_sup.value) + ", " + secs(elapsed);
    return o;
}

Outcome boundary_points()
{
    Outcome o;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> frac(1e-3, 1.0 - 1e-3);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 4;
        const double mod = frac(rng) / (n + 1.0); // |a| < 1/(n+1)
        const Complex a = std::polar(mod, ang(rng));
        const auto [z1, z2] = gft::monomial_boundary_points(a, n);
        const auto c = coeffs_of(ClassMember::monomial_perturbation(a, n));
        const double lift = (n + 1) * mod;
        const double e1 = std::abs(oracle::derivative(c, z1, 1) - Complex(1.0 + lift, 0.0));
        const double e2 = std::abs(oracle::derivative(c, z2, 1) - Complex(1.0, lift));
        worst = std::max({worst, e1, e2, std::abs(std::abs(z1) - 1.0), std::abs(std::abs(z2) - 1.0)});
    }
    o.require(worst <= 1e-10, "worst error " + num(worst));
    if (o.pass)
        o.detail = "100 cases, worst error " + num(worst);
    return o;
}

Outcome jack_suite()
{
    Outcome o;
    gft::ProbeSuiteConfig cfg; // seed 42, 100 trials, n = 1..3, r in {0.5, 0.9}, tol 1e-6
    const auto sum = gft::random_probe_suite(cfg);
    o.require(sum.probes == 600, "probe count " + std::to_string(sum.probes));
    o.require(sum.fail_details.empty(), std::to_string(sum.fail_details.size()) + " failures");
    for (const auto& f : sum.fail_details) {
        const PowerPoly w = gft::random_jack_function(f.seed, f.trial, f.n, cfg.extra_min, cfg.extra_max);
        const bool same = std::vector<Complex>(w.coeffs().begin(), w.coeffs().end()) == f.coeffs;
        o.require(same, "failure at trial " + std::to_string(f.trial) + " does not rebuild from its seed");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sum.pass_count) + "/" + std::to_string(sum.probes) +
                " passed, " + std::to_string(sum.reruns) + " after rerun, " + std::to_string(sum.unvalidated) +
                " unvalidated";
    return o;
}

Outcome soundness()
{
    Outcome o;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> weight(0.01, 0.6);
    std::uniform_real_distribution<double> log_rho(std::log(1.5), std::log(200.0));
    const SamplingConfig cfg;
    int qualifying = 0;
    int attempts = 0;
    int violations = 0;
    while (qualifying < 200 && attempts < 5000) {
        ++attempts;
        const int id = std::array{1, 2, 5}[static_cast<std::size_t>(attempts % 3)];
        const auto f = random_weighted(rng, 1 + attempts % 3, attempts % 5, weight(rng));
        const AlphaMode mode = id == 5 ? AlphaMode::FOverZMean : AlphaMode::DerivativeMean;
        gft::AlphaSpec spec;
        try {
            spec = gft::alpha_mean(f, random_points(rng, 2 + attempts % 3), mode);
        } catch (const gft::DegenerateAlpha&) {
            continue;
        }
        spec.rho = std::exp(log_rho(rng));
        const auto rep = gft::check_theorem(id, f, spec, cfg);
        if (!(rep.hypothesis_ok && rep.hypothesis_margin > 1e-3))
            continue;
        ++qualifying;
        if (!rep.conclusion_ok) {
            ++violations;
            o.require(false, "T" + std::to_string(id) + " conclusion failed at attempt " + std::to_string(attempts));
        }
    }
    o.require(qualifying == 200, "only " + std::to_string(qualifying) + " qualifying runs");
    if (o.pass)
        o.detail = "200 runs with margin > 1e-3 (from " + std::to_string(attempts) + " draws), 0 violations";
    return o;
}

Outcome monotonicity()
{
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> weight(0.05, 0.95);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const SamplingConfig cfg;
    double worst_drop = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_weighted(rng, 1 + trial % 3, trial % 6, weight(rng));
        const Complex shift{1.0 + u(rng), u(rng)};
        const ExprKind kinds[] = {ExprKind::t1(),
                                  ExprKind::t2(),
                                  ExprKind::t5(),
                                  ExprKind::fprime_minus_1(),
                                  ExprKind::f_over_z_minus_1(),
                                  ExprKind::fprime_minus_alpha(shift),
                                  ExprKind::f_over_z_minus_beta(shift)};
        const ExprKind kind = kinds[trial % 7];
        const auto circles = gft::circle_sups(kind, f, cfg);
        for (std::size_t i = 1; i < circles.size(); ++i)
            worst_drop = std::max(worst_drop, circles[i - 1].value - circles[i].value);
    }
    o.require(worst_drop <= 1e-9, "largest decrease " + num(worst_drop));
    if (o.pass)
        o.detail = "50 pairs, largest decrease " + num(worst_drop);
    return o;
}

Outcome constancy()
{
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> mod(0.01, 0.9);
    std::uniform_real_distribution<double> rad(1e-6, 1.0);
    double worst4 = 0.0;
    double worst3 = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 4;
        const auto f = ClassMember::monomial_perturbation(std::polar(mod(rng) / (n + 1.0), ang(rng)), n);
        for (int i = 0; i < 1000; ++i) {
            const Complex z = std::polar(rad(rng), ang(rng));
            worst4 = std::max(worst4, std::abs(gft::eval_expr(ExprKind::t4(), f, z) - Complex(n)));
            worst3 = std::max(worst3, std::abs(gft::eval_expr(ExprKind::t3(), f, z).real() - n * n));
        }
    }
    o.require(worst4 <= 1e-10, "T4 deviation " + num(worst4));
    o.require(worst3 <= 1e-10, "Re T3 deviation " + num(worst3));
    if (o.pass)
        o.detail = "20000 points, T4 dev " + num(worst4) + ", Re T3 dev " + num(worst3);
    return o;
}

Outcome sup_oracle()
{
    Outcome o;
    double worst = 0.0;
    for (int m = 1; m <= 8; ++m) {
        std::vector<Complex> c(static_cast<std::size_t>(m) + 2);
        c[1] = 1.0;
        c.back() = 1.0; // f/z - 1 = z^m
        const auto f = ClassMember::from_poly(PowerPoly(c));
        const auto s = gft::sup_on_circle(ExprKind::f_over_z_minus_1(), f, 0.9, SamplingConfig{});
        worst = std::max(worst, std::abs(s.value - std::pow(0.9, m)));
    }
    o.require(worst <= 1e-12, "worst error " + num(worst));
    if (o.pass)
        o.detail = "m = 1..8, worst error " + num(worst);
    return o;
}

Outcome univalence()
{
    Outcome o;
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> weight(0.01, 1.5);
    std::uniform_real_distribution<double> frac(0.05, 0.99);
    const SamplingConfig cfg;
    int runs = 0;
    int attempts = 0;
    double min_re = INFINITY;
    while (runs < 20 && attempts < 20000) {
        ++attempts;
        const auto f = random_weighted(rng, 1 + attempts % 3, attempts % 4, weight(rng));
        gft::AlphaSpec spec;
        try {
            spec = gft::alpha_mean(f, random_points(rng, 2 + attempts % 2), AlphaMode::DerivativeMean);
        } catch (const gft::DegenerateAlpha&) {
            continue;
        }
        const double gap = std::abs(1.0 - spec.alpha);
        if (gap >= 1.0)
            continue;
        // rho in (1, 1/|1 - alpha|) so that rho |1 - alpha| < 1
        spec.rho = 1.0 + frac(rng) * (1.0 / gap - 1.0);
        gft::TheoremReport rep;
        try {
            rep = gft::check_thm1(f, spec, cfg);
        } catch (const gft::MonotonicityViolation&) {
            continue; // f' vanishes inside the disk, T1 has a pole
        }
        if (!rep.hypothesis_ok)
            continue;
        o.require(rep.univalent_implied, "flag not set with rho|1-alpha| = " + num(rep.conclusion_bound));
        ++runs;
        const auto c = coeffs_of(f);
        for (int i = 1; i <= 100; ++i)
            for (int k = 0; k < 100; ++k) {
                const Complex z = std::polar(i / 100.0, 2.0 * std::numbers::pi * k / 100.0);
                min_re = std::min(min_re, oracle::derivative(c, z, 1).real());
            }
    }
    o.require(runs == 20, "only " + std::to_string(runs) + " runs");
    o.require(min_re > 0.0, "min Re f' " + num(min_re));
    if (o.pass)
        o.detail = "20 runs x 10^4 samples, min Re f' " + num(min_re);
    return o;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& exe)
{
    Outcome o;
    if (exe.empty()) {
        o.require(false, "no gft executable given");
        return o;
    }
    const auto dir = std::filesystem::temp_directory_path() / "gft_acceptance_determinism";
    std::filesystem::create_directories(dir);
    const std::vector<std::string> commands{
        "verify --theorem 1 --coeffs 0,1,0.2 --points 0,0.25 --rho 7.0710678118654755",
        "verify --theorem 3 --coeffs 0,1,0.1,0.05 --points 0,0.3,0.7 --rho 4",
        "verify --theorem 4 --coeffs 0,1,0.1-0.1i,0.1 --points 0,0.25 --rho 4 --format csv",
        "example --id 5 --a 0.2",
        "sup --coeffs 0,1,0.1-0.05i,0.02 --kind T2",
        "field --coeffs 0,1,0.2 --kind T1 --grid 64",
        "jack-probe --trials 20",
    };
    std::size_t compared = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string reference;
        int reference_code = -1;
        int attempt = 0;
        for (const char* threads : {"1", "4", "4", "1"}) {
            const auto out = dir / ("cmd" + std::to_string(i) + "_" + std::to_string(attempt++) + ".out");
            const std::string line = "GFT_THREADS=" + std::string(threads) + " '" + exe + "' " + commands[i] +
                                     " --output '" + out.string() + "' 2>/dev/null";
            const int status = std::system(line.c_str());
            const std::string text = slurp(out);
            if (text.empty()) {
                o.require(false, "empty output for: " + commands[i]);
                break;
            }
            if (reference_code < 0) {
                reference = text;
                reference_code = status;
                continue;
            }
            o.require(text == reference, "output differs with GFT_THREADS=" + std::string(threads) + ": " + commands[i]);
            o.require(status == reference_code, "exit status differs: " + commands[i]);
            ++compared;
        }
    }
    std::filesystem::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(commands.size()) + " commands, " + std::to_string(compared) +
                   " byte-identical reruns across GFT_THREADS 1 and 4";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"example 1 reproduction", example_one},
        {"example 2 reproduction", example_two},
        {"example 5 reproduction", example_five},
        {"boundary-point postcondition", boundary_points},
        {"Jack probe suite", jack_suite},
        {"soundness of T1/T2/T5", soundness},
        {"max-modulus monotonicity", monotonicity},
        {"T3/T4 constancy", constancy},
        {"sup oracle z^m", sup_oracle},
        {"univalence flag", univalence},
        {"CLI determinism", [&] { return determinism(exe); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(t0);
        if (!o.pass)
            ++failures;
        std::printf("%s %2zu %-30s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), elapsed);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
