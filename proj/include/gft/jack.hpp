#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "circle_search.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "series.hpp"

namespace gft {

struct ProbeResult {
    Complex z0{0.0};
    Complex k{0.0};
    double second = 0.0; // Re(z0 w''(z0)/w'(z0)) + 1
    bool k_real_ok = false;
    bool k_lower_ok = false;
    bool second_ok = false;
    /// |w(z0)| is at least every grid sample on the circle.
    bool argmax_valid = false;
    double r = 0.0;
    int n = 0;

    bool all_ok() const noexcept { return k_real_ok && k_lower_ok && second_ok; }
};

namespace detail {

struct JackTerms {
    Complex w, w1, w2;
};

inline JackTerms jack_terms(const PowerPoly& w, const PowerPoly& d1, const PowerPoly& d2, Complex z)
{
    return {horner(w.coeffs(), z), horner(d1.coeffs(), z), horner(d2.coeffs(), z)};
}

} // namespace detail

// Locates the max of |w| on |z| = r and evaluates the quantities of Jack's
// lemma there. After golden-section refinement the angle is polished by a
// few secant steps on Im(z w'/w), which vanishes at a smooth maximizer;
// a step is kept only if it shrinks that residual without lowering |w|
// beyond rounding.
inline ProbeResult probe(const PowerPoly& w, double r, const SamplingConfig& cfg, double tol)
{
    if (w.is_zero())
        throw ZeroFunction("w vanishes identically");
    if (w[0] != Complex{0.0})
        throw ConfigError("w(0) must be 0");
    if (!(r > 0.0 && r < 1.0))
        throw ConfigError("probe radius must lie in (0, 1)");
    if (!(tol >= 0.0))
        throw ConfigError("tolerance must be nonnegative");
    if (cfg.angular_samples < 64)
        throw ConfigError("angular_samples must be at least 64");

    const PowerPoly d1 = differentiate(w);
    const PowerPoly d2 = differentiate(d1);
    const int n = static_cast<int>(*w.vanishing_order());

    auto modulus = [&](double theta) { return std::abs(horner(w.coeffs(), std::polar(r, theta))); };
    const CircleMax m = maximize_on_circle(modulus, cfg.angular_samples, cfg.refine_iters);

    auto stationarity = [&](double theta) {
        const Complex z = std::polar(r, theta);
        const auto t = detail::jack_terms(w, d1, d2, z);
        return (z * t.w1 / t.w).imag();
    };
    double theta = m.angle;
    double best = m.value;
    double h = 1e-7;
    double s0 = stationarity(theta);
    for (int it = 0; it < 8 && s0 != 0.0; ++it) {
        const double s1 = stationarity(theta + h);
        if (s1 == s0)
            break;
        const double next = theta - s0 * h / (s1 - s0);
        const double v = modulus(next);
        const double s_next = stationarity(next);
        // |w| is flat to rounding near the peak, so allow a few ulps of slack
        if (!(v >= best * (1.0 - 1e-14)) || !(std::abs(s_next) < std::abs(s0)) ||
            std::abs(next - theta) > kTwoPi / static_cast<double>(cfg.angular_samples))
            break;
        h = std::max(std::abs(next - theta), 1e-12);
        theta = next;
        best = std::max(best, v);
        s0 = s_next;
    }
    theta = normalize_angle(theta);

    ProbeResult res;
    res.r = r;
    res.n = n;
    res.z0 = std::polar(r, theta);
    const auto t = detail::jack_terms(w, d1, d2, res.z0);
    res.k = res.z0 * t.w1 / t.w;
    res.second = (res.z0 * t.w2 / t.w1).real() + 1.0;
    res.k_real_ok = std::abs(res.k.imag()) <= tol * (1.0 + std::abs(res.k));
    res.k_lower_ok = res.k.real() >= n - tol;
    res.second_ok = res.second >= res.k.real() - tol;

    const double peak = std::abs(t.w);
    const double step = kTwoPi / static_cast<double>(cfg.angular_samples);
    res.argmax_valid = true;
    for (std::size_t j = 0; j < cfg.angular_samples; ++j)
        if (modulus(step * static_cast<double>(j)) > peak * (1.0 + 1e-14)) {
            res.argmax_valid = false;
            break;
        }
    return res;
}

struct ProbeFailure {
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    int n = 0;
    double r = 0.0;
    std::vector<Complex> coeffs;
    ProbeResult result;
};

struct ProbeSummary {
    std::size_t probes = 0;
    std::size_t pass_count = 0;
    /// Probes whose first attempt failed but passed with doubled angular samples.
    std::size_t reruns = 0;
    /// Probes excluded because the located point was beaten by a grid sample.
    std::size_t unvalidated = 0;
    std::vector<ProbeFailure> fail_details;
};

struct ProbeSuiteConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    int n_min = 1;
    int n_max = 3;
    int extra_min = 0; // number of coefficients after the leading one
    int extra_max = 7;
    std::vector<double> radii{0.5, 0.9};
    double tol = 1e-6;
    SamplingConfig sampling{};
};

// w(z) = z^n (c0 + c1 z + ... + cd z^d) with every |cj| <= 2 and |c0| >= 0.1.
// The stream depends only on (seed, trial, n), so any failure can be rebuilt
// from its logged triple.
inline PowerPoly random_jack_function(std::uint64_t seed, std::size_t trial, int n, int extra_min, int extra_max)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(n)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> extra(extra_min, extra_max);
    auto draw = [&](double min_modulus) {
        for (;;) {
            const Complex c{2.0 * unit(rng), 2.0 * unit(rng)};
            const double m = std::abs(c);
            if (m <= 2.0 && m >= min_modulus)
                return c;
        }
    };
    const int d = extra(rng);
    std::vector<Complex> coeffs(static_cast<std::size_t>(n + d + 1));
    coeffs[static_cast<std::size_t>(n)] = draw(0.1);
    for (int j = 1; j <= d; ++j)
        coeffs[static_cast<std::size_t>(n + j)] = draw(0.0);
    return PowerPoly(std::move(coeffs));
}

inline ProbeSummary random_probe_suite(const ProbeSuiteConfig& cfg)
{
    if (cfg.trials < 1)
        throw ConfigError("trials must be at least 1");
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw ConfigError("vanishing-order range must satisfy 1 <= n_min <= n_max");
    if (cfg.extra_min < 0 || cfg.extra_max < cfg.extra_min)
        throw ConfigError("degree range must satisfy 0 <= min <= max");
    if (cfg.radii.empty())
        throw ConfigError("at least one probe radius is required");

    struct Slot {
        std::size_t trial;
        int n;
        double r;
    };
    std::vector<Slot> slots;
    for (std::size_t t = 0; t < cfg.trials; ++t)
        for (int n = cfg.n_min; n <= cfg.n_max; ++n)
            for (double r : cfg.radii)
                slots.push_back({t, n, r});

    struct Outcome {
        ProbeResult result;
        bool rerun = false;
        bool failed = false;
    };
    std::vector<Outcome> outcomes(slots.size());
    SamplingConfig doubled = cfg.sampling;
    doubled.angular_samples *= 2;

    parallel_for(slots.size(), [&](std::size_t i) {
        const auto& s = slots[i];
        const PowerPoly w = random_jack_function(cfg.seed, s.trial, s.n, cfg.extra_min, cfg.extra_max);
        Outcome o;
        o.result = probe(w, s.r, cfg.sampling, cfg.tol);
        if (o.result.argmax_valid && !o.result.all_ok()) {
            o.result = probe(w, s.r, doubled, cfg.tol);
            o.rerun = true;
        }
        o.failed = o.result.argmax_valid && !o.result.all_ok();
        outcomes[i] = o;
    });

    ProbeSummary sum;
    sum.probes = slots.size();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& o = outcomes[i];
        if (!o.result.argmax_valid) {
            ++sum.unvalidated;
            continue;
        }
        if (o.failed) {
            const auto& s = slots[i];
            const PowerPoly w = random_jack_function(cfg.seed, s.trial, s.n, cfg.extra_min, cfg.extra_max);
            sum.fail_details.push_back(
                {cfg.seed, s.trial, s.n, s.r, {w.coeffs().begin(), w.coeffs().end()}, o.result});
            continue;
        }
        ++sum.pass_count;
        if (o.rerun)
            ++sum.reruns;
    }
    return sum;
}

} // namespace gft
