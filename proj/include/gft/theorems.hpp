#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "series.hpp"

namespace gft {

/// Full record of one verification run.
///
/// For theorem 4 the hypothesis is ray avoidance rather than a bound on a
/// supremum. It is stored in the same shape by negation: hypothesis_sup.value
/// is minus the smallest sampled distance from T4 to the ray [n, inf) and
/// hypothesis_bound is -ray_tol, so hypothesis_margin = min distance - ray_tol.
struct TheoremReport {
    int theorem_id = 1;
    int n = 1;
    Complex alpha{0.0};
    double rho = 0.0;
    std::vector<Complex> points;
    double hypothesis_bound = 0.0;
    SupEstimate hypothesis_sup;
    bool hypothesis_ok = false;
    double hypothesis_margin = 0.0;
    double conclusion_bound = 0.0;
    SupEstimate conclusion_sup;
    bool conclusion_ok = false;
    std::optional<double> m_alpha;
    std::optional<double> corollary1_bound;
    bool univalent_implied = false;
    std::optional<double> limits_at_zero;
    std::optional<double> ray_tol;
    std::optional<double> ray_min_distance;
    /// alpha in f'(U) (or beta in F(U)) is assumed, never tested.
    bool alpha_in_image_checked = false;
    /// Hypothesis held on the sampled disk while the conclusion did not.
    bool counterexample = false;
    std::optional<int> example_id;
    std::vector<double> example_chain;
    std::optional<double> example_expr_bound;
    std::optional<bool> chain_ok;
    SamplingConfig config_echo;

    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

enum class ExampleId { Ex1 = 1, Ex2 = 2, Ex5 = 5 };

namespace detail {

inline Complex validated_alpha(const ClassMember& f, const AlphaSpec& spec, AlphaMode expected)
{
    if (!(spec.rho > 1.0) || !std::isfinite(spec.rho))
        throw RhoOutOfRange("rho = " + std::to_string(spec.rho) + " must be a real number > 1");
    if (spec.mode != expected)
        throw ConfigError(expected == AlphaMode::DerivativeMean
                              ? "this theorem averages f' at the boundary points"
                              : "this theorem averages f(z)/z at the boundary points");
    const AlphaSpec fresh = alpha_mean(f, spec.points, expected);
    if (std::abs(fresh.alpha - spec.alpha) > kBoundaryTolerance)
        throw ConfigError("alpha does not match the boundary average of f");
    return fresh.alpha;
}

inline TheoremReport start_report(int id, const ClassMember& f, const AlphaSpec& spec, Complex alpha,
                                  const SamplingConfig& cfg)
{
    TheoremReport rep;
    rep.theorem_id = id;
    rep.n = f.order();
    rep.alpha = alpha;
    rep.rho = spec.rho;
    rep.points = spec.points;
    rep.config_echo = cfg;
    return rep;
}

// Conclusion |f' - 1| < rho |1 - alpha| (or |f/z - 1| < rho |1 - beta|),
// plus the M_alpha variant and the final bookkeeping shared by all checkers.
inline void finish_report(TheoremReport& rep, const ClassMember& f, AlphaMode mode, const SamplingConfig& cfg)
{
    rep.hypothesis_margin = rep.hypothesis_bound - rep.hypothesis_sup.value;
    const double gap = std::abs(Complex{1.0} - rep.alpha);
    rep.conclusion_bound = rep.rho * gap;
    const ExprKind conclusion_kind =
        mode == AlphaMode::DerivativeMean ? ExprKind::fprime_minus_1() : ExprKind::f_over_z_minus_1();
    rep.conclusion_sup = sup_on_disk(conclusion_kind, f, cfg);
    rep.conclusion_ok = rep.conclusion_sup.value < rep.conclusion_bound;
    rep.m_alpha = m_alpha(f, rep.alpha, cfg, mode);
    rep.corollary1_bound = rep.rho * *rep.m_alpha;
    // |f' - 1| < rho |1 - alpha| < 1 only follows when the hypothesis holds
    rep.univalent_implied = mode == AlphaMode::DerivativeMean && rep.hypothesis_ok && rep.conclusion_bound < 1.0;
    rep.counterexample = rep.hypothesis_ok && !rep.conclusion_ok;
}

inline TheoremReport check_bounded_hypothesis(int id, ExprKind kind, const ClassMember& f, const AlphaSpec& spec,
                                              const SamplingConfig& cfg)
{
    cfg.validate();
    const AlphaMode mode = id == 5 ? AlphaMode::FOverZMean : AlphaMode::DerivativeMean;
    const Complex alpha = validated_alpha(f, spec, mode);
    TheoremReport rep = start_report(id, f, spec, alpha, cfg);
    const double gap = std::abs(Complex{1.0} - alpha);
    const double n = f.order();
    const double rho = spec.rho;
    rep.hypothesis_bound = id == 2 ? gap * gap * n * rho * rho / (1.0 + gap * rho)
                                   : gap * n * rho / (1.0 + gap * rho);
    rep.hypothesis_sup = sup_on_disk(kind, f, cfg);
    rep.hypothesis_ok = rep.hypothesis_sup.value < rep.hypothesis_bound;
    finish_report(rep, f, mode, cfg);
    return rep;
}

} // namespace detail

/// |z f''/f'| < |1-a| n rho / (1 + |1-a| rho)  =>  |f' - 1| < rho |1-a|.
inline TheoremReport check_thm1(const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {})
{
    return detail::check_bounded_hypothesis(1, ExprKind::t1(), f, spec, cfg);
}

/// |z f'' - z f''/f'| < |1-a|^2 n rho^2 / (1 + |1-a| rho)  =>  |f' - 1| < rho |1-a|.
inline TheoremReport check_thm2(const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {})
{
    return detail::check_bounded_hypothesis(2, ExprKind::t2(), f, spec, cfg);
}

// Re(z (z f'')' / (f' - 1)) < n^2  =>  |f' - 1| < rho |1-a|.
//
// The expression tends to n^2 at the origin, so the strict hypothesis can
// only be met away from it; the checker samples the annulus
// [inner_cutoff, r_max] and records the limit in limits_at_zero.
inline TheoremReport check_thm3(const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {})
{
    cfg.validate();
    const Complex alpha = detail::validated_alpha(f, spec, AlphaMode::DerivativeMean);
    TheoremReport rep = detail::start_report(3, f, spec, alpha, cfg);
    const double n = f.order();
    rep.hypothesis_bound = n * n;
    rep.limits_at_zero = limit_at_zero(ExprKind::t3(), f).real();
    rep.hypothesis_sup = sup_on_disk(ExprKind::t3(), f, cfg, Reduction::RealPart);
    rep.hypothesis_ok = rep.hypothesis_sup.value < rep.hypothesis_bound;
    detail::finish_report(rep, f, AlphaMode::DerivativeMean, cfg);
    return rep;
}

/// z f''/(f' - 1) != k for every real k >= n  =>  |f' - 1| < rho |1-a|.
/// A sample within ray_tol of the ray [n, inf) fails the hypothesis.
inline TheoremReport check_thm4(const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {},
                                double ray_tol = 1e-6)
{
    cfg.validate();
    if (!(ray_tol > 0.0) || !std::isfinite(ray_tol))
        throw ConfigError("ray_tol must be positive");
    const Complex alpha = detail::validated_alpha(f, spec, AlphaMode::DerivativeMean);
    TheoremReport rep = detail::start_report(4, f, spec, alpha, cfg);
    rep.limits_at_zero = limit_at_zero(ExprKind::t4(), f).real();
    rep.ray_tol = ray_tol;
    rep.hypothesis_bound = -ray_tol;
    rep.hypothesis_sup = sup_on_disk(ExprKind::t4(), f, cfg, Reduction::NegRayDistance);
    rep.ray_min_distance = -rep.hypothesis_sup.value;
    rep.hypothesis_ok = rep.hypothesis_sup.value < rep.hypothesis_bound;
    detail::finish_report(rep, f, AlphaMode::DerivativeMean, cfg);
    return rep;
}

/// |z f'/f - 1| < |1-b| n rho / (1 + |1-b| rho)  =>  |f/z - 1| < rho |1-b|, with b the mean of f(z_j)/z_j.
inline TheoremReport check_thm5(const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {})
{
    return detail::check_bounded_hypothesis(5, ExprKind::t5(), f, spec, cfg);
}

inline TheoremReport check_theorem(int id, const ClassMember& f, const AlphaSpec& spec, const SamplingConfig& cfg = {},
                                   double ray_tol = 1e-6)
{
    switch (id) {
    case 1: return check_thm1(f, spec, cfg);
    case 2: return check_thm2(f, spec, cfg);
    case 3: return check_thm3(f, spec, cfg);
    case 4: return check_thm4(f, spec, cfg, ray_tol);
    case 5: return check_thm5(f, spec, cfg);
    default: throw ConfigError("theorem id must be 1..5");
    }
}

/// Smallest rho for which the worked example's hypothesis bound dominates
/// the expression bound of f(z) = z + a z^{n+1}.
inline double rho_min(ExampleId id, int n, double a_mod)
{
    if (n < 1)
        throw ConfigError("class order must be a positive integer");
    if (!(a_mod > 0.0) || !std::isfinite(a_mod))
        throw ConfigError("|a| must be a positive finite number");
    const double c = (n + 1.0) * a_mod;
    switch (id) {
    case ExampleId::Ex1:
        if (!(a_mod < 1.0 / (2.0 * (n + 1.0))))
            throw CoefficientTooLarge("example 1 needs |a| < 1/(2(n+1)) = " +
                                      std::to_string(1.0 / (2.0 * (n + 1.0))));
        return std::numbers::sqrt2 / (1.0 - 2.0 * c);
    case ExampleId::Ex2:
        if (!(a_mod < 1.0 / (n + 1.0)))
            throw CoefficientTooLarge("example 2 needs |a| < 1/(n+1) = " + std::to_string(1.0 / (n + 1.0)));
        return std::numbers::sqrt2 / (1.0 - c);
    case ExampleId::Ex5:
        if (!(a_mod < 0.5))
            throw CoefficientTooLarge("example 5 needs |a| < 1/2");
        return std::numbers::sqrt2 / (1.0 - 2.0 * a_mod);
    }
    throw ConfigError("unknown example id");
}

inline ExampleId example_from_int(int id)
{
    switch (id) {
    case 1: return ExampleId::Ex1;
    case 2: return ExampleId::Ex2;
    case 5: return ExampleId::Ex5;
    default: throw ConfigError("example id must be 1, 2 or 5");
    }
}

// Runs a worked example for f(z) = z + a z^{n+1}: boundary points, alpha
// (beta for example 5), rho = rho_min and the matching checker. Also checks
//   sup |expr| < expr bound <= hypothesis bound
//   sup |conclusion| < chain[0] <= chain[1] <= chain[2] = rho |1 - alpha|
// with 1e-12 relative slack on the non-strict links, which are equalities at rho_min.
inline TheoremReport example_end_to_end(ExampleId id, int n, Complex a, const SamplingConfig& cfg = {})
{
    const double a_mod = std::abs(a);
    const double rho = rho_min(id, n, a_mod);
    const auto f = ClassMember::monomial_perturbation(a, n);
    const auto [z1, z2] = monomial_boundary_points(a, n);
    const AlphaMode mode = id == ExampleId::Ex5 ? AlphaMode::FOverZMean : AlphaMode::DerivativeMean;
    AlphaSpec spec = alpha_mean(f, {z1, z2}, mode);
    spec.rho = rho;

    const double nn = n;
    const double c = (nn + 1.0) * a_mod;
    TheoremReport rep;
    double expr_bound = 0.0;
    switch (id) {
    case ExampleId::Ex1:
        rep = check_thm1(f, spec, cfg);
        expr_bound = nn * c / (1.0 - c);
        rep.example_chain = {c, c / (1.0 - 2.0 * c), rep.conclusion_bound};
        break;
    case ExampleId::Ex2:
        rep = check_thm2(f, spec, cfg);
        expr_bound = nn * c * c / (1.0 - c);
        rep.example_chain = {c, c / (1.0 - c), rep.conclusion_bound};
        break;
    case ExampleId::Ex5:
        rep = check_thm5(f, spec, cfg);
        expr_bound = nn * a_mod / (1.0 - a_mod);
        rep.example_chain = {a_mod, a_mod / (1.0 - 2.0 * a_mod), rep.conclusion_bound};
        break;
    }
    rep.example_id = static_cast<int>(id);
    rep.example_expr_bound = expr_bound;

    auto le = [](double x, double y) { return x <= y * (1.0 + 1e-12) + 1e-15; };
    const auto& ch = rep.example_chain;
    rep.chain_ok = rep.hypothesis_sup.value < expr_bound && le(expr_bound, rep.hypothesis_bound) &&
                   rep.conclusion_sup.value < ch[0] && le(ch[0], ch[1]) && le(ch[1], ch[2]);
    return rep;
}

} // namespace gft
