#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circle_search.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "series.hpp"

namespace gft {

/// Tolerance for | |z| - 1 | on boundary points and for |alpha - 1|.
inline constexpr double kBoundaryTolerance = 1e-12;
/// Allowed decrease of per-circle sups with growing radius.
inline constexpr double kMonotonicityTolerance = 1e-9;

struct SamplingConfig {
    std::size_t angular_samples = 4096;
    std::size_t refine_iters = 64;
    std::vector<double> radius_schedule{0.25, 0.5, 0.75, 0.9, 0.99, 1.0 - 1e-4};
    double epsilon = 1e-4;
    double inner_cutoff = 1e-3;

    /// Default schedule {0.25, 0.5, 0.75, 0.9, 0.99} truncated below 1 - eps, then 1 - eps.
    static SamplingConfig with_epsilon(double eps)
    {
        SamplingConfig cfg;
        cfg.epsilon = eps;
        cfg.radius_schedule.clear();
        for (double r : {0.25, 0.5, 0.75, 0.9, 0.99})
            if (r < 1.0 - eps)
                cfg.radius_schedule.push_back(r);
        cfg.radius_schedule.push_back(1.0 - eps);
        return cfg;
    }

    double r_max() const { return radius_schedule.back(); }

    void validate() const
    {
        if (angular_samples < 64)
            throw ConfigError("angular_samples must be at least 64");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw ConfigError("epsilon must lie in (0, 1)");
        if (radius_schedule.empty())
            throw ConfigError("radius schedule is empty");
        for (std::size_t i = 0; i < radius_schedule.size(); ++i) {
            const double r = radius_schedule[i];
            if (!(r > 0.0 && r < 1.0))
                throw ConfigError("radius " + std::to_string(r) + " is not inside (0, 1)");
            if (i > 0 && !(r > radius_schedule[i - 1]))
                throw ConfigError("radius schedule must be strictly increasing");
        }
        if (!(inner_cutoff > 0.0 && inner_cutoff < r_max()))
            throw ConfigError("inner_cutoff must lie in (0, r_max)");
    }

    friend bool operator==(const SamplingConfig&, const SamplingConfig&) = default;
};

enum class Reduction {
    Modulus,
    RealPart,
    /// Minus the distance to the real ray [n, +inf); its sup is minus the minimum distance.
    NegRayDistance,
};

struct SupEstimate {
    double value = 0.0;
    Complex argmax{0.0};
    double radius = 0.0;
    std::size_t samples_used = 0;

    friend bool operator==(const SupEstimate&, const SupEstimate&) = default;
};

enum class AlphaMode {
    DerivativeMean, // mean of f'(z_j)
    FOverZMean,     // mean of f(z_j)/z_j
};

struct AlphaSpec {
    std::vector<Complex> points;
    Complex alpha{0.0};
    double rho = 0.0; // unset until chosen; checkers require rho > 1
    AlphaMode mode = AlphaMode::DerivativeMean;
};

/// Distance from w to {x + 0i : x >= origin}.
inline double distance_to_ray(Complex w, double origin) noexcept
{
    if (w.real() >= origin)
        return std::abs(w.imag());
    return std::abs(w - Complex{origin});
}

inline double reduce_value(Reduction reduce, Complex w, double ray_origin) noexcept
{
    switch (reduce) {
    case Reduction::Modulus: return std::abs(w);
    case Reduction::RealPart: return w.real();
    case Reduction::NegRayDistance: return -distance_to_ray(w, ray_origin);
    }
    return 0.0;
}

/// Point on the unit circle `turns` revolutions from 1. Quarter turns are exact.
inline Complex unit_point_from_turns(double turns)
{
    double t = turns - std::floor(turns);
    if (t == 0.0)
        return {1.0, 0.0};
    if (t == 0.25)
        return {0.0, 1.0};
    if (t == 0.5)
        return {-1.0, 0.0};
    if (t == 0.75)
        return {0.0, -1.0};
    return std::polar(1.0, kTwoPi * t);
}

inline SupEstimate sup_on_circle(ExprKind kind, const ClassMember& f, double r, const SamplingConfig& cfg,
                                 Reduction reduce = Reduction::Modulus)
{
    cfg.validate();
    if (!(r > 0.0 && r < 1.0))
        throw ConfigError("circle radius must lie in (0, 1)");
    const ExprEvaluator expr(kind, f);
    const double ray_origin = f.order();
    auto g = [&](double theta) { return reduce_value(reduce, expr(std::polar(r, theta)), ray_origin); };
    const CircleMax m = maximize_on_circle(g, cfg.angular_samples, cfg.refine_iters);
    return SupEstimate{m.value, std::polar(r, m.angle), r, m.evaluations};
}

/// Radii actually visited for an expression kind: T3/T4 skip the disk of
/// radius inner_cutoff and start exactly on it.
inline std::vector<double> disk_radii(ExprKind kind, const SamplingConfig& cfg)
{
    if (!has_removable_center(kind.tag))
        return cfg.radius_schedule;
    std::vector<double> radii{cfg.inner_cutoff};
    for (double r : cfg.radius_schedule)
        if (r > cfg.inner_cutoff)
            radii.push_back(r);
    return radii;
}

/// Per-circle suprema along the schedule, without the monotonicity check.
inline std::vector<SupEstimate> circle_sups(ExprKind kind, const ClassMember& f, const SamplingConfig& cfg,
                                            Reduction reduce = Reduction::Modulus)
{
    cfg.validate();
    if (f.is_identity())
        throw IdentityFunction("f(z) = z makes every hypothesis vacuous");
    std::vector<SupEstimate> out;
    for (double r : disk_radii(kind, cfg))
        out.push_back(sup_on_circle(kind, f, r, cfg, reduce));
    return out;
}

// Supremum over the closed disk of radius r_max (an annulus for T3/T4).
// For Modulus and RealPart the per-circle values must be nondecreasing in
// r; a drop signals a pole inside the disk or a sampling failure.
inline SupEstimate sup_on_disk(ExprKind kind, const ClassMember& f, const SamplingConfig& cfg,
                               Reduction reduce = Reduction::Modulus)
{
    const auto circles = circle_sups(kind, f, cfg, reduce);
    SupEstimate best = circles.front();
    std::size_t total = 0;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const auto& c = circles[i];
        total += c.samples_used;
        if (i > 0 && reduce != Reduction::NegRayDistance &&
            c.value < circles[i - 1].value - kMonotonicityTolerance)
            throw MonotonicityViolation("sup of " + std::string(tag_name(kind.tag)) + " drops from " +
                                        std::to_string(circles[i - 1].value) + " at r = " +
                                        std::to_string(circles[i - 1].radius) + " to " +
                                        std::to_string(c.value) + " at r = " + std::to_string(c.radius));
        if (c.value > best.value)
            best = c;
    }
    best.samples_used = total;
    return best;
}

/// F(z) = f(z)/z at a boundary point.
inline Complex f_over_z(const ClassMember& f, Complex z)
{
    check_disk(z);
    const auto c = f.poly().coeffs();
    return horner(c.subspan(1), z);
}

inline AlphaSpec alpha_mean(const ClassMember& f, const std::vector<Complex>& points, AlphaMode mode)
{
    if (points.size() < 2)
        throw ConfigError("at least two boundary points are required");
    const PowerPoly d1 = differentiate(f.poly());
    Complex sum{0.0};
    for (const auto& z : points) {
        if (!is_finite(z) || std::abs(std::abs(z) - 1.0) > kBoundaryTolerance)
            throw BoundaryViolation("point with |z| = " + std::to_string(std::abs(z)) +
                                    " is not on the unit circle");
        sum += mode == AlphaMode::DerivativeMean ? horner(d1.coeffs(), z) : f_over_z(f, z);
    }
    AlphaSpec spec;
    spec.points = points;
    spec.alpha = sum / static_cast<double>(points.size());
    spec.mode = mode;
    if (std::abs(spec.alpha - Complex{1.0}) <= kBoundaryTolerance)
        throw DegenerateAlpha("boundary average equals 1");
    return spec;
}

// The two points where f'(z) = 1 + (n+1)|a| and f'(z) = 1 + (n+1)|a| i
// for f(z) = z + a z^{n+1}; the same points give f(z)/z = 1 + |a| and 1 + |a| i.
inline std::pair<Complex, Complex> monomial_boundary_points(Complex a, int n)
{
    if (a == Complex{0.0})
        throw ConfigError("coefficient must be nonzero");
    if (n < 1)
        throw ConfigError("class order must be a positive integer");
    const double arg = std::arg(a);
    const double nn = n;
    const Complex z1 = std::polar(1.0, -arg / nn);
    const Complex z2 = std::polar(1.0, (std::numbers::pi - 2.0 * arg) / (2.0 * nn));

    const auto f = ClassMember::monomial_perturbation(a, n);
    const PowerPoly d1 = differentiate(f.poly());
    const double lift = (nn + 1.0) * std::abs(a);
    if (std::abs(horner(d1.coeffs(), z1) - Complex{1.0 + lift}) > 1e-12 ||
        std::abs(horner(d1.coeffs(), z2) - Complex{1.0, lift}) > 1e-12)
        throw std::logic_error("monomial boundary points fail their defining identities");
    return {z1, z2};
}

/// sup |f' - alpha| (DerivativeMean) or sup |f/z - beta| (FOverZMean) over the disk.
inline double m_alpha(const ClassMember& f, Complex alpha, const SamplingConfig& cfg,
                      AlphaMode mode = AlphaMode::DerivativeMean)
{
    if (!is_finite(alpha))
        throw ConfigError("alpha is not finite");
    const ExprKind kind = mode == AlphaMode::DerivativeMean ? ExprKind::fprime_minus_alpha(alpha)
                                                            : ExprKind::f_over_z_minus_beta(alpha);
    const double m = sup_on_disk(kind, f, cfg).value;
    // Value at the origin is |1 - alpha|, so the disk sup cannot be smaller.
    if (m < std::abs(Complex{1.0} - alpha) - 1e-9)
        throw std::logic_error("M_alpha estimate below |1 - alpha|");
    return m;
}

} // namespace gft
