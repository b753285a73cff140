#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gft {

using Complex = std::complex<double>;

/// Slack allowed on |z| <= 1 before evaluation is rejected.
inline constexpr double kDiskSlack = 1e-12;

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Truncated power series sum_j coeffs[j] z^j, stored densely.
class PowerPoly {
public:
    PowerPoly() : coeffs_{Complex{0.0}} {}

    explicit PowerPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw ConfigError("power series needs at least one coefficient");
        for (const auto& c : coeffs_)
            if (!is_finite(c))
                throw ConfigError("power series coefficient is not finite");
    }

    PowerPoly(std::initializer_list<Complex> coeffs) : PowerPoly(std::vector<Complex>(coeffs)) {}

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Complex operator[](std::size_t j) const noexcept
    {
        return j < coeffs_.size() ? coeffs_[j] : Complex{0.0};
    }

    /// Highest index with a nonzero coefficient; 0 for the zero series.
    std::size_t degree() const noexcept
    {
        for (std::size_t j = coeffs_.size(); j-- > 0;)
            if (coeffs_[j] != Complex{0.0})
                return j;
        return 0;
    }

    bool is_zero() const noexcept
    {
        for (const auto& c : coeffs_)
            if (c != Complex{0.0})
                return false;
        return true;
    }

    /// Index of the first nonzero coefficient, nullopt for the zero series.
    std::optional<std::size_t> vanishing_order() const noexcept
    {
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (coeffs_[j] != Complex{0.0})
                return j;
        return std::nullopt;
    }

    double max_abs_coeff() const noexcept
    {
        double m = 0.0;
        for (const auto& c : coeffs_)
            m = std::max(m, std::abs(c));
        return m;
    }

    friend bool operator==(const PowerPoly&, const PowerPoly&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation with no domain check. Internal callers that have
/// already validated |z| use this directly.
inline Complex horner(std::span<const Complex> coeffs, Complex z) noexcept
{
    Complex acc{0.0};
    for (std::size_t j = coeffs.size(); j-- > 0;)
        acc = acc * z + coeffs[j];
    return acc;
}

inline void check_disk(Complex z)
{
    if (!is_finite(z) || std::abs(z) > 1.0 + kDiskSlack)
        throw DomainError("|z| = " + std::to_string(std::abs(z)) + " lies outside the closed unit disk");
}

inline Complex eval(const PowerPoly& p, Complex z)
{
    check_disk(z);
    return horner(p.coeffs(), z);
}

inline PowerPoly differentiate(const PowerPoly& p)
{
    const auto c = p.coeffs();
    if (c.size() <= 1)
        return PowerPoly{Complex{0.0}};
    std::vector<Complex> out(c.size() - 1);
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        out[j] = static_cast<double>(j + 1) * c[j + 1];
    return PowerPoly(std::move(out));
}

/// z * p(z).
inline PowerPoly times_z(const PowerPoly& p)
{
    std::vector<Complex> out(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j)
        out[j + 1] = p[j];
    return PowerPoly(std::move(out));
}

/// p(z) / z^k. The k lowest coefficients must be exactly zero.
inline PowerPoly divide_by_z_power(const PowerPoly& p, std::size_t k)
{
    for (std::size_t j = 0; j < k && j < p.size(); ++j)
        if (p[j] != Complex{0.0})
            throw ClassViolation("series does not vanish to order " + std::to_string(k));
    if (k >= p.size())
        return PowerPoly{Complex{0.0}};
    return PowerPoly(std::vector<Complex>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                          p.coeffs().end()));
}

inline PowerPoly operator-(const PowerPoly& a, const PowerPoly& b)
{
    std::vector<Complex> out(std::max(a.size(), b.size()));
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = a[j] - b[j];
    return PowerPoly(std::move(out));
}

/// p - c (constant term shift).
inline PowerPoly minus_constant(const PowerPoly& p, Complex c)
{
    std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
    out[0] -= c;
    return PowerPoly(std::move(out));
}

/// Largest n with p in A_n. nullopt means p is exactly the identity z,
/// which lies in every class.
inline std::optional<int> class_order(const PowerPoly& p)
{
    if (p[0] != Complex{0.0})
        throw ClassViolation("coefficient of z^0 must be exactly 0");
    if (p[1] != Complex{1.0})
        throw ClassViolation("coefficient of z^1 must be exactly 1");
    for (std::size_t j = 2; j < p.size(); ++j)
        if (p[j] != Complex{0.0})
            return static_cast<int>(j) - 1;
    return std::nullopt;
}

/// A power series certified to lie in the class A_n.
class ClassMember {
public:
    ClassMember(PowerPoly poly, int n) : poly_(std::move(poly)), n_(n)
    {
        if (n < 1)
            throw ClassViolation("class order must be a positive integer");
        const auto order = class_order(poly_);
        if (order && *order < n)
            throw ClassViolation("coefficient of z^" + std::to_string(*order + 1) +
                                 " is nonzero, so the series is not in A_" + std::to_string(n));
    }

    /// Member with the largest admissible order (1 for the identity).
    static ClassMember from_poly(PowerPoly poly)
    {
        const auto order = class_order(poly);
        return ClassMember(std::move(poly), order.value_or(1));
    }

    /// z + a z^{n+1}.
    static ClassMember monomial_perturbation(Complex a, int n)
    {
        if (n < 1)
            throw ClassViolation("class order must be a positive integer");
        std::vector<Complex> c(static_cast<std::size_t>(n) + 2);
        c[1] = 1.0;
        c[static_cast<std::size_t>(n) + 1] = a;
        return ClassMember(PowerPoly(std::move(c)), n);
    }

    const PowerPoly& poly() const noexcept { return poly_; }
    int order() const noexcept { return n_; }
    bool is_identity() const noexcept { return !class_order(poly_).has_value(); }

private:
    PowerPoly poly_;
    int n_;
};

} // namespace gft
