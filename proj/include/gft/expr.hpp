#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "series.hpp"

namespace gft {

/// The quantities appearing in the five sufficient conditions and their conclusions.
///   T1  z f''/f'
///   T2  z f'' - z f''/f'
///   T3  z (z f'')' / (f' - 1)
///   T4  z f'' / (f' - 1)
///   T5  z f'/f - 1
enum class ExprTag {
    T1,
    T2,
    T3,
    T4,
    T5,
    FprimeMinus1,
    FOverZMinus1,
    FprimeMinusAlpha,
    FOverZMinusBeta,
};

struct ExprKind {
    ExprTag tag = ExprTag::T1;
    Complex shift{0.0}; // alpha or beta for the *MinusAlpha / *MinusBeta tags

    static constexpr ExprKind t1() { return {ExprTag::T1, {}}; }
    static constexpr ExprKind t2() { return {ExprTag::T2, {}}; }
    static constexpr ExprKind t3() { return {ExprTag::T3, {}}; }
    static constexpr ExprKind t4() { return {ExprTag::T4, {}}; }
    static constexpr ExprKind t5() { return {ExprTag::T5, {}}; }
    static constexpr ExprKind fprime_minus_1() { return {ExprTag::FprimeMinus1, {}}; }
    static constexpr ExprKind f_over_z_minus_1() { return {ExprTag::FOverZMinus1, {}}; }
    static constexpr ExprKind fprime_minus_alpha(Complex a) { return {ExprTag::FprimeMinusAlpha, a}; }
    static constexpr ExprKind f_over_z_minus_beta(Complex b) { return {ExprTag::FOverZMinusBeta, b}; }

    friend bool operator==(const ExprKind&, const ExprKind&) = default;
};

inline constexpr std::string_view tag_name(ExprTag tag) noexcept
{
    switch (tag) {
    case ExprTag::T1: return "T1";
    case ExprTag::T2: return "T2";
    case ExprTag::T3: return "T3";
    case ExprTag::T4: return "T4";
    case ExprTag::T5: return "T5";
    case ExprTag::FprimeMinus1: return "FprimeMinus1";
    case ExprTag::FOverZMinus1: return "FOverZMinus1";
    case ExprTag::FprimeMinusAlpha: return "FprimeMinusAlpha";
    case ExprTag::FOverZMinusBeta: return "FOverZMinusBeta";
    }
    return "?";
}

/// True for the kinds whose denominator carries the built-in order-n zero of f' - 1.
inline constexpr bool has_removable_center(ExprTag tag) noexcept
{
    return tag == ExprTag::T3 || tag == ExprTag::T4;
}

/// Relative size below which a denominator counts as vanished.
inline constexpr double kPoleTolerance = 1e-12;

/// Exact order of the zero of f' - 1 at the origin (the largest n with f in A_n).
/// Can exceed the order a ClassMember was declared with, since A_m is a subset of A_n for m > n.
inline int true_order(const ClassMember& f)
{
    return class_order(f.poly()).value_or(f.order());
}

/// z -> 0 limit of the expression, read off leading series coefficients.
inline Complex limit_at_zero(ExprKind kind, const ClassMember& f)
{
    const double n = true_order(f);
    switch (kind.tag) {
    case ExprTag::T3:
    case ExprTag::T4:
        if (f.is_identity())
            throw IdentityFunction(std::string(tag_name(kind.tag)) +
                                   " is 0/0 everywhere for f(z) = z");
        return kind.tag == ExprTag::T3 ? Complex{n * n} : Complex{n};
    case ExprTag::T1:
    case ExprTag::T2:
    case ExprTag::T5:
    case ExprTag::FprimeMinus1:
    case ExprTag::FOverZMinus1:
        return Complex{0.0};
    case ExprTag::FprimeMinusAlpha:
    case ExprTag::FOverZMinusBeta:
        return Complex{1.0} - kind.shift;
    }
    return Complex{0.0};
}

// Precomputes the derivative and reduced-quotient series of f for one
// expression kind so repeated evaluation on a sampling grid is cheap.
//
// T3 and T4 are evaluated as P(z)/Q(z) with the common factor z^n divided
// out of numerator and denominator, so the removable singularity at the
// origin never produces 0/0 and Q vanishes exactly where f'(z) = 1, z != 0.
class ExprEvaluator {
public:
    ExprEvaluator(ExprKind kind, const ClassMember& f)
        : kind_(kind), n_(true_order(f)), identity_(f.is_identity())
    {
        const PowerPoly& p = f.poly();
        const PowerPoly d1 = differentiate(p);
        switch (kind.tag) {
        case ExprTag::T1:
        case ExprTag::T2:
            num_ = times_z(differentiate(d1));
            den_ = d1;
            break;
        case ExprTag::T3:
        case ExprTag::T4: {
            if (identity_)
                break;
            const auto k = static_cast<std::size_t>(n_);
            const PowerPoly zf2 = times_z(differentiate(d1));
            const PowerPoly top = kind.tag == ExprTag::T4 ? zf2 : times_z(differentiate(zf2));
            num_ = divide_by_z_power(top, k);
            den_ = divide_by_z_power(minus_constant(d1, 1.0), k);
            break;
        }
        case ExprTag::T5:
            // z f' - f vanishes to order n+1, f/z is 1 at the origin.
            num_ = divide_by_z_power(times_z(d1) - p, 1);
            den_ = divide_by_z_power(p, 1);
            break;
        case ExprTag::FprimeMinus1:
            num_ = minus_constant(d1, 1.0);
            break;
        case ExprTag::FprimeMinusAlpha:
            num_ = minus_constant(d1, kind.shift);
            break;
        case ExprTag::FOverZMinus1:
            num_ = minus_constant(divide_by_z_power(p, 1), 1.0);
            break;
        case ExprTag::FOverZMinusBeta:
            num_ = minus_constant(divide_by_z_power(p, 1), kind.shift);
            break;
        }
    }

    ExprKind kind() const noexcept { return kind_; }
    /// Vanishing order used for the T3/T4 reduction.
    int order() const noexcept { return n_; }

    Complex operator()(Complex z) const
    {
        check_disk(z);
        switch (kind_.tag) {
        case ExprTag::T1: {
            const Complex num = horner(num_.coeffs(), z);
            return num / checked_den(num, z, "f'(z) vanishes");
        }
        case ExprTag::T2: {
            const Complex num = horner(num_.coeffs(), z);
            return num - num / checked_den(num, z, "f'(z) vanishes");
        }
        case ExprTag::T3:
        case ExprTag::T4: {
            if (identity_)
                throw IdentityFunction(std::string(tag_name(kind_.tag)) +
                                       " is 0/0 everywhere for f(z) = z");
            if (z == Complex{0.0})
                return kind_.tag == ExprTag::T3 ? Complex{double(n_) * n_} : Complex{double(n_)};
            const Complex num = horner(num_.coeffs(), z);
            return num / checked_den(num, z, "f'(z) = 1 away from the origin");
        }
        case ExprTag::T5: {
            const Complex num = horner(num_.coeffs(), z);
            return num / checked_den(num, z, "f(z) vanishes in the punctured disk");
        }
        case ExprTag::FprimeMinus1:
        case ExprTag::FprimeMinusAlpha:
        case ExprTag::FOverZMinus1:
        case ExprTag::FOverZMinusBeta:
            return horner(num_.coeffs(), z);
        }
        return Complex{0.0};
    }

private:
    Complex checked_den(Complex num, Complex z, const char* what) const
    {
        const Complex den = horner(den_.coeffs(), z);
        if (std::abs(den) < kPoleTolerance * (1.0 + std::abs(num)))
            throw PoleError(std::string(tag_name(kind_.tag)) + ": " + what, z);
        return den;
    }

    ExprKind kind_;
    int n_;
    bool identity_;
    PowerPoly num_;
    PowerPoly den_;
};

inline Complex eval_expr(ExprKind kind, const ClassMember& f, Complex z)
{
    return ExprEvaluator(kind, f)(z);
}

} // namespace gft
