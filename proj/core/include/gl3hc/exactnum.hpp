#pragma once

// Exact rationals and truncated Laurent series in one infinitesimal.
//
// Every value computed by the library lives in one of these two rings. The
// formula code is written once as templates over the scalar type, so the same
// path evaluates at a point (Rational) and along a perturbation (LaurentSeries).

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gl3hc/errors.hpp"

namespace gl3hc {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p" or "p/q" with an optional sign; q must be nonzero.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] std::string numerator_str() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_str() const { return value_.get_den().get_str(); }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(int exponent) const;
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws PoleError when rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

/// Truncated Laurent series sum_k c_k eps^k.
///
/// A series knows its coefficients exactly up to (excluding) its precision
/// order. Series built from plain rationals and from perturbation variables
/// are exact Laurent polynomials; truncation appears only when a non-monomial
/// is inverted, and then `window` coefficients are kept. Leading zero
/// coefficients are always stripped, so valuation() is the lowest order with
/// a nonzero coefficient (or the precision, for a series that is zero to all
/// retained orders).
class LaurentSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();
    static constexpr int kDefaultWindow = 4;

    LaurentSeries() = default;
    LaurentSeries(const Rational& constant); // NOLINT(google-explicit-constructor)
    LaurentSeries(long constant) : LaurentSeries(Rational(constant)) {} // NOLINT

    /// Window-limited series: coefficients for orders valuation..valuation+size-1,
    /// nothing known beyond.
    LaurentSeries(int valuation, std::vector<Rational> coefficients);

    /// c * eps^0 known to `window` orders.
    static LaurentSeries from_scalar(const Rational& c, int window = kDefaultWindow);
    /// Exact c * eps^order; inversions involving it keep `window` terms.
    static LaurentSeries monomial(const Rational& c, int order, int window = kDefaultWindow);
    /// Exact base + slope * eps; inversions involving it keep `window` terms.
    static LaurentSeries variable(const Rational& base, const Rational& slope,
                                  int window = kDefaultWindow);

    [[nodiscard]] int valuation() const { return valuation_; }
    [[nodiscard]] int precision() const { return precision_; }
    [[nodiscard]] bool is_exact() const { return precision_ == kExact; }
    [[nodiscard]] int window() const { return window_; }
    /// True when every retained coefficient is zero.
    [[nodiscard]] bool is_zero() const { return coefficients_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Coefficient of eps^k; throws TruncationError outside [valuation, precision).
    [[nodiscard]] Rational coeff(int k) const;
    /// Like coeff, but orders below the valuation read as zero.
    [[nodiscard]] Rational coeff_or_zero(int k) const;

    /// Throws TruncationError when the series vanishes to its precision.
    [[nodiscard]] LaurentSeries inverse() const;

    LaurentSeries& operator+=(const LaurentSeries& rhs);
    LaurentSeries& operator-=(const LaurentSeries& rhs);
    LaurentSeries& operator*=(const LaurentSeries& rhs);
    LaurentSeries& operator/=(const LaurentSeries& rhs);

    friend LaurentSeries operator+(LaurentSeries lhs, const LaurentSeries& rhs) { return lhs += rhs; }
    friend LaurentSeries operator-(LaurentSeries lhs, const LaurentSeries& rhs) { return lhs -= rhs; }
    friend LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs);
    friend LaurentSeries operator/(const LaurentSeries& lhs, const LaurentSeries& rhs)
    {
        return lhs * rhs.inverse();
    }
    friend LaurentSeries operator-(const LaurentSeries& x);

    [[nodiscard]] std::string str() const;

private:
    void normalize();

    int valuation_ = kExact;
    std::vector<Rational> coefficients_;
    int precision_ = kExact;
    int window_ = 0;
};

/// Lowest-order bookkeeping used by pivot selection. Nullopt means zero.
inline std::optional<int> pivot_order(const Rational& x)
{
    return x.is_zero() ? std::nullopt : std::optional<int>(0);
}

inline std::optional<int> pivot_order(const LaurentSeries& x)
{
    return x.is_zero() ? std::nullopt : std::optional<int>(x.valuation());
}

/// Integer power of a scalar ring element; negative exponents invert.
template <class S>
S power(const S& base, int exponent)
{
    S result(1);
    S factor = exponent < 0 ? S(1) / base : base;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        result *= factor;
    }
    return result;
}

} // namespace gl3hc
