#pragma once

/**
 * Scalar: the coefficient ring every hypercomplex operation is generic over.
 *
 * An exact Scalar is a reduced rational function num/den over Q with named
 * symbols; kind() reports the simplest class it belongs to (Rational, Poly or
 * Ratio). A Float Scalar is a plain binary64 value. Exact and Float values
 * never meet inside one arithmetic operation: doing so throws
 * ExactnessMismatch, and promotion goes through to_double()/to_float().
 */

#include "hcns/error.hpp"
#include "hcns/poly.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace hcns {

/// Relative tolerance for Float equality: |x-y| <= tol * max(1, |x|, |y|).
inline constexpr double kFloatTolerance = 1e-12;

class Scalar {
public:
    enum class Kind { Rational, Poly, Ratio, Float };

    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
    explicit Scalar(const Rational& value);
    explicit Scalar(Poly value);

    static Scalar symbol(std::string_view name);
    static Scalar ratio(Poly num, Poly den);
    static Scalar from_double(double value);

    Kind kind() const;
    bool is_float() const noexcept { return std::holds_alternative<double>(value_); }
    bool is_exact() const noexcept { return !is_float(); }
    bool is_zero() const;
    bool is_one() const;
    /// Exact value without symbols, or any Float.
    bool is_numeric() const;

    /// Numerator and denominator of an exact value (denominator is 1 for
    /// polynomials). Throws ExactnessMismatch on Float.
    const Poly& numerator() const;
    const Poly& denominator() const;
    /// Exact rational value; throws NonNumeric when symbols remain.
    Rational to_rational() const;
    /// Explicit promotion to binary64; throws NonNumeric when symbols remain.
    double to_double() const;
    Scalar to_float() const { return from_double(to_double()); }

    std::set<std::string> symbols() const;

    /// Simultaneous substitution of symbols. Binding a Float into an exact
    /// expression throws ExactnessMismatch.
    Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

    /// Rendering in the scalar grammar; parse_scalar(to_string()) == *this.
    std::string to_string() const;
    /// Like to_string() but prints Float values with `digits` significant digits.
    std::string to_string(int digits) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
    Scalar& operator/=(const Scalar& other) { return *this = *this / other; }
    Scalar pow(unsigned exponent) const;

    /// Structural equality for exact values (cross-multiplied), tolerance
    /// comparison for Float. Mixed exactness compares unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Structural identity of the stored representation (no tolerance).
    bool identical(const Scalar& other) const;

private:
    struct Exact {
        Exact() : den(1L) {}
        Exact(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}
        Poly num;
        Poly den;
    };

    static Scalar normalized(Poly num, Poly den);
    const Exact& exact() const;

    std::variant<Exact, double> value_;
};

bool is_zero(const Scalar& x);
bool equals(const Scalar& x, const Scalar& y);
Scalar substitute(const Scalar& x, const std::map<std::string, Scalar>& bindings);

/// True when `name` matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_symbol(std::string_view name);

/// Parses the scalar grammar: integers, decimals (Float), symbols,
/// `+ - * / ^` and parentheses. Throws ParseError / ExactnessMismatch.
Scalar parse_scalar(std::string_view text);

}  // namespace hcns
