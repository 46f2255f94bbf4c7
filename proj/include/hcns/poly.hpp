#pragma once

/**
 * Sparse multivariate polynomials with exact rational coefficients.
 *
 * Terms are kept sorted in descending graded-lexicographic order, symbols
 * inside a monomial are sorted by name, and zero coefficients are never
 * stored. Two equal polynomials therefore have identical term vectors.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hcns {

using Integer = mpz_class;
using Rational = mpq_class;

/// Product of symbols raised to positive powers, e.g. `a_1*p^2`.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    explicit Monomial(std::string symbol, unsigned exponent = 1);

    /// Builds a monomial from unsorted factors; repeated symbols are merged.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned degree_in(const std::string& symbol) const;

    Monomial operator*(const Monomial& other) const;
    /// Quotient when `divisor` divides this monomial.
    std::optional<Monomial> divide(const Monomial& divisor) const;
    /// Drops every factor of `symbol`.
    Monomial without(const std::string& symbol) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Graded lexicographic comparison: negative when a < b, positive when a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Poly() = default;
    Poly(long value);  // NOLINT(google-explicit-constructor)
    explicit Poly(const Rational& value);
    Poly(Monomial mono, const Rational& coeff);

    static Poly symbol(const std::string& name);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const;
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;
    const Rational& leading_coeff() const;
    const Monomial& leading_monomial() const;

    std::set<std::string> symbols() const;
    unsigned total_degree() const;
    unsigned degree_in(const std::string& symbol) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly scaled(const Rational& factor) const;
    Poly pow(unsigned exponent) const;

    /// Exact quotient, or nullopt when `divisor` does not divide this.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    /// Scales so the leading coefficient is 1 (zero stays zero).
    Poly monic() const;

    /// Coefficients as a univariate polynomial in `symbol`: index d holds the
    /// coefficient of symbol^d, free of `symbol`.
    std::vector<Poly> coefficients_in(const std::string& symbol) const;
    static Poly from_coefficients_in(const std::string& symbol, const std::vector<Poly>& coeffs);

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
    static Poly from_unsorted(std::vector<Term> terms);

    std::vector<Term> terms_;
};

/// Greatest common divisor over Q, normalized to be monic. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Shortest rendering of a rational number: `3`, `-1/2`.
std::string rational_to_string(const Rational& value);

}  // namespace hcns
