#pragma once

/**
 * The two representations of a hypercomplex number.
 *
 * List form (HNumber) is the vector of coefficients [a_1, ..., a_n] and is
 * what every operation works on. Natural form (NaturalForm) is the textual
 * a_1*e1 + ... + a_n*en view with an explicit basis identifier. The functions
 * here convert between the two without losing zero components.
 */

#include "hcns/expr.hpp"
#include "hcns/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcns {

class HNumber {
public:
    HNumber() = default;
    explicit HNumber(std::vector<Scalar> coeffs);

    static HNumber zeros(std::size_t dim, bool floating = false);
    /// Basis vector e_index (1-based).
    static HNumber basis(std::size_t dim, std::size_t index);
    static HNumber from_doubles(const std::vector<double>& values);

    std::size_t dim() const noexcept { return coeffs_.size(); }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// 0-based component access.
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    Scalar& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_float() const;
    bool is_zero() const;
    std::vector<double> to_doubles() const;
    /// Explicit promotion of every component to Float.
    HNumber to_float() const;

    /// `[c1, c2, ...]` in the scalar grammar.
    std::string to_string() const;
    std::string to_string(int digits) const;

    friend bool operator==(const HNumber& a, const HNumber& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

struct NaturalTerm {
    Scalar coeff;
    std::size_t index;  // 1-based

    friend bool operator==(const NaturalTerm&, const NaturalTerm&) = default;
};

class NaturalForm {
public:
    NaturalForm() = default;
    /// Collects duplicate indices, drops zero coefficients, sorts by index.
    NaturalForm(std::string basis, std::vector<NaturalTerm> terms);

    /// Basis identifier; empty for a zero form written without any basis.
    const std::string& basis() const noexcept { return basis_; }
    const std::vector<NaturalTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t max_index() const noexcept { return terms_.empty() ? 0 : terms_.back().index; }

    /// `a_1*e1 + (b + c)*e3`; `compact` drops the spaces around top-level signs.
    std::string to_string(bool compact = false, int digits = -1) const;

    /// Zero forms are equal whatever their basis.
    friend bool operator==(const NaturalForm& a, const NaturalForm& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    std::string basis_;
    std::vector<NaturalTerm> terms_;
};

/// Symbolic number name_1*basis1 + ... + name_n*basisn in both forms.
std::pair<HNumber, NaturalForm> hns_number(std::size_t n, std::string_view coeff_name,
                                           std::string_view basis_name);

/// Splits `e12` into ("e", 12); false when the identifier is not basis-like.
bool split_basis_identifier(std::string_view ident, std::string& basis, std::size_t& index);

/// Parses a natural-form number. Every term must carry exactly one basis
/// element; the literal `0` denotes the zero number.
NaturalForm parse_natural(std::string_view text);

/// Evaluates an already-parsed expression as a natural form.
NaturalForm natural_from_expr(const Expr& expr);

/// Basis identifier of a natural-form number.
const std::string& name_bas(const NaturalForm& a);

/// Natural form to list form of dimension `dim`; absent indices become zero.
HNumber convert_a(const NaturalForm& a, std::size_t dim);

/// List form to natural form with the given basis identifier.
NaturalForm viz_in_a(const HNumber& a, std::string_view basis_name);

NaturalForm renam_a(const NaturalForm& a, std::string_view new_basis);

/// Template list of `dim` zeros.
HNumber list_hns(std::size_t dim);

/// Appends one element to a list.
std::vector<Scalar> refill(std::vector<Scalar> list, Scalar element);

}  // namespace hcns
