#pragma once

/**
 * Algebraic operations on hypercomplex numbers inside a given system.
 *
 * Everything works on the list form. Multiplication follows
 *     (A*B)_k = sum_i sum_j a_i b_j gamma[i][j][k]
 * and the linear-algebra based operations (unit, division) linearize that
 * product in one argument.
 *
 * Numbers are either fully exact or fully Float. Float numbers multiply in
 * an exact algebra by promoting the (numeric) structure constants; symbolic
 * structure constants cannot be promoted and raise NonNumeric.
 */

#include "hcns/algebra.hpp"
#include "hcns/hcnumber.hpp"
#include "hcns/linalg.hpp"

#include <string_view>
#include <vector>

namespace hcns {

enum class Side { Left, Right };

/// Matrix of X -> A*X (Left) or X -> X*A (Right): (A*X)_k = sum_j m[k][j] X_j.
struct MulMatrix {
    Side side;
    Matrix m;
};

MulMatrix mul_matrix(const HNumber& a, const AlgebraDef& alg, Side side);

HNumber in_add(const HNumber& a, const HNumber& b);
HNumber in_sub(const HNumber& a, const HNumber& b);
HNumber negate(const HNumber& a);
HNumber scalar_mul(const Scalar& lambda, const HNumber& a);

NaturalForm add_natural(const NaturalForm& a, const NaturalForm& b, std::size_t dim);
NaturalForm subtr(const NaturalForm& a, const NaturalForm& b, std::size_t dim);

HNumber in_multi(const HNumber& a, const HNumber& b, const AlgebraDef& alg);
NaturalForm nat_multi(const NaturalForm& a, const NaturalForm& b, const AlgebraDef& alg,
                      std::string_view out_basis);

/// Two-sided identity element, found by exact elimination.
HNumber unit(const AlgebraDef& alg);

/// Negates every non-identity component; requires e1 to be the identity.
HNumber conjug(const HNumber& a, const AlgebraDef& alg);

class NonScalarConjProductError : public Error {
public:
    explicit NonScalarConjProductError(HNumber product);
    const HNumber& product() const noexcept { return product_; }

private:
    HNumber product_;
};

/// Identity component of A * conj(A); throws NonScalarConjProductError when
/// the product has other nonzero components.
Scalar norma(const HNumber& a, const AlgebraDef& alg);

/// Left: X with A*X = B. Right: X with X*A = B.
HNumber divis(const HNumber& b, const HNumber& a, const AlgebraDef& alg, Side side);

// Numeric root finding ------------------------------------------------------

struct NewtonOptions {
    double residual_tol = 1e-10;
    double step_tol = 1e-12;
    int max_iterations = 200;
    /// Random starts in addition to the structured ones; 0 means 2n for rad2
    /// and 4n for sqrt_eq.
    int random_starts = 0;
    double dedup_tol = 1e-8;
    unsigned long seed = 0x5eed;
};

/// Square roots of A. Float input runs multi-start damped Newton; exact input
/// (dim <= 2, commutative) returns the exact rational roots that verify.
std::vector<HNumber> rad2(const HNumber& a, const AlgebraDef& alg, const NewtonOptions& opts = {});

/// Roots of A*X*X + B*X + C = 0 (Float coefficients).
std::vector<HNumber> sqrt_eq(const HNumber& a, const HNumber& b, const HNumber& c,
                             const AlgebraDef& alg, const NewtonOptions& opts = {});

/// max_k |(X*X - A)_k|
double rad2_residual(const HNumber& x, const HNumber& a, const AlgebraDef& alg);
/// max_k |(A*X*X + B*X + C)_k|
double sqrt_eq_residual(const HNumber& x, const HNumber& a, const HNumber& b, const HNumber& c,
                        const AlgebraDef& alg);

// Calculator ----------------------------------------------------------------

/// Result of evaluating a calculator expression: a number or a scalar.
struct CalcValue {
    bool is_number = false;
    HNumber number;
    Scalar scalar;
};

/// Evaluates natural-form numbers combined with `+ - * /`, `conj(x)`,
/// `norm(x)` and `unit()`. `*` is the algebra product, `x / y` solves
/// y*X = x. Scalars combine with numbers through scalar multiplication.
CalcValue evaluate_in(const AlgebraDef& alg, std::string_view text, std::string* basis_seen = nullptr);

}  // namespace hcns
