#include "hcns/ops.hpp"

#include <cmath>

namespace hcns {

namespace {

void require_dim(const HNumber& x, const AlgebraDef& alg, const char* what) {
    if (x.dim() != alg.dim)
        throw Error(Errc::DimMismatch, std::string(what) + " has dimension " + std::to_string(x.dim()) +
                                           ", system '" + alg.name + "' has dimension " +
                                           std::to_string(alg.dim));
}

// Structure constants in the exactness class of the operands.
Tensor3 constants_for(const AlgebraDef& alg, bool floating) {
    if (!floating) return alg.gamma;
    Tensor3 g = alg.gamma;
    for (auto& row : g)
        for (auto& cell : row)
            for (auto& c : cell) {
                if (!c.is_numeric())
                    throw Error(Errc::NonNumeric, "system '" + alg.name +
                                                      "' has symbolic structure constants; bind its "
                                                      "parameters before Float arithmetic");
                c = c.to_float();
            }
    return g;
}

HNumber multiply_float(const HNumber& a, const HNumber& b, const AlgebraDef& alg) {
    const std::size_t n = alg.dim;
    std::vector<double> g(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = alg.at(i, j, k);
                if (c.is_zero()) continue;
                if (!c.is_numeric())
                    throw Error(Errc::NonNumeric, "system '" + alg.name +
                                                      "' has symbolic structure constants; bind its "
                                                      "parameters before Float arithmetic");
                g[(i * n + j) * n + k] = c.to_double();
            }
    const auto x = a.to_doubles();
    const auto y = b.to_doubles();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const double xy = x[i] * y[j];
            if (xy == 0.0) continue;
            const double* cell = &g[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k) out[k] += xy * cell[k];
        }
    }
    return HNumber::from_doubles(out);
}

}  // namespace

MulMatrix mul_matrix(const HNumber& a, const AlgebraDef& alg, Side side) {
    alg.require_shape();
    require_dim(a, alg, "operand");
    const std::size_t n = alg.dim;
    const bool floating = a.is_float();
    const Tensor3 g = constants_for(alg, floating);
    const Scalar zero = floating ? Scalar::from_double(0.0) : Scalar{};
    MulMatrix out{side, Matrix(n, std::vector<Scalar>(n, zero))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& coeff = side == Side::Left ? a[i] : a[j];
            if (coeff.is_zero()) continue;
            const std::size_t col = side == Side::Left ? j : i;
            for (std::size_t k = 0; k < n; ++k)
                if (!g[i][j][k].is_zero()) out.m[k][col] += coeff * g[i][j][k];
        }
    return out;
}

HNumber in_add(const HNumber& a, const HNumber& b) {
    if (a.dim() != b.dim())
        throw Error(Errc::DimMismatch, "cannot add numbers of dimensions " + std::to_string(a.dim()) +
                                           " and " + std::to_string(b.dim()));
    std::vector<Scalar> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] + b[i]);
    return HNumber(std::move(out));
}

HNumber negate(const HNumber& a) {
    std::vector<Scalar> out;
    out.reserve(a.dim());
    for (const auto& c : a.coeffs()) out.push_back(-c);
    return HNumber(std::move(out));
}

HNumber in_sub(const HNumber& a, const HNumber& b) { return in_add(a, negate(b)); }

HNumber scalar_mul(const Scalar& lambda, const HNumber& a) {
    std::vector<Scalar> out;
    out.reserve(a.dim());
    for (const auto& c : a.coeffs()) out.push_back(lambda * c);
    return HNumber(std::move(out));
}

namespace {

std::string common_basis(const NaturalForm& a, const NaturalForm& b) {
    if (a.basis().empty()) return b.basis();
    if (!b.basis().empty() && a.basis() != b.basis())
        throw Error(Errc::MixedBasis, "basis identifiers '" + a.basis() + "' and '" + b.basis() + "' differ");
    return a.basis();
}

}  // namespace

NaturalForm add_natural(const NaturalForm& a, const NaturalForm& b, std::size_t dim) {
    const std::string basis = common_basis(a, b);
    return viz_in_a(in_add(convert_a(a, dim), convert_a(b, dim)), basis);
}

NaturalForm subtr(const NaturalForm& a, const NaturalForm& b, std::size_t dim) {
    const std::string basis = common_basis(a, b);
    return viz_in_a(in_sub(convert_a(a, dim), convert_a(b, dim)), basis);
}

HNumber in_multi(const HNumber& a, const HNumber& b, const AlgebraDef& alg) {
    alg.require_shape();
    require_dim(a, alg, "left operand");
    require_dim(b, alg, "right operand");
    if (a.is_float() != b.is_float())
        throw Error(Errc::ExactnessMismatch, "cannot multiply a Float number by an exact one");
    if (a.is_float()) return multiply_float(a, b, alg);

    const std::size_t n = alg.dim;
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const auto& cell = alg.gamma[i][j];
            bool any = false;
            for (const auto& c : cell) any = any || !c.is_zero();
            if (!any) continue;
            const Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (cell[k].is_zero()) continue;
                if (cell[k].is_one())
                    out[k] += ab;
                else
                    out[k] += ab * cell[k];
            }
        }
    }
    return HNumber(std::move(out));
}

NaturalForm nat_multi(const NaturalForm& a, const NaturalForm& b, const AlgebraDef& alg,
                      std::string_view out_basis) {
    return viz_in_a(in_multi(convert_a(a, alg.dim), convert_a(b, alg.dim), alg), out_basis);
}

HNumber unit(const AlgebraDef& alg) {
    alg.require_shape();
    const std::size_t n = alg.dim;
    Matrix rows;
    std::vector<Scalar> rhs;
    rows.reserve(2 * n * n);
    // E * e_j = e_j
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = alg.at(i, j, k);
            rows.push_back(std::move(row));
            rhs.emplace_back(j == k ? 1L : 0L);
        }
    // e_i * E = e_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = alg.at(i, j, k);
            rows.push_back(std::move(row));
            rhs.emplace_back(i == k ? 1L : 0L);
        }
    auto res = solve_linear(std::move(rows), std::move(rhs));
    switch (res.status) {
    case SolveStatus::Inconsistent:
        throw Error(Errc::NoUnit, "system '" + alg.name + "' has no two-sided identity");
    case SolveStatus::Underdetermined:
        throw Error(Errc::NotUnique, "identity of system '" + alg.name + "' is not unique");
    case SolveStatus::Unique: break;
    }
    return HNumber(std::move(res.solution));
}

HNumber conjug(const HNumber& a, const AlgebraDef& alg) {
    require_dim(a, alg, "operand");
    if (!first_basis_is_identity(alg))
        throw Error(Errc::UnitNotFirstBasis,
                    "conjugation needs e1 to be the identity of '" + alg.name + "'");
    std::vector<Scalar> out = a.coeffs();
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return HNumber(std::move(out));
}

NonScalarConjProductError::NonScalarConjProductError(HNumber product)
    : Error(Errc::NonScalarConjProduct,
            "A*conj(A) = " + product.to_string() + " is not a multiple of the identity"),
      product_(std::move(product)) {}

Scalar norma(const HNumber& a, const AlgebraDef& alg) {
    const HNumber p = in_multi(a, conjug(a, alg), alg);
    if (p.is_float()) {
        const double scale = std::max(1.0, std::fabs(p[0].to_double()));
        for (std::size_t k = 1; k < p.dim(); ++k)
            if (std::fabs(p[k].to_double()) > kFloatTolerance * scale) throw NonScalarConjProductError(p);
    } else {
        for (std::size_t k = 1; k < p.dim(); ++k)
            if (!p[k].is_zero()) throw NonScalarConjProductError(p);
    }
    return p[0];
}

HNumber divis(const HNumber& b, const HNumber& a, const AlgebraDef& alg, Side side) {
    require_dim(a, alg, "divisor");
    require_dim(b, alg, "dividend");
    if (a.is_zero()) throw Error(Errc::SingularDivisor, "division by the zero number");
    const MulMatrix m = mul_matrix(a, alg, side);
    auto x = solve_square(m.m, b.coeffs());
    if (!x)
        throw Error(Errc::SingularDivisor, "divisor " + a.to_string() + " is a zero divisor in '" +
                                               alg.name + "'");
    return HNumber(std::move(*x));
}

}  // namespace hcns
