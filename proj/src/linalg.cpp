#include "hcns/linalg.hpp"

#include <cmath>
#include <limits>

namespace hcns {

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1L);
    return m;
}

namespace {

// Lower is simpler: constants first, then short numerators, then polynomials.
std::size_t pivot_cost(const Scalar& s) {
    if (s.is_numeric()) return 0;
    return s.numerator().size() + 2 * s.denominator().size() + s.numerator().total_degree();
}

bool matrix_is_float(const Matrix& a, const std::vector<Scalar>& b) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x.is_float()) return true;
    for (const auto& x : b)
        if (x.is_float()) return true;
    return false;
}

double max_abs(const Matrix& a) {
    double m = 0;
    for (const auto& row : a)
        for (const auto& x : row) m = std::max(m, std::fabs(x.to_double()));
    return m;
}

}  // namespace

SolveResult solve_linear(Matrix a, std::vector<Scalar> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    const bool floating = matrix_is_float(a, b);
    const double zero_tol = floating ? 1e-12 * std::max(1.0, max_abs(a)) : 0.0;
    auto negligible = [&](const Scalar& s) {
        return floating ? std::fabs(s.to_double()) <= zero_tol : s.is_zero();
    };
    if (floating) {
        for (auto& row : a)
            for (auto& x : row)
                if (x.is_exact()) x = x.to_float();
        for (auto& x : b)
            if (x.is_exact()) x = x.to_float();
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    bool free_column = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (negligible(a[i][c])) continue;
            if (best == rows) {
                best = i;
            } else if (floating) {
                if (std::fabs(a[i][c].to_double()) > std::fabs(a[best][c].to_double())) best = i;
            } else if (pivot_cost(a[i][c]) < pivot_cost(a[best][c])) {
                best = i;
            }
        }
        if (best == rows) {
            free_column = true;
            continue;
        }
        std::swap(a[r], a[best]);
        std::swap(b[r], b[best]);
        const Scalar inv = (floating ? Scalar::from_double(1.0) : Scalar(1L)) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
            if (floating) a[i][c] = Scalar::from_double(0.0);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() < cols) free_column = true;

    const double rhs_tol = floating ? 1e-9 * std::max(1.0, max_abs(Matrix{b})) : 0.0;
    for (std::size_t i = r; i < rows; ++i) {
        const bool nonzero = floating ? std::fabs(b[i].to_double()) > rhs_tol : !b[i].is_zero();
        if (nonzero) return {SolveStatus::Inconsistent, {}};
    }
    if (free_column) return {SolveStatus::Underdetermined, {}};

    std::vector<Scalar> x(cols, floating ? Scalar::from_double(0.0) : Scalar{});
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return {SolveStatus::Unique, std::move(x)};
}

namespace {

bool any_float(const Matrix& a, const std::vector<Scalar>& b) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x.is_float()) return true;
    for (const auto& x : b)
        if (x.is_float()) return true;
    return false;
}

// Row of polynomials equal to the given row times the lcm of its denominators.
std::vector<Poly> clear_denominators(const std::vector<Scalar>& row) {
    Poly lcm(1L);
    for (const auto& x : row) {
        const Poly& d = x.denominator();
        if (d.is_constant()) continue;
        lcm *= *d.divide_exact(gcd(lcm, d));
    }
    std::vector<Poly> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.numerator() * *lcm.divide_exact(x.denominator()));
    return out;
}

// Fraction-free (Bareiss) elimination; every division below is exact.
std::optional<std::vector<Scalar>> bareiss_solve(const Matrix& a, const std::vector<Scalar>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Poly>> m;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> row = a[i];
        row.push_back(b[i]);
        m.push_back(clear_denominators(row));
    }
    Poly prev(1L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (p == n || m[i][k].size() < m[p][k].size())) p = i;
        if (p == n) return std::nullopt;
        std::swap(m[k], m[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = *(m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    // y = det * x is polynomial.
    const Poly& det = m[n - 1][n - 1];
    std::vector<Poly> y(n);
    for (std::size_t i = n; i-- > 0;) {
        Poly acc = det * m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * y[j];
        y[i] = *acc.divide_exact(m[i][i]);
    }
    std::vector<Scalar> x;
    x.reserve(n);
    for (auto& yi : y) x.push_back(Scalar::ratio(std::move(yi), det));
    return x;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_square(const Matrix& a, const std::vector<Scalar>& b) {
    if (!a.empty() && a.size() == b.size() && a[0].size() == a.size() && !any_float(a, b))
        return bareiss_solve(a, b);
    auto res = solve_linear(a, b);
    if (res.status != SolveStatus::Unique) return std::nullopt;
    return std::move(res.solution);
}

std::optional<Matrix> invert(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Scalar>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Scalar> e(n);
        e[c] = Scalar(1L);
        auto col = solve_square(a, e);
        if (!col) return std::nullopt;
        for (std::size_t r = 0; r < n; ++r) inv[r][c] = (*col)[r];
    }
    return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace hcns
