// Numeric square roots and quadratic equations by multi-start damped Newton.

#include "hcns/ops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>

namespace hcns {

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

class NumericAlgebra {
public:
    explicit NumericAlgebra(const AlgebraDef& alg) : n_(alg.dim), g_(n_ * n_ * n_, 0.0) {
        alg.require_shape();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const Scalar& c = alg.at(i, j, k);
                    if (c.is_zero()) continue;
                    if (!c.is_numeric())
                        throw Error(Errc::NonNumeric, "system '" + alg.name +
                                                          "' has symbolic structure constants");
                    g_[(i * n_ + j) * n_ + k] = c.to_double();
                }
    }

    std::size_t dim() const { return n_; }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const double xy = x[i] * y[j];
                if (xy == 0.0) continue;
                for (std::size_t k = 0; k < n_; ++k) out[k] += xy * g(i, j, k);
            }
        return out;
    }

    // y -> x*y
    Mat left(const Vec& x) const {
        Mat m(n_, Vec(n_, 0.0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) m[k][j] += x[i] * g(i, j, k);
        return m;
    }

    // y -> y*x
    Mat right(const Vec& x) const {
        Mat m(n_, Vec(n_, 0.0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) m[k][i] += x[j] * g(i, j, k);
        return m;
    }

private:
    double g(std::size_t i, std::size_t j, std::size_t k) const { return g_[(i * n_ + j) * n_ + k]; }

    std::size_t n_;
    Vec g_;
};

double inf_norm(const Vec& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double two_norm(const Vec& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b, double scale = 1.0) {
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += scale * b[i];
    return out;
}

Mat matmul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat out(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<Vec> solve_dense(Mat a, Vec b) {
    const std::size_t n = b.size();
    double scale = 0;
    for (const auto& row : a) scale = std::max(scale, inf_norm(row));
    if (scale == 0) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
        if (std::fabs(a[p][c]) <= 1e-14 * scale) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            if (f == 0.0) continue;
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    Vec x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Levenberg-Marquardt step (J^T J + mu I) d = -J^T F, used when J is singular.
Vec regularized_step(const Mat& j, const Vec& f) {
    const std::size_t n = f.size();
    Mat jtj(n, Vec(n, 0.0));
    Vec rhs(n, 0.0);
    double diag = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k) jtj[r][c] += j[k][r] * j[k][c];
            if (r == c) diag = std::max(diag, jtj[r][c]);
        }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) rhs[r] -= j[k][r] * f[k];
    const double mu = 1e-6 * std::max(diag, 1e-12);
    for (std::size_t r = 0; r < n; ++r) jtj[r][r] += mu;
    auto d = solve_dense(jtj, rhs);
    return d ? *d : Vec(n, 0.0);
}

using Residual = std::function<Vec(const Vec&)>;
using Jacobian = std::function<Mat(const Vec&)>;

// A few plain Newton steps past the tolerance, kept while they help.
Vec polish(const Residual& F, const Jacobian& J, Vec x, Vec f) {
    for (int it = 0; it < 3; ++it) {
        Vec neg_f(f);
        for (auto& v : neg_f) v = -v;
        const auto step = solve_dense(J(x), neg_f);
        if (!step) break;
        Vec trial = add(x, *step, 1.0);
        Vec ft = F(trial);
        if (!(inf_norm(ft) < inf_norm(f))) break;
        x = std::move(trial);
        f = std::move(ft);
    }
    return x;
}

std::optional<Vec> newton(const Residual& F, const Jacobian& J, Vec x, const NewtonOptions& opts) {
    Vec f = F(x);
    double fn = two_norm(f);
    for (int it = 0; it < opts.max_iterations; ++it) {
        if (!std::isfinite(fn)) return std::nullopt;
        if (inf_norm(f) <= opts.residual_tol) return polish(F, J, std::move(x), std::move(f));
        const Mat jac = J(x);
        Vec neg_f(f);
        for (auto& v : neg_f) v = -v;
        auto step = solve_dense(jac, neg_f);
        Vec d = step ? *step : regularized_step(jac, f);
        // Backtracking on the residual norm.
        double t = 1.0;
        Vec trial;
        Vec ft;
        double ftn = 0;
        bool accepted = false;
        for (int k = 0; k < 40; ++k) {
            trial = add(x, d, t);
            ft = F(trial);
            ftn = two_norm(ft);
            if (std::isfinite(ftn) && ftn <= (1.0 - 1e-4 * t) * fn) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            if (!step) return std::nullopt;
            // Accept a short step to escape flat regions.
            trial = add(x, d, 1e-3);
            ft = F(trial);
            ftn = two_norm(ft);
        }
        const double moved = t * inf_norm(d);
        x = std::move(trial);
        f = std::move(ft);
        fn = ftn;
        if (moved <= opts.step_tol * std::max(1.0, inf_norm(x))) break;
    }
    if (inf_norm(f) <= opts.residual_tol) return polish(F, J, std::move(x), std::move(f));
    return std::nullopt;
}

std::vector<HNumber> dedup_sorted(std::vector<Vec> roots, double tol) {
    std::sort(roots.begin(), roots.end());
    std::vector<Vec> kept;
    for (auto& r : roots) {
        bool dup = false;
        for (const auto& k : kept)
            if (inf_norm(add(r, k, -1.0)) <= tol) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(r));
    }
    std::vector<HNumber> out;
    out.reserve(kept.size());
    for (const auto& k : kept) out.push_back(HNumber::from_doubles(k));
    return out;
}

// Identity element as doubles, or e1 when the system has none.
Vec identity_or_first(const AlgebraDef& alg) {
    try {
        return unit(alg).to_doubles();
    } catch (const Error&) {
        Vec e(alg.dim, 0.0);
        e[0] = 1.0;
        return e;
    }
}

std::vector<Vec> random_starts(std::size_t n, int count, double scale, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Vec> out;
    for (int s = 0; s < count; ++s) {
        Vec v(n);
        for (auto& x : v) x = scale * normal(rng);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> rad2_numeric(const NumericAlgebra& na, const Vec& a, const Vec& unit_vec,
                              const NewtonOptions& opts) {
    const std::size_t n = na.dim();
    const double mag = std::max(inf_norm(a), 1e-300);
    const double s = std::sqrt(mag);

    std::vector<Vec> starts;
    starts.push_back(add(Vec(n, 0.0), unit_vec, s));
    starts.push_back(add(Vec(n, 0.0), unit_vec, -s));
    // Bisector of the identity and A/|A|: exact for complex-like subalgebras.
    Vec bis = add(unit_vec, a, 1.0 / mag);
    const double bn = inf_norm(bis);
    if (bn > 1e-8) {
        starts.push_back(add(Vec(n, 0.0), bis, s / bn));
        starts.push_back(add(Vec(n, 0.0), bis, -s / bn));
    } else {
        Vec tilt = unit_vec;
        tilt[n > 1 ? 1 : 0] += 0.5;
        starts.push_back(add(Vec(n, 0.0), tilt, s));
        starts.push_back(add(Vec(n, 0.0), tilt, -s));
    }
    const int random = opts.random_starts > 0 ? opts.random_starts : static_cast<int>(2 * n);
    for (auto& v : random_starts(n, random, s, opts.seed)) starts.push_back(std::move(v));

    const Residual F = [&](const Vec& x) { return add(na.mul(x, x), a, -1.0); };
    const Jacobian J = [&](const Vec& x) {
        Mat l = na.left(x);
        const Mat r = na.right(x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) l[i][j] += r[i][j];
        return l;
    };
    std::vector<Vec> roots;
    for (const auto& x0 : starts)
        if (auto x = newton(F, J, x0, opts)) {
            // (-x)^2 = x^2, so roots come in pairs.
            roots.push_back(add(Vec(n, 0.0), *x, -1.0));
            roots.push_back(std::move(*x));
        }
    return roots;
}

// Best rational approximation with bounded denominator (continued fractions).
Rational rationalize(double v, long max_den = 1000000) {
    const bool neg = v < 0;
    double x = std::fabs(v);
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(x);
        if (a > 1e15) break;
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0;
        const long k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double frac = x - a;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (k1 == 0) return Rational(0);
    Rational r(h1, k1);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

}  // namespace

double rad2_residual(const HNumber& x, const HNumber& a, const AlgebraDef& alg) {
    const NumericAlgebra na(alg);
    const Vec xv = x.to_doubles();
    return inf_norm(add(na.mul(xv, xv), a.to_doubles(), -1.0));
}

double sqrt_eq_residual(const HNumber& x, const HNumber& a, const HNumber& b, const HNumber& c,
                        const AlgebraDef& alg) {
    const NumericAlgebra na(alg);
    const Vec xv = x.to_doubles();
    Vec r = na.mul(a.to_doubles(), na.mul(xv, xv));
    r = add(r, na.mul(b.to_doubles(), xv));
    r = add(r, c.to_doubles());
    return inf_norm(r);
}

std::vector<HNumber> rad2(const HNumber& a, const AlgebraDef& alg, const NewtonOptions& opts) {
    if (a.dim() != alg.dim) throw Error(Errc::DimMismatch, "operand dimension does not match the system");
    const NumericAlgebra na(alg);
    const Vec unit_vec = identity_or_first(alg);

    if (a.is_float()) {
        const Vec av = a.to_doubles();
        auto roots = dedup_sorted(rad2_numeric(na, av, unit_vec, opts), opts.dedup_tol);
        if (roots.empty()) throw Error(Errc::NoRootFound, "no square root of " + a.to_string() + " found");
        return roots;
    }

    if (alg.dim > 2 || !is_commutative(alg))
        throw Error(Errc::InvalidArgument,
                    "exact square roots are supported for commutative systems of dimension <= 2; "
                    "promote the operand to Float for the numeric method");
    const Vec av = a.to_doubles();  // NonNumeric for symbolic coefficients
    std::vector<Vec> candidates = rad2_numeric(na, av, unit_vec, opts);
    std::vector<HNumber> exact;
    for (const auto& c : candidates) {
        std::vector<Scalar> coeffs;
        for (double v : c) coeffs.emplace_back(rationalize(v));
        HNumber x(std::move(coeffs));
        if (in_multi(x, x, alg) != a) continue;
        if (std::find(exact.begin(), exact.end(), x) == exact.end()) exact.push_back(std::move(x));
    }
    if (exact.empty())
        throw Error(Errc::NoRootFound, "no exact rational square root of " + a.to_string() + " found");
    std::sort(exact.begin(), exact.end(), [](const HNumber& x, const HNumber& y) {
        return x.to_doubles() < y.to_doubles();
    });
    return exact;
}

std::vector<HNumber> sqrt_eq(const HNumber& a, const HNumber& b, const HNumber& c,
                             const AlgebraDef& alg, const NewtonOptions& opts) {
    for (const HNumber* x : {&a, &b, &c})
        if (x->dim() != alg.dim) throw Error(Errc::DimMismatch, "coefficient dimension does not match the system");
    const NumericAlgebra na(alg);
    const std::size_t n = alg.dim;
    const Vec av = a.to_doubles();
    const Vec bv = b.to_doubles();
    const Vec cv = c.to_doubles();
    const Vec unit_vec = identity_or_first(alg);

    const Residual F = [&](const Vec& x) {
        Vec r = na.mul(av, na.mul(x, x));
        r = add(r, na.mul(bv, x));
        return add(r, cv);
    };
    const Mat la = na.left(av);
    const Mat lb = na.left(bv);
    const Jacobian J = [&](const Vec& x) {
        Mat sq = na.left(x);
        const Mat r = na.right(x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sq[i][j] += r[i][j];
        Mat jac = matmul(la, sq);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) jac[i][j] += lb[i][j];
        return jac;
    };

    const double scale =
        std::max({1.0, std::sqrt(inf_norm(cv) / std::max(inf_norm(av), 1e-300)),
                  inf_norm(bv) / std::max(inf_norm(av), 1e-300)});
    std::vector<Vec> starts;
    starts.push_back(add(Vec(n, 0.0), unit_vec, scale));
    starts.push_back(add(Vec(n, 0.0), unit_vec, -scale));
    starts.push_back(Vec(n, 0.0));
    // Root of the linear part, -B^-1 C, when B is invertible.
    {
        Vec neg_c(cv);
        for (auto& v : neg_c) v = -v;
        if (auto x = solve_dense(lb, neg_c)) starts.push_back(*x);
        else starts.push_back(add(Vec(n, 0.0), unit_vec, 0.5 * scale));
    }
    const int random = opts.random_starts > 0 ? opts.random_starts : static_cast<int>(4 * n);
    for (auto& v : random_starts(n, random, scale, opts.seed)) starts.push_back(std::move(v));

    std::vector<Vec> roots;
    for (const auto& x0 : starts)
        if (auto x = newton(F, J, x0, opts)) roots.push_back(std::move(*x));

    // Closed form X = (2A)^-1 (-B +- R), R^2 = B^2 - 4AC, in commutative systems.
    if (is_commutative(alg)) {
        const Vec disc = add(na.mul(bv, bv), na.mul(av, cv), -4.0);
        std::vector<HNumber> rs;
        try {
            rs = rad2(HNumber::from_doubles(disc), alg, opts);
        } catch (const Error&) {
            // No root of the discriminant: rely on the Newton results.
        }
        const HNumber two_a = HNumber::from_doubles(add(Vec(n, 0.0), av, 2.0));
        Vec neg_b(bv);
        for (auto& v : neg_b) v = -v;
        for (const auto& r : rs)
            for (double sign : {1.0, -1.0}) {
                try {
                    const HNumber target = HNumber::from_doubles(add(neg_b, r.to_doubles(), sign));
                    roots.push_back(divis(target, two_a, alg, Side::Left).to_doubles());
                } catch (const Error& e) {
                    if (e.code() != Errc::SingularDivisor) throw;
                }
            }
    }

    std::vector<Vec> verified;
    for (auto& r : roots)
        if (inf_norm(F(r)) <= opts.residual_tol) verified.push_back(std::move(r));
    auto out = dedup_sorted(std::move(verified), opts.dedup_tol);
    if (out.empty()) throw Error(Errc::NoRootFound, "no root of the quadratic equation found");
    return out;
}

}  // namespace hcns
