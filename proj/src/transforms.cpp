#include "hcns/transforms.hpp"

#include "hcns/ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hcns {

BasisTransform::BasisTransform(Matrix l) : l_(std::move(l)) {
    const std::size_t n = l_.size();
    for (const auto& row : l_)
        if (row.size() != n) throw Error(Errc::DimMismatch, "basis transform must be a square matrix");
    if (n == 0) throw Error(Errc::DimMismatch, "empty basis transform");
    for (const auto& row : l_)
        for (const auto& x : row)
            if (x.is_float()) throw Error(Errc::ExactnessMismatch, "basis transforms must be exact");
    auto inv = invert(l_);
    if (!inv) throw Error(Errc::SingularTransform, "basis transform is not invertible");
    inv_ = std::move(*inv);
}

BasisTransform BasisTransform::swap(std::size_t dim, std::size_t s, std::size_t t) {
    if (s < 1 || s > dim || t < 1 || t > dim)
        throw Error(Errc::IndexOutOfRange, "swap indices must lie in 1.." + std::to_string(dim));
    Matrix l = identity_matrix(dim);
    std::swap(l[s - 1], l[t - 1]);
    return BasisTransform(std::move(l));
}

AlgebraDef trans(const AlgebraDef& alg, std::size_t s, std::size_t t) {
    alg.require_shape();
    const std::size_t n = alg.dim;
    if (s < 1 || s > n || t < 1 || t > n)
        throw Error(Errc::IndexOutOfRange, "Trans indices must lie in 1.." + std::to_string(n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[s - 1], perm[t - 1]);
    AlgebraDef out = alg;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.gamma[i][j][k] = alg.at(perm[i], perm[j], perm[k]);
    return out;
}

AlgebraDef gen_iso(const BasisTransform& l, const AlgebraDef& alg, std::string_view new_basis,
                   std::string_view name) {
    alg.require_shape();
    const std::size_t n = alg.dim;
    if (l.dim() != n)
        throw Error(Errc::DimMismatch, "transform dimension " + std::to_string(l.dim()) +
                                           " does not match system dimension " + std::to_string(n));
    const Matrix& lm = l.matrix();
    const Matrix& inv = l.inverse();
    AlgebraDef out = alg;
    if (!name.empty()) out.name = std::string(name);
    out.basis = std::string(new_basis);
    out.gamma = zero_tensor(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // f_i f_j in the old basis.
            std::vector<Scalar> old(n);
            for (std::size_t s = 0; s < n; ++s) {
                if (lm[i][s].is_zero()) continue;
                for (std::size_t t = 0; t < n; ++t) {
                    if (lm[j][t].is_zero()) continue;
                    const Scalar w = lm[i][s] * lm[j][t];
                    for (std::size_t u = 0; u < n; ++u)
                        if (!alg.at(s, t, u).is_zero()) old[u] += w * alg.at(s, t, u);
                }
            }
            // e_u = sum_k inv[u][k] f_k
            for (std::size_t u = 0; u < n; ++u) {
                if (old[u].is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!inv[u][k].is_zero()) out.gamma[i][j][k] += old[u] * inv[u][k];
            }
        }
    std::vector<std::string> params = alg.params;
    std::set<std::string> extra;
    for (const auto& row : lm)
        for (const auto& x : row)
            for (const auto& s : x.symbols()) extra.insert(s);
    for (const auto& s : extra)
        if (std::find(params.begin(), params.end(), s) == params.end()) params.push_back(s);
    out.params = std::move(params);
    return out;
}

namespace {

AlgebraDef rename_params(const AlgebraDef& alg, const std::map<std::string, std::string>& renames) {
    if (renames.empty()) return alg;
    std::map<std::string, Scalar> bindings;
    for (const auto& [from, to] : renames) bindings.emplace(from, Scalar::symbol(to));
    AlgebraDef out = alg;
    for (auto& row : out.gamma)
        for (auto& cell : row)
            for (auto& c : cell) c = c.substitute(bindings);
    for (auto& p : out.params) {
        auto it = renames.find(p);
        if (it != renames.end()) p = it->second;
    }
    return out;
}

bool same_system(const AlgebraDef& a, const AlgebraDef& b) {
    return a.name == b.name && a.dim == b.dim && a.params == b.params && a.gamma == b.gamma;
}

// Makes the parameter sets of a and b disjoint unless both are the same system.
std::pair<AlgebraDef, AlgebraDef> resolve_params(const AlgebraDef& a, const AlgebraDef& b) {
    if (same_system(a, b)) return {a, b};
    std::map<std::string, std::string> ra;
    std::map<std::string, std::string> rb;
    const std::string pa = a.name == b.name ? a.name + "1" : a.name;
    const std::string pb = a.name == b.name ? b.name + "2" : b.name;
    for (const auto& p : a.params)
        if (std::find(b.params.begin(), b.params.end(), p) != b.params.end()) {
            ra[p] = pa + "_" + p;
            rb[p] = pb + "_" + p;
        }
    for (const auto& [from, to] : ra)
        if (!is_valid_symbol(to) || !is_valid_symbol(rb[from]))
            throw Error(Errc::ParamClash, "cannot disambiguate parameter '" + from + "' shared by '" +
                                              a.name + "' and '" + b.name + "'");
    return {rename_params(a, ra), rename_params(b, rb)};
}

std::vector<std::string> merged_params(const AlgebraDef& a, const AlgebraDef& b) {
    std::vector<std::string> out = a.params;
    for (const auto& p : b.params)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

}  // namespace

AlgebraDef dir_sum2(const AlgebraDef& a0, const AlgebraDef& b0, std::string_view name) {
    a0.require_shape();
    b0.require_shape();
    const auto [a, b] = resolve_params(a0, b0);
    const std::size_t n = a.dim + b.dim;
    AlgebraDef out;
    out.name = std::string(name);
    out.dim = n;
    out.params = merged_params(a, b);
    out.basis = a.basis;
    out.kind = "direct sum";
    out.comment = "direct sum of " + a.name + " and " + b.name;
    out.gamma = zero_tensor(n);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) out.gamma[i][j][k] = a.at(i, j, k);
    const std::size_t o = a.dim;
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k) out.gamma[o + i][o + j][o + k] = b.at(i, j, k);
    return out;
}

AlgebraDef dir_sum_n(const std::vector<AlgebraDef>& algs, std::string_view basis, std::string_view name) {
    if (algs.empty()) throw Error(Errc::InvalidArgument, "direct sum of an empty list");
    std::string joined;
    for (const auto& a : algs) joined += (joined.empty() ? "" : "_") + a.name;
    const std::string out_name = name.empty() ? joined : std::string(name);
    AlgebraDef acc = algs.front();
    for (std::size_t i = 1; i < algs.size(); ++i) acc = dir_sum2(acc, algs[i], out_name);
    acc.name = out_name;
    acc.basis = std::string(basis);
    if (algs.size() > 1) acc.comment = "direct sum of " + joined;
    return acc;
}

namespace {

struct Pair {
    HNumber x;
    HNumber y;
};

Pair pair_basis(std::size_t n, std::size_t index) {
    if (index < n) return {HNumber::basis(n, index + 1), HNumber::zeros(n)};
    return {HNumber::zeros(n), HNumber::basis(n, index - n + 1)};
}

}  // namespace

AlgebraDef multi_dim(const AlgebraDef& a0, const AlgebraDef& b0, std::string_view basis, DimMode mode,
                     std::string_view name) {
    a0.require_shape();
    b0.require_shape();
    const auto [a, b] = resolve_params(a0, b0);
    AlgebraDef out;
    out.name = std::string(name);
    out.params = merged_params(a, b);
    out.basis = std::string(basis);

    if (mode == DimMode::Commutative) {
        const std::size_t n = a.dim * b.dim;
        out.dim = n;
        out.kind = "tensor product";
        out.comment = "tensor product of " + a.name + " and " + b.name;
        out.gamma = zero_tensor(n);
        const std::size_t m = b.dim;
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t k = 0; k < a.dim; ++k) {
                    if (a.at(i, j, k).is_zero()) continue;
                    for (std::size_t u = 0; u < m; ++u)
                        for (std::size_t v = 0; v < m; ++v)
                            for (std::size_t w = 0; w < m; ++w)
                                out.gamma[i * m + u][j * m + v][k * m + w] = a.at(i, j, k) * b.at(u, v, w);
                }
        return out;
    }

    if (b.dim != 2 || !first_basis_is_identity(b))
        throw Error(Errc::UnsupportedDoubling,
                    "doubling needs a 2-dimensional unital system with e2^2 = p*e1 + q*e2, got '" + b.name + "'");
    if (!first_basis_is_identity(a))
        throw Error(Errc::UnsupportedDoubling, "doubling needs e1 to be the identity of '" + a.name + "'");
    const Scalar p = b.at(1, 1, 0);
    const Scalar q = b.at(1, 1, 1);
    const std::size_t n = a.dim;
    out.dim = 2 * n;
    out.kind = "noncommutative doubling";
    out.comment = "doubling of " + a.name + " by " + b.name;
    out.gamma = zero_tensor(2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t c = 0; c < 2 * n; ++c) {
            const Pair u = pair_basis(n, r);
            const Pair v = pair_basis(n, c);
            const HNumber y2bar_y1 = in_multi(conjug(v.y, a), u.y, a);
            const HNumber first = in_add(in_multi(u.x, v.x, a), scalar_mul(p, y2bar_y1));
            const HNumber second = in_add(in_add(in_multi(v.y, u.x, a), in_multi(u.y, conjug(v.x, a), a)),
                                          scalar_mul(q, y2bar_y1));
            for (std::size_t k = 0; k < n; ++k) {
                out.gamma[r][c][k] = first[k];
                out.gamma[r][c][n + k] = second[k];
            }
        }
    return out;
}

std::string iso_unknown(std::size_t r, std::size_t s) {
    return "L_" + std::to_string(r) + "_" + std::to_string(s);
}

namespace {

// Leibniz expansion of det L over the symbols L_r_s.
Scalar symbolic_determinant(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Poly> terms;
    Poly det;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<Monomial::Factor> f;
        for (std::size_t i = 0; i < n; ++i) f.emplace_back(iso_unknown(i + 1, perm[i] + 1), 1);
        det += Poly(Monomial::from_factors(std::move(f)), Rational(inversions % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Scalar(std::move(det));
}

}  // namespace

IsoSystem sys_izo(const AlgebraDef& a, const AlgebraDef& b) {
    a.require_shape();
    b.require_shape();
    if (a.dim != b.dim)
        throw Error(Errc::DimMismatch, "isomorphism needs equal dimensions, got " + std::to_string(a.dim) +
                                           " and " + std::to_string(b.dim));
    const std::size_t n = a.dim;
    IsoSystem sys;
    sys.source = a.name;
    sys.target = b.name;
    sys.dim = n;
    Matrix l(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            sys.unknowns.push_back(iso_unknown(r + 1, s + 1));
            l[r][s] = Scalar::symbol(sys.unknowns.back());
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // phi(e_i) phi(e_j) expanded in the target basis.
            std::vector<Scalar> image(n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const Scalar w = l[i][p] * l[j][q];
                    for (std::size_t m = 0; m < n; ++m)
                        if (!b.at(p, q, m).is_zero()) image[m] += w * b.at(p, q, m);
                }
            for (std::size_t m = 0; m < n; ++m) {
                Scalar lhs;
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.at(i, j, k).is_zero()) lhs += a.at(i, j, k) * l[k][m];
                sys.equations.push_back({i + 1, j + 1, m + 1, lhs - image[m]});
            }
        }
    if (n <= 8) sys.nondegeneracy = symbolic_determinant(n);
    return sys;
}

std::string export_iso_system(const IsoSystem& sys) {
    std::ostringstream out;
    out << "# isomorphism " << sys.source << " -> " << sys.target << ", dim " << sys.dim << ", "
        << sys.equations.size() << " equations\n";
    for (const auto& u : sys.unknowns) out << "unknown " << u << "\n";
    for (const auto& e : sys.equations)
        out << "eq " << e.i << " " << e.j << " " << e.m << ": " << e.lhs.to_string() << "\n";
    if (sys.nondegeneracy) out << "nondegeneracy: " << sys.nondegeneracy->to_string() << "\n";
    return out.str();
}

IsoSystem parse_iso_system(std::string_view text) {
    IsoSystem sys;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::ParseError, "iso system line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string word, src, arrow, tgt;
            if (h >> word >> src >> arrow >> tgt && word == "isomorphism" && arrow == "->") {
                sys.source = src;
                if (!tgt.empty() && tgt.back() == ',') tgt.pop_back();
                sys.target = tgt;
            }
            continue;
        }
        if (line.rfind("unknown ", 0) == 0) {
            std::string name = line.substr(8);
            if (!is_valid_symbol(name)) fail("bad unknown name '" + name + "'");
            sys.unknowns.push_back(std::move(name));
        } else if (line.rfind("eq ", 0) == 0) {
            const auto colon = line.find(':');
            if (colon == std::string::npos) fail("missing ':'");
            std::istringstream idx(line.substr(3, colon - 3));
            IsoEquation e{0, 0, 0, {}};
            if (!(idx >> e.i >> e.j >> e.m)) fail("bad equation indices");
            e.lhs = parse_scalar(line.substr(colon + 1));
            sys.equations.push_back(std::move(e));
        } else if (line.rfind("nondegeneracy:", 0) == 0) {
            sys.nondegeneracy = parse_scalar(line.substr(14));
        } else {
            fail("unrecognized line");
        }
    }
    std::size_t n = 0;
    while (n * n < sys.unknowns.size()) ++n;
    if (n * n != sys.unknowns.size()) throw Error(Errc::ParseError, "unknown count is not a perfect square");
    sys.dim = n;
    return sys;
}

std::vector<std::size_t> failing_equations(const IsoSystem& sys, const Matrix& l) {
    const std::size_t n = sys.dim;
    if (l.size() != n) throw Error(Errc::DimMismatch, "substitution matrix has wrong size");
    std::map<std::string, Scalar> bindings;
    for (std::size_t r = 0; r < n; ++r) {
        if (l[r].size() != n) throw Error(Errc::DimMismatch, "substitution matrix has wrong size");
        for (std::size_t s = 0; s < n; ++s) bindings.emplace(iso_unknown(r + 1, s + 1), l[r][s]);
    }
    std::vector<std::size_t> failing;
    for (std::size_t e = 0; e < sys.equations.size(); ++e)
        if (!sys.equations[e].lhs.substitute(bindings).is_zero()) failing.push_back(e);
    return failing;
}

}  // namespace hcns
