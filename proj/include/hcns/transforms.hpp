#pragma once

/**
 * Operations on hypercomplex number systems themselves: basis changes,
 * direct sums, dimension products and isomorphism equation systems.
 *
 * All constructions are exact. When two source systems declare the same
 * parameter symbol, the symbol is shared if both systems are identical and
 * prefixed with the system name otherwise (`Q4N_p`).
 */

#include "hcns/algebra.hpp"
#include "hcns/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcns {

/// Invertible change of basis f_r = sum_s L[r][s] e_s.
class BasisTransform {
public:
    /// Throws SingularTransform when L is not invertible.
    explicit BasisTransform(Matrix l);

    /// Permutation swapping basis elements s and t (1-based).
    static BasisTransform swap(std::size_t dim, std::size_t s, std::size_t t);

    std::size_t dim() const noexcept { return l_.size(); }
    const Matrix& matrix() const noexcept { return l_; }
    const Matrix& inverse() const noexcept { return inv_; }

private:
    Matrix l_;
    Matrix inv_;
};

/// Relabels the basis by swapping e_s and e_t in rows, columns and components.
AlgebraDef trans(const AlgebraDef& alg, std::size_t s, std::size_t t);

/// Structure constants in the new basis f_r = sum_s L[r][s] e_s.
AlgebraDef gen_iso(const BasisTransform& l, const AlgebraDef& alg, std::string_view new_basis,
                   std::string_view name = {});

AlgebraDef dir_sum2(const AlgebraDef& a, const AlgebraDef& b, std::string_view name);
AlgebraDef dir_sum_n(const std::vector<AlgebraDef>& algs, std::string_view basis,
                     std::string_view name = {});

enum class DimMode { Commutative, NonCommutative };

/// Commutative: tensor product with row-major index pairing.
/// NonCommutative: doubling of `a` by the generalized complex system `b`
/// (e2^2 = p e1 + q e2) with
///   (x1, y1)(x2, y2) = (x1 x2 + p conj(y2) y1, y2 x1 + y1 conj(x2) + q conj(y2) y1).
AlgebraDef multi_dim(const AlgebraDef& a, const AlgebraDef& b, std::string_view basis, DimMode mode,
                     std::string_view name);

struct IsoEquation {
    std::size_t i, j, m;  // 1-based
    Scalar lhs;           // required to vanish
};

struct IsoSystem {
    std::string source;
    std::string target;
    std::size_t dim = 0;
    std::vector<std::string> unknowns;  // L_r_s, row-major
    std::vector<IsoEquation> equations;
    /// det L as a polynomial; omitted for dim > 8.
    std::optional<Scalar> nondegeneracy;
};

/// Name of the unknown L_r_s (1-based).
std::string iso_unknown(std::size_t r, std::size_t s);

/// Equations sum_k g_ij^k L_km - sum_pq L_ip L_jq d_pq^m = 0 for a map
/// e_i -> sum_k L_ik e'_k from `a` (constants g) into `b` (constants d).
IsoSystem sys_izo(const AlgebraDef& a, const AlgebraDef& b);

std::string export_iso_system(const IsoSystem& sys);
IsoSystem parse_iso_system(std::string_view text);

/// Indices of the equations that do not vanish when L is substituted.
std::vector<std::size_t> failing_equations(const IsoSystem& sys, const Matrix& l);

}  // namespace hcns
