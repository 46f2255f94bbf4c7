#pragma once

/**
 * Hypercomplex number systems defined by structure constants.
 *
 * The multiplication table of the basis is stored as a three-level list:
 * gamma[i][j] is the Cayley table cell e_i * e_j and gamma[i][j][k] is the
 * coefficient of e_k in it. Storage is 0-based; every user-facing index is
 * 1-based.
 */

#include "hcns/hcnumber.hpp"
#include "hcns/scalar.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hcns {

using Cell = std::vector<Scalar>;
using Tensor3 = std::vector<std::vector<Cell>>;

struct AlgebraDef {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> params;
    Tensor3 gamma;
    std::string comment;
    std::string kind;
    /// Identifier used when rendering the Cayley table and results.
    std::string basis = "e";

    /// gamma[i][j][k] with 0-based indices.
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return gamma[i][j][k]; }

    /// Checks the tensor shape against dim; throws DimMismatch.
    void require_shape() const;

    friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

/// Tensor of zeros with shape n x n x n.
Tensor3 zero_tensor(std::size_t n);

struct CayleyCell {
    std::size_t row;  // 1-based
    std::size_t column;
    std::vector<Scalar> value;
};

CayleyCell cayley_cell(const AlgebraDef& def, std::size_t row, std::size_t column);

struct Finding {
    enum class Severity { Fatal, Info };
    Severity severity;
    std::string code;
    std::string message;
};

/// Shape, exactness and symbol checks (fatal) plus informational findings on
/// identity, commutativity and associativity.
std::vector<Finding> validate(const AlgebraDef& def);
bool has_fatal(const std::vector<Finding>& findings);

bool is_commutative(const AlgebraDef& def);
/// Symbolic check of (e_i e_j) e_k = e_i (e_j e_k) over all triples.
bool is_associative(const AlgebraDef& def);
bool first_basis_is_identity(const AlgebraDef& def);

/// Builds an algebra from a natural-form Cayley table (one string per cell).
AlgebraDef in_convert_hns(const std::vector<std::vector<std::string>>& natural_table,
                          std::string_view name);
AlgebraDef in_convert_hns(const std::vector<std::vector<NaturalForm>>& natural_table,
                          std::string_view name);

/// Cayley table cells in natural form with the given basis name.
std::vector<std::vector<NaturalForm>> viz_hns_cells(const AlgebraDef& def, std::string_view basis_name);
/// Rendered Cayley table (plain text grid).
std::string viz_hns(const AlgebraDef& def, std::string_view basis_name);
std::string viz_hns(const AlgebraDef& def);

/// JSON document in the algebra file format.
std::string to_file_text(const AlgebraDef& def);
AlgebraDef from_file_text(std::string_view text);
void save_algebra(const AlgebraDef& def, const std::filesystem::path& path);
AlgebraDef load_algebra(const std::filesystem::path& path);

/// Three-level list rendering: [[[1, 0], [0, 1]], ...].
std::string list_form(const AlgebraDef& def);

}  // namespace hcns
