#pragma once

// Dense linear algebra over Scalars. Exact matrices are reduced with
// fraction-producing Gauss-Jordan elimination over the rational-function
// field (pivot choice prefers the simplest nonzero entry); Float matrices use
// partial pivoting.

#include "hcns/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hcns {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Scalar> solution;  // filled only when Unique
};

/// Solves a (possibly rectangular) system a * x = b.
SolveResult solve_linear(Matrix a, std::vector<Scalar> b);

/// Solution of a square system, or nullopt when the matrix is singular.
std::optional<std::vector<Scalar>> solve_square(const Matrix& a, const std::vector<Scalar>& b);

std::optional<Matrix> invert(const Matrix& a);

Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace hcns
