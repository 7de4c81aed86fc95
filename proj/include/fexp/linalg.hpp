#pragma once

#include "fexp/ratfunc.hpp"

#include <optional>
#include <vector>

namespace fexp {

using Matrix = std::vector<std::vector<Elem>>;

/// Basis of {x : A x = 0} over F_q, from the reduced row echelon form:
/// one vector per free column, with a 1 in that column.
std::vector<std::vector<Elem>> nullspace(const FieldPtr& F, Matrix A, std::size_t ncols);

/// Solution of the square system A x = b, or nullopt when A is singular.
std::optional<std::vector<Elem>> solve_square(const FieldPtr& F, Matrix A, std::vector<Elem> b);

/// Nullspace over F_q(z) of the matrix whose rows are `rows`.
std::vector<std::vector<RatFunc>> nullspace(const FieldPtr& F, std::vector<std::vector<RatFunc>> rows, std::size_t ncols);

} // namespace fexp
