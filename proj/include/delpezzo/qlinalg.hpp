#pragma once

#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

using MatQ = std::vector<std::vector<Rat>>;
using MatZ = std::vector<std::vector<Int>>;

/// Rank over Q by Gaussian elimination (exact).
int rank(MatQ m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column
/// of the reduced row echelon form, in ascending free-column order.
/// Deterministic; each vector has a 1 in its free column.
std::vector<std::vector<Rat>> kernel(MatQ m);

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination.
Int det(MatZ m);

} // namespace delpezzo
