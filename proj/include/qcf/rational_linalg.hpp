#pragma once

#include <cstddef>
#include <vector>

#include "qcf/rational.hpp"

namespace qcf {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row; rows past the rank are left as zeros.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {v : m v = 0}, one vector per free column, with that column set
/// to 1 and the other free columns to 0.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace qcf
