#pragma once

// Named reference distributions over response functions.

#include <cstddef>
#include <vector>

#include "qcf/causal_core.hpp"

namespace qcf::models {

/// Uniform over all n_y^n_x tables.
FunctionDistribution uniform_all(std::size_t n_x, std::size_t n_y);

/// Uniform over the n^2 affine maps f(x) = u + s*x mod n.
FunctionDistribution affine_mod(std::size_t n);

/// Equal mixture of all n! permutations of [n].
FunctionDistribution permutation_mixture(std::size_t n);

/// Equal mixture of the n constant (discard-the-input) maps.
FunctionDistribution constant_mixture(std::size_t n);

/// Uniform over the 8 binary-output tables on inputs {0,1,2} whose remaining
/// inputs 3..n-1 are pinned to `tail`.
FunctionDistribution uniform_head_fixed_tail(std::size_t n, const std::vector<std::size_t>& tail);

}  // namespace qcf::models
