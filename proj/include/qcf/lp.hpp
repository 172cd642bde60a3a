#pragma once

// Exact linear programming over {p >= 0 : A p = b}.
//
// The simplex solver is a dense two-phase tableau method with Bland's rule,
// so it terminates on degenerate problems. All arithmetic is exact.

#include <cstddef>
#include <span>
#include <vector>

#include "qcf/rational_linalg.hpp"

namespace qcf::lp {

struct EqualitySystem {
    std::size_t variables = 0;
    RationalMatrix rows;
    RationalVector rhs;
};

enum class Sense { minimize, maximize };

struct Optimum {
    Rational value;
    RationalVector point;
};

/// Optimal basic solution. Throws InfeasibleError (with a Farkas
/// certificate) when the system is empty, std::runtime_error if unbounded.
Optimum optimize(const EqualitySystem& sys, std::span<const Rational> objective, Sense sense);

/// Like optimize, but the returned point is the lexicographically smallest
/// among all optimal points. That point is always a vertex.
Optimum lexicographic_optimum(const EqualitySystem& sys, std::span<const Rational> objective, Sense sense);

/// Vertices of the polytope by basis enumeration. Intended as an independent
/// cross-check; refuses systems with more than `max_variables` variables.
std::vector<RationalVector> enumerate_vertices(const EqualitySystem& sys, std::size_t max_variables = 12);

/// True when p >= 0 and every row holds exactly.
bool is_feasible(const EqualitySystem& sys, std::span<const Rational> p);

}  // namespace qcf::lp
