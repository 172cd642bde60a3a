#pragma once

// What a given kind of oracle access reveals about p(F), and what it leaves open.
//
// Every oracle statistic considered here is linear in p(F), so the set of
// distributions consistent with the data is a polytope in the simplex. A
// linear target is identifiable when it is constant on that polytope; its
// partial-identification interval is [min, max] over the polytope, computed
// exactly by the rational simplex solver.

#include <cstddef>
#include <string>
#include <vector>

#include "qcf/causal_core.hpp"
#include "qcf/lp.hpp"

namespace qcf {

/// one_way: every p(f(x)=y), i.e. what a classical oracle reveals.
/// two_way: additionally every p(f(x)=y, f(x')=y') with x != x', i.e. what
/// coherent queries of the quantum oracle reveal.
enum class ConstraintLevel { one_way, two_way, custom };

std::string to_string(ConstraintLevel level);
ConstraintLevel parse_constraint_level(const std::string& text);

struct ConstraintRow {
    RationalVector coefficients;
    Rational rhs;
};

class ConstraintSystem {
  public:
    /// Appends the normalization row when it is not already present.
    ConstraintSystem(std::size_t n_x, std::size_t n_y, ConstraintLevel level, std::vector<ConstraintRow> rows);

    std::size_t n_x() const noexcept { return n_x_; }
    std::size_t n_y() const noexcept { return n_y_; }
    std::size_t variables() const noexcept { return variables_; }
    ConstraintLevel level() const noexcept { return level_; }
    const std::vector<ConstraintRow>& rows() const noexcept { return rows_; }

    lp::EqualitySystem equality_system() const;
    bool admits(const FunctionDistribution& pF) const;

  private:
    std::size_t n_x_;
    std::size_t n_y_;
    std::size_t variables_;
    ConstraintLevel level_;
    std::vector<ConstraintRow> rows_;
};

/// Coefficient vector c with c . p = target value, over the canonical tables.
class LinearTarget {
  public:
    LinearTarget(std::size_t n_x, std::size_t n_y, RationalVector coefficients);

    /// Indicator of the joint counterfactual event.
    static LinearTarget from_query(std::size_t n_x, std::size_t n_y, const CounterfactualQuery& q);

    std::size_t n_x() const noexcept { return n_x_; }
    std::size_t n_y() const noexcept { return n_y_; }
    const RationalVector& coefficients() const noexcept { return coefficients_; }
    Rational evaluate(const FunctionDistribution& pF) const;

  private:
    std::size_t n_x_;
    std::size_t n_y_;
    RationalVector coefficients_;
};

struct Bounds {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
};

/// Rows fixing the level's marginals at their values under pF_true, plus
/// normalization. ContractError for ConstraintLevel::custom.
ConstraintSystem build_constraints(const FunctionDistribution& pF_true, ConstraintLevel level);

/// Exact [min, max] of the target over the feasible set.
Bounds lp_bounds(const LinearTarget& target, const ConstraintSystem& sys);

struct Identification {
    bool identifiable;
    Bounds bounds;
    /// Lexicographically smallest feasible vertices attaining lo and hi.
    FunctionDistribution witness_lo;
    FunctionDistribution witness_hi;
};

Identification is_identifiable(const LinearTarget& target, const ConstraintSystem& sys);

// Scripted counterexamples ---------------------------------------------------

struct MixtureContrastReport {
    std::size_t n;
    /// p(Y=y | X=x) per model, flattened row-major over (x, y).
    std::vector<Rational> permutation_conditionals;
    std::vector<Rational> constant_conditionals;
    /// p(Y_0 = y, Y_1 = y) for each y.
    std::vector<Rational> permutation_same_output;
    std::vector<Rational> constant_same_output;
    bool conditionals_agree;
    bool joints_disagree;
};

/// Permutation mixture vs constant mixture on [n] -> [n].
MixtureContrastReport contrast_permutation_constant(std::size_t n);

struct ModelABReport {
    Rational one_way_a, one_way_b;      // common value of every p(Y_x=y), if uniform
    Rational two_way_a, two_way_b;      // common value of every p(Y_x=y, Y_x'=y')
    bool one_way_uniform, two_way_uniform;
    Rational three_way_a, three_way_b;  // p(Y_0=0, Y_1=1, Y_2=2)
    double rho_max_difference;          // max |rho_A - rho_B| entry-wise, uniform alpha
    Identification identification;      // three-way target under Model A's two-way data
};

/// Uniform over all maps [3] -> [3] vs uniform over the affine maps u + s x mod 3.
ModelABReport reproduce_model_ab();

struct SeparationReport {
    std::size_t n;
    std::vector<std::size_t> tail;
    Bounds classical;  // one-way constraints
    Bounds quantum;    // two-way constraints
    FunctionDistribution classical_witness_hi;
    FunctionDistribution quantum_witness_lo;
    FunctionDistribution quantum_witness_hi;
};

/// |X| = n, |Y| = 2, data from the uniform model on inputs {0,1,2} with the
/// remaining inputs pinned to `tail`; target is the n-way joint
/// p(Y_0=1, Y_1=1, Y_2=1, Y_3=tail_0, ...).
SeparationReport bound_separation(std::size_t n, const std::vector<std::size_t>& tail);

/// Null space of the n = 3 two-way system restricted to the 8 variables
/// D(y_0, y_1, y_2); one basis vector per free direction.
RationalMatrix separation_null_space();

}  // namespace qcf
