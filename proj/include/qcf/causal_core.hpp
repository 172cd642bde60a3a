#pragma once

// Response-function causal models over finite X -> Y.
//
// A model is a distribution p(F) over deterministic maps f: [n_x] -> [n_y].
// Tables are indexed canonically by reading the outputs sequence as a base-n_y
// integer with f(0) as the most significant digit, so enumeration order is
// lexicographic in the outputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcf/rational.hpp"

namespace qcf {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// n_y^n_x, or ResourceError naming the cap when the count exceeds it.
std::uint64_t table_count(std::size_t n_x, std::size_t n_y,
                          std::uint64_t cap = kDefaultEnumerationCap);

class FunctionTable {
  public:
    FunctionTable(std::size_t n_y, std::vector<std::size_t> outputs);

    static FunctionTable from_index(std::size_t n_x, std::size_t n_y, std::uint64_t index);

    /// Digit-string key, e.g. "01" for the binary identity. Inputs with
    /// n_y > 10 use comma-separated decimal outputs.
    static FunctionTable from_key(std::size_t n_x, std::size_t n_y, std::string_view key);

    std::size_t n_x() const noexcept { return outputs_.size(); }
    std::size_t n_y() const noexcept { return n_y_; }
    std::span<const std::size_t> outputs() const noexcept { return outputs_; }

    /// f(x); DomainError when x is out of range.
    std::size_t operator()(std::size_t x) const;

    std::uint64_t index() const noexcept;
    std::string key() const;

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

  private:
    std::size_t n_y_;
    std::vector<std::size_t> outputs_;
};

/// All n_y^n_x tables in canonical (lexicographic) order.
std::vector<FunctionTable> enumerate_functions(std::size_t n_x, std::size_t n_y,
                                               std::uint64_t cap = kDefaultEnumerationCap);

namespace binary {
FunctionTable reset0();    // [0,0]
FunctionTable identity();  // [0,1]
FunctionTable flip();      // [1,0]
FunctionTable reset1();    // [1,1]
}  // namespace binary

/// p(F) as a dense vector of exact weights over the canonical table order.
class FunctionDistribution {
  public:
    /// Validates nonnegativity, exact unit sum and length n_y^n_x.
    FunctionDistribution(std::size_t n_x, std::size_t n_y, std::vector<Rational> weights,
                         std::uint64_t cap = kDefaultEnumerationCap);

    static FunctionDistribution point_mass(const FunctionTable& f);

    /// Weighted mixture; repeated tables accumulate. Weights must sum to 1.
    static FunctionDistribution mixture(std::size_t n_x, std::size_t n_y,
                                        const std::vector<std::pair<FunctionTable, Rational>>& parts);

    /// Equal mixture of the given (distinct) tables.
    static FunctionDistribution uniform_over(std::size_t n_x, std::size_t n_y,
                                             const std::vector<FunctionTable>& tables);

    std::size_t n_x() const noexcept { return n_x_; }
    std::size_t n_y() const noexcept { return n_y_; }
    std::uint64_t table_count() const noexcept { return weights_.size(); }

    std::span<const Rational> weights() const noexcept { return weights_; }
    const Rational& weight(std::uint64_t index) const { return weights_.at(index); }
    const Rational& weight(const FunctionTable& f) const;
    FunctionTable table(std::uint64_t index) const { return FunctionTable::from_index(n_x_, n_y_, index); }

    /// Indices with nonzero weight, ascending.
    std::vector<std::uint64_t> support() const;

    friend bool operator==(const FunctionDistribution&, const FunctionDistribution&) = default;

  private:
    std::size_t n_x_;
    std::size_t n_y_;
    std::vector<Rational> weights_;
};

/// A joint counterfactual event (Y_{x_1}=y_1, ..., Y_{x_k}=y_k).
class CounterfactualQuery {
  public:
    struct Pair {
        std::size_t x;
        std::size_t y;
        friend bool operator==(const Pair&, const Pair&) = default;
    };

    /// ContractError on an empty list or a repeated antecedent.
    explicit CounterfactualQuery(std::vector<Pair> pairs);

    /// "x:y,x':y'" syntax.
    static CounterfactualQuery parse(std::string_view text);

    std::span<const Pair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    /// DomainError when any value falls outside [n_x] x [n_y].
    void check_range(std::size_t n_x, std::size_t n_y) const;

    bool holds_for(const FunctionTable& f) const;

    std::string to_string() const;

  private:
    std::vector<Pair> pairs_;
};

struct Evidence {
    std::size_t x_obs;
    std::size_t y_obs;
};

/// p(R_X = r_x, R_Y = f), stored densely as r_x * table_count + index(f).
class ConfoundedModel {
  public:
    ConfoundedModel(std::size_t n_x, std::size_t n_y, std::vector<Rational> joint_weights,
                    std::uint64_t cap = kDefaultEnumerationCap);

    /// Independent p(R_X) p(R_Y).
    static ConfoundedModel product(std::span<const Rational> p_x, const FunctionDistribution& p_f);

    std::size_t n_x() const noexcept { return n_x_; }
    std::size_t n_y() const noexcept { return n_y_; }
    std::uint64_t table_count() const noexcept { return tables_; }
    const Rational& weight(std::size_t r_x, std::uint64_t f_index) const;
    std::span<const Rational> joint_weights() const noexcept { return weights_; }

    FunctionDistribution response_marginal() const;
    std::vector<Rational> x_marginal() const;

    /// True when the joint equals the product of its marginals.
    bool factorizes() const;

  private:
    std::size_t n_x_;
    std::size_t n_y_;
    std::uint64_t tables_;
    std::vector<Rational> weights_;
};

/// p(Y = y | do(X = x)) for y in [n_y].
std::vector<Rational> conditional(const FunctionDistribution& pF, std::size_t x);

/// Sum over f of p(F=f) * prod_i [f(x_i) = y_i].
Rational joint_counterfactual(const FunctionDistribution& pF, const CounterfactualQuery& q);

/// p(Y_{x_cf} = y_cf | X = x_obs, Y = y_obs). Returns the degenerate delta when
/// x_cf == x_obs. UndefinedConditionalError when the evidence has probability 0.
Rational conditional_counterfactual(const FunctionDistribution& pF, const Evidence& evidence,
                                    std::size_t x_cf, std::size_t y_cf);

/// Posterior over F given evidence (abduction).
FunctionDistribution abduct(const FunctionDistribution& pF, const Evidence& evidence);

/// Abduction, action at x_cf, prediction. Distribution over [n_y].
std::vector<Rational> abduct_act_predict(const FunctionDistribution& pF, const Evidence& evidence,
                                         std::size_t x_cf);

/// p(X = x, Y = y) as an n_x by n_y row-major table.
std::vector<std::vector<Rational>> observational_joint(const ConfoundedModel& m);

/// p(Y = y | X = x) from the observational joint. UndefinedConditionalError
/// when p(X = x) = 0.
std::vector<Rational> observational_conditional(const ConfoundedModel& m, std::size_t x);

std::vector<Rational> do_conditional(const ConfoundedModel& m, std::size_t x);

/// Embeds a model with n_x != n_y into the square n x n model, n = max(n_x, n_y).
/// Added inputs are mapped to output 0; counterfactuals over the original
/// inputs are unchanged.
FunctionDistribution embed_square(const FunctionDistribution& pF);

}  // namespace qcf
