#include "qcf/identify.hpp"

#include <algorithm>
#include <optional>

#include "qcf/errors.hpp"
#include "qcf/models.hpp"
#include "qcf/quantum_oracle.hpp"

namespace qcf {

std::string to_string(ConstraintLevel level) {
    switch (level) {
        case ConstraintLevel::one_way: return "one-way";
        case ConstraintLevel::two_way: return "two-way";
        case ConstraintLevel::custom: return "custom";
    }
    return "custom";
}

ConstraintLevel parse_constraint_level(const std::string& text) {
    if (text == "one-way" || text == "one_way") return ConstraintLevel::one_way;
    if (text == "two-way" || text == "two_way") return ConstraintLevel::two_way;
    throw ParseError("unknown constraint level '" + text + "' (expected one-way or two-way)");
}

// ---------------------------------------------------------------------------

namespace {

bool is_normalization(const ConstraintRow& row) {
    return row.rhs == 1 && std::all_of(row.coefficients.begin(), row.coefficients.end(),
                                       [](const Rational& c) { return c == 1; });
}

ConstraintRow normalization_row(std::size_t variables) { return {RationalVector(variables, Rational(1)), 1}; }

ConstraintRow indicator_row(const std::vector<FunctionTable>& tables, const CounterfactualQuery& q,
                            const FunctionDistribution& pF) {
    ConstraintRow row{RationalVector(tables.size()), 0};
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (q.holds_for(tables[i])) {
            row.coefficients[i] = 1;
            row.rhs += pF.weight(i);
        }
    }
    return row;
}

FunctionDistribution as_distribution(const ConstraintSystem& sys, RationalVector point) {
    return FunctionDistribution(sys.n_x(), sys.n_y(), std::move(point));
}

void check_target(const LinearTarget& target, const ConstraintSystem& sys) {
    if (target.n_x() != sys.n_x() || target.n_y() != sys.n_y()) {
        throw ContractError("target and constraint system have different shapes");
    }
}

}  // namespace

ConstraintSystem::ConstraintSystem(std::size_t n_x, std::size_t n_y, ConstraintLevel level,
                                   std::vector<ConstraintRow> rows)
    : n_x_(n_x), n_y_(n_y), variables_(table_count(n_x, n_y)), level_(level), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.coefficients.size() != variables_) {
            throw ContractError("constraint row has " + std::to_string(row.coefficients.size()) +
                                " coefficients, expected " + std::to_string(variables_));
        }
    }
    if (std::none_of(rows_.begin(), rows_.end(), is_normalization)) rows_.push_back(normalization_row(variables_));
}

lp::EqualitySystem ConstraintSystem::equality_system() const {
    lp::EqualitySystem sys;
    sys.variables = variables_;
    for (const auto& row : rows_) {
        sys.rows.push_back(row.coefficients);
        sys.rhs.push_back(row.rhs);
    }
    return sys;
}

bool ConstraintSystem::admits(const FunctionDistribution& pF) const {
    if (pF.n_x() != n_x_ || pF.n_y() != n_y_) return false;
    return lp::is_feasible(equality_system(), pF.weights());
}

LinearTarget::LinearTarget(std::size_t n_x, std::size_t n_y, RationalVector coefficients)
    : n_x_(n_x), n_y_(n_y), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != table_count(n_x, n_y)) throw ContractError("target has wrong length");
}

LinearTarget LinearTarget::from_query(std::size_t n_x, std::size_t n_y, const CounterfactualQuery& q) {
    q.check_range(n_x, n_y);
    const auto count = table_count(n_x, n_y);
    RationalVector c(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (q.holds_for(FunctionTable::from_index(n_x, n_y, i))) c[i] = 1;
    }
    return LinearTarget(n_x, n_y, std::move(c));
}

Rational LinearTarget::evaluate(const FunctionDistribution& pF) const {
    if (pF.n_x() != n_x_ || pF.n_y() != n_y_) throw ContractError("target and model have different shapes");
    Rational total = 0;
    for (auto i : pF.support()) total += coefficients_[i] * pF.weight(i);
    return total;
}

// ---------------------------------------------------------------------------

ConstraintSystem build_constraints(const FunctionDistribution& pF_true, ConstraintLevel level) {
    if (level == ConstraintLevel::custom) throw ContractError("custom systems are constructed explicitly");
    const std::size_t n_x = pF_true.n_x();
    const std::size_t n_y = pF_true.n_y();
    const auto tables = enumerate_functions(n_x, n_y);

    std::vector<ConstraintRow> rows;
    for (std::size_t x = 0; x < n_x; ++x) {
        for (std::size_t y = 0; y < n_y; ++y) {
            rows.push_back(indicator_row(tables, CounterfactualQuery({{x, y}}), pF_true));
        }
    }
    if (level == ConstraintLevel::two_way) {
        for (std::size_t x = 0; x < n_x; ++x) {
            for (std::size_t xp = x + 1; xp < n_x; ++xp) {
                for (std::size_t y = 0; y < n_y; ++y) {
                    for (std::size_t yp = 0; yp < n_y; ++yp) {
                        rows.push_back(indicator_row(tables, CounterfactualQuery({{x, y}, {xp, yp}}), pF_true));
                    }
                }
            }
        }
    }
    rows.push_back(normalization_row(tables.size()));
    return ConstraintSystem(n_x, n_y, level, std::move(rows));
}

Bounds lp_bounds(const LinearTarget& target, const ConstraintSystem& sys) {
    check_target(target, sys);
    const auto eq = sys.equality_system();
    auto lo = lp::optimize(eq, target.coefficients(), lp::Sense::minimize);
    auto hi = lp::optimize(eq, target.coefficients(), lp::Sense::maximize);
    return {std::move(lo.value), std::move(hi.value)};
}

Identification is_identifiable(const LinearTarget& target, const ConstraintSystem& sys) {
    check_target(target, sys);
    const auto eq = sys.equality_system();
    auto lo = lp::lexicographic_optimum(eq, target.coefficients(), lp::Sense::minimize);
    auto hi = lp::lexicographic_optimum(eq, target.coefficients(), lp::Sense::maximize);
    Bounds bounds{lo.value, hi.value};
    return {bounds.lo == bounds.hi, bounds, as_distribution(sys, std::move(lo.point)),
            as_distribution(sys, std::move(hi.point))};
}

// ---------------------------------------------------------------------------

MixtureContrastReport contrast_permutation_constant(std::size_t n) {
    if (n < 2) throw ContractError("the permutation/constant counterexample needs n >= 2");
    const auto perms = models::permutation_mixture(n);
    const auto consts = models::constant_mixture(n);

    MixtureContrastReport report{n, {}, {}, {}, {}, true, true};
    const Rational uniform(1, static_cast<long>(n));
    for (std::size_t x = 0; x < n; ++x) {
        const auto cp = conditional(perms, x);
        const auto cc = conditional(consts, x);
        for (std::size_t y = 0; y < n; ++y) {
            report.permutation_conditionals.push_back(cp[y]);
            report.constant_conditionals.push_back(cc[y]);
            if (cp[y] != cc[y] || cp[y] != uniform) report.conditionals_agree = false;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t xp = 0; xp < n; ++xp) {
            if (x == xp) continue;
            for (std::size_t y = 0; y < n; ++y) {
                const CounterfactualQuery q({{x, y}, {xp, y}});
                const auto jp = joint_counterfactual(perms, q);
                const auto jc = joint_counterfactual(consts, q);
                if (jp != 0 || jc <= 0) report.joints_disagree = false;
                if (x == 0 && xp == 1) {
                    report.permutation_same_output.push_back(jp);
                    report.constant_same_output.push_back(jc);
                }
            }
        }
    }
    return report;
}

namespace {

// Common value of f over every k-way query with distinct inputs, or nullopt
// when the values differ.
template <class Fn>
std::optional<Rational> common_value(std::size_t n, std::size_t k, Fn&& fn) {
    std::optional<Rational> value;
    bool uniform = true;
    auto visit = [&](const CounterfactualQuery& q) {
        auto v = fn(q);
        if (!value) {
            value = v;
        } else if (*value != v) {
            uniform = false;
        }
    };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (k == 1) {
                visit(CounterfactualQuery({{x, y}}));
                continue;
            }
            for (std::size_t xp = x + 1; xp < n; ++xp) {
                for (std::size_t yp = 0; yp < n; ++yp) visit(CounterfactualQuery({{x, y}, {xp, yp}}));
            }
        }
    }
    if (!uniform) return std::nullopt;
    return value;
}

}  // namespace

ModelABReport reproduce_model_ab() {
    const auto a = models::uniform_all(3, 3);
    const auto b = models::affine_mod(3);

    const auto one_a = common_value(3, 1, [&](const auto& q) { return joint_counterfactual(a, q); });
    const auto one_b = common_value(3, 1, [&](const auto& q) { return joint_counterfactual(b, q); });
    const auto two_a = common_value(3, 2, [&](const auto& q) { return joint_counterfactual(a, q); });
    const auto two_b = common_value(3, 2, [&](const auto& q) { return joint_counterfactual(b, q); });

    const CounterfactualQuery three({{0, 0}, {1, 1}, {2, 2}});
    const auto alpha = Amplitudes::uniform(3);
    const auto rho_a = build_rho_xy(a, alpha);
    const auto rho_b = build_rho_xy(b, alpha);

    ModelABReport report{
        one_a.value_or(-1),
        one_b.value_or(-1),
        two_a.value_or(-1),
        two_b.value_or(-1),
        one_a.has_value() && one_b.has_value(),
        two_a.has_value() && two_b.has_value(),
        joint_counterfactual(a, three),
        joint_counterfactual(b, three),
        (rho_a.entries() - rho_b.entries()).cwiseAbs().maxCoeff(),
        is_identifiable(LinearTarget::from_query(3, 3, three), build_constraints(a, ConstraintLevel::two_way)),
    };
    return report;
}

SeparationReport bound_separation(std::size_t n, const std::vector<std::size_t>& tail) {
    if (n < 3) throw ContractError("the binary-output bound separation needs n >= 3");
    if (tail.size() != n - 3) throw ContractError("fixed tail must have length n - 3");
    for (auto y : tail) {
        if (y > 1) throw DomainError("tail outputs must be binary");
    }
    const auto truth = models::uniform_head_fixed_tail(n, tail);

    std::vector<CounterfactualQuery::Pair> pairs{{0, 1}, {1, 1}, {2, 1}};
    for (std::size_t i = 0; i < tail.size(); ++i) pairs.push_back({i + 3, tail[i]});
    const auto target = LinearTarget::from_query(n, 2, CounterfactualQuery(std::move(pairs)));

    const auto classical = is_identifiable(target, build_constraints(truth, ConstraintLevel::one_way));
    const auto quantum = is_identifiable(target, build_constraints(truth, ConstraintLevel::two_way));
    return {n, tail, classical.bounds, quantum.bounds, classical.witness_hi, quantum.witness_lo, quantum.witness_hi};
}

RationalMatrix separation_null_space() {
    const auto sys = build_constraints(models::uniform_head_fixed_tail(3, {}), ConstraintLevel::two_way);
    RationalMatrix rows;
    for (const auto& row : sys.rows()) rows.push_back(row.coefficients);
    return nullspace(rows, sys.variables());
}

}  // namespace qcf
