#include "qcf/lp.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "qcf/errors.hpp"

namespace qcf::lp {

namespace {

void check_shape(const EqualitySystem& sys) {
    if (sys.rows.size() != sys.rhs.size()) throw ContractError("row count and rhs length differ");
    for (const auto& row : sys.rows) {
        if (row.size() != sys.variables) throw ContractError("constraint row has wrong length");
    }
}

enum class Outcome { optimal, unbounded };

// Dense simplex tableau. Columns [0, n) are the structural variables, the
// last column is the right-hand side. `cost` holds reduced costs with the
// negated objective value in its last slot.
class Tableau {
  public:
    explicit Tableau(const EqualitySystem& sys) : n_(sys.variables) {
        check_shape(sys);
        const std::size_t m = sys.rows.size();
        const std::size_t cols = n_ + m + 1;
        rows_.assign(m, RationalVector(cols));
        signs_.resize(m);
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            signs_[i] = sys.rhs[i] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sys.rows[i][j] != 0) rows_[i][j] = signs_[i] * sys.rows[i][j];
            }
            rows_[i][n_ + i] = 1;
            rows_[i][cols - 1] = signs_[i] * sys.rhs[i];
            basis_[i] = n_ + i;
        }
        allowed_.assign(cols - 1, true);
        phase_one(m);
    }

    std::size_t variables() const { return n_; }

    // Minimizes `objective` over the columns currently allowed.
    Outcome minimize(std::span<const Rational> objective) {
        set_objective(objective);
        return run();
    }

    Rational objective_value() const { return -cost_.back(); }

    // Forbids every column whose reduced cost is positive. What remains is
    // exactly the optimal face of the last objective.
    void restrict_to_optimal_face() {
        for (std::size_t j = 0; j < n_; ++j) {
            if (cost_[j] > 0) allowed_[j] = false;
        }
    }

    bool column_allowed(std::size_t j) const { return allowed_[j]; }

    RationalVector point() const {
        RationalVector p(n_);
        for (std::size_t i = 0; i < rows_.size(); ++i) p[basis_[i]] = rows_[i].back();
        return p;
    }

  private:
    void phase_one(std::size_t m) {
        RationalVector artificial_cost(n_ + m);
        for (std::size_t i = 0; i < m; ++i) artificial_cost[n_ + i] = 1;
        set_objective(artificial_cost);
        run();
        if (objective_value() > 0) {
            // Duals of the phase-one optimum: y_i = 1 - d_{artificial i}.
            std::vector<Rational> certificate(m);
            for (std::size_t i = 0; i < m; ++i) certificate[i] = -signs_[i] * (1 - cost_[n_ + i]);
            throw InfeasibleError("constraint system is infeasible (phase-one residual " +
                                      to_string(objective_value()) + ")",
                                  std::move(certificate));
        }

        // Pivot zero-level artificials out of the basis; rows where that is
        // impossible are linearly dependent and are dropped.
        std::vector<bool> keep(rows_.size(), true);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < n_) continue;
            std::size_t j = 0;
            while (j < n_ && rows_[i][j] == 0) ++j;
            if (j < n_) {
                pivot(i, j);
            } else {
                keep[i] = false;
            }
        }
        RationalMatrix kept;
        std::vector<std::size_t> kept_basis;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!keep[i]) continue;
            RationalVector row(rows_[i].begin(), rows_[i].begin() + static_cast<std::ptrdiff_t>(n_));
            row.push_back(rows_[i].back());
            kept.push_back(std::move(row));
            kept_basis.push_back(basis_[i]);
        }
        rows_ = std::move(kept);
        basis_ = std::move(kept_basis);
        allowed_.assign(n_, true);
    }

    void set_objective(std::span<const Rational> objective) {
        const std::size_t width = allowed_.size() + 1;
        cost_.assign(width, Rational(0));
        for (std::size_t j = 0; j < objective.size() && j < width - 1; ++j) cost_[j] = objective[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational factor = cost_[basis_[i]];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < width; ++j) {
                if (rows_[i][j] != 0) cost_[j] -= factor * rows_[i][j];
            }
        }
    }

    Outcome run() {
        for (;;) {
            // Bland: lowest-index improving column, lowest-index leaving variable.
            std::size_t entering = allowed_.size();
            for (std::size_t j = 0; j < allowed_.size(); ++j) {
                if (allowed_[j] && cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed_.size()) return Outcome::optimal;

            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const auto& a = rows_[i][entering];
                if (a <= 0) continue;
                Rational ratio = rows_[i].back() / a;
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_.size()) return Outcome::unbounded;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t s) {
        auto& prow = rows_[r];
        const Rational inv = 1 / prow[s];
        std::vector<std::size_t> nonzero;
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (prow[j] != 0) {
                prow[j] *= inv;
                nonzero.push_back(j);
            }
        }
        auto eliminate = [&](RationalVector& row) {
            const Rational factor = row[s];
            if (factor == 0) return;
            for (auto j : nonzero) row[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(cost_);
        basis_[r] = s;
    }

    std::size_t n_;
    RationalMatrix rows_;
    RationalVector cost_;
    std::vector<int> signs_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
};

RationalVector oriented(std::span<const Rational> objective, Sense sense) {
    RationalVector c(objective.begin(), objective.end());
    if (sense == Sense::maximize) {
        for (auto& v : c) v = -v;
    }
    return c;
}

void require_bounded(Outcome outcome) {
    if (outcome == Outcome::unbounded) throw std::runtime_error("linear program is unbounded");
}

}  // namespace

Optimum optimize(const EqualitySystem& sys, std::span<const Rational> objective, Sense sense) {
    if (objective.size() != sys.variables) throw ContractError("objective has wrong length");
    Tableau tableau(sys);
    require_bounded(tableau.minimize(oriented(objective, sense)));
    Rational value = tableau.objective_value();
    if (sense == Sense::maximize) value = -value;
    return {value, tableau.point()};
}

Optimum lexicographic_optimum(const EqualitySystem& sys, std::span<const Rational> objective, Sense sense) {
    if (objective.size() != sys.variables) throw ContractError("objective has wrong length");
    Tableau tableau(sys);
    require_bounded(tableau.minimize(oriented(objective, sense)));
    Rational value = tableau.objective_value();
    if (sense == Sense::maximize) value = -value;
    tableau.restrict_to_optimal_face();

    RationalVector unit(sys.variables);
    for (std::size_t k = 0; k < sys.variables; ++k) {
        if (!tableau.column_allowed(k)) continue;
        unit[k] = 1;
        require_bounded(tableau.minimize(unit));
        unit[k] = 0;
        tableau.restrict_to_optimal_face();
    }
    return {value, tableau.point()};
}

bool is_feasible(const EqualitySystem& sys, std::span<const Rational> p) {
    check_shape(sys);
    if (p.size() != sys.variables) return false;
    for (const auto& v : p) {
        if (v < 0) return false;
    }
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < sys.variables; ++j) {
            if (sys.rows[i][j] != 0 && p[j] != 0) lhs += sys.rows[i][j] * p[j];
        }
        if (lhs != sys.rhs[i]) return false;
    }
    return true;
}

std::vector<RationalVector> enumerate_vertices(const EqualitySystem& sys, std::size_t max_variables) {
    check_shape(sys);
    const std::size_t n = sys.variables;
    if (n > max_variables || n >= 32) {
        throw ResourceError("vertex enumeration limited to " + std::to_string(max_variables) + " variables",
                            max_variables);
    }
    RationalMatrix augmented;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        auto row = sys.rows[i];
        row.push_back(sys.rhs[i]);
        augmented.push_back(std::move(row));
    }
    const auto pivots = row_reduce(augmented);
    if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent
    const std::size_t r = pivots.size();

    std::set<RationalVector> vertices;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) cols.push_back(j);
        }
        RationalMatrix sub(r, RationalVector(r + 1));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k) sub[i][k] = augmented[i][cols[k]];
            sub[i][r] = augmented[i][n];
        }
        const auto sub_pivots = row_reduce(sub);
        if (sub_pivots.size() != r || (r > 0 && sub_pivots.back() != r - 1)) continue;
        RationalVector p(n);
        bool nonnegative = true;
        for (std::size_t k = 0; k < r; ++k) {
            p[cols[k]] = sub[k][r];
            if (p[cols[k]] < 0) nonnegative = false;
        }
        if (nonnegative) vertices.insert(std::move(p));
    }
    return {vertices.begin(), vertices.end()};
}

}  // namespace qcf::lp
