#include "qcf/causal_core.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

void check_cardinalities(std::size_t n_x, std::size_t n_y) {
    if (n_x == 0 || n_y == 0) throw ContractError("cardinalities must be positive");
}

void check_input(std::size_t x, std::size_t n_x) {
    if (x >= n_x) {
        throw DomainError("input " + std::to_string(x) + " outside [0, " + std::to_string(n_x) + ")");
    }
}

void check_output(std::size_t y, std::size_t n_y) {
    if (y >= n_y) {
        throw DomainError("output " + std::to_string(y) + " outside [0, " + std::to_string(n_y) + ")");
    }
}

void check_distribution(std::span<const Rational> weights, const char* what) {
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError(std::string(what) + ": negative weight " + to_string(w));
        total += w;
    }
    if (total != 1) {
        throw ValidationError(std::string(what) + ": weights sum to " + to_string(total) + ", not 1");
    }
}

}  // namespace

std::uint64_t table_count(std::size_t n_x, std::size_t n_y, std::uint64_t cap) {
    check_cardinalities(n_x, n_y);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n_x; ++i) {
        if (count > cap / n_y) {
            throw ResourceError("n_y^n_x = " + std::to_string(n_y) + "^" + std::to_string(n_x) +
                                    " exceeds the enumeration cap of " + std::to_string(cap) + " tables",
                                cap);
        }
        count *= n_y;
    }
    if (count > cap) {
        throw ResourceError("table count exceeds the enumeration cap of " + std::to_string(cap), cap);
    }
    return count;
}

// ---------------------------------------------------------------------------
// FunctionTable

FunctionTable::FunctionTable(std::size_t n_y, std::vector<std::size_t> outputs)
    : n_y_(n_y), outputs_(std::move(outputs)) {
    if (n_y_ == 0 || outputs_.empty()) throw ContractError("function table needs n_x, n_y >= 1");
    for (auto y : outputs_) check_output(y, n_y_);
}

FunctionTable FunctionTable::from_index(std::size_t n_x, std::size_t n_y, std::uint64_t index) {
    check_cardinalities(n_x, n_y);
    std::vector<std::size_t> outputs(n_x);
    for (std::size_t i = n_x; i-- > 0;) {
        outputs[i] = static_cast<std::size_t>(index % n_y);
        index /= n_y;
    }
    if (index != 0) throw DomainError("table index out of range");
    return FunctionTable(n_y, std::move(outputs));
}

FunctionTable FunctionTable::from_key(std::size_t n_x, std::size_t n_y, std::string_view key) {
    check_cardinalities(n_x, n_y);
    std::vector<std::size_t> outputs;
    if (n_y <= 10) {
        for (char c : key) {
            if (c < '0' || c > '9') throw ParseError("bad function key '" + std::string(key) + "'");
            outputs.push_back(static_cast<std::size_t>(c - '0'));
        }
    } else {
        std::size_t start = 0;
        while (start <= key.size()) {
            auto end = key.find(',', start);
            if (end == std::string_view::npos) end = key.size();
            std::size_t value = 0;
            auto part = key.substr(start, end - start);
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
                throw ParseError("bad function key '" + std::string(key) + "'");
            }
            outputs.push_back(value);
            start = end + 1;
        }
    }
    if (outputs.size() != n_x) {
        throw ValidationError("function key '" + std::string(key) + "' has " + std::to_string(outputs.size()) +
                              " outputs, expected n_x = " + std::to_string(n_x));
    }
    for (auto y : outputs) {
        if (y >= n_y) {
            throw ValidationError("function key '" + std::string(key) + "' has output outside [0, " +
                                  std::to_string(n_y) + ")");
        }
    }
    return FunctionTable(n_y, std::move(outputs));
}

std::size_t FunctionTable::operator()(std::size_t x) const {
    check_input(x, outputs_.size());
    return outputs_[x];
}

std::uint64_t FunctionTable::index() const noexcept {
    std::uint64_t index = 0;
    for (auto y : outputs_) index = index * n_y_ + y;
    return index;
}

std::string FunctionTable::key() const {
    std::string out;
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
        if (n_y_ <= 10) {
            out.push_back(static_cast<char>('0' + outputs_[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(outputs_[i]);
        }
    }
    return out;
}

std::vector<FunctionTable> enumerate_functions(std::size_t n_x, std::size_t n_y, std::uint64_t cap) {
    const auto count = table_count(n_x, n_y, cap);
    std::vector<FunctionTable> tables;
    tables.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) tables.push_back(FunctionTable::from_index(n_x, n_y, i));
    return tables;
}

namespace binary {
FunctionTable reset0() { return FunctionTable(2, {0, 0}); }
FunctionTable identity() { return FunctionTable(2, {0, 1}); }
FunctionTable flip() { return FunctionTable(2, {1, 0}); }
FunctionTable reset1() { return FunctionTable(2, {1, 1}); }
}  // namespace binary

// ---------------------------------------------------------------------------
// FunctionDistribution

FunctionDistribution::FunctionDistribution(std::size_t n_x, std::size_t n_y, std::vector<Rational> weights,
                                           std::uint64_t cap)
    : n_x_(n_x), n_y_(n_y), weights_(std::move(weights)) {
    const auto count = qcf::table_count(n_x, n_y, cap);
    if (weights_.size() != count) {
        throw ContractError("weight vector has length " + std::to_string(weights_.size()) + ", expected " +
                            std::to_string(count));
    }
    check_distribution(weights_, "p(F)");
}

FunctionDistribution FunctionDistribution::point_mass(const FunctionTable& f) {
    std::vector<Rational> weights(qcf::table_count(f.n_x(), f.n_y()));
    weights[f.index()] = 1;
    return FunctionDistribution(f.n_x(), f.n_y(), std::move(weights));
}

FunctionDistribution FunctionDistribution::mixture(std::size_t n_x, std::size_t n_y,
                                                   const std::vector<std::pair<FunctionTable, Rational>>& parts) {
    std::vector<Rational> weights(qcf::table_count(n_x, n_y));
    for (const auto& [f, w] : parts) {
        if (f.n_x() != n_x || f.n_y() != n_y) throw ContractError("mixture component has wrong shape");
        weights[f.index()] += w;
    }
    return FunctionDistribution(n_x, n_y, std::move(weights));
}

FunctionDistribution FunctionDistribution::uniform_over(std::size_t n_x, std::size_t n_y,
                                                        const std::vector<FunctionTable>& tables) {
    if (tables.empty()) throw ContractError("uniform mixture over an empty set");
    std::vector<std::pair<FunctionTable, Rational>> parts;
    parts.reserve(tables.size());
    const Rational share(1, static_cast<long>(tables.size()));
    for (const auto& f : tables) parts.emplace_back(f, share);
    return mixture(n_x, n_y, parts);
}

const Rational& FunctionDistribution::weight(const FunctionTable& f) const {
    if (f.n_x() != n_x_ || f.n_y() != n_y_) throw ContractError("table shape does not match distribution");
    return weights_[f.index()];
}

std::vector<std::uint64_t> FunctionDistribution::support() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] != 0) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CounterfactualQuery

CounterfactualQuery::CounterfactualQuery(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw ContractError("counterfactual query needs at least one pair");
    std::set<std::size_t> seen;
    for (const auto& p : pairs_) {
        if (!seen.insert(p.x).second) {
            throw ContractError("antecedent x=" + std::to_string(p.x) + " appears more than once");
        }
    }
}

CounterfactualQuery CounterfactualQuery::parse(std::string_view text) {
    std::vector<Pair> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError("target item '" + std::string(item) + "' lacks ':'");
        Pair p{};
        auto lhs = item.substr(0, colon);
        auto rhs = item.substr(colon + 1);
        auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p.x);
        auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), p.y);
        if (lhs.empty() || rhs.empty() || r1.ec != std::errc() || r2.ec != std::errc() ||
            r1.ptr != lhs.data() + lhs.size() || r2.ptr != rhs.data() + rhs.size()) {
            throw ParseError("malformed target item '" + std::string(item) + "'");
        }
        pairs.push_back(p);
        start = end + 1;
    }
    return CounterfactualQuery(std::move(pairs));
}

void CounterfactualQuery::check_range(std::size_t n_x, std::size_t n_y) const {
    for (const auto& p : pairs_) {
        check_input(p.x, n_x);
        check_output(p.y, n_y);
    }
}

bool CounterfactualQuery::holds_for(const FunctionTable& f) const {
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return f.outputs()[p.x] == p.y; });
}

std::string CounterfactualQuery::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) os << ',';
        os << pairs_[i].x << ':' << pairs_[i].y;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ConfoundedModel

ConfoundedModel::ConfoundedModel(std::size_t n_x, std::size_t n_y, std::vector<Rational> joint_weights,
                                 std::uint64_t cap)
    : n_x_(n_x), n_y_(n_y), tables_(qcf::table_count(n_x, n_y, cap)), weights_(std::move(joint_weights)) {
    if (weights_.size() != n_x_ * tables_) {
        throw ContractError("joint weight vector has length " + std::to_string(weights_.size()) + ", expected " +
                            std::to_string(n_x_ * tables_));
    }
    check_distribution(weights_, "p(R_X, R_Y)");
}

ConfoundedModel ConfoundedModel::product(std::span<const Rational> p_x, const FunctionDistribution& p_f) {
    if (p_x.size() != p_f.n_x()) throw ContractError("p(R_X) length must equal n_x");
    std::vector<Rational> joint(p_x.size() * p_f.table_count());
    for (std::size_t r = 0; r < p_x.size(); ++r) {
        for (std::uint64_t f = 0; f < p_f.table_count(); ++f) {
            joint[r * p_f.table_count() + f] = p_x[r] * p_f.weight(f);
        }
    }
    return ConfoundedModel(p_f.n_x(), p_f.n_y(), std::move(joint));
}

const Rational& ConfoundedModel::weight(std::size_t r_x, std::uint64_t f_index) const {
    check_input(r_x, n_x_);
    return weights_.at(r_x * tables_ + f_index);
}

FunctionDistribution ConfoundedModel::response_marginal() const {
    std::vector<Rational> marginal(tables_);
    for (std::size_t r = 0; r < n_x_; ++r) {
        for (std::uint64_t f = 0; f < tables_; ++f) marginal[f] += weights_[r * tables_ + f];
    }
    return FunctionDistribution(n_x_, n_y_, std::move(marginal));
}

std::vector<Rational> ConfoundedModel::x_marginal() const {
    std::vector<Rational> marginal(n_x_);
    for (std::size_t r = 0; r < n_x_; ++r) {
        for (std::uint64_t f = 0; f < tables_; ++f) marginal[r] += weights_[r * tables_ + f];
    }
    return marginal;
}

bool ConfoundedModel::factorizes() const {
    const auto px = x_marginal();
    const auto pf = response_marginal();
    for (std::size_t r = 0; r < n_x_; ++r) {
        for (std::uint64_t f = 0; f < tables_; ++f) {
            if (weights_[r * tables_ + f] != px[r] * pf.weight(f)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Counterfactual quantities

std::vector<Rational> conditional(const FunctionDistribution& pF, std::size_t x) {
    check_input(x, pF.n_x());
    std::vector<Rational> out(pF.n_y());
    for (auto i : pF.support()) out[pF.table(i).outputs()[x]] += pF.weight(i);
    return out;
}

Rational joint_counterfactual(const FunctionDistribution& pF, const CounterfactualQuery& q) {
    q.check_range(pF.n_x(), pF.n_y());
    Rational total = 0;
    for (auto i : pF.support()) {
        if (q.holds_for(pF.table(i))) total += pF.weight(i);
    }
    return total;
}

namespace {

Rational evidence_probability(const FunctionDistribution& pF, const Evidence& e) {
    check_input(e.x_obs, pF.n_x());
    check_output(e.y_obs, pF.n_y());
    Rational p = conditional(pF, e.x_obs)[e.y_obs];
    if (p == 0) {
        throw UndefinedConditionalError("evidence X=" + std::to_string(e.x_obs) + ", Y=" + std::to_string(e.y_obs) +
                                        " has probability zero");
    }
    return p;
}

}  // namespace

Rational conditional_counterfactual(const FunctionDistribution& pF, const Evidence& evidence, std::size_t x_cf,
                                    std::size_t y_cf) {
    const Rational p_evidence = evidence_probability(pF, evidence);
    check_input(x_cf, pF.n_x());
    check_output(y_cf, pF.n_y());
    if (x_cf == evidence.x_obs) return y_cf == evidence.y_obs ? Rational(1) : Rational(0);
    const CounterfactualQuery q({{evidence.x_obs, evidence.y_obs}, {x_cf, y_cf}});
    return joint_counterfactual(pF, q) / p_evidence;
}

FunctionDistribution abduct(const FunctionDistribution& pF, const Evidence& evidence) {
    const Rational p_evidence = evidence_probability(pF, evidence);
    std::vector<Rational> posterior(pF.table_count());
    for (auto i : pF.support()) {
        if (pF.table(i).outputs()[evidence.x_obs] == evidence.y_obs) posterior[i] = pF.weight(i) / p_evidence;
    }
    return FunctionDistribution(pF.n_x(), pF.n_y(), std::move(posterior));
}

std::vector<Rational> abduct_act_predict(const FunctionDistribution& pF, const Evidence& evidence,
                                         std::size_t x_cf) {
    const auto posterior = abduct(pF, evidence);
    return conditional(posterior, x_cf);
}

std::vector<std::vector<Rational>> observational_joint(const ConfoundedModel& m) {
    std::vector<std::vector<Rational>> table(m.n_x(), std::vector<Rational>(m.n_y()));
    for (std::size_t r = 0; r < m.n_x(); ++r) {
        for (std::uint64_t f = 0; f < m.table_count(); ++f) {
            const auto& w = m.weight(r, f);
            if (w == 0) continue;
            table[r][FunctionTable::from_index(m.n_x(), m.n_y(), f).outputs()[r]] += w;
        }
    }
    return table;
}

std::vector<Rational> observational_conditional(const ConfoundedModel& m, std::size_t x) {
    check_input(x, m.n_x());
    auto row = observational_joint(m)[x];
    Rational p_x = 0;
    for (const auto& v : row) p_x += v;
    if (p_x == 0) throw UndefinedConditionalError("p(X=" + std::to_string(x) + ") is zero");
    for (auto& v : row) v /= p_x;
    return row;
}

std::vector<Rational> do_conditional(const ConfoundedModel& m, std::size_t x) {
    return conditional(m.response_marginal(), x);
}

FunctionDistribution embed_square(const FunctionDistribution& pF) {
    const std::size_t n = std::max(pF.n_x(), pF.n_y());
    std::vector<Rational> weights(qcf::table_count(n, n));
    for (auto i : pF.support()) {
        const auto f = pF.table(i);
        std::vector<std::size_t> outputs(n, 0);
        std::copy(f.outputs().begin(), f.outputs().end(), outputs.begin());
        weights[FunctionTable(n, std::move(outputs)).index()] += pF.weight(i);
    }
    return FunctionDistribution(n, n, std::move(weights));
}

}  // namespace qcf
