#include "qcf/classical_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

FunctionSampler::FunctionSampler(const FunctionDistribution& pF) : pF_(pF), support_(pF.support()) {
    Rational cumulative = 0;
    for (std::size_t k = 0; k + 1 < support_.size(); ++k) {
        cumulative += pF_.weight(support_[k]);
        const Integer scaled =
            (boost::multiprecision::numerator(cumulative) << 64) / boost::multiprecision::denominator(cumulative);
        thresholds_.push_back(scaled.convert_to<std::uint64_t>());
    }
}

std::uint64_t FunctionSampler::draw_index(std::mt19937_64& rng) const {
    const std::uint64_t u = rng();
    const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
    return support_[static_cast<std::size_t>(it - thresholds_.begin())];
}

ClassicalQueryRecord query(const FunctionSampler& sampler, std::size_t x, std::mt19937_64& rng) {
    const auto& pF = sampler.distribution();
    if (x >= pF.n_x()) throw DomainError("query input " + std::to_string(x) + " out of range");
    const auto f = pF.table(sampler.draw_index(rng));
    return {x, x, f(x)};
}

ClassicalQueryRecord query(const FunctionDistribution& pF, std::size_t x, std::mt19937_64& rng) {
    return query(FunctionSampler(pF), x, rng);
}

SampleLog run_queries(const FunctionDistribution& pF, std::span<const std::size_t> inputs, std::uint64_t seed) {
    const FunctionSampler sampler(pF);
    std::mt19937_64 rng(seed);
    SampleLog log{{}, seed};
    log.records.reserve(inputs.size());
    for (auto x : inputs) log.records.push_back(query(sampler, x, rng));
    return log;
}

SampleLog run_round_robin(const FunctionDistribution& pF, std::size_t total, std::uint64_t seed) {
    std::vector<std::size_t> inputs(total);
    for (std::size_t i = 0; i < total; ++i) inputs[i] = i % pF.n_x();
    return run_queries(pF, inputs, seed);
}

std::vector<std::vector<std::uint64_t>> tally(const SampleLog& log, std::size_t n_x, std::size_t n_y) {
    std::vector<std::vector<std::uint64_t>> counts(n_x, std::vector<std::uint64_t>(n_y, 0));
    for (const auto& r : log.records) counts.at(r.x_out).at(r.y_out) += 1;
    return counts;
}

ConditionalEstimate estimate_conditionals(const FunctionDistribution& pF, std::size_t queries_per_x,
                                          std::uint64_t seed) {
    if (queries_per_x == 0) throw ContractError("queries_per_x must be positive");
    std::vector<std::size_t> inputs;
    inputs.reserve(pF.n_x() * queries_per_x);
    for (std::size_t x = 0; x < pF.n_x(); ++x) inputs.insert(inputs.end(), queries_per_x, x);
    const auto counts = tally(run_queries(pF, inputs, seed), pF.n_x(), pF.n_y());

    ConditionalEstimate est{queries_per_x, {}, {}};
    const auto n = static_cast<double>(queries_per_x);
    for (const auto& row : counts) {
        std::vector<double> p(row.size());
        std::vector<double> se(row.size());
        for (std::size_t y = 0; y < row.size(); ++y) {
            p[y] = static_cast<double>(row[y]) / n;
            se[y] = std::sqrt(p[y] * (1.0 - p[y]) / n);
        }
        est.p_hat.push_back(std::move(p));
        est.std_error.push_back(std::move(se));
    }
    return est;
}

std::string to_csv(const SampleLog& log) {
    std::ostringstream os;
    os << "x_in,x_out,y_out,query_index\n";
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        const auto& r = log.records[i];
        os << r.x_in << ',' << r.x_out << ',' << r.y_out << ',' << i << '\n';
    }
    return os.str();
}

}  // namespace qcf
