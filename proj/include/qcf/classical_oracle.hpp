#pragma once

// The classical oracle x -> (x, f(x)), with a fresh f ~ p(F) on every query.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qcf/causal_core.hpp"

namespace qcf {

/// One oracle call. The oracle copies its input, so x_out == x_in always.
struct ClassicalQueryRecord {
    std::size_t x_in;
    std::size_t x_out;
    std::size_t y_out;
    friend bool operator==(const ClassicalQueryRecord&, const ClassicalQueryRecord&) = default;
};

struct SampleLog {
    std::vector<ClassicalQueryRecord> records;
    std::uint64_t seed;
};

/// Inverse-CDF sampler over the support of p(F). Each draw takes one 64-bit
/// output u of the generator and returns the first table whose cumulative
/// weight c satisfies u < floor(c * 2^64); the last table absorbs the rest.
/// Per-atom bias is below 2^-64.
class FunctionSampler {
  public:
    explicit FunctionSampler(const FunctionDistribution& pF);

    const FunctionDistribution& distribution() const noexcept { return pF_; }
    std::uint64_t draw_index(std::mt19937_64& rng) const;

  private:
    FunctionDistribution pF_;
    std::vector<std::uint64_t> support_;
    std::vector<std::uint64_t> thresholds_;
};

ClassicalQueryRecord query(const FunctionSampler& sampler, std::size_t x, std::mt19937_64& rng);
ClassicalQueryRecord query(const FunctionDistribution& pF, std::size_t x, std::mt19937_64& rng);

/// Queries the inputs in order with a generator seeded by `seed`.
SampleLog run_queries(const FunctionDistribution& pF, std::span<const std::size_t> inputs, std::uint64_t seed);

/// Cycles x = i mod n_x for i in [0, total).
SampleLog run_round_robin(const FunctionDistribution& pF, std::size_t total, std::uint64_t seed);

struct ConditionalEstimate {
    std::size_t queries_per_x;
    /// p_hat(y | x) and sqrt(p_hat (1 - p_hat) / N), indexed [x][y].
    std::vector<std::vector<double>> p_hat;
    std::vector<std::vector<double>> std_error;
};

/// Counts per (x, y) from a log.
std::vector<std::vector<std::uint64_t>> tally(const SampleLog& log, std::size_t n_x, std::size_t n_y);

/// queries_per_x queries at each x in turn (x-major), then frequencies.
ConditionalEstimate estimate_conditionals(const FunctionDistribution& pF, std::size_t queries_per_x,
                                          std::uint64_t seed);

/// Header "x_in,x_out,y_out,query_index", one line per record.
std::string to_csv(const SampleLog& log);

}  // namespace qcf
