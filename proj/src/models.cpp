#include "qcf/models.hpp"

#include <algorithm>
#include <numeric>

#include "qcf/errors.hpp"

namespace qcf::models {

FunctionDistribution uniform_all(std::size_t n_x, std::size_t n_y) {
    const auto count = table_count(n_x, n_y);
    return FunctionDistribution(n_x, n_y, std::vector<Rational>(count, Rational(1, static_cast<long>(count))));
}

FunctionDistribution affine_mod(std::size_t n) {
    std::vector<FunctionTable> tables;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> outputs(n);
            for (std::size_t x = 0; x < n; ++x) outputs[x] = (u + s * x) % n;
            tables.emplace_back(n, std::move(outputs));
        }
    }
    // Weight 1/n^2 per (u, s) pair; for composite n distinct pairs may share a table.
    std::vector<std::pair<FunctionTable, Rational>> parts;
    const Rational share(1, static_cast<long>(n * n));
    for (auto& f : tables) parts.emplace_back(std::move(f), share);
    return FunctionDistribution::mixture(n, n, parts);
}

FunctionDistribution permutation_mixture(std::size_t n) {
    table_count(n, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FunctionTable> tables;
    do {
        tables.emplace_back(n, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return FunctionDistribution::uniform_over(n, n, tables);
}

FunctionDistribution constant_mixture(std::size_t n) {
    std::vector<FunctionTable> tables;
    for (std::size_t y = 0; y < n; ++y) tables.emplace_back(n, std::vector<std::size_t>(n, y));
    return FunctionDistribution::uniform_over(n, n, tables);
}

FunctionDistribution uniform_head_fixed_tail(std::size_t n, const std::vector<std::size_t>& tail) {
    if (n < 3 || tail.size() != n - 3) throw ContractError("tail must have length n - 3 with n >= 3");
    std::vector<FunctionTable> tables;
    for (std::size_t head = 0; head < 8; ++head) {
        std::vector<std::size_t> outputs{(head >> 2) & 1, (head >> 1) & 1, head & 1};
        outputs.insert(outputs.end(), tail.begin(), tail.end());
        tables.emplace_back(2, std::move(outputs));
    }
    return FunctionDistribution::uniform_over(n, 2, tables);
}

}  // namespace qcf::models
