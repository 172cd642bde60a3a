#include "qcf/rational_linalg.hpp"

#include <utility>

#include "qcf/errors.hpp"

namespace qcf {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns) {
    RationalMatrix reduced = m;
    for (const auto& row : reduced) {
        if (row.size() != columns) throw ContractError("ragged matrix");
    }
    const auto pivots = row_reduce(reduced);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;

    RationalMatrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw ContractError("dot product of mismatched lengths");
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) total += a[i] * b[i];
    }
    return total;
}

}  // namespace qcf
