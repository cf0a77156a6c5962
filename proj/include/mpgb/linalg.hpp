#pragma once

#include <cstddef>
#include <vector>

namespace mpgb {

/// In-place reduced row echelon form over a field; returns the rank.
template <class K>
std::size_t row_reduce(std::vector<std::vector<K>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        K inv = m[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            K f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class K>
std::size_t rank_of(std::vector<std::vector<K>> m) {
    return row_reduce(m);
}

/// Rows of a and b span the same subspace.
template <class K>
bool same_span(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b) {
    std::size_t ra = rank_of(a), rb = rank_of(b);
    if (ra != rb) return false;
    std::vector<std::vector<K>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(std::move(both)) == ra;
}

/// Basis of the null space {x : m x = 0} where m is given by rows over
/// ncols unknowns. The field descriptor mints fresh scalars.
template <class K>
std::vector<std::vector<K>> kernel_basis(std::vector<std::vector<K>> m, std::size_t ncols,
                                         const typename K::Field& field) {
    const K zero = field.from_long(0);
    const K one = field.from_long(1);
    for (auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    row_reduce(m);
    std::vector<long> pivot_of_col(ncols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        if (!m[r][c].is_zero()) pivot_of_col[c] = static_cast<long>(r++);
    }
    std::vector<std::vector<K>> basis;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<K> v(ncols, zero);
        v[c] = one;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (pivot_of_col[j] >= 0)
                v[j] = -m[static_cast<std::size_t>(pivot_of_col[j])][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace mpgb
