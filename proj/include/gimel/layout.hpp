#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gimel/scalar.hpp"

namespace gimel {

// Variables are grouped into rows (n_1,...,n_n) and flattened row-major:
// (k,i) with 1 <= i <= n_k maps to n_1 + ... + n_{k-1} + (i-1).
struct VariableLayout {
    std::vector<int> rows;
    int total = 0;

    VariableLayout() = default;
    explicit VariableLayout(std::vector<int> row_sizes) : rows(std::move(row_sizes)) {
        for (int n : rows) {
            if (n <= 0) throw error("layout rows must be positive");
            total += n;
        }
    }
    static VariableLayout flat(int n) { return VariableLayout(std::vector<int>{n}); }

    int flat_index(int k, int i) const {  // 1-based (k,i)
        if (k < 1 || k > (int)rows.size() || i < 1 || i > rows[k - 1])
            throw dimension_mismatch("layout index out of range");
        int off = 0;
        for (int r = 0; r < k - 1; ++r) off += rows[r];
        return off + (i - 1);
    }

    std::pair<int, int> unflatten(int j) const {
        int k = 1;
        for (int n : rows) {
            if (j < n) return {k, j + 1};
            j -= n;
            ++k;
        }
        throw dimension_mismatch("layout flat index out of range");
    }

    std::string var_name(int j) const {
        if (rows.size() == 1) return "x" + std::to_string(j + 1);
        auto [k, i] = unflatten(j);
        return "v" + std::to_string(k) + "_" + std::to_string(i);
    }

    // Kronecker shift delta^{k,i}, scaled.
    VecQ delta(int k, int i, const Scalar& a = Scalar(1)) const {
        VecQ v(total, Scalar(0));
        v[flat_index(k, i)] = a;
        return v;
    }

    bool operator==(const VariableLayout& o) const { return rows == o.rows; }
    bool operator!=(const VariableLayout& o) const { return !(*this == o); }
};

}  // namespace gimel
