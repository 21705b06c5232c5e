#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gimel {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(); every constructor below goes through that.
using Scalar = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_divisible : error {
    using error::error;
};
struct dimension_mismatch : error {
    using error::error;
};
struct pole_at_point : error {
    using error::error;
};
struct non_linear_denominator : error {
    using error::error;
};

inline Scalar scalar(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

// Accepts "n", "-n", "n/d".
inline Scalar scalar_from_string(const std::string& text) {
    Scalar s;
    if (s.set_str(text, 10) != 0) throw error("bad rational literal: " + text);
    s.canonicalize();
    return s;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline bool is_integer(const Scalar& s) { return s.get_den() == 1; }

using VecQ = std::vector<Scalar>;

inline VecQ vec_zero(std::size_t n) { return VecQ(n, Scalar(0)); }

inline VecQ vec_add(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_add");
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecQ vec_sub(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_sub");
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline VecQ vec_neg(const VecQ& a) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline VecQ vec_scale(const Scalar& c, const VecQ& a) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const VecQ& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Scalar dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot");
    Scalar r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline bool vec_lex_less(const VecQ& a, const VecQ& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline std::string to_string(const VecQ& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

// Dense exact matrix, row-major. Only small sizes appear (N x N with N <= ~10).
struct MatQ {
    std::size_t rows = 0, cols = 0;
    VecQ a;  // rows*cols entries

    MatQ() = default;
    MatQ(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Scalar(0)) {}

    Scalar& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static MatQ identity(std::size_t n) {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator<(const MatQ& o) const {
        if (rows != o.rows) return rows < o.rows;
        if (cols != o.cols) return cols < o.cols;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], o.a[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

inline MatQ mat_mul(const MatQ& x, const MatQ& y) {
    if (x.cols != y.rows) throw dimension_mismatch("mat_mul");
    MatQ r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

inline VecQ mat_apply(const MatQ& m, const VecQ& v) {
    if (m.cols != v.size()) throw dimension_mismatch("mat_apply");
    VecQ r(m.rows, Scalar(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) r[i] += m(i, j) * v[j];
    return r;
}

// Gauss-Jordan inverse; throws if singular.
inline MatQ mat_inverse(const MatQ& m) {
    if (m.rows != m.cols) throw dimension_mismatch("mat_inverse");
    std::size_t n = m.rows;
    MatQ a = m, inv = MatQ::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw error("mat_inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                swap(a(piv, j), a(col, j));
                swap(inv(piv, j), inv(col, j));
            }
        Scalar d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Scalar f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Solves M x = b exactly. Returns false when inconsistent; when the system is
// underdetermined any one solution is produced.
inline bool mat_solve(const MatQ& m, const VecQ& b, VecQ& x) {
    std::size_t R = m.rows, C = m.cols;
    MatQ a(R, C + 1);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) a(i, j) = m(i, j);
        a(i, C) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && a(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j <= C; ++j) swap(a(piv, j), a(row, j));
        Scalar d = a(row, col);
        for (std::size_t j = 0; j <= C; ++j) a(row, j) /= d;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Scalar f = a(i, col);
            for (std::size_t j = 0; j <= C; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < R; ++i)
        if (a(i, C) != 0) return false;
    x.assign(C, Scalar(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a(i, C);
    return true;
}

}  // namespace gimel
