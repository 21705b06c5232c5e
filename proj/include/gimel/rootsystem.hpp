#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gimel/layout.hpp"
#include "gimel/polynomial.hpp"
#include "gimel/scalar.hpp"

namespace gimel {

struct not_a_root_system : error {
    using error::error;
};

// Reflection matrix sigma_v(x) = x - 2(x,v)/(v,v) v with respect to form B.
inline MatQ reflection_matrix(const VecQ& root, const MatQ& form) {
    std::size_t n = root.size();
    VecQ bv = mat_apply(form, root);
    Scalar vv = dot(root, bv);
    if (vv == 0) throw not_a_root_system("isotropic root");
    MatQ m = MatQ::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (bv[k] == 0) continue;
        Scalar f = 2 * bv[k] / vv;
        for (std::size_t j = 0; j < n; ++j) m(j, k) -= f * root[j];
    }
    return m;
}

// Rational root datum: positive roots, a choice of simple roots and the
// bilinear form (standard dot product unless configured otherwise).
struct RootSystem {
    VariableLayout layout;
    std::vector<VecQ> positive_roots;
    std::vector<VecQ> simple_roots;
    MatQ form;

    // gamma_x = (x, .) as an affine-linear form, plus the normalization scale.
    AffineLinearForm gamma(const VecQ& root) const {
        return form_from_root(mat_apply(form, root));
    }
    Polynomial gamma_poly(const VecQ& root) const {
        VecQ c = mat_apply(form, root);
        Polynomial p = Polynomial::zero(layout);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) p = p + Polynomial::variable(layout, (int)j, c[j]);
        return p;
    }

    // product of gamma_x over positive roots; sign-alternating under simple
    // reflections
    Polynomial vandermonde() const {
        Polynomial d = Polynomial::constant(layout, Scalar(1));
        for (const auto& r : positive_roots) d = d * gamma_poly(r);
        return d;
    }
};

namespace detail {

inline bool contains_vec(const std::vector<VecQ>& set, const VecQ& v) {
    return std::any_of(set.begin(), set.end(), [&](const VecQ& w) { return w == v; });
}

// coordinates of x in the simple-root basis, if x lies in their span
inline bool simple_coordinates(const std::vector<VecQ>& simple, const VecQ& x, VecQ& coords) {
    std::size_t n = x.size(), m = simple.size();
    MatQ a(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) a(i, j) = simple[j][i];
    return mat_solve(a, x, coords);
}

}  // namespace detail

// Builds the full root system from simple roots by closing under the
// reflections it discovers. Properties (I) and (II) are then validated.
inline RootSystem root_system_from_simple(VariableLayout layout, std::vector<VecQ> simple,
                                          MatQ form = MatQ()) {
    RootSystem rs;
    rs.layout = std::move(layout);
    rs.simple_roots = std::move(simple);
    rs.form = form.rows ? std::move(form) : MatQ::identity(rs.layout.total);
    for (const auto& s : rs.simple_roots)
        if ((int)s.size() != rs.layout.total) throw dimension_mismatch("simple root size");

    std::vector<VecQ> roots;
    for (const auto& s : rs.simple_roots) {
        if (detail::contains_vec(roots, s)) throw not_a_root_system("repeated simple root");
        roots.push_back(s);
        roots.push_back(vec_neg(s));
    }
    const std::size_t cap = 4096;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<MatQ> refl;
        refl.reserve(roots.size());
        for (const auto& r : roots) refl.push_back(reflection_matrix(r, rs.form));
        for (const auto& m : refl)
            for (std::size_t i = 0; i < roots.size(); ++i) {
                VecQ im = mat_apply(m, roots[i]);
                if (!detail::contains_vec(roots, im)) {
                    roots.push_back(im);
                    grew = true;
                    if (roots.size() > cap) throw not_a_root_system("root closure exceeds cap");
                }
            }
    }

    // scaling condition (II)
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            VecQ c;
            MatQ a(roots[i].size(), 1);
            for (std::size_t k = 0; k < roots[i].size(); ++k) a(k, 0) = roots[i][k];
            if (mat_solve(a, roots[j], c) && c[0] != 1 && c[0] != -1)
                throw not_a_root_system("proportional roots with ratio != +-1");
        }

    for (const auto& r : roots) {
        VecQ coords;
        if (!detail::simple_coordinates(rs.simple_roots, r, coords))
            throw not_a_root_system("root outside simple span");
        bool nonneg = std::all_of(coords.begin(), coords.end(),
                                  [](const Scalar& c) { return c >= 0; });
        bool nonpos = std::all_of(coords.begin(), coords.end(),
                                  [](const Scalar& c) { return c <= 0; });
        if (!nonneg && !nonpos) throw not_a_root_system("root with mixed signs");
        if (nonneg && !vec_is_zero(r)) rs.positive_roots.push_back(r);
    }
    // deterministic order
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), vec_lex_less);
    return rs;
}

// S_{n_1} x ... x S_{n_n} acting by permutations within rows; simple roots are
// the adjacent differences inside each row.
inline RootSystem typeA_product(const std::vector<int>& row_sizes) {
    VariableLayout lay(row_sizes);
    std::vector<VecQ> simple;
    for (int k = 1; k <= (int)row_sizes.size(); ++k)
        for (int i = 1; i < row_sizes[k - 1]; ++i) {
            VecQ r(lay.total, Scalar(0));
            r[lay.flat_index(k, i)] = 1;
            r[lay.flat_index(k, i + 1)] = -1;
            simple.push_back(std::move(r));
        }
    if (simple.empty()) {
        // all rows of size 1: the trivial group acting on lay
        RootSystem rs;
        rs.layout = lay;
        rs.form = MatQ::identity(lay.total);
        return rs;
    }
    return root_system_from_simple(lay, simple);
}

// Rational realizations only: m = 2 (A1xA1), 3 (A2), 4 (B2), 6 (G2).
inline RootSystem dihedral(int m) {
    switch (m) {
        case 2: {
            VariableLayout lay = VariableLayout::flat(2);
            return root_system_from_simple(
                lay, {VecQ{scalar(1), scalar(0)}, VecQ{scalar(0), scalar(1)}});
        }
        case 3: {
            VariableLayout lay = VariableLayout::flat(3);
            return root_system_from_simple(lay, {VecQ{scalar(1), scalar(-1), scalar(0)},
                                                 VecQ{scalar(0), scalar(1), scalar(-1)}});
        }
        case 4: {
            VariableLayout lay = VariableLayout::flat(2);
            return root_system_from_simple(
                lay, {VecQ{scalar(1), scalar(-1)}, VecQ{scalar(0), scalar(1)}});
        }
        case 6: {
            VariableLayout lay = VariableLayout::flat(3);
            return root_system_from_simple(lay, {VecQ{scalar(1), scalar(-1), scalar(0)},
                                                 VecQ{scalar(-2), scalar(1), scalar(1)}});
        }
        default:
            throw not_a_root_system("dihedral(m) has rational root data only for m in {2,3,4,6}");
    }
}

}  // namespace gimel
