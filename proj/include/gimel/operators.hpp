#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gimel/skew.hpp"

namespace gimel {

struct not_parabolic_stabilizer : error {
    using error::error;
};
struct not_invariant_coefficient : error {
    using error::error;
};
struct wrong_longest_element : error {
    using error::error;
};

inline SkewElement commutator(const SkewElement& a, const SkewElement& b) {
    return skew_multiply(a, b) - skew_multiply(b, a);
}

namespace detail {

// (v_{k,i} - v_{r,j}) as a polynomial
inline Polynomial coord_diff(const VariableLayout& lay, int k, int i, int r, int j) {
    return Polynomial::variable(lay, lay.flat_index(k, i)) -
           Polynomial::variable(lay, lay.flat_index(r, j));
}

// Vandermonde ratio attached to (row k, slot i): product over the adjacent
// row `other` in the numerator, same-row differences in the denominator.
inline RatFun gz_coefficient(const VariableLayout& lay, int k, int i, int other) {
    Polynomial num = Polynomial::constant(lay, Scalar(1));
    if (other >= 1 && other <= (int)lay.rows.size())
        for (int j = 1; j <= lay.rows[other - 1]; ++j) num = num * coord_diff(lay, k, i, other, j);
    RatFun c(num);
    for (int j = 1; j <= lay.rows[k - 1]; ++j) {
        if (j == i) continue;
        VecQ f(lay.total, Scalar(0));
        f[lay.flat_index(k, i)] = 1;
        f[lay.flat_index(k, j)] = -1;
        c = frf_divide_by_form(c, AffineLinearForm(std::move(f), Scalar(0)));
    }
    return c;
}

}  // namespace detail

// Raising generator attached to row k (numerator over row k-1, shift +a e_{ki}).
inline SkewElement gz_raising(const GroupPtr& G, int k, const Scalar& a) {
    const auto& lay = G->roots.layout;
    SkewElement r = SkewElement::zero(G);
    for (int i = 1; i <= lay.rows[k - 1]; ++i)
        r = r + SkewElement::from_term(G, detail::gz_coefficient(lay, k, i, k - 1), 0,
                                       lay.delta(k, i, a));
    return r;
}

// Lowering generator attached to row k (numerator over row k+1, shift -a e_{ki}).
inline SkewElement gz_lowering(const GroupPtr& G, int k, const Scalar& a) {
    const auto& lay = G->roots.layout;
    SkewElement r = SkewElement::zero(G);
    for (int i = 1; i <= lay.rows[k - 1]; ++i)
        r = r - SkewElement::from_term(G, detail::gz_coefficient(lay, k, i, k + 1), 0,
                                       lay.delta(k, i, -a));
    return r;
}

// E_kk = sum_i (v_{ki} + i - 1) - sum_i (v_{k-1,i} + i - 1), as a
// multiplication operator.
inline SkewElement gz_diagonal(const GroupPtr& G, int k) {
    const auto& lay = G->roots.layout;
    Polynomial h = Polynomial::zero(lay);
    for (int i = 1; i <= lay.rows[k - 1]; ++i)
        h = h + Polynomial::variable(lay, lay.flat_index(k, i)) +
            Polynomial::constant(lay, scalar(i - 1));
    if (k >= 2)
        for (int i = 1; i <= lay.rows[k - 2]; ++i)
            h = h - Polynomial::variable(lay, lay.flat_index(k - 1, i)) -
                Polynomial::constant(lay, scalar(i - 1));
    return SkewElement::multiplication(G, RatFun(h));
}

// The literal printed operator shape (coefficient at the target, numerator
// over `other`), orbit-symmetrized; used by the invariance worked example.
inline SkewElement gz_paper_form(const GroupPtr& G, int k, int other, const Scalar& a) {
    const auto& lay = G->roots.layout;
    SkewElement r = SkewElement::zero(G);
    for (int i = 1; i <= lay.rows[k - 1]; ++i)
        r = r + SkewElement::from_term(G, detail::gz_coefficient(lay, k, i, other), 0,
                                       lay.delta(k, i, a));
    return r;
}

struct GlGenerators {
    GroupPtr group;
    int n = 0;
    std::map<std::pair<int, int>, SkewElement> E;  // 1-based (i,j), all pairs

    const SkewElement& at(int i, int j) const { return E.at({i, j}); }
};

// Generators of U(gl_n) in the Gelfand-Zeitlin realization on layout
// (1,2,...,n) with group S_1 x ... x S_n. Distant E_il are the iterated
// commutators [E_{i,i+-1}, E_{i+-1,l}].
inline GlGenerators build_gz_generators(int n, const Scalar& a = Scalar(1)) {
    if (n < 2) throw error("gl_n needs n >= 2");
    std::vector<int> rows(n);
    for (int k = 1; k <= n; ++k) rows[k - 1] = k;
    GlGenerators out;
    out.group = make_group(typeA_product(rows));
    out.n = n;
    for (int k = 1; k <= n; ++k) out.E[{k, k}] = gz_diagonal(out.group, k);
    for (int k = 1; k < n; ++k) {
        out.E[{k, k + 1}] = gz_raising(out.group, k, a);
        out.E[{k + 1, k}] = gz_lowering(out.group, k, a);
    }
    for (int d = 2; d < n; ++d)
        for (int i = 1; i + d <= n; ++i) {
            out.E[{i, i + d}] = commutator(out.at(i, i + 1), out.at(i + 1, i + d));
            out.E[{i + d, i}] = commutator(out.at(i + d, i + d - 1), out.at(i + d - 1, i));
        }
    return out;
}

struct RelationFailure {
    int i, j, k, l;
    SkewElement difference;
};

// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj over all index pairs
inline std::vector<RelationFailure> check_gl_relations(const GlGenerators& g) {
    std::vector<RelationFailure> fails;
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
            for (int k = 1; k <= g.n; ++k)
                for (int l = 1; l <= g.n; ++l) {
                    SkewElement lhs = commutator(g.at(i, j), g.at(k, l));
                    SkewElement rhs = SkewElement::zero(g.group);
                    if (j == k) rhs = rhs + g.at(i, l);
                    if (l == i) rhs = rhs - g.at(k, j);
                    if (lhs != rhs) fails.push_back({i, j, k, l, lhs - rhs});
                }
    return fails;
}

struct OgzGenerators {
    GroupPtr group;
    std::map<std::string, SkewElement> ops;  // "E1","F1",...
};

// Orthogonal Gelfand-Zeitlin generators for arbitrary row sizes; shift scale a.
inline OgzGenerators build_ogz_generators(const std::vector<int>& row_sizes,
                                          const Scalar& a = Scalar(1)) {
    if (row_sizes.empty()) throw error("ogz needs rows");
    if (a == 0) throw error("ogz shift scale must be nonzero");
    OgzGenerators out;
    out.group = make_group(typeA_product(row_sizes));
    int n = (int)row_sizes.size();
    for (int k = 1; k < n; ++k) {
        out.ops["E" + std::to_string(k)] = gz_raising(out.group, k, a);
        out.ops["F" + std::to_string(k)] = gz_lowering(out.group, k, a);
    }
    return out;
}

// A standard element of type A: the full G-symmetrization of f phi_{a e_{k1}}.
inline SkewElement standard_element(const GroupPtr& G, const RatFun& f, int k, const Scalar& a) {
    const auto& lay = G->roots.layout;
    return symmetrize(SkewElement::from_term(G, f, 0, lay.delta(k, 1, a)), *G);
}

struct OperatorPart {
    int w;     // element id
    RatFun p;  // G_v-invariant coefficient
    VecQ v;    // shift
};

namespace detail {

inline std::vector<int> validate_part(const ReflectionGroup& G, const OperatorPart& part) {
    auto stab = G.stabilizer(part.v);
    if (!G.is_parabolic(stab))
        throw not_parabolic_stabilizer("shift stabilizer is not parabolic");
    for (int g : stab)
        if (G.act_frf(g, part.p) != part.p)
            throw not_invariant_coefficient("coefficient not stabilizer-invariant");
    if (part.w != G.longest_short_rep(stab))
        throw wrong_longest_element("w is not the longest short coset representative");
    return stab;
}

}  // namespace detail

// sum_i dd_{w_i} o p_i phi_{v_i}  (composition in the ring)
inline SkewElement build_type_I(const GroupPtr& G, const std::vector<OperatorPart>& parts) {
    SkewElement r = SkewElement::zero(G);
    for (const auto& part : parts) {
        detail::validate_part(*G, part);
        r = r + skew_multiply(divided_diff(G, part.w),
                              SkewElement::from_term(G, part.p, 0, part.v));
    }
    return r;
}

// dd_sigma . X = (1/gamma)(X - sigma.X), extended along a reduced word
inline SkewElement dd_action(const GroupPtr& G, int simple_index, const SkewElement& x) {
    const auto& rs = G->roots;
    AffineLinearForm gamma(mat_apply(rs.form, rs.simple_roots.at(simple_index)), Scalar(0));
    SkewElement num = x - g_action(G->simple_ids[simple_index], x);
    SkewElement r(G);
    for (auto& t : num.terms)
        r.terms.push_back({frf_divide_by_form(t.coeff, gamma), t.g, t.shift});
    r.canonicalize();
    return r;
}

// sum_i dd_{w_i} . p_i phi_{v_i}  (the action, not the composition)
inline SkewElement build_type_II(const GroupPtr& G, const std::vector<OperatorPart>& parts) {
    SkewElement r = SkewElement::zero(G);
    for (const auto& part : parts) {
        detail::validate_part(*G, part);
        SkewElement x = SkewElement::from_term(G, part.p, 0, part.v);
        const auto& word = G->word(part.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = dd_action(G, *it, x);
        r = r + x;
    }
    return r;
}

// d_chi X holomorphic <=> every coefficient of d_chi * X has an empty
// denominator after cancellation (X must lie in S(V): trivial group parts).
inline bool validate_rational_galois_generator(const SkewElement& x, const Character& chi) {
    for (const auto& t : x.terms)
        if (t.g != 0) throw error("rational Galois generator must have trivial group parts");
    if (!is_g_invariant(x)) throw error("rational Galois generator must be G-invariant");
    RatFun d(d_chi(*x.group, chi));
    for (const auto& t : x.terms)
        if (!(d * t.coeff).is_polynomial()) return false;
    return true;
}

// 1/Delta = product of 1/gamma_x over positive roots
inline RatFun inverse_vandermonde(const ReflectionGroup& G) {
    RatFun r = RatFun::one(G.roots.layout);
    for (const auto& root : G.roots.positive_roots)
        r = frf_divide_by_form(r, AffineLinearForm(mat_apply(G.roots.form, root), Scalar(0)));
    return r;
}

// sum_{tau in G} tau o (1/Delta): equals dd_{w0} as a ring element
inline SkewElement antisymmetrizer_over_vandermonde(const GroupPtr& G) {
    RatFun inv_delta = inverse_vandermonde(*G);
    SkewElement r = SkewElement::zero(G);
    for (int tau = 0; tau < (int)G->order(); ++tau)
        r = r + skew_multiply(SkewElement::group_element(G, tau),
                              SkewElement::multiplication(G, inv_delta));
    return r;
}

// Delta' = product of gamma_x over the positive roots whose reflection lies
// in the given subgroup.
inline Polynomial parabolic_vandermonde(const ReflectionGroup& G, const std::vector<int>& sub) {
    Polynomial d = Polynomial::constant(G.roots.layout, Scalar(1));
    for (std::size_t r = 0; r < G.roots.positive_roots.size(); ++r) {
        int refl = G.reflection_of_root(r);
        if (std::find(sub.begin(), sub.end(), refl) != sub.end())
            d = d * G.roots.gamma_poly(G.roots.positive_roots[r]);
    }
    return d;
}

// sum_{tau} tau . ((Delta'/Delta) p phi_v): the symmetrized standard element
// of the structure theorem.
inline SkewElement structure_lhs(const GroupPtr& G, const VecQ& v, const RatFun& p) {
    auto stab = G->stabilizer(v);
    if (!G->is_parabolic(stab)) throw not_parabolic_stabilizer("structure_lhs shift point");
    RatFun c = RatFun(parabolic_vandermonde(*G, stab)) * p * inverse_vandermonde(*G);
    return symmetrize(SkewElement::from_term(G, c, 0, v), *G);
}

}  // namespace gimel
