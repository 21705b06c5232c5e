#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gimel/group.hpp"
#include "gimel/ratfun.hpp"

namespace gimel {

// One term c * phi_{(g,xi)} of the skew-group ring over G ⋉ gimel: the
// operator u |-> c * u(g^{-1}(x - xi)). Pure translations have g = e; pure
// group elements have xi = 0.
struct SkewTerm {
    RatFun coeff;
    int g = 0;
    VecQ shift;
};

// multiplication twists the right coefficient by the left transformation:
// (c,g,xi)(c',g',xi') = (c * c'((g)^{-1}(x-xi)), g g', xi + g xi')
class SkewElement {
public:
    GroupPtr group;
    std::vector<SkewTerm> terms;  // canonical: sorted by (g, shift), nonzero coeffs

    SkewElement() = default;
    explicit SkewElement(GroupPtr g) : group(std::move(g)) {}

    const VariableLayout& layout() const { return group->roots.layout; }

    static SkewElement zero(GroupPtr g) { return SkewElement(std::move(g)); }

    static SkewElement from_term(GroupPtr g, RatFun coeff, int elem, VecQ shift) {
        SkewElement a(std::move(g));
        if (!coeff.is_zero()) a.terms.push_back({std::move(coeff), elem, std::move(shift)});
        return a;
    }
    static SkewElement identity(GroupPtr g) {
        auto lay = g->roots.layout;
        return from_term(std::move(g), RatFun::one(lay), 0, vec_zero(lay.total));
    }
    static SkewElement multiplication(GroupPtr g, RatFun f) {
        auto lay = g->roots.layout;
        return from_term(std::move(g), std::move(f), 0, vec_zero(lay.total));
    }
    static SkewElement translation(GroupPtr g, VecQ shift) {
        auto lay = g->roots.layout;
        return from_term(std::move(g), RatFun::one(lay), 0, std::move(shift));
    }
    static SkewElement group_element(GroupPtr g, int elem) {
        auto lay = g->roots.layout;
        return from_term(std::move(g), RatFun::one(lay), elem, vec_zero(lay.total));
    }

    bool is_zero() const { return terms.empty(); }

    void canonicalize() {
        std::sort(terms.begin(), terms.end(), [](const SkewTerm& a, const SkewTerm& b) {
            if (a.g != b.g) return a.g < b.g;
            return vec_lex_less(a.shift, b.shift);
        });
        std::vector<SkewTerm> out;
        for (auto& t : terms) {
            if (!out.empty() && out.back().g == t.g && out.back().shift == t.shift)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const SkewTerm& t) { return t.coeff.is_zero(); }),
                  out.end());
        terms = std::move(out);
    }

    bool operator==(const SkewElement& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].g != o.terms[i].g) return false;
            if (terms[i].shift != o.terms[i].shift) return false;
            if (terms[i].coeff != o.terms[i].coeff) return false;
        }
        return true;
    }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += "  +  ";
            s += terms[i].coeff.str() + " . [" + group->word_str(terms[i].g) + "] . phi" +
                 to_string(terms[i].shift);
        }
        return s;
    }
};

// coefficient transported by (g, xi): c(g^{-1}(x - xi))
inline RatFun transport_coeff(const ReflectionGroup& G, const RatFun& c, int g, const VecQ& xi) {
    int ginv = G.inverse(g);
    bool no_shift = vec_is_zero(xi);
    if (g == 0 && no_shift) return c;
    if (no_shift) return frf_transform_with_inverse(c, &G.mats[ginv], nullptr);
    VecQ s = G.act_point(ginv, xi);
    if (g == 0) return frf_transform_with_inverse(c, nullptr, &s);
    return frf_transform_with_inverse(c, &G.mats[ginv], &s);
}

inline Polynomial transport_poly(const ReflectionGroup& G, const Polynomial& p, int g,
                                 const VecQ& xi) {
    int ginv = G.inverse(g);
    bool no_shift = vec_is_zero(xi);
    if (g == 0 && no_shift) return p;
    if (no_shift) return transform_with_inverse(p, &G.mats[ginv], nullptr);
    VecQ s = G.act_point(ginv, xi);
    if (g == 0) return transform_with_inverse(p, nullptr, &s);
    return transform_with_inverse(p, &G.mats[ginv], &s);
}

inline SkewElement operator+(const SkewElement& a, const SkewElement& b) {
    if (a.group != b.group) throw dimension_mismatch("skew add: different groups");
    SkewElement r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    r.canonicalize();
    return r;
}

inline SkewElement operator-(const SkewElement& a) {
    SkewElement r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

inline SkewElement operator-(const SkewElement& a, const SkewElement& b) { return a + (-b); }

inline SkewElement operator*(const Scalar& c, const SkewElement& a) {
    if (c == 0) return SkewElement::zero(a.group);
    SkewElement r = a;
    for (auto& t : r.terms) t.coeff = c * t.coeff;
    return r;
}

inline SkewElement skew_multiply(const SkewElement& a, const SkewElement& b) {
    if (a.group != b.group) throw dimension_mismatch("skew mul: different groups");
    const auto& G = *a.group;
    SkewElement r(a.group);
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            RatFun c = ta.coeff * transport_coeff(G, tb.coeff, ta.g, ta.shift);
            if (c.is_zero()) continue;
            int g = G.mult(ta.g, tb.g);
            VecQ shift = vec_add(ta.shift, G.act_point(ta.g, tb.shift));
            r.terms.push_back({std::move(c), g, std::move(shift)});
        }
    r.canonicalize();
    return r;
}

// G-action g . (c, h, xi) = (g.c, g h g^{-1}, g xi)
inline SkewElement g_action(int g, const SkewElement& a) {
    const auto& G = *a.group;
    SkewElement r(a.group);
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back({G.act_frf(g, t.coeff), G.conjugate(g, t.g), G.act_point(g, t.shift)});
    r.canonicalize();
    return r;
}

inline SkewElement symmetrize(const SkewElement& a, const ReflectionGroup& G) {
    SkewElement r = SkewElement::zero(a.group);
    for (int g = 0; g < (int)G.order(); ++g) r = r + g_action(g, a);
    return r;
}

inline bool is_g_invariant(const SkewElement& a) {
    for (int s : a.group->simple_ids)
        if (g_action(s, a) != a) return false;
    return true;
}

// divided difference for a simple reflection: (1/gamma)(e - sigma), zero shifts
inline SkewElement divided_difference(GroupPtr G, int simple_index) {
    const auto& rs = G->roots;
    const VecQ& root = rs.simple_roots.at(simple_index);
    RatFun inv_gamma = frf_divide_by_form(RatFun::one(rs.layout),
                                          AffineLinearForm(mat_apply(rs.form, root), Scalar(0)));
    int s = G->simple_ids.at(simple_index);
    SkewElement r(G);
    r.terms.push_back({inv_gamma, 0, vec_zero(rs.layout.total)});
    r.terms.push_back({-inv_gamma, s, vec_zero(rs.layout.total)});
    r.canonicalize();
    return r;
}

// product of divided differences along any word (zero when not reduced)
inline SkewElement divided_diff_along(GroupPtr G, const std::vector<int>& letters) {
    SkewElement r = SkewElement::identity(G);
    for (int s : letters) r = skew_multiply(r, divided_difference(G, s));
    return r;
}

// canonical dd_w via the element's stored reduced word
inline SkewElement divided_diff(GroupPtr G, int w) {
    return divided_diff_along(G, G->word(w));
}

// dd_sigma applied directly to a polynomial: (p - sigma.p)/gamma, exact
inline Polynomial ddiff_apply(const ReflectionGroup& G, int simple_index, const Polynomial& p) {
    const VecQ& root = G.roots.simple_roots.at(simple_index);
    Polynomial num = p - G.act_poly(G.simple_ids[simple_index], p);
    if (num.is_zero()) return num;
    AffineLinearForm gamma(mat_apply(G.roots.form, root), Scalar(0));
    Scalar scale = gamma.normalize();
    return Scalar(1) / scale * poly_exact_divide(num, gamma);
}

inline Polynomial ddiff_apply_word(const ReflectionGroup& G, const std::vector<int>& letters,
                                   const Polynomial& p) {
    Polynomial r = p;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = ddiff_apply(G, *it, r);
    return r;
}

// divided difference on a rational function: (f - sigma f) / gamma
inline RatFun frf_ddiff_apply(const ReflectionGroup& G, int simple_index, const RatFun& f) {
    RatFun num = f - G.act_frf(G.simple_ids[simple_index], f);
    if (num.is_zero()) return num;
    AffineLinearForm gamma(mat_apply(G.roots.form, G.roots.simple_roots.at(simple_index)),
                           Scalar(0));
    return frf_divide_by_form(num, gamma);
}

inline RatFun frf_ddiff_apply_word(const ReflectionGroup& G, const std::vector<int>& letters,
                                   const RatFun& f) {
    RatFun r = f;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = frf_ddiff_apply(G, *it, r);
    return r;
}

// apply a skew element to a plain function (no germ bookkeeping)
inline RatFun apply_to_function(const SkewElement& a, const RatFun& f) {
    const auto& G = *a.group;
    RatFun r = RatFun::zero(a.layout());
    for (const auto& t : a.terms) r = r + t.coeff * transport_coeff(G, f, t.g, t.shift);
    return r;
}

inline RatFun apply_to_function(const SkewElement& a, const Polynomial& p) {
    return apply_to_function(a, RatFun(p));
}

}  // namespace gimel
