#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gimel/layout.hpp"
#include "gimel/scalar.hpp"

namespace gimel {

using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t exp_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// Canonical term order: graded-lex on the flat index (degree first, then the
// exponent vector compared from variable 0).
inline bool grlex_less(const ExpVec& a, const ExpVec& b) {
    std::uint64_t da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Sparse multivariate polynomial over Q, terms kept sorted in canonical order
// with no zero coefficients. Immutable by convention after construction.
struct Polynomial {
    VariableLayout layout;
    std::vector<std::pair<ExpVec, Scalar>> terms;

    Polynomial() = default;
    explicit Polynomial(VariableLayout lay) : layout(std::move(lay)) {}

    static Polynomial zero(const VariableLayout& lay) { return Polynomial(lay); }

    static Polynomial constant(const VariableLayout& lay, const Scalar& c) {
        Polynomial p(lay);
        if (c != 0) p.terms.push_back({ExpVec(lay.total, 0), c});
        return p;
    }

    static Polynomial variable(const VariableLayout& lay, int j, const Scalar& c = Scalar(1)) {
        Polynomial p(lay);
        if (c != 0) {
            ExpVec e(lay.total, 0);
            e.at(j) = 1;
            p.terms.push_back({e, c});
        }
        return p;
    }

    static Polynomial from_terms(const VariableLayout& lay,
                                 std::vector<std::pair<ExpVec, Scalar>> raw) {
        Polynomial p(lay);
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
        for (auto& t : raw) {
            if (t.second == 0) continue;
            if (!p.terms.empty() && p.terms.back().first == t.first)
                p.terms.back().second += t.second;
            else
                p.terms.push_back(std::move(t));
        }
        p.strip_zeros();
        return p;
    }

    void strip_zeros() {
        terms.erase(std::remove_if(terms.begin(), terms.end(),
                                   [](const auto& t) { return t.second == 0; }),
                    terms.end());
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && exp_degree(terms[0].first) == 0);
    }
    Scalar constant_value() const {
        if (terms.empty()) return Scalar(0);
        if (!is_constant()) throw error("polynomial is not constant");
        return terms[0].second;
    }

    std::uint64_t degree() const {
        return terms.empty() ? 0 : exp_degree(terms.back().first);
    }

    bool operator==(const Polynomial& o) const {
        return layout == o.layout && terms == o.terms;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const auto& [e, c] = terms[t];
            std::string mono;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j]) continue;
                if (!mono.empty()) mono += "*";
                mono += layout.var_name((int)j);
                if (e[j] > 1) mono += "^" + std::to_string(e[j]);
            }
            std::string coef = c.get_str();
            if (t) s += " + ";
            if (mono.empty())
                s += coef;
            else if (coef == "1")
                s += mono;
            else if (coef == "-1")
                s += "-" + mono;
            else
                s += coef + "*" + mono;
        }
        return s;
    }
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.layout != b.layout) throw dimension_mismatch("poly add layout");
    Polynomial r(a.layout);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && grlex_less(a.terms[i].first, b.terms[j].first))) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || grlex_less(b.terms[j].first, a.terms[i].first)) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Scalar c = a.terms[i].second + b.terms[j].second;
            if (c != 0) r.terms.push_back({a.terms[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

inline Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

inline Polynomial operator*(const Scalar& c, const Polynomial& a) {
    if (c == 0) return Polynomial::zero(a.layout);
    Polynomial r = a;
    for (auto& t : r.terms) t.second *= c;
    return r;
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.layout != b.layout) throw dimension_mismatch("poly mul layout");
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.layout);
    std::map<ExpVec, Scalar, bool (*)(const ExpVec&, const ExpVec&)> acc(grlex_less);
    ExpVec e(a.layout.total);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            acc[e] += ca * cb;
        }
    Polynomial r(a.layout);
    for (auto& [k, v] : acc)
        if (v != 0) r.terms.push_back({k, v});
    return r;
}

inline Polynomial poly_pow(const Polynomial& a, std::uint32_t n) {
    Polynomial r = Polynomial::constant(a.layout, Scalar(1));
    for (std::uint32_t i = 0; i < n; ++i) r = r * a;
    return r;
}

inline Scalar evaluate(const Polynomial& p, const VecQ& point) {
    if ((int)point.size() != p.layout.total) throw dimension_mismatch("evaluate point size");
    Scalar r(0);
    for (const auto& [e, c] : p.terms) {
        Scalar m = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::uint32_t t = 0; t < e[j]; ++t) m *= point[j];
        r += m;
    }
    return r;
}

// Affine-linear form  sum_j coeffs_j x_j + cst, normalized so that the first
// nonzero coefficient is +1 (the normalizing scale is reported to the caller).
struct AffineLinearForm {
    VecQ coeffs;
    Scalar cst;

    AffineLinearForm() = default;
    AffineLinearForm(VecQ c, Scalar k) : coeffs(std::move(c)), cst(std::move(k)) {}

    // Returns the scale s with original = s * normalized.
    Scalar normalize() {
        for (auto& c : coeffs) {
            if (c == 0) continue;
            Scalar s = c;
            for (auto& x : coeffs) x /= s;
            cst /= s;
            return s;
        }
        throw error("affine form has zero linear part");
    }

    Scalar evaluate(const VecQ& point) const { return dot(coeffs, point) + cst; }

    Polynomial to_poly(const VariableLayout& lay) const {
        Polynomial p = Polynomial::constant(lay, cst);
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            p = p + Polynomial::variable(lay, (int)j, coeffs[j]);
        return p;
    }

    bool operator==(const AffineLinearForm& o) const {
        return coeffs == o.coeffs && cst == o.cst;
    }
    bool operator<(const AffineLinearForm& o) const {
        if (vec_lex_less(coeffs, o.coeffs)) return true;
        if (vec_lex_less(o.coeffs, coeffs)) return false;
        return cmp(cst, o.cst) < 0;
    }
};

inline AffineLinearForm form_from_root(const VecQ& gamma_coeffs) {
    AffineLinearForm f(gamma_coeffs, Scalar(0));
    f.normalize();
    return f;
}

// Exact division of p by an affine-linear form; classical division on the
// pivot variable (the first one with nonzero coefficient). Returns nullopt
// when a nonzero remainder is left.
inline std::optional<Polynomial> poly_try_divide(const Polynomial& p, const AffineLinearForm& l) {
    if ((int)l.coeffs.size() != p.layout.total) throw dimension_mismatch("poly divide layout");
    AffineLinearForm norm = l;
    Scalar scale = norm.normalize();
    std::size_t pivot = 0;
    while (norm.coeffs[pivot] == 0) ++pivot;

    Polynomial lpoly = norm.to_poly(p.layout);
    Polynomial rem = p, quot = Polynomial::zero(p.layout);
    while (true) {
        std::uint32_t dmax = 0;
        for (const auto& [e, c] : rem.terms) dmax = std::max(dmax, e[pivot]);
        if (dmax == 0) break;
        Polynomial slice(p.layout);
        for (const auto& [e, c] : rem.terms) {
            if (e[pivot] != dmax) continue;
            ExpVec e2 = e;
            e2[pivot] -= 1;
            slice.terms.push_back({e2, c});
        }
        std::sort(slice.terms.begin(), slice.terms.end(),
                  [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
        quot = quot + slice;
        rem = rem - slice * lpoly;
    }
    if (!rem.is_zero()) return std::nullopt;
    return Scalar(1) / scale * quot;
}

inline Polynomial poly_exact_divide(const Polynomial& p, const AffineLinearForm& l) {
    auto q = poly_try_divide(p, l);
    if (!q) throw not_divisible("no exact quotient by " + l.to_poly(p.layout).str());
    return *q;
}

// ---------------------------------------------------------------------------
// Affine substitution x |-> Minv * x - shift applied to functions, i.e. the
// transported function p(Minv x - shift). The public substitute_affine(p,M,s)
// computes p(M^{-1} x - s); group transports call the *_inv entry point with
// the inverse element's matrix, which is already known exactly.
// ---------------------------------------------------------------------------

struct AffineSubst {
    const MatQ* minv;  // nullptr means identity
    const VecQ* shift; // nullptr means zero

    // Signed-permutation fast path: minv row j has a single entry eps_j at
    // column perm_j.
    bool is_signed_perm = false;
    std::vector<int> perm;
    std::vector<int> sign;

    explicit AffineSubst(const MatQ* m, const VecQ* s) : minv(m), shift(s) {
        if (!minv) {
            is_signed_perm = true;
            return;
        }
        std::size_t n = minv->rows;
        perm.assign(n, -1);
        sign.assign(n, 1);
        is_signed_perm = true;
        for (std::size_t i = 0; i < n && is_signed_perm; ++i) {
            int found = -1;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& v = (*minv)(i, j);
                if (v == 0) continue;
                if (found >= 0 || (v != 1 && v != -1)) {
                    is_signed_perm = false;
                    break;
                }
                found = (int)j;
                sign[i] = (v == 1) ? 1 : -1;
            }
            if (found < 0) is_signed_perm = false;
            perm[i] = found;
        }
    }
};

inline Polynomial transform_with_inverse(const Polynomial& p, const MatQ* minv, const VecQ* shift) {
    const int n = p.layout.total;
    if (minv && ((int)minv->rows != n || (int)minv->cols != n))
        throw dimension_mismatch("substitution matrix size");
    if (shift && (int)shift->size() != n) throw dimension_mismatch("substitution shift size");

    AffineSubst sub(minv, shift);
    bool zero_shift = !shift || vec_is_zero(*shift);

    // variable permutation with signs, no shift: permute exponents directly
    if (sub.is_signed_perm && zero_shift) {
        if (!minv) return p;
        Polynomial r(p.layout);
        r.terms.reserve(p.terms.size());
        for (const auto& [e, c] : p.terms) {
            ExpVec e2(e.size(), 0);
            int s = 1;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j]) continue;
                e2[sub.perm[j]] += e[j];
                if (sub.sign[j] < 0 && (e[j] & 1)) s = -s;
            }
            r.terms.push_back({e2, s < 0 ? Scalar(-c) : c});
        }
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
        return r;
    }

    // general path: image of variable j is the affine form (Minv x)_j - s_j;
    // expand each term as a product of cached powers of those forms
    std::vector<Polynomial> image(n);
    for (int j = 0; j < n; ++j) {
        Polynomial f(p.layout);
        if (minv) {
            for (int k = 0; k < n; ++k)
                if ((*minv)((std::size_t)j, (std::size_t)k) != 0)
                    f = f + Polynomial::variable(p.layout, k, (*minv)((std::size_t)j, (std::size_t)k));
        } else {
            f = Polynomial::variable(p.layout, j);
        }
        if (shift && (*shift)[j] != 0) f = f + Polynomial::constant(p.layout, -(*shift)[j]);
        image[j] = std::move(f);
    }
    std::vector<std::vector<Polynomial>> pow_cache(n);
    auto power_of = [&](int j, std::uint32_t e) -> const Polynomial& {
        auto& cache = pow_cache[j];
        if (cache.empty()) cache.push_back(Polynomial::constant(p.layout, Scalar(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * image[j]);
        return cache[e];
    };
    Polynomial r = Polynomial::zero(p.layout);
    for (const auto& [e, c] : p.terms) {
        Polynomial m = Polynomial::constant(p.layout, c);
        for (int j = 0; j < n; ++j)
            if (e[j]) m = m * power_of(j, e[j]);
        r = r + m;
    }
    return r;
}

// p composed with the inverse of (shift after map): result(x) = p(M^{-1}x - s).
inline Polynomial substitute_affine(const Polynomial& p, const MatQ& map, const VecQ& shift) {
    MatQ minv = mat_inverse(map);
    return transform_with_inverse(p, &minv, &shift);
}

inline Polynomial translate(const Polynomial& p, const VecQ& shift) {
    // p(x - shift)
    return transform_with_inverse(p, nullptr, &shift);
}

// Affine form transported by the same substitution: L(Minv x - s).
inline std::pair<AffineLinearForm, Scalar> form_transform_with_inverse(const AffineLinearForm& l,
                                                                       const MatQ* minv,
                                                                       const VecQ* shift) {
    AffineLinearForm r;
    std::size_t n = l.coeffs.size();
    r.coeffs.assign(n, Scalar(0));
    if (minv) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (l.coeffs[j] != 0 && (*minv)(j, k) != 0) r.coeffs[k] += l.coeffs[j] * (*minv)(j, k);
    } else {
        r.coeffs = l.coeffs;
    }
    r.cst = l.cst;
    if (shift) r.cst -= dot(l.coeffs, *shift);
    Scalar scale = r.normalize();
    return {r, scale};
}

}  // namespace gimel
