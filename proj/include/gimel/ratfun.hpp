#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gimel/polynomial.hpp"

namespace gimel {

// Rational function with factored denominator: a polynomial numerator over a
// multiset of affine-linear forms. Kept fully cancelled: no stored factor
// divides the numerator. All denominators arising in this engine (Vandermonde
// factors, root forms and their shifts) stay affine-linear under every
// operation used here, so no general gcd is ever needed.
struct RatFun {
    Polynomial num;
    std::vector<AffineLinearForm> den;  // sorted multiset of normalized forms

    RatFun() = default;
    explicit RatFun(Polynomial p) : num(std::move(p)) {}

    static RatFun zero(const VariableLayout& lay) { return RatFun(Polynomial::zero(lay)); }
    static RatFun one(const VariableLayout& lay) {
        return RatFun(Polynomial::constant(lay, Scalar(1)));
    }
    static RatFun constant(const VariableLayout& lay, const Scalar& c) {
        return RatFun(Polynomial::constant(lay, c));
    }

    const VariableLayout& layout() const { return num.layout; }
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.empty(); }

    const Polynomial& as_polynomial() const {
        if (!den.empty()) throw error("rational function has residual denominator");
        return num;
    }

    void cancel() {
        if (num.is_zero()) {
            den.clear();
            return;
        }
        std::vector<AffineLinearForm> kept;
        kept.reserve(den.size());
        for (const auto& f : den) {
            if (auto q = poly_try_divide(num, f))
                num = std::move(*q);
            else
                kept.push_back(f);
        }
        den = std::move(kept);
        std::sort(den.begin(), den.end());
    }

    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(" + num.str() + ")";
        for (const auto& f : den) s += " / (" + f.to_poly(num.layout).str() + ")";
        return s;
    }
};

inline RatFun frf_from_fraction(Polynomial p, std::vector<AffineLinearForm> raw_factors) {
    RatFun r(std::move(p));
    for (auto f : raw_factors) {
        Scalar s = f.normalize();
        r.num = Scalar(1) / s * r.num;
        r.den.push_back(std::move(f));
    }
    std::sort(r.den.begin(), r.den.end());
    r.cancel();
    return r;
}

// multiset difference a \ b
inline std::vector<AffineLinearForm> factor_difference(const std::vector<AffineLinearForm>& a,
                                                       const std::vector<AffineLinearForm>& b) {
    std::vector<AffineLinearForm> r;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && !(a[i] < b[j]) && !(b[j] < a[i])) {
            ++i;
            ++j;
        } else if (j < b.size() && b[j] < a[i]) {
            ++j;
        } else {
            r.push_back(a[i++]);
        }
    }
    return r;
}

inline Polynomial factors_to_poly(const VariableLayout& lay,
                                  const std::vector<AffineLinearForm>& fs) {
    Polynomial p = Polynomial::constant(lay, Scalar(1));
    for (const auto& f : fs) p = p * f.to_poly(lay);
    return p;
}

inline RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.layout() != b.layout()) throw dimension_mismatch("frf add layout");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // common denominator = multiset max of the two factor lists
    auto only_a = factor_difference(a.den, b.den);
    auto only_b = factor_difference(b.den, a.den);
    RatFun r;
    r.num = a.num * factors_to_poly(a.layout(), only_b) + b.num * factors_to_poly(a.layout(), only_a);
    r.den = a.den;
    for (const auto& f : only_b) r.den.push_back(f);
    std::sort(r.den.begin(), r.den.end());
    r.cancel();
    return r;
}

inline RatFun operator-(const RatFun& a) {
    RatFun r = a;
    r.num = -r.num;
    return r;
}

inline RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

inline RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.layout() != b.layout()) throw dimension_mismatch("frf mul layout");
    RatFun r;
    r.num = a.num * b.num;
    r.den = a.den;
    r.den.insert(r.den.end(), b.den.begin(), b.den.end());
    std::sort(r.den.begin(), r.den.end());
    r.cancel();
    return r;
}

inline RatFun operator*(const Scalar& c, const RatFun& a) {
    RatFun r = a;
    r.num = c * r.num;
    if (r.num.is_zero()) r.den.clear();
    return r;
}

inline RatFun frf_divide_by_form(const RatFun& a, AffineLinearForm f) {
    RatFun r = a;
    if (r.is_zero()) return r;
    Scalar s = f.normalize();
    r.num = Scalar(1) / s * r.num;
    r.den.push_back(std::move(f));
    std::sort(r.den.begin(), r.den.end());
    r.cancel();
    return r;
}

inline Scalar evaluate(const RatFun& a, const VecQ& point) {
    Scalar d(1);
    for (const auto& f : a.den) {
        Scalar v = f.evaluate(point);
        if (v == 0)
            throw pole_at_point("denominator factor (" + f.to_poly(a.layout()).str() +
                                ") vanishes at " + to_string(point));
        d *= v;
    }
    return evaluate(a.num, point) / d;
}

// Transported function a(Minv x - shift); factor normalization scales are
// folded into the numerator so factors stay canonical.
inline RatFun frf_transform_with_inverse(const RatFun& a, const MatQ* minv, const VecQ* shift) {
    RatFun r;
    r.num = transform_with_inverse(a.num, minv, shift);
    Scalar scale(1);
    r.den.reserve(a.den.size());
    for (const auto& f : a.den) {
        auto [g, s] = form_transform_with_inverse(f, minv, shift);
        scale *= s;
        r.den.push_back(std::move(g));
    }
    if (scale != 1) r.num = Scalar(1) / scale * r.num;
    std::sort(r.den.begin(), r.den.end());
    r.cancel();
    return r;
}

}  // namespace gimel
