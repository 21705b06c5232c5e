#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gimel/polynomial.hpp"
#include "gimel/ratfun.hpp"

using namespace gimel;

namespace {

VariableLayout two() { return VariableLayout::flat(2); }

Polynomial x(int j, const VariableLayout& lay) { return Polynomial::variable(lay, j); }

AffineLinearForm diff_form(const VariableLayout& lay, int i, int j) {
    VecQ c(lay.total, Scalar(0));
    c[i] = 1;
    c[j] = -1;
    return AffineLinearForm(c, Scalar(0));
}

}  // namespace

TEST_CASE("scalar basics") {
    CHECK(scalar_from_string("2/4") == scalar(1, 2));
    CHECK(scalar_from_string("-6/4") == scalar(-3, 2));
    CHECK(to_string(scalar(5)) == "5");
    CHECK_THROWS_AS(scalar_from_string("nope"), error);
}

TEST_CASE("polynomial canonical arithmetic") {
    auto lay = two();
    auto p = x(0, lay) + x(1, lay);
    auto q = x(0, lay) - x(1, lay);
    auto prod = p * q;
    auto expect = x(0, lay) * x(0, lay) - x(1, lay) * x(1, lay);
    CHECK(prod == expect);
    CHECK((p - p).is_zero());
    CHECK(prod.degree() == 2);
    CHECK(evaluate(prod, VecQ{scalar(3), scalar(1)}) == scalar(8));
}

TEST_CASE("exact division by affine-linear forms") {
    auto lay = two();
    auto l = diff_form(lay, 0, 1);

    // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
    auto p = x(0, lay) * x(0, lay) - x(1, lay) * x(1, lay);
    CHECK(poly_exact_divide(p, l) == x(0, lay) + x(1, lay));

    // identity case
    auto lin = x(0, lay) - x(1, lay);
    CHECK(poly_exact_divide(lin, l) == Polynomial::constant(lay, Scalar(1)));

    // x1*x2 + 1 is not divisible: substituting x1 <- x2 leaves x2^2 + 1 != 0
    auto bad = x(0, lay) * x(1, lay) + Polynomial::constant(lay, Scalar(1));
    {
        MatQ sw(2, 2);
        sw(0, 1) = 1;
        sw(1, 0) = 1;  // oracle: remainder is the substitution x1 <- x2
        Polynomial subbed = bad;
        for (auto& t : subbed.terms) {
            ExpVec e = t.first;
            e[1] += e[0];
            e[0] = 0;
            t.first = e;
        }
        subbed = Polynomial::from_terms(lay, subbed.terms);
        CHECK_FALSE(subbed.is_zero());
    }
    CHECK_THROWS_AS(poly_exact_divide(bad, l), not_divisible);

    // quotient times divisor reproduces the input
    auto q = poly_exact_divide(p, l);
    CHECK(q * l.to_poly(lay) == p);
}

TEST_CASE("substitute_affine conventions") {
    auto lay = two();
    MatQ id = MatQ::identity(2);
    MatQ sw(2, 2);
    sw(0, 1) = 1;
    sw(1, 0) = 1;

    // x1 under swap(1,2), zero shift -> x2
    CHECK(substitute_affine(x(0, lay), sw, vec_zero(2)) == x(1, lay));

    // x1 under identity, shift e1 -> x1 - 1
    VecQ e1{scalar(1), scalar(0)};
    CHECK(substitute_affine(x(0, lay), id, e1) ==
          x(0, lay) - Polynomial::constant(lay, Scalar(1)));

    // x1*x2 under swap then shift e1 -> (x2 - 1) * x1
    auto p = x(0, lay) * x(1, lay);
    auto got = substitute_affine(p, sw, e1);
    auto expect = (x(1, lay) - Polynomial::constant(lay, Scalar(1))) * x(0, lay);
    CHECK(got == expect);
}

TEST_CASE("substitution round trip with random affine maps") {
    auto lay = VariableLayout::flat(3);
    std::mt19937_64 rng(20240811);
    auto rnd_scalar = [&] { return scalar((long)(rng() % 7) - 3, 1 + (long)(rng() % 3)); };
    for (int trial = 0; trial < 25; ++trial) {
        // random invertible M: permutation + a shear to keep exact invertibility
        MatQ m = MatQ::identity(3);
        std::swap(m.a[0], m.a[(rng() % 3)]);
        MatQ shear = MatQ::identity(3);
        shear(0, 2) = rnd_scalar();
        MatQ map = mat_mul(m, shear);
        bool singular = false;
        try {
            mat_inverse(map);
        } catch (const error&) {
            singular = true;
        }
        if (singular) continue;
        VecQ shift{rnd_scalar(), rnd_scalar(), rnd_scalar()};

        Polynomial p = Polynomial::zero(lay);
        for (int t = 0; t < 4; ++t) {
            ExpVec e{(std::uint32_t)(rng() % 3), (std::uint32_t)(rng() % 2),
                     (std::uint32_t)(rng() % 2)};
            p = p + Polynomial::from_terms(lay, {{e, rnd_scalar()}});
        }
        // apply (map, shift) then the exact inverse transformation
        Polynomial moved = substitute_affine(p, map, shift);
        MatQ minv = mat_inverse(map);
        VecQ inv_shift = vec_neg(mat_apply(map, shift));
        Polynomial back = substitute_affine(moved, minv, inv_shift);
        CHECK(back == p);
    }
}

TEST_CASE("factored rational functions cancel") {
    auto lay = two();
    auto l = diff_form(lay, 0, 1);

    // 1/(x1-x2) + 1/(x2-x1) = 0
    auto a = frf_divide_by_form(RatFun::one(lay), l);
    VecQ c{scalar(-1), scalar(1)};
    auto b = frf_divide_by_form(RatFun::one(lay), AffineLinearForm(c, Scalar(0)));
    CHECK((a + b).is_zero());

    // (x1^2-x2^2)/(x1-x2) normalizes to x1+x2
    auto num = x(0, lay) * x(0, lay) - x(1, lay) * x(1, lay);
    auto f = frf_from_fraction(num, {l});
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == x(0, lay) + x(1, lay));

    // (x1-x2) * 1/(x1-x2) = 1
    auto g = RatFun(x(0, lay) - x(1, lay)) * a;
    CHECK(g == RatFun::one(lay));
}

TEST_CASE("evaluation and poles") {
    auto lay = two();
    auto l = diff_form(lay, 0, 1);
    CHECK(evaluate(x(0, lay) + x(1, lay), VecQ{scalar(0), scalar(0)}) == 0);

    auto inv = frf_divide_by_form(RatFun::one(lay), l);
    CHECK_THROWS_AS(evaluate(inv, VecQ{scalar(1), scalar(1)}), pole_at_point);

    auto f = frf_from_fraction(x(0, lay) * x(0, lay) - x(1, lay) * x(1, lay), {l});
    CHECK(evaluate(f, VecQ{scalar(3), scalar(1)}) == scalar(4));
}

TEST_CASE("frf field laws on random inputs") {
    auto lay = two();
    std::mt19937_64 rng(7);
    auto l01 = diff_form(lay, 0, 1);
    VecQ c10{scalar(-1), scalar(1)};
    AffineLinearForm l10(c10, Scalar(0));
    VecQ cs{scalar(1), scalar(1)};
    AffineLinearForm lsum(cs, scalar(1));

    auto rnd_poly = [&] {
        Polynomial p = Polynomial::zero(lay);
        int nt = 1 + (int)(rng() % 3);
        for (int t = 0; t < nt; ++t) {
            ExpVec e{(std::uint32_t)(rng() % 3), (std::uint32_t)(rng() % 3)};
            long cnum = (long)(rng() % 9) - 4;
            p = p + Polynomial::from_terms(lay, {{e, scalar(cnum ? cnum : 1)}});
        }
        return p;
    };
    auto rnd_frf = [&] {
        RatFun f(rnd_poly());
        if (rng() % 2) f = frf_divide_by_form(f, l01);
        if (rng() % 2) f = frf_divide_by_form(f, lsum);
        if (rng() % 3 == 0) f = frf_divide_by_form(f, l10);
        return f;
    };

    for (int i = 0; i < 100; ++i) {
        RatFun a = rnd_frf(), b = rnd_frf(), c = rnd_frf();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // evaluation commutes with arithmetic where defined
        VecQ pt{scalar((long)(i % 5) + 2), scalar(-(long)(i % 3) - 2)};
        try {
            Scalar lhs = evaluate(a * b + c, pt);
            Scalar rhs = evaluate(a, pt) * evaluate(b, pt) + evaluate(c, pt);
            CHECK(lhs == rhs);
        } catch (const pole_at_point&) {
        }
    }
}
