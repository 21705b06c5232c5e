#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "gimel/skew.hpp"

using namespace gimel;

namespace {

GroupPtr S2() {
    static GroupPtr g = make_group(typeA_product({2}));
    return g;
}

RatFun var(const GroupPtr& g, int j) {
    return RatFun(Polynomial::variable(g->roots.layout, j));
}

SkewElement rnd_element(const GroupPtr& g, std::mt19937_64& rng, bool with_denoms = true) {
    SkewElement a = SkewElement::zero(g);
    int nvars = g->roots.layout.total;
    int nt = 1 + (int)(rng() % 3);
    for (int t = 0; t < nt; ++t) {
        Polynomial p = Polynomial::zero(g->roots.layout);
        for (int m = 0; m < 2; ++m) {
            ExpVec e(nvars, 0);
            e[rng() % nvars] = (std::uint32_t)(rng() % 3);
            p = p + Polynomial::from_terms(g->roots.layout,
                                           {{e, scalar((long)(rng() % 7) - 3)}});
        }
        RatFun c(p);
        if (with_denoms && rng() % 2) {
            const auto& root = g->roots.positive_roots[rng() % g->roots.positive_roots.size()];
            c = frf_divide_by_form(c, AffineLinearForm(mat_apply(g->roots.form, root), Scalar(0)));
        }
        if (c.is_zero()) continue;
        VecQ shift(nvars, Scalar(0));
        shift[rng() % nvars] = scalar((long)(rng() % 3) - 1);
        a = a + SkewElement::from_term(g, c, (int)(rng() % g->order()), shift);
    }
    return a;
}

}  // namespace

TEST_CASE("skew product basics") {
    auto g = S2();
    VecQ e1{scalar(1), scalar(0)};

    // (x1 phi_{e1}) (x1 phi_{e1}) = x1(x1-1) phi_{2e1}
    auto a = SkewElement::from_term(g, var(g, 0), 0, e1);
    auto sq = skew_multiply(a, a);
    auto x1 = Polynomial::variable(g->roots.layout, 0);
    auto expect = SkewElement::from_term(
        g, RatFun(x1 * (x1 - Polynomial::constant(g->roots.layout, Scalar(1)))), 0,
        VecQ{scalar(2), scalar(0)});
    CHECK(sq == expect);

    // identity is two-sided
    std::mt19937_64 rng(11);
    auto one = SkewElement::identity(g);
    for (int i = 0; i < 10; ++i) {
        auto r = rnd_element(g, rng);
        CHECK(skew_multiply(r, one) == r);
        CHECK(skew_multiply(one, r) == r);
    }

    // inverse shifts compose to phi_0
    auto up = SkewElement::translation(g, e1);
    auto down = SkewElement::translation(g, vec_neg(e1));
    CHECK(skew_multiply(up, down) == one);
}

TEST_CASE("skew product is associative on random triples") {
    std::mt19937_64 rng(23);
    for (auto rs : {typeA_product({2}), typeA_product({3})}) {
        auto g = make_group(rs);
        for (int i = 0; i < 12; ++i) {
            auto a = rnd_element(g, rng), b = rnd_element(g, rng), c = rnd_element(g, rng);
            CHECK(skew_multiply(skew_multiply(a, b), c) == skew_multiply(a, skew_multiply(b, c)));
        }
    }
}

TEST_CASE("g_action is a ring action") {
    auto g2 = S2();
    auto one = SkewElement::identity(g2);
    CHECK(g_action(1, one) == one);

    // swap(1,2) . (x1 phi_{e1}) = x2 phi_{e2}
    VecQ e1{scalar(1), scalar(0)};
    auto a = SkewElement::from_term(g2, var(g2, 0), 0, e1);
    auto swapped = g_action(g2->simple_ids[0], a);
    auto expect = SkewElement::from_term(g2, var(g2, 1), 0, VecQ{scalar(0), scalar(1)});
    CHECK(swapped == expect);

    std::mt19937_64 rng(31);
    auto g3 = make_group(typeA_product({3}));
    for (int i = 0; i < 8; ++i) {
        auto a3 = rnd_element(g3, rng), b3 = rnd_element(g3, rng);
        int g = (int)(rng() % g3->order()), h = (int)(rng() % g3->order());
        CHECK(g_action(g3->mult(g, h), a3) == g_action(g, g_action(h, a3)));
        CHECK(g_action(g, skew_multiply(a3, b3)) ==
              skew_multiply(g_action(g, a3), g_action(g, b3)));
    }
}

TEST_CASE("symmetrize") {
    auto g = S2();
    auto one = SkewElement::identity(g);
    CHECK(symmetrize(one, *g) == Scalar(2) * one);

    auto xsym = symmetrize(SkewElement::multiplication(g, var(g, 0)), *g);
    CHECK(xsym == SkewElement::multiplication(g, var(g, 0) + var(g, 1)));

    // symmetrize((x1-x2)^{-1} phi_{e1}) has the two expected terms
    auto inv = frf_divide_by_form(RatFun::one(g->roots.layout),
                                  AffineLinearForm(VecQ{scalar(1), scalar(-1)}, Scalar(0)));
    VecQ e1{scalar(1), scalar(0)}, e2{scalar(0), scalar(1)};
    auto a = SkewElement::from_term(g, inv, 0, e1);
    auto sym = symmetrize(a, *g);
    auto expect = SkewElement::from_term(g, inv, 0, e1) +
                  SkewElement::from_term(g, -inv, 0, e2);
    CHECK(sym == expect);
    CHECK(is_g_invariant(sym));
    for (int e = 0; e < (int)g->order(); ++e) CHECK(g_action(e, sym) == sym);
}

TEST_CASE("divided differences on polynomials") {
    auto g = S2();
    auto lay = g->roots.layout;
    auto x1 = Polynomial::variable(lay, 0), x2 = Polynomial::variable(lay, 1);
    auto dd = divided_difference(g, 0);

    CHECK(apply_to_function(dd, x1) == RatFun::one(lay));
    CHECK(apply_to_function(dd, x1 * x2).is_zero());
    CHECK(apply_to_function(dd, x1 * x1) == RatFun(x1 + x2));

    // the direct polynomial route agrees with the skew-element route
    CHECK(ddiff_apply(*g, 0, x1 * x1) == x1 + x2);
}

TEST_CASE("nilCoxeter law emerges from the ring") {
    auto g2 = S2();
    auto dd = divided_difference(g2, 0);
    CHECK(skew_multiply(dd, dd).is_zero());

    auto g3 = make_group(typeA_product({3}));
    auto d1 = divided_difference(g3, 0), d2 = divided_difference(g3, 1);
    auto braid_a = skew_multiply(d1, skew_multiply(d2, d1));
    auto braid_b = skew_multiply(d2, skew_multiply(d1, d2));
    CHECK(braid_a == braid_b);
    CHECK_FALSE(braid_a.is_zero());

    // dd_e is the identity element
    CHECK(divided_diff(g3, 0) == SkewElement::identity(g3));

    // every word: reduced -> equals dd of the product; non-reduced -> zero
    for (auto grp : {g3, make_group(dihedral(4))}) {
        int n = (int)grp->num_simple();
        int maxlen = grp->length(grp->w0) + 1;
        std::vector<std::vector<int>> words{{}};
        for (int L = 0; L < maxlen; ++L) {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
                for (int s = 0; s < n; ++s) {
                    auto w2 = w;
                    w2.push_back(s);
                    next.push_back(w2);
                }
            for (const auto& w : next) {
                int elem = grp->mult_word(0, w);
                auto val = divided_diff_along(grp, w);
                if (grp->length(elem) == (int)w.size())
                    CHECK(val == divided_diff(grp, elem));
                else
                    CHECK(val.is_zero());
            }
            words = std::move(next);
        }
    }
}

TEST_CASE("reduced-word independence of dd_w") {
    for (auto rs : {typeA_product({3}), typeA_product({2, 2}), dihedral(4)}) {
        auto g = make_group(rs);
        for (int w = 0; w < (int)g->order(); ++w) {
            // enumerate all reduced words of w by descent recursion
            std::vector<std::vector<int>> all;
            std::function<void(int, std::vector<int>&)> rec = [&](int u, std::vector<int>& acc) {
                if (u == 0) {
                    all.push_back(std::vector<int>(acc.rbegin(), acc.rend()));
                    return;
                }
                for (std::size_t s = 0; s < g->num_simple(); ++s) {
                    int us = g->gen_table[u][(int)s];
                    if (g->length(us) < g->length(u)) {
                        acc.push_back((int)s);
                        rec(us, acc);
                        acc.pop_back();
                    }
                }
            };
            std::vector<int> acc;
            rec(w, acc);
            REQUIRE(!all.empty());
            auto ref = divided_diff_along(g, all[0]);
            for (const auto& word : all) CHECK(divided_diff_along(g, word) == ref);
        }
    }
}
