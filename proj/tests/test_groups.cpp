#include <catch2/catch_amalgamated.hpp>

#include "gimel/group.hpp"

using namespace gimel;

TEST_CASE("group orders for the desk examples") {
    // single reflection
    auto s2 = make_group(typeA_product({2}));
    CHECK(s2->order() == 2);
    // A2 closure gives 6; B2 gives 8; products multiply
    CHECK(make_group(dihedral(3))->order() == 6);
    CHECK(make_group(dihedral(4))->order() == 8);
    CHECK(make_group(typeA_product({2, 2}))->order() == 4);
    CHECK(make_group(typeA_product({3}))->order() == 6);
    CHECK(make_group(typeA_product({1, 2, 3}))->order() == 12);
    CHECK(make_group(dihedral(6))->order() == 12);
    CHECK_THROWS_AS(dihedral(5), not_a_root_system);
}

TEST_CASE("lengths agree with the inversion-count oracle") {
    for (auto rs : {typeA_product({2}), typeA_product({3}), typeA_product({2, 2}), dihedral(4)}) {
        auto g = make_group(rs);
        for (int e = 0; e < (int)g->order(); ++e) {
            CHECK(g->length(e) == g->inversion_count(e));
            CHECK((int)g->word(e).size() == g->length(e));
            // the stored word multiplies back to the element
            CHECK(g->mult_word(0, g->word(e)) == e);
        }
        CHECK(g->length(g->w0) == (int)g->roots.positive_roots.size());
        CHECK(g->mult(g->w0, g->w0) == 0);
    }
}

TEST_CASE("reduced words: identity, simple, longest in S3") {
    auto g = make_group(typeA_product({3}));
    CHECK(g->word(0).empty());
    CHECK(g->word(g->simple_ids[0]) == std::vector<int>{0});
    CHECK(g->length(g->w0) == 3);
    CHECK(g->word(g->w0).size() == 3);
}

TEST_CASE("shortest coset representatives") {
    auto g = make_group(typeA_product({3}));
    auto full = g->all_elements();
    CHECK(g->shortest_coset_reps(full) == std::vector<int>{0});
    CHECK(g->shortest_coset_reps({0}).size() == g->order());

    auto p = g->parabolic_subgroup({0});
    auto reps = g->shortest_coset_reps(p);
    REQUIRE(reps.size() == 3);
    std::vector<int> lens;
    for (int r : reps) lens.push_back(g->length(r));
    CHECK(lens == std::vector<int>{0, 1, 2});
    CHECK(reps.size() * p.size() == g->order());

    // |reps| * |P| = |G| for every parabolic
    for (auto rs : {typeA_product({3}), dihedral(4), typeA_product({2, 2})}) {
        auto gg = make_group(rs);
        for (std::size_t mask = 0; mask < (1u << gg->num_simple()); ++mask) {
            std::vector<int> subset;
            for (std::size_t s = 0; s < gg->num_simple(); ++s)
                if (mask & (1u << s)) subset.push_back((int)s);
            auto par = gg->parabolic_subgroup(subset);
            CHECK(gg->shortest_coset_reps(par).size() * par.size() == gg->order());
        }
    }

    CHECK_THROWS_AS(g->shortest_coset_reps({0, g->w0}), not_parabolic);
}

TEST_CASE("stabilizers and parabolic representatives") {
    auto g = make_group(typeA_product({3}));
    VecQ generic{scalar(1), scalar(2), scalar(5)};
    CHECK(g->stabilizer(generic) == std::vector<int>{0});
    CHECK(g->stabilizer(vec_zero(3)).size() == 6);

    VecQ v{scalar(5), scalar(5), scalar(7)};
    auto st = g->stabilizer(v);
    REQUIRE(st.size() == 2);
    CHECK(g->is_parabolic(st));

    // (7,5,5) sorts to (5,5,7) whose stabilizer is <s1>
    VecQ w{scalar(7), scalar(5), scalar(5)};
    auto rep = g->parabolic_orbit_representative(w);
    CHECK(rep.point == v);
    CHECK(g->act_point(rep.g, w) == rep.point);
    CHECK(rep.stabilizer_simple == std::vector<int>{0});

    auto rep2 = g->parabolic_orbit_representative(generic);
    CHECK(g->stabilizer(rep2.point).size() == 1);
    auto rep3 = g->parabolic_orbit_representative(vec_zero(3));
    CHECK(rep3.point == vec_zero(3));
}

TEST_CASE("characters and relative invariants") {
    auto g = make_group(typeA_product({3}));
    auto lay = g->roots.layout;

    CHECK(d_chi(*g, Character::trivial(*g)) == Polynomial::constant(lay, Scalar(1)));

    auto s2 = make_group(typeA_product({2}));
    auto d = d_chi(*s2, Character::sign(*s2));
    auto x1 = Polynomial::variable(s2->roots.layout, 0);
    auto x2 = Polynomial::variable(s2->roots.layout, 1);
    CHECK(d == x1 - x2);

    auto d3 = d_chi(*g, Character::sign(*g));
    auto x = [&](int j) { return Polynomial::variable(lay, j); };
    CHECK(d3 == (x(0) - x(1)) * (x(0) - x(2)) * (x(1) - x(2)));

    // mixed signs on A2 cannot extend (s1 and s2 are conjugate)
    Character bad{{1, -1}};
    CHECK_THROWS_AS(bad.validate(*g), inconsistent_character);
    // but mixed signs are fine on S2 x S2
    auto g22 = make_group(typeA_product({2, 2}));
    Character mixed{{1, -1}};
    mixed.validate(*g22);
    auto dm = d_chi(*g22, mixed);
    CHECK(dm == Polynomial::variable(g22->roots.layout, 2) -
                    Polynomial::variable(g22->roots.layout, 3));
}

TEST_CASE("vandermonde changes sign under simple reflections") {
    for (auto rs : {typeA_product({3}), dihedral(4), typeA_product({2, 2})}) {
        auto g = make_group(rs);
        auto delta = g->roots.vandermonde();
        for (std::size_t s = 0; s < g->num_simple(); ++s)
            CHECK(g->act_poly(g->simple_ids[s], delta) == -delta);
    }
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(ReflectionGroup::generate(typeA_product({5}), 10), order_cap_exceeded);
}
