#pragma once

#include <random>

#include "gimel/germ.hpp"

namespace gimel::testing {

inline Polynomial random_poly(const VariableLayout& lay, std::mt19937_64& rng, int max_deg = 2,
                              int max_terms = 3) {
    Polynomial p = Polynomial::zero(lay);
    int nt = 1 + (int)(rng() % max_terms);
    for (int t = 0; t < nt; ++t) {
        ExpVec e(lay.total, 0);
        int budget = (int)(rng() % (max_deg + 1));
        for (int d = 0; d < budget; ++d) e[rng() % lay.total] += 1;
        long c = (long)(rng() % 9) - 4;
        p = p + Polynomial::from_terms(lay, {{e, scalar(c ? c : 1)}});
    }
    return p;
}

// stabilizer-invariant local representative at the canonical rep of `point`
inline Germ random_invariant_germ(const World& w, const VecQ& point, std::mt19937_64& rng,
                                  int max_deg = 2) {
    auto rep = w.canonical_rep(point).first;
    Polynomial raw = random_poly(w.group->roots.layout, rng, max_deg);
    Polynomial inv = Polynomial::zero(w.group->roots.layout);
    for (int g : w.stabilizer(rep)) inv = inv + w.group->act_poly(g, raw);
    if (inv.is_zero()) inv = Polynomial::constant(w.group->roots.layout, Scalar(1));
    return make_germ(w, rep, inv);
}

inline VecQ random_point(const VariableLayout& lay, std::mt19937_64& rng, long span = 5) {
    VecQ v(lay.total);
    for (auto& c : v) c = scalar((long)(rng() % (2 * span + 1)) - span);
    return v;
}

}  // namespace gimel::testing
