#pragma once

#include <map>
#include <vector>

#include "gimel/skew.hpp"

namespace gimel {

// Schubert polynomials P_g = dd_{g^{-1} w0} Delta and their norms
// c_g = ev_0(dd_g P_g). Their classes form a basis of the coinvariant space
// O_e / J_e; ev_0 o dd_u pairs diagonally against them.
class SchubertBasis {
public:
    GroupPtr group;
    std::vector<Polynomial> polys;  // by element id
    std::vector<Scalar> norms;

    static SchubertBasis compute(GroupPtr G) {
        SchubertBasis b;
        b.group = G;
        Polynomial delta = G->roots.vandermonde();
        b.polys.resize(G->order());
        b.norms.resize(G->order());
        for (int g = 0; g < (int)G->order(); ++g) {
            int u = G->mult(G->inverse(g), G->w0);
            b.polys[g] = ddiff_apply_word(*G, G->word(u), delta);
            Polynomial top = ddiff_apply_word(*G, G->word(g), b.polys[g]);
            b.norms[g] = evaluate(top, vec_zero(G->roots.layout.total));
            if (b.norms[g] == 0) throw error("degenerate Schubert norm");
        }
        return b;
    }

    // ev_0(dd_u p); defined on any rational function regular at the origin
    Scalar functional(int u, const Polynomial& p) const {
        Polynomial q = ddiff_apply_word(*group, group->word(u), p);
        return evaluate(q, vec_zero(group->roots.layout.total));
    }
    Scalar functional(int u, const RatFun& f) const {
        if (f.is_polynomial()) return functional(u, f.num);
        RatFun q = frf_ddiff_apply_word(*group, group->word(u), f);
        return evaluate(q, vec_zero(group->roots.layout.total));
    }

    // coordinates of p in the Schubert classes indexed by the given short
    // representatives: coord_w = ev_0(dd_w p) / c_w
    template <class Fn>
    std::map<int, Scalar> reduce(const Fn& p, const std::vector<int>& short_reps) const {
        std::map<int, Scalar> coords;
        for (int w : short_reps) {
            Scalar c = functional(w, p) / norms[w];
            if (c != 0) coords[w] = c;
        }
        return coords;
    }

    Polynomial realize(const std::map<int, Scalar>& coords) const {
        Polynomial p = Polynomial::zero(group->roots.layout);
        for (const auto& [w, c] : coords) p = p + c * polys[w];
        return p;
    }

    // the residual of a reduction is invisible to every coinvariant functional
    template <class Fn>
    bool residual_annihilated(const Fn& p, const std::vector<int>& functionals) const {
        auto coords = reduce(p, functionals);
        RatFun res = RatFun(p) - RatFun(realize(coords));
        for (int u : functionals)
            if (functional(u, res) != 0) return false;
        return true;
    }
};

}  // namespace gimel
