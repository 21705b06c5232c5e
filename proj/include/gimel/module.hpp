#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gimel/germ.hpp"
#include "gimel/operators.hpp"
#include "gimel/schubert.hpp"

namespace gimel {

// Basis functional of the restricted dual M*: evaluate at the origin after a
// divided difference, on the germ translated from the orbit representative.
struct FunctionalKey {
    VecQ base;  // canonical representative with parabolic stabilizer
    int w = 0;  // shortest coset representative of G/G_base

    bool operator<(const FunctionalKey& o) const {
        if (vec_lex_less(base, o.base)) return true;
        if (vec_lex_less(o.base, base)) return false;
        return w < o.w;
    }
    bool operator==(const FunctionalKey& o) const { return base == o.base && w == o.w; }
};

using ModuleVector = std::map<FunctionalKey, Scalar>;  // element of M*
using FiberClass = std::map<int, Scalar>;              // Schubert-class coordinates
using FiberVector = std::map<VecQ, FiberClass, bool (*)(const VecQ&, const VecQ&)>;  // element of M

inline FiberVector fiber_vector() { return FiberVector(vec_lex_less); }

inline ModuleVector mv_add(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector r = a;
    for (const auto& [k, c] : b) {
        auto [it, fresh] = r.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

inline ModuleVector mv_scale(const Scalar& c, const ModuleVector& a) {
    ModuleVector r;
    if (c == 0) return r;
    for (const auto& [k, v] : a) r.emplace(k, c * v);
    return r;
}

// Engine for the Harish-Chandra modules over the full reflection-group world:
// dual-basis functionals, fiber classes, operator actions and the explicit
// expansion formula.
class ModuleEngine {
public:
    GroupPtr group;
    SchubertBasis schubert;
    World world;
    // convention flag for the direction of the translation in the basis
    // functionals; to-origin is the reading that makes the dual-basis lemma
    // hold (see tests), from-origin is kept for comparison
    bool functional_from_origin = false;

    explicit ModuleEngine(GroupPtr g)
        : group(g), schubert(SchubertBasis::compute(g)), world(World::full(g)) {}

    const VariableLayout& layout() const { return group->roots.layout; }

    std::vector<int> short_reps_at(const VecQ& base) const {
        auto stab = group->stabilizer(base);
        return group->shortest_coset_reps(stab);
    }

    FunctionalKey functional(const VecQ& point, int w) const {
        auto [rep, g] = world.canonical_rep(point);
        auto reps = short_reps_at(rep);
        if (std::find(reps.begin(), reps.end(), w) == reps.end())
            throw error("w is not a shortest coset representative at this point");
        return {rep, w};
    }

    Polynomial to_origin(const Polynomial& p, const VecQ& base) const {
        VecQ s = functional_from_origin ? base : vec_neg(base);
        return translate(p, s);
    }
    RatFun to_origin(const RatFun& f, const VecQ& base) const {
        VecQ s = functional_from_origin ? base : vec_neg(base);
        return frf_transform_with_inverse(f, nullptr, &s);
    }

    // f_{base,w}(F) = ev_0( dd_w ( germ of F at base, translated to origin ) )
    Scalar apply_functional(const FunctionalKey& f, const GermSection& s) const {
        RatFun g = germ_at(s, f.base);
        if (g.is_zero()) return Scalar(0);
        return schubert.functional(f.w, to_origin(g, f.base));
    }

    Scalar apply_module_vector(const ModuleVector& mv, const GermSection& s) const {
        Scalar r(0);
        for (const auto& [k, c] : mv) r += c * apply_functional(k, s);
        return r;
    }

    // probe germ dual to f_{base,u}: the translated Schubert polynomial
    Germ probe(const VecQ& base, int u) const {
        VecQ s = functional_from_origin ? vec_neg(base) : base;
        return make_germ(world, base, translate(schubert.polys[u], s));
    }

    // A acting on M* by precomposition, expanded through probe pairing
    ModuleVector act_on_functional(const SkewElement& a, const FunctionalKey& f) const {
        ModuleVector out;
        std::vector<VecQ> candidates;
        for (const auto& t : a.terms)
            for (int s = 0; s < (int)group->order(); ++s) {
                VecQ pre = group->act_point(group->inverse(t.g),
                                            vec_sub(group->act_point(s, f.base), t.shift));
                VecQ rep = world.canonical_rep(pre).first;
                if (std::find(candidates.begin(), candidates.end(), rep) == candidates.end())
                    candidates.push_back(std::move(rep));
            }
        for (const auto& base : candidates) {
            Scalar stab = scalar((long)group->stabilizer(base).size());
            for (int u : short_reps_at(base)) {
                GermSection image = apply_operator(a, probe(base, u), world);
                Scalar lambda = apply_functional(f, image) / (stab * schubert.norms[u]);
                if (lambda == 0) continue;
                FunctionalKey k{base, u};
                auto [it, fresh] = out.emplace(k, lambda);
                if (!fresh) it->second += lambda;
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = (it->second == 0) ? out.erase(it) : std::next(it);
        return out;
    }

    // fiber side
    FiberClass reduce_to_fiber(const Germ& g) const {
        return schubert.reduce(to_origin(g.local, g.base), short_reps_at(g.base));
    }
    Germ realize_fiber(const VecQ& base, const FiberClass& c) const {
        Polynomial p = Polynomial::zero(layout());
        for (const auto& [u, x] : c) p = p + x * schubert.polys[u];
        VecQ s = functional_from_origin ? vec_neg(base) : base;
        return make_germ(world, base, translate(p, s));
    }
    GermSection realize_fiber_vector(const FiberVector& m) const {
        GermSection s(world);
        for (const auto& [base, cls] : m) s.add(realize_fiber(base, cls));
        return s;
    }

    FiberVector act_on_fiber_vector(const SkewElement& a, const FiberVector& m) const {
        GermSection s = realize_fiber_vector(m);
        GermSection image = apply_operator(a, s);
        FiberVector out = fiber_vector();
        for (const auto& [base, local] : image.entries) {
            FiberClass c = reduce_to_fiber({base, local});
            if (!c.empty()) out[base] = std::move(c);
        }
        return out;
    }

    Scalar pairing(const ModuleVector& f, const FiberVector& m) const {
        return apply_module_vector(f, realize_fiber_vector(m));
    }

    // local finiteness of a multiplication operator family on one functional
    struct LocalFiniteness {
        bool locally_finite = false;
        std::size_t span_dim = 0;
    };
    LocalFiniteness check_harish_chandra(const FunctionalKey& f,
                                         const std::vector<Polynomial>& b_sample,
                                         std::size_t iter_cap = 0) const {
        std::size_t cap = iter_cap ? iter_cap : group->order() + 2;
        std::vector<ModuleVector> span;
        std::vector<FunctionalKey> keys;
        std::vector<std::vector<Scalar>> rows;  // reduced echelon rows
        auto try_insert = [&](const ModuleVector& v) -> bool {
            // exact rank update; returns true when v enlarges the span
            for (const auto& [k, c] : v)
                if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
            for (auto& row : rows) row.resize(keys.size(), Scalar(0));
            std::vector<Scalar> dense(keys.size(), Scalar(0));
            for (const auto& [k, c] : v)
                dense[std::find(keys.begin(), keys.end(), k) - keys.begin()] = c;
            for (const auto& row : rows) {
                std::size_t piv = 0;
                while (piv < row.size() && row[piv] == 0) ++piv;
                if (piv < row.size() && dense[piv] != 0) {
                    Scalar fac = dense[piv] / row[piv];
                    for (std::size_t j = 0; j < row.size(); ++j) dense[j] -= fac * row[j];
                }
            }
            bool nonzero = std::any_of(dense.begin(), dense.end(),
                                       [](const Scalar& c) { return c != 0; });
            if (nonzero) rows.push_back(std::move(dense));
            return nonzero;
        };

        LocalFiniteness out;
        ModuleVector f0;
        f0.emplace(f, Scalar(1));
        try_insert(f0);
        for (const auto& b : b_sample) {
            SkewElement op = SkewElement::multiplication(group, RatFun(b));
            ModuleVector cur = f0;
            bool stabilized = false;
            for (std::size_t it = 0; it < cap; ++it) {
                ModuleVector next;
                for (const auto& [k, c] : cur)
                    next = mv_add(next, mv_scale(c, act_on_functional(op, k)));
                cur = std::move(next);
                if (!try_insert(cur)) {
                    stabilized = true;
                    break;
                }
            }
            if (!stabilized) return {false, rows.size()};
        }
        out.locally_finite = rows.size() <= group->order();
        out.span_dim = rows.size();
        return out;
    }
};

// Data of a symmetrized standard element sum_tau tau . ((Delta'/Delta) p phi_v).
struct StandardOperatorData {
    VecQ v;
    RatFun p;  // G_v-invariant
};

inline SkewElement build_standard_operator(const GroupPtr& G, const StandardOperatorData& d) {
    return structure_lhs(G, d.v, d.p);
}

// The explicit expansion route for (ev_0 o dd_w o phi_xi) o A applied to a
// germ section: decompose over right cosets of the stabilizer of the
// functional's point, rewrite each block through the structure theorem inside
// that stabilizer, and evaluate the composite functionals directly.
inline Scalar expansion_apply(const ModuleEngine& eng, const StandardOperatorData& data,
                              const FunctionalKey& f, const GermSection& F) {
    const auto& G = *eng.group;
    GroupPtr Gp = eng.group;
    const auto& lay = G.roots.layout;

    auto gv = G.stabilizer(data.v);
    if (!G.is_parabolic(gv)) throw not_parabolic_stabilizer("expansion shift point");
    Polynomial delta_prime = parabolic_vandermonde(G, gv);

    auto gprime = G.stabilizer(f.base);  // parabolic by construction of keys
    Polynomial delta_tilde = parabolic_vandermonde(G, gprime);

    // right coset representatives tau_s of G' \ G chosen so that the
    // stabilizer of tau_s . v inside G' is parabolic
    std::vector<int> taus;
    {
        std::vector<char> seen(G.order(), 0);
        for (int g = 0; g < (int)G.order(); ++g) {
            if (seen[g]) continue;
            std::vector<int> coset;
            for (int h : gprime) {
                int e = G.mult(h, g);
                if (!seen[e]) coset.push_back(e);
                seen[e] = 1;
            }
            int pick = -1;
            for (int cand : coset) {
                VecQ vs = G.act_point(cand, data.v);
                std::vector<int> ps;
                for (int h : gprime)
                    if (G.act_point(h, vs) == vs) ps.push_back(h);
                if (G.is_parabolic(ps)) {
                    pick = cand;
                    break;
                }
            }
            if (pick < 0) throw no_parabolic_representative("no usable coset representative");
            taus.push_back(pick);
        }
    }

    Scalar total(0);
    for (int tau : taus) {
        VecQ vs = G.act_point(tau, data.v);
        std::vector<int> ps;  // stabilizer of vs inside G'
        for (int h : gprime)
            if (G.act_point(h, vs) == vs) ps.push_back(h);
        Polynomial delta_tilde_s = parabolic_vandermonde(G, ps);

        // t_s = (-1)^{l(tau)} (tau.Delta') Delta~ / (Delta~_s Delta) (tau.p)
        RatFun ts = RatFun(G.act_poly(tau, delta_prime)) * RatFun(delta_tilde) *
                    G.act_frf(tau, data.p);
        if (G.length(tau) % 2 == 1) ts = -ts;
        ts = ts * inverse_vandermonde(G);
        for (std::size_t r = 0; r < G.roots.positive_roots.size(); ++r) {
            int refl = G.reflection_of_root(r);
            if (std::find(ps.begin(), ps.end(), refl) != ps.end())
                ts = frf_divide_by_form(
                    ts, AffineLinearForm(mat_apply(G.roots.form, G.roots.positive_roots[r]),
                                         Scalar(0)));
        }
        for (int h : ps)
            if (G.act_frf(h, ts) != ts) throw error("t_s is not stabilizer-invariant");

        // w_s: longest among the shortest left-coset representatives of
        // G'/P_s, enumerated inside G'
        int ws = 0;
        {
            std::vector<char> seen(G.order(), 0);
            std::vector<int> reps;
            for (int u : gprime) {  // gprime ids ascend in (length, word) order
                if (seen[u]) continue;
                reps.push_back(u);
                for (int q : ps) seen[G.mult(u, q)] = 1;
            }
            for (int r : reps)
                if (G.length(r) > G.length(ws)) ws = r;
        }

        // a_s = ev_0( dd_{w0(P_s)} Delta~_s ), a nonzero constant
        int w0ps = G.longest_in(ps);
        Scalar as = evaluate(ddiff_apply_word(G, G.word(w0ps), delta_tilde_s),
                             vec_zero(lay.total));
        if (as == 0) throw error("vanishing structure scalar");

        // germ of F at base + vs, both translations taken to the origin
        VecQ pt = vec_add(f.base, vs);
        RatFun germ = germ_at(F, pt);
        if (germ.is_zero()) continue;
        VecQ sh_g = eng.functional_from_origin ? pt : vec_neg(pt);
        VecQ sh_t = eng.functional_from_origin ? f.base : vec_neg(f.base);
        RatFun u = frf_transform_with_inverse(ts, nullptr, &sh_t) *
                   frf_transform_with_inverse(germ, nullptr, &sh_g);

        RatFun v1 = frf_ddiff_apply_word(G, G.word(ws), u);
        RatFun v2 = frf_ddiff_apply_word(G, G.word(f.w), v1);
        total += as * evaluate(v2, vec_zero(lay.total));
    }
    return total;
}

}  // namespace gimel
