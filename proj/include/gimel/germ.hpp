#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gimel/skew.hpp"

namespace gimel {

struct not_holomorphic_at_germ : error {
    VecQ target;
    explicit not_holomorphic_at_germ(VecQ t)
        : error("operator output has a residual pole at " + gimel::to_string(t)),
          target(std::move(t)) {}
};

// The acting group of a germ space: either the full reflection group (orbit
// representatives are chosen with parabolic stabilizers, as the fiber
// machinery requires) or an arbitrary subgroup of it (lex-least
// representatives). Everything downstream is parameterized by this view.
struct World {
    GroupPtr group;           // master reflection group
    std::vector<int> elems;   // sorted element ids of the acting subgroup
    bool parabolic_reps = true;

    static World full(GroupPtr g) {
        World w;
        w.elems = g->all_elements();
        w.group = std::move(g);
        return w;
    }
    static World subgroup(GroupPtr g, std::vector<int> elems) {
        World w;
        w.group = std::move(g);
        std::sort(elems.begin(), elems.end());
        w.elems = std::move(elems);
        w.parabolic_reps = false;
        return w;
    }

    bool is_full() const { return elems.size() == group->order(); }
    std::size_t order() const { return elems.size(); }

    std::vector<int> stabilizer(const VecQ& point) const {
        std::vector<int> st;
        for (int g : elems)
            if (group->act_point(g, point) == point) st.push_back(g);
        return st;
    }

    // canonical orbit representative and one element carrying point to it
    std::pair<VecQ, int> canonical_rep(const VecQ& point) const {
        if (parabolic_reps && is_full()) {
            auto rep = group->parabolic_orbit_representative(point);
            return {rep.point, rep.g};
        }
        VecQ best = point;
        int bg = 0;
        for (int g : elems) {
            VecQ q = group->act_point(g, point);
            if (vec_lex_less(q, best)) {
                best = q;
                bg = g;
            }
        }
        return {best, bg};
    }

    bool operator==(const World& o) const {
        return group == o.group && elems == o.elems && parabolic_reps == o.parabolic_reps;
    }
};

// A W-invariant germ: denotes sum_{g in W} g . (local at base). The local
// representative is holomorphic at the base point: a rational function none
// of whose denominator factors vanishes there (a plain polynomial in the
// algebraic cases), invariant under the stabilizer of base. base is the
// canonical representative of its orbit.
struct Germ {
    VecQ base;
    RatFun local;
};

inline void check_regular_at(const RatFun& f, const VecQ& point) {
    for (const auto& d : f.den)
        if (d.evaluate(point) == 0) throw not_holomorphic_at_germ(point);
}

inline Germ make_germ(const World& w, const VecQ& point, const RatFun& local_at_point) {
    auto [rep, g] = w.canonical_rep(point);
    RatFun local =
        (g == 0 && rep == point) ? local_at_point : w.group->act_frf(g, local_at_point);
    check_regular_at(local, rep);
    for (int s : w.stabilizer(rep))
        if (w.group->act_frf(s, local) != local)
            throw error("germ local representative is not stabilizer-invariant at " +
                        to_string(rep));
    return {rep, local};
}

inline Germ make_germ(const World& w, const VecQ& point, const Polynomial& local_at_point) {
    return make_germ(w, point, RatFun(local_at_point));
}

// Finitely supported invariant section: one germ per orbit, keyed by the
// canonical representative.
struct GermSection {
    World world;
    std::map<VecQ, RatFun, bool (*)(const VecQ&, const VecQ&)> entries{vec_lex_less};

    explicit GermSection(World w) : world(std::move(w)) {}

    void add(const Germ& g) {
        auto it = entries.find(g.base);
        if (it == entries.end()) {
            if (!g.local.is_zero()) entries.emplace(g.base, g.local);
        } else {
            it->second = it->second + g.local;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    void add_at(const VecQ& point, const RatFun& local) { add(make_germ(world, point, local)); }

    bool is_zero() const { return entries.empty(); }

    bool operator==(const GermSection& o) const {
        if (!(world == o.world)) return false;
        if (entries.size() != o.entries.size()) return false;
        auto it = entries.begin();
        auto jt = o.entries.begin();
        for (; it != entries.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    bool operator!=(const GermSection& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (const auto& [b, p] : entries)
            s += "germ at " + to_string(b) + ": " + p.str() + "\n";
        return s.empty() ? "0\n" : s;
    }
};

inline GermSection section_of(const World& w, const Germ& g) {
    GermSection s(w);
    s.add(g);
    return s;
}

inline GermSection operator+(const GermSection& a, const GermSection& b) {
    GermSection r = a;
    for (const auto& [base, p] : b.entries) r.add({base, p});
    return r;
}

inline GermSection operator*(const Scalar& c, const GermSection& a) {
    GermSection r(a.world);
    if (c == 0) return r;
    for (const auto& [base, p] : a.entries) r.entries.emplace(base, c * p);
    return r;
}

// Full germ of the denoted object at an arbitrary point:
// sum over {g in W : g . base = point} of g . local  (zero off the support).
inline RatFun germ_at(const GermSection& s, const VecQ& point) {
    const auto& W = s.world;
    RatFun out = RatFun::zero(W.group->roots.layout);
    auto [rep, to_rep] = W.canonical_rep(point);
    auto it = s.entries.find(rep);
    if (it == s.entries.end()) return out;
    for (int g : W.elems)
        if (W.group->act_point(g, it->first) == point) out = out + W.group->act_frf(g, it->second);
    return out;
}

namespace detail {

// Collected coefficient of A applied to the section, at one exact target
// point: sum over (term, g in W) with  term.g * (g . base) + term.shift =
// target  of  coeff * ((term.g * g) . local)(x - shift).
inline RatFun collect_at_target(const SkewElement& a, const GermSection& s, const VecQ& target) {
    const auto& W = s.world;
    const auto& G = *W.group;
    RatFun acc = RatFun::zero(G.roots.layout);
    for (const auto& t : a.terms) {
        // g . base must equal term.g^{-1} (target - shift)
        VecQ pre = G.act_point(G.inverse(t.g), vec_sub(target, t.shift));
        for (const auto& [base, local] : s.entries) {
            for (int g : W.elems) {
                if (G.act_point(g, base) != pre) continue;
                int gg = G.mult(t.g, g);
                RatFun moved = transport_coeff(G, G.act_frf(gg, local), 0, t.shift);
                acc = acc + t.coeff * moved;
            }
        }
    }
    return acc;
}

}  // namespace detail

// The set of orbit representatives that can carry output germs of A applied
// to the section.
inline std::vector<VecQ> target_orbits(const SkewElement& a, const GermSection& s) {
    const auto& W = s.world;
    std::vector<VecQ> reps;
    for (const auto& t : a.terms)
        for (const auto& [base, local] : s.entries)
            for (int g : W.elems) {
                VecQ tgt = vec_add(W.group->act_point(t.g, W.group->act_point(g, base)), t.shift);
                VecQ rep = W.canonical_rep(tgt).first;
                if (std::find(reps.begin(), reps.end(), rep) == reps.end())
                    reps.push_back(std::move(rep));
            }
    std::sort(reps.begin(), reps.end(), vec_lex_less);
    return reps;
}

// Action of a skew element on an invariant section. For every reachable
// orbit the collected coefficient must be holomorphic at the target point:
// every denominator factor that vanishes there has to cancel, otherwise
// not_holomorphic_at_germ is raised. The stored local representative divides
// out the stabilizer multiplicity of the full orbit sum.
inline GermSection apply_operator(const SkewElement& a, const GermSection& s) {
    const auto& W = s.world;
    for (const auto& t : a.terms)
        if (std::find(W.elems.begin(), W.elems.end(), t.g) == W.elems.end())
            throw error("operator group part leaves the acting subgroup");
    GermSection out(W);
    for (const auto& rep : target_orbits(a, s)) {
        RatFun h = detail::collect_at_target(a, s, rep);
        if (h.is_zero()) continue;
        check_regular_at(h, rep);
        Scalar stab = scalar((long)W.stabilizer(rep).size());
        out.add({rep, Scalar(1) / stab * h});
    }
    return out;
}

inline GermSection apply_operator(const SkewElement& a, const Germ& g, const World& w) {
    return apply_operator(a, section_of(w, g));
}

}  // namespace gimel
