#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gimel/ratfun.hpp"
#include "gimel/rootsystem.hpp"

namespace gimel {

struct order_cap_exceeded : error {
    using error::error;
};
struct not_parabolic : error {
    using error::error;
};
struct no_parabolic_representative : error {
    using error::error;
};
struct inconsistent_character : error {
    using error::error;
};

// Finite reflection group, exhaustively enumerated. Elements are indexed in
// BFS order over right multiplication by simple reflections, which sorts them
// by (length, lex reduced word); index 0 is the identity and the stored word
// of each element is its lex-least reduced expression.
class ReflectionGroup {
public:
    RootSystem roots;
    std::vector<MatQ> mats;
    std::vector<int> lengths;
    std::vector<std::vector<int>> words;   // canonical reduced word, generator indices
    std::vector<std::vector<int>> gen_table;  // gen_table[g][s] = g * s
    std::vector<int> inverse_table;
    std::vector<int> simple_ids;  // element id of each simple reflection
    int w0 = 0;

    static ReflectionGroup generate(const RootSystem& rs, std::size_t order_cap = 10000) {
        ReflectionGroup g;
        g.roots = rs;
        const std::size_t nsimple = rs.simple_roots.size();
        std::vector<MatQ> gens;
        gens.reserve(nsimple);
        for (const auto& s : rs.simple_roots) gens.push_back(reflection_matrix(s, rs.form));

        std::map<MatQ, int> index;
        MatQ id = MatQ::identity(rs.layout.total);
        g.mats.push_back(id);
        g.lengths.push_back(0);
        g.words.push_back({});
        index[id] = 0;

        std::size_t level_begin = 0;
        while (level_begin < g.mats.size()) {
            std::size_t level_end = g.mats.size();
            for (std::size_t i = level_begin; i < level_end; ++i)
                for (std::size_t s = 0; s < nsimple; ++s) {
                    MatQ m = mat_mul(g.mats[i], gens[s]);
                    if (index.count(m)) continue;
                    if (g.mats.size() >= order_cap)
                        throw order_cap_exceeded("group order exceeds cap");
                    index[m] = (int)g.mats.size();
                    g.mats.push_back(std::move(m));
                    g.lengths.push_back(g.lengths[i] + 1);
                    auto w = g.words[i];
                    w.push_back((int)s);
                    g.words.push_back(std::move(w));
                }
            level_begin = level_end;
        }

        g.gen_table.assign(g.mats.size(), std::vector<int>(nsimple, -1));
        for (std::size_t i = 0; i < g.mats.size(); ++i)
            for (std::size_t s = 0; s < nsimple; ++s)
                g.gen_table[i][s] = index.at(mat_mul(g.mats[i], gens[s]));

        g.simple_ids.resize(nsimple);
        for (std::size_t s = 0; s < nsimple; ++s) g.simple_ids[s] = index.at(gens[s]);

        g.inverse_table.resize(g.mats.size());
        for (std::size_t i = 0; i < g.mats.size(); ++i) {
            int id_ = 0;
            const auto& w = g.words[i];
            for (auto it = w.rbegin(); it != w.rend(); ++it) id_ = g.gen_table[id_][*it];
            g.inverse_table[i] = id_;
        }

        // closure sanity, element count against the full multiplication map
        for (std::size_t i = 0; i < g.mats.size(); ++i)
            for (std::size_t s = 0; s < nsimple; ++s)
                if (g.gen_table[i][s] < 0) throw error("group closure failed");

        int wmax = 0;
        for (std::size_t i = 0; i < g.mats.size(); ++i)
            if (g.lengths[i] > g.lengths[wmax]) wmax = (int)i;
        for (std::size_t i = 0; i < g.mats.size(); ++i)
            if ((int)i != wmax && g.lengths[i] == g.lengths[wmax])
                throw error("longest element is not unique");
        g.w0 = wmax;

        // every element must map the root set to itself
        for (const auto& m : g.mats)
            for (const auto& r : rs.positive_roots) {
                VecQ im = mat_apply(m, r);
                VecQ nim = vec_neg(im);
                bool hit = detail::contains_vec(rs.positive_roots, im) ||
                           detail::contains_vec(rs.positive_roots, nim);
                if (!hit) throw not_a_root_system("group does not preserve the root set");
            }
        return g;
    }

    std::size_t order() const { return mats.size(); }
    std::size_t num_simple() const { return simple_ids.size(); }
    int length(int g) const { return lengths[g]; }
    const std::vector<int>& word(int g) const { return words[g]; }
    int inverse(int g) const { return inverse_table[g]; }

    int mult(int a, int b) const {
        int r = a;
        for (int s : words[b]) r = gen_table[r][s];
        return r;
    }
    int mult_word(int a, const std::vector<int>& letters) const {
        int r = a;
        for (int s : letters) r = gen_table[r][s];
        return r;
    }
    int conjugate(int g, int h) const {  // g h g^{-1}
        return mult(mult(g, h), inverse_table[g]);
    }

    VecQ act_point(int g, const VecQ& v) const { return mat_apply(mats[g], v); }

    // g . f = f o g^{-1}
    Polynomial act_poly(int g, const Polynomial& p) const {
        if (g == 0) return p;
        return transform_with_inverse(p, &mats[inverse_table[g]], nullptr);
    }
    RatFun act_frf(int g, const RatFun& f) const {
        if (g == 0) return f;
        return frf_transform_with_inverse(f, &mats[inverse_table[g]], nullptr);
    }

    // number of positive roots sent negative; equals length (tested oracle)
    int inversion_count(int g) const {
        int c = 0;
        for (const auto& r : roots.positive_roots) {
            VecQ im = act_point(g, r);
            if (detail::contains_vec(roots.positive_roots, vec_neg(im))) ++c;
        }
        return c;
    }

    // simple reflection contained in the element list, as generator indices
    std::vector<int> simple_content(const std::vector<int>& elems) const {
        std::vector<int> subset;
        for (std::size_t s = 0; s < simple_ids.size(); ++s)
            if (std::find(elems.begin(), elems.end(), simple_ids[s]) != elems.end())
                subset.push_back((int)s);
        return subset;
    }

    std::vector<int> parabolic_subgroup(const std::vector<int>& simple_subset) const {
        std::set<int> elems{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(elems.begin(), elems.end());
            for (int g : cur)
                for (int s : simple_subset) {
                    int h = gen_table[g][s];
                    if (elems.insert(h).second) grew = true;
                }
        }
        return {elems.begin(), elems.end()};
    }

    bool is_parabolic(const std::vector<int>& elems) const {
        auto closure = parabolic_subgroup(simple_content(elems));
        if (closure.size() != elems.size()) return false;
        std::vector<int> sorted = elems;
        std::sort(sorted.begin(), sorted.end());
        return closure == sorted;
    }

    // one representative per left coset wP, each of minimal (length, word);
    // sorted — element ids are already ordered that way
    std::vector<int> shortest_coset_reps(const std::vector<int>& parabolic) const {
        if (!is_parabolic(parabolic)) throw not_parabolic("subgroup not parabolic w.r.t. Theta");
        std::vector<char> seen(order(), 0);
        std::vector<int> reps;
        for (int g = 0; g < (int)order(); ++g) {
            if (seen[g]) continue;
            reps.push_back(g);  // first unseen id is the coset minimum
            for (int p : parabolic) seen[mult(g, p)] = 1;
        }
        return reps;
    }

    std::vector<int> stabilizer(const VecQ& point) const {
        std::vector<int> st;
        for (int g = 0; g < (int)order(); ++g)
            if (act_point(g, point) == point) st.push_back(g);
        return st;
    }

    // orbit representative whose stabilizer is parabolic; lex-least such point
    struct OrbitRep {
        VecQ point;
        int g;  // g . input = point
        std::vector<int> stabilizer_simple;  // generator indices
    };
    OrbitRep parabolic_orbit_representative(const VecQ& point) const {
        std::map<VecQ, int, bool (*)(const VecQ&, const VecQ&)> orbit(vec_lex_less);
        for (int g = 0; g < (int)order(); ++g) {
            VecQ q = act_point(g, point);
            if (!orbit.count(q)) orbit[q] = g;
        }
        for (const auto& [q, g] : orbit) {
            auto st = stabilizer(q);
            if (is_parabolic(st)) return {q, g, simple_content(st)};
        }
        throw no_parabolic_representative("orbit has no point with parabolic stabilizer");
    }

    // longest element of a parabolic subgroup
    int longest_in(const std::vector<int>& elems) const {
        int best = elems.front();
        for (int g : elems)
            if (lengths[g] > lengths[best]) best = g;
        return best;
    }
    // unique longest shortest-coset representative w0 * w0(P)
    int longest_short_rep(const std::vector<int>& parabolic) const {
        auto reps = shortest_coset_reps(parabolic);
        int best = reps.front();
        for (int g : reps)
            if (lengths[g] > lengths[best]) best = g;
        return best;
    }

    std::vector<int> all_elements() const {
        std::vector<int> v(order());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (int)i;
        return v;
    }

    // reflections come in bijection with positive roots
    int reflection_of_root(std::size_t root_idx) const {
        MatQ m = reflection_matrix(roots.positive_roots[root_idx], roots.form);
        for (int g = 0; g < (int)order(); ++g)
            if (mats[g] == m) return g;
        throw error("reflection not found in group");
    }

    std::string word_str(int g) const {
        if (words[g].empty()) return "e";
        std::string s;
        for (int l : words[g]) {
            if (!s.empty()) s += " ";
            s += "s" + std::to_string(l + 1);
        }
        return s;
    }
};

using GroupPtr = std::shared_ptr<const ReflectionGroup>;

inline GroupPtr make_group(const RootSystem& rs, std::size_t cap = 10000) {
    return std::make_shared<ReflectionGroup>(ReflectionGroup::generate(rs, cap));
}

// Linear character given by signs on the simple reflections.
struct Character {
    std::vector<int> sign_on_simple;  // +1 / -1 per generator index

    static Character trivial(const ReflectionGroup& g) {
        return {std::vector<int>(g.num_simple(), 1)};
    }
    static Character sign(const ReflectionGroup& g) {
        return {std::vector<int>(g.num_simple(), -1)};
    }

    int value_by_word(const ReflectionGroup& g, int elem) const {
        int v = 1;
        for (int s : g.word(elem)) v *= sign_on_simple.at(s);
        return v;
    }

    // extends to a homomorphism iff multiplicative across the Cayley table
    void validate(const ReflectionGroup& g) const {
        if (sign_on_simple.size() != g.num_simple())
            throw inconsistent_character("character arity mismatch");
        for (int v : sign_on_simple)
            if (v != 1 && v != -1) throw inconsistent_character("character values must be +-1");
        for (int e = 0; e < (int)g.order(); ++e)
            for (std::size_t s = 0; s < g.num_simple(); ++s) {
                int prod = g.gen_table[e][s];
                if (value_by_word(g, prod) != value_by_word(g, e) * sign_on_simple[s])
                    throw inconsistent_character("character does not respect relations");
            }
    }
};

// d_chi = product of gamma_H over reflection hyperplanes with a_H = 1, where
// chi(sigma_H) = det(sigma_H)^{a_H} and a_H is in {0,1} for real reflection
// groups.
inline Polynomial d_chi(const ReflectionGroup& g, const Character& chi) {
    chi.validate(g);
    Polynomial d = Polynomial::constant(g.roots.layout, Scalar(1));
    for (std::size_t r = 0; r < g.roots.positive_roots.size(); ++r) {
        int refl = g.reflection_of_root(r);
        if (chi.value_by_word(g, refl) == -1)
            d = d * g.roots.gamma(g.roots.positive_roots[r]).to_poly(g.roots.layout);
    }
    return d;
}

}  // namespace gimel
