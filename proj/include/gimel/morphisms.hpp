#pragma once

#include <algorithm>
#include <vector>

#include "gimel/germ.hpp"

namespace gimel {

struct module_structure_missing : error {
    using error::error;
};

// Z-span of a finite set of rational generator vectors. Membership is exact:
// clear denominators to a common scale, then solve in Hermite normal form.
class Lattice {
public:
    std::vector<VecQ> gens;
    int dim = 0;

    Lattice() = default;
    explicit Lattice(std::vector<VecQ> g) : gens(std::move(g)) {
        if (gens.empty()) throw error("lattice needs generators");
        dim = (int)gens[0].size();
        for (const auto& v : gens)
            if ((int)v.size() != dim) throw dimension_mismatch("lattice generator size");
        build();
    }

    static Lattice standard(int n) {
        std::vector<VecQ> g;
        for (int i = 0; i < n; ++i) {
            VecQ e(n, Scalar(0));
            e[i] = 1;
            g.push_back(std::move(e));
        }
        return Lattice(std::move(g));
    }

    // lattice spanned by the shifts of the given operators and their G-images
    static Lattice from_operator_shifts(const std::vector<SkewElement>& ops) {
        std::vector<VecQ> g;
        for (const auto& op : ops)
            for (const auto& t : op.terms)
                if (!vec_is_zero(t.shift)) g.push_back(t.shift);
        if (g.empty()) throw error("operators have no shifts");
        return Lattice(std::move(g));
    }

    bool contains(const VecQ& v) const {
        if ((int)v.size() != dim) throw dimension_mismatch("lattice membership size");
        // scale to integers
        mpz_class scaled_den = scale_;
        VecQ w = vec_scale(Scalar(scale_), v);
        std::vector<mpz_class> t(dim);
        for (int i = 0; i < dim; ++i) {
            Scalar c = w[i];
            if (!is_integer(c)) return false;
            t[i] = c.get_num();
        }
        // reduce against the column HNF
        for (const auto& col : hnf_) {
            int p = pivot_of(col);
            if (p < 0) continue;
            if (t[p] == 0) continue;
            mpz_class q = t[p] / col[p];
            if (q * col[p] != t[p] && sgn(t[p]) * sgn(col[p]) < 0) q -= 1;
            for (int i = 0; i < dim; ++i) t[i] -= q * col[i];
            if (t[p] != 0) return false;
        }
        return std::all_of(t.begin(), t.end(), [](const mpz_class& z) { return z == 0; });
    }

    bool same_orbit(const VecQ& a, const VecQ& b) const { return contains(vec_sub(a, b)); }

private:
    mpz_class scale_ = 1;
    std::vector<std::vector<mpz_class>> hnf_;  // columns with staircase pivots

    static int pivot_of(const std::vector<mpz_class>& col) {
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col[i] != 0) return (int)i;
        return -1;
    }

    void build() {
        // common denominator over all generators
        for (const auto& v : gens)
            for (const auto& c : v) {
                mpz_class d = c.get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), scale_.get_mpz_t(), d.get_mpz_t());
                scale_ = scale_ / g * d;
            }
        std::vector<std::vector<mpz_class>> cols;
        for (const auto& v : gens) {
            std::vector<mpz_class> col(dim);
            for (int i = 0; i < dim; ++i) {
                Scalar c = v[i] * Scalar(scale_);
                col[i] = c.get_num();
            }
            cols.push_back(std::move(col));
        }
        // column-style integer echelon via repeated gcd elimination
        for (int row = 0; row < dim; ++row) {
            // find a column with minimal nonzero |entry| at `row` among those
            // whose earlier entries are zero
            while (true) {
                int best = -1;
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    bool clean = true;
                    for (int r = 0; r < row; ++r)
                        if (cols[j][r] != 0) clean = false;
                    if (!clean || cols[j][row] == 0) continue;
                    if (best < 0 || abs(cols[j][row]) < abs(cols[best][row])) best = (int)j;
                }
                if (best < 0) break;
                bool reduced = true;
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    if ((int)j == best) continue;
                    bool clean = true;
                    for (int r = 0; r < row; ++r)
                        if (cols[j][r] != 0) clean = false;
                    if (!clean || cols[j][row] == 0) continue;
                    mpz_class q = cols[j][row] / cols[best][row];
                    for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[best][i];
                    if (cols[j][row] != 0) reduced = false;
                }
                if (reduced) {
                    hnf_.push_back(cols[best]);
                    cols.erase(cols.begin() + best);
                    break;
                }
            }
        }
    }
};

// Stabilizer of the lattice orbit through v inside the world's group:
// { g : g.v - v in lattice }.
inline std::vector<int> orbit_stabilizer(const ReflectionGroup& G, const Lattice& lat,
                                         const VecQ& v) {
    std::vector<int> out;
    for (int g = 0; g < (int)G.order(); ++g)
        if (lat.contains(vec_sub(G.act_point(g, v), v))) out.push_back(g);
    return out;
}

// pi_G: restrict a G-invariant section supported on G.(v + lattice) to the
// germs over v + lattice, reinterpreted over the orbit stabilizer K. Exact:
// the local representative transports unchanged because stabilizers of points
// in the lattice orbit agree in G and in K.
inline GermSection pi_G(const GermSection& s, const Lattice& lat, const VecQ& v,
                        const World& k_world) {
    const auto& G = *s.world.group;
    GermSection out(k_world);
    for (const auto& [base, local] : s.entries) {
        int carrier = -1;
        for (int g : s.world.elems)
            if (lat.contains(vec_sub(G.act_point(g, base), v))) {
                carrier = g;
                break;
            }
        if (carrier < 0) throw error("pi_G: orbit does not meet the lattice orbit");
        out.add_at(G.act_point(carrier, base), G.act_frf(carrier, local));
    }
    return out;
}

// pi_G^{-1}: reinterpret a K-section over v + lattice as a G-section over the
// full (G x lattice)-orbit.
inline GermSection pi_G_inverse(const GermSection& s, const World& g_world) {
    GermSection out(g_world);
    for (const auto& [base, local] : s.entries) out.add_at(base, local);
    return out;
}

// P^G_H: view a G-invariant section as an H-invariant one. The H-orbits
// partition each G-orbit; the local representative at an H-orbit point picks
// up the index of the point stabilizers.
inline GermSection inclusion_P(const GermSection& s, const World& h_world) {
    const auto& G = *s.world.group;
    GermSection out(h_world);
    for (const auto& [base, local] : s.entries) {
        Scalar gstab = scalar((long)s.world.stabilizer(base).size());
        std::vector<VecQ> seen;
        for (int g : s.world.elems) {
            VecQ pt = G.act_point(g, base);
            VecQ rep = h_world.canonical_rep(pt).first;
            if (std::find(seen.begin(), seen.end(), rep) != seen.end()) continue;
            seen.push_back(rep);
            Scalar hstab = scalar((long)h_world.stabilizer(rep).size());
            // germ of the denoted object at rep is |G_base| * (g . local);
            // as an H-germ it is |H_rep| * local', so rescale
            int mover = -1;
            for (int gg : s.world.elems)
                if (G.act_point(gg, base) == rep) {
                    mover = gg;
                    break;
                }
            out.add({rep, gstab / hstab * G.act_frf(mover, local)});
        }
    }
    return out;
}

// Upsilon = P^G_H o pi_G^{-1}
inline GermSection upsilon(const GermSection& k_section, const World& g_world,
                           const World& h_world) {
    return inclusion_P(pi_G_inverse(k_section, g_world), h_world);
}

// Probe the generators on sample germs in the given world; raises
// module_structure_missing if some generator fails to preserve the space.
inline void require_module_structure(const std::vector<SkewElement>& gens,
                                     const std::vector<GermSection>& samples) {
    for (const auto& a : gens)
        for (const auto& s : samples) {
            try {
                apply_operator(a, s);
            } catch (const not_holomorphic_at_germ& e) {
                throw module_structure_missing(std::string("generator fails holomorphicity: ") +
                                               e.what());
            }
        }
}

}  // namespace gimel
