#pragma once

// Endomorphisms and automorphisms recorded as generator-image tuples.
// Verification is by evaluating the defining relations on the images plus
// an image-closure generation check; two verified maps are equal as
// functions iff their image tuples are equal, so all sets and hashes key
// on the tuple alone.

#include <array>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pgaut/groups.hpp"
#include "pgaut/subgroup.hpp"

namespace pgaut {

template <class G>
struct GenMap {
    std::array<typename G::Elem, G::num_gens> img{};
    bool hom_ok = false;
    bool aut_ok = false;

    friend bool operator==(const GenMap& a, const GenMap& b) { return a.img == b.img; }
    friend bool operator<(const GenMap& a, const GenMap& b) { return a.img < b.img; }
};

template <class G>
struct GenMapHash {
    size_t operator()(const GenMap<G>& f) const {
        ElemHash eh;
        u64 h = 0x243f6a8885a308d3ULL;
        for (const auto& e : f.img) h = detail::hash_combine(h, eh(e));
        return static_cast<size_t>(h);
    }
};

// The automorphism group of G as an Ops object; elements are GenMaps,
// multiplication is composition: (f*h)(x) = f(h(x)).
template <class G>
class AutOps {
public:
    using Elem = GenMap<G>;

    explicit AutOps(const G& g) : g_(&g) {}
    const G& base() const { return *g_; }

    Elem id() const {
        Elem m;
        m.img = g_->generators();
        m.hom_ok = m.aut_ok = true;
        return m;
    }

    typename G::Elem apply(const Elem& f, const typename G::Elem& x) const {
        if (!f.hom_ok) throw std::logic_error("apply: generator map is not homomorphism-verified");
        return g_->apply_images(*g_, f.img, x);
    }

    Elem mul(const Elem& f, const Elem& h) const {
        Elem out;
        for (int k = 0; k < G::num_gens; ++k)
            out.img[static_cast<size_t>(k)] = g_->apply_images(*g_, f.img, h.img[static_cast<size_t>(k)]);
        out.hom_ok = f.hom_ok && h.hom_ok;
        out.aut_ok = f.aut_ok && h.aut_ok;
        return out;
    }

    Elem inv(const Elem& f) const {
        Elem idm = id();
        if (f == idm) return idm;
        Elem prev = f;
        Elem acc = mul(f, f);
        while (!(acc == idm)) {
            prev = acc;
            acc = mul(acc, f);
        }
        return prev;  // f^(order-1)
    }

    Elem pow(const Elem& f, i64 k) const {
        Elem base = f;
        if (k < 0) {
            base = inv(f);
            k = -k;
        }
        Elem acc = id();
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    i64 order_of(const Elem& f) const {
        Elem idm = id();
        i64 ord = 1;
        Elem acc = f;
        while (!(acc == idm)) {
            acc = mul(acc, f);
            ++ord;
        }
        return ord;
    }

private:
    const G* g_;
};

template <class G>
bool is_homomorphism(const G& g, const GenMap<G>& f) {
    return g.presentation_holds(g, f.img);
}

template <class G>
bool is_automorphism(const G& g, const GenMap<G>& f) {
    if (!is_homomorphism(g, f)) return false;
    std::vector<typename G::Elem> gens(f.img.begin(), f.img.end());
    return generates_group<G, ElemHash>(g, gens, g.order(), g.params().p);
}

// Verifies and flags a map; throws if the images do not define an automorphism.
template <class G>
GenMap<G> make_automorphism(const G& g, const std::array<typename G::Elem, G::num_gens>& img,
                            const std::string& name = {}) {
    GenMap<G> f;
    f.img = img;
    f.hom_ok = is_homomorphism(g, f);
    if (!f.hom_ok)
        throw std::logic_error("make_automorphism: relations fail for map " + (name.empty() ? "?" : name));
    std::vector<typename G::Elem> gens(img.begin(), img.end());
    f.aut_ok = generates_group<G, ElemHash>(g, gens, g.order(), g.params().p);
    if (!f.aut_ok)
        throw std::logic_error("make_automorphism: images do not generate, map " + (name.empty() ? "?" : name));
    return f;
}

template <class G>
GenMap<G> inner(const G& g, const typename G::Elem& z) {
    GenMap<G> f;
    auto gens = g.generators();
    for (int k = 0; k < G::num_gens; ++k)
        f.img[static_cast<size_t>(k)] = g.conj(z, gens[static_cast<size_t>(k)]);
    f.hom_ok = f.aut_ok = true;
    return f;
}

// A multiplicatively closed, deduplicated automorphism collection.
template <class G>
struct AutSet {
    enum class Provenance { generators, brute_force, filtered };

    std::vector<GenMap<G>> maps;  // sorted by image tuple
    std::vector<GenMap<G>> gens;  // provenance generators, may be empty
    Provenance prov = Provenance::generators;
    std::unordered_set<GenMap<G>, GenMapHash<G>> index;

    void build_index() {
        index.clear();
        index.insert(maps.begin(), maps.end());
    }
    bool contains(const GenMap<G>& f) const { return index.count(f) != 0; }
    u64 size() const { return maps.size(); }
};

inline constexpr u64 kAutSetCap = 200000;

template <class G>
AutSet<G> aut_closure(const G& g, const std::vector<GenMap<G>>& gens, u64 cap = kAutSetCap) {
    AutOps<G> ops(g);
    for (const auto& f : gens)
        if (!f.aut_ok) throw std::logic_error("aut_closure: unverified generator map");
    AutSet<G> out;
    out.maps = subgroup_closure<AutOps<G>, GenMapHash<G>>(ops, gens, cap);
    out.gens = gens;
    out.prov = AutSet<G>::Provenance::generators;
    out.build_index();
    return out;
}

template <class G>
std::vector<GenMap<G>> autset_generators(const G& g, const AutSet<G>& s) {
    if (!s.gens.empty()) return s.gens;
    AutOps<G> ops(g);
    return extract_generators<AutOps<G>, GenMapHash<G>>(ops, s.maps, kAutSetCap);
}

// Maps acting trivially on G/G^p: every generator image differs from the
// generator by an element of G^p.  Requires [G,G] <= G^p, which is asserted
// first so the quotient map is the mod-Frattini one it is meant to be.
template <class G>
AutSet<G> kernel_mod_pth_powers(const G& g, const AutSet<G>& all) {
    auto universe = g.elements();
    auto sp = pth_power_subgroup<G, ElemHash>(g, universe, g.params().p);
    auto der = derived_subgroup<G, ElemHash>(g, g.generator_list());
    for (const auto& x : der)
        if (!std::binary_search(sp.begin(), sp.end(), x))
            throw std::logic_error("kernel_mod_pth_powers: derived subgroup not inside G^p");
    auto gens = g.generators();
    AutSet<G> out;
    out.prov = AutSet<G>::Provenance::filtered;
    for (const auto& f : all.maps) {
        bool in = true;
        for (int k = 0; k < G::num_gens && in; ++k) {
            auto diff = g.mul(f.img[static_cast<size_t>(k)], g.inv(gens[static_cast<size_t>(k)]));
            in = std::binary_search(sp.begin(), sp.end(), diff);
        }
        if (in) out.maps.push_back(f);
    }
    out.build_index();
    return out;
}

// S-specific: maps fixing both a and b pointwise (trivial restriction to T;
// the commutator generator is fixed automatically).
AutSet<SGroup> kernel_restriction_pointwise(const SGroup& g, const AutSet<SGroup>& all);

// |all| / |normal| with a normality assertion: every member of `all`
// conjugates the generators of `normal` back into it.  Exhaustive over all
// members when |all| <= 1e5, otherwise a seeded sample of 1e3 conjugations.
template <class G>
u64 quotient_order(const G& g, const AutSet<G>& all, const AutSet<G>& normal, u64 seed = 1) {
    if (normal.size() == 0 || all.size() % normal.size() != 0)
        throw std::logic_error("quotient_order: order of normal subgroup does not divide");
    AutOps<G> ops(g);
    auto ngens = autset_generators(g, normal);
    auto check_one = [&](const GenMap<G>& f) {
        auto fi = ops.pow(f, static_cast<i64>(all.size()) - 1);  // f^-1, since f^|all| = id
        for (const auto& m : ngens)
            if (!normal.contains(ops.mul(ops.mul(f, m), fi)))
                throw std::logic_error("quotient_order: subgroup is not normal");
    };
    if (all.size() <= 100000) {
        for (const auto& f : all.maps) check_one(f);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, all.maps.size() - 1);
        for (int k = 0; k < 1000; ++k) check_one(all.maps[pick(rng)]);
    }
    return all.size() / normal.size();
}

// Minimal generator count of a p-subgroup of Aut(G).
template <class G>
int frattini_rank_autset(const G& g, const AutSet<G>& s) {
    AutOps<G> ops(g);
    auto gens = autset_generators(g, s);
    return frattini_rank_pgroup<AutOps<G>, GenMapHash<G>>(ops, gens, s.size(), g.params().p);
}

// Fast generation test for S by the mod-Frattini criterion: for n != 2 the
// Frattini subgroup is { a^(pa') b^(pb') c^(pc') }, so images generate iff
// their exponent tuples span (Z/p)^3; for n = 2 the c-coordinate collapses
// and a rank-2 condition on (a, b) remains.  Tests assert equivalence with
// the closure-based check.
bool generates_burnside(const SGroup& g, const std::array<SElement, 3>& img);

struct NamedAut {
    std::string name;
    GenMap<SGroup> map;
};

// The three generator families for Aut(S), gated by regime.
enum class SFamily {
    HighRegime,  // 2i >= n, i != n-1: inner A,B,C plus D,E,F,G,H
    TopIndex,    // i = n-1:           inner A,B plus C,D,E,F,G
    LowRegime,   // 2i < n:            inner L,M,N plus U,V,W,X,Y,Z
};

SFamily family_for(const GroupParams& par);
std::vector<NamedAut> named_s_generators(const SGroup& g, SFamily fam, const AppendixConstants& k);

// Generators of Aut(U): alpha is the y-twist, beta = (x -> x^g), mu its
// conjugate by x^ell, nu = mu^((p-1)t); delta_x, delta_y inner.
struct UFamily {
    GenMap<UGroup> alpha, beta, delta_x, delta_y, mu, nu;
};
UFamily named_u_generators(const UGroup& g, const AppendixConstants& k);

}  // namespace pgaut
