#pragma once

// Independent brute-force computations: full automorphism-group enumeration
// by backtracking over generator images, centers and derived subgroups by
// full scans, complement searches, characteristic-subgroup checks.  These
// validate the construction modules and the structural claims; the only
// pruning used is element-order preservation and relation satisfaction,
// so the search stays logically independent of the structure theorems it
// is checking.

#include <map>
#include <optional>
#include <unordered_map>

#include "pgaut/automorphism.hpp"

namespace pgaut {

struct SearchStats {
    u64 candidates = 0;  // partial image tuples examined, all stages
    std::map<std::string, u64> relation_failures;
    u64 generation_failures = 0;
    double elapsed_s = 0.0;
    int partition = -1;

    void merge(const SearchStats& o) {
        candidates += o.candidates;
        for (const auto& [k, v] : o.relation_failures) relation_failures[k] += v;
        generation_failures += o.generation_failures;
        elapsed_s = std::max(elapsed_s, o.elapsed_s);
    }
};

struct OracleLimits {
    u64 max_group = 10000;
    u64 max_aut = 200000;
};

template <class G>
struct BruteForceResult {
    AutSet<G> auts;
    SearchStats total;
    std::vector<SearchStats> partitions;
};

// Exact Aut(G).  Work is partitioned over the first image candidate and the
// partitions are merged in index order, so the result and the stats do not
// depend on the thread schedule.  threads == 0 means hardware concurrency.
BruteForceResult<SGroup> brute_force_aut(const SGroup& g, const OracleLimits& lim = {}, int threads = 0);
BruteForceResult<TGroup> brute_force_aut(const TGroup& g, const OracleLimits& lim = {}, int threads = 0);
BruteForceResult<UGroup> brute_force_aut(const UGroup& g, const OracleLimits& lim = {}, int threads = 0);

// Center by a full commuting scan against every element.
template <class G>
std::vector<typename G::Elem> brute_force_center(const G& g) {
    auto universe = g.elements();
    return centralizer_in(g, universe, universe);
}

// Derived subgroup as the closure of all pairwise commutators.
template <class G>
std::vector<typename G::Elem> brute_force_derived(const G& g) {
    using Elem = typename G::Elem;
    auto universe = g.elements();
    std::unordered_set<Elem, ElemHash> comms;
    for (const Elem& x : universe)
        for (const Elem& y : universe) comms.insert(g.comm(x, y));
    std::vector<Elem> gens(comms.begin(), comms.end());
    std::sort(gens.begin(), gens.end());
    return subgroup_closure<G, ElemHash>(g, gens);
}

// An element u with G = N <u> and N ∩ <u> = 1, or nothing.  N must be normal.
template <class G>
std::optional<typename G::Elem> complement_search(const G& g,
                                                  const std::vector<typename G::Elem>& normal_sorted) {
    using Elem = typename G::Elem;
    if (g.order() % normal_sorted.size() != 0)
        throw std::invalid_argument("complement_search: |N| does not divide |G|");
    const u64 index = g.order() / normal_sorted.size();
    for (const Elem& u : g.elements()) {
        std::vector<Elem> cyc;
        Elem acc = g.id();
        bool disjoint = true;
        do {
            cyc.push_back(acc);
            acc = g.mul(acc, u);
        } while (!(acc == g.id()) && cyc.size() <= index);
        if (cyc.size() != index) continue;
        if (!(acc == g.id())) continue;
        for (size_t k = 1; k < cyc.size() && disjoint; ++k)
            disjoint = !std::binary_search(normal_sorted.begin(), normal_sorted.end(), cyc[k]);
        if (disjoint) return u;  // |N||<u>| = |G| and N normal, so N<u> = G
    }
    return std::nullopt;
}

template <class G>
struct CharacteristicVerdict {
    bool characteristic = true;
    std::optional<GenMap<G>> witness_map;
    std::optional<typename G::Elem> witness_elem;   // subgroup element moved out
    std::optional<typename G::Elem> witness_image;
};

// True iff every map sends the subgroup into itself.  It is enough to test
// the subgroup's generators; the witness on failure is one of them.
template <class G>
CharacteristicVerdict<G> characteristic_check(const G& g, const AutSet<G>& auts,
                                              const std::vector<typename G::Elem>& sub_sorted,
                                              const std::vector<typename G::Elem>& sub_gens) {
    AutOps<G> ops(g);
    for (const auto& f : auts.maps) {
        for (const auto& s : sub_gens) {
            auto im = ops.apply(f, s);
            if (!std::binary_search(sub_sorted.begin(), sub_sorted.end(), im))
                return {false, f, s, im};
        }
    }
    return {};
}

}  // namespace pgaut
