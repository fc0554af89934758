#pragma once

// Generic subgroup machinery over any finite group presented as an Ops
// object (Elem, id, mul, inv, pow).  Works for element groups (S, T, U,
// Heis) and for automorphism groups alike.  Closures are deterministic:
// breadth-first from the identity under right multiplication by the
// generators, results returned sorted by the element's canonical tuple.

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "pgaut/modarith.hpp"

namespace pgaut {

inline constexpr u64 kDefaultClosureCap = 1u << 22;

template <class Ops, class Hash>
std::vector<typename Ops::Elem> subgroup_closure(const Ops& ops,
                                                 const std::vector<typename Ops::Elem>& gens,
                                                 u64 cap = kDefaultClosureCap) {
    using Elem = typename Ops::Elem;
    std::unordered_set<Elem, Hash> seen;
    std::vector<Elem> frontier{ops.id()};
    seen.insert(ops.id());
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const Elem& x : frontier) {
            for (const Elem& g : gens) {
                Elem y = ops.mul(x, g);
                if (seen.insert(y).second) {
                    next.push_back(y);
                    if (seen.size() > cap)
                        throw ResourceLimitError("subgroup_closure: size cap exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Elem> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Whether the generators generate the whole group of the given order.
// A proper subgroup has index >= p, so the closure may stop early once
// its size exceeds group_order / p.
template <class Ops, class Hash>
bool generates_group(const Ops& ops, const std::vector<typename Ops::Elem>& gens,
                     u64 group_order, i64 p) {
    using Elem = typename Ops::Elem;
    const u64 threshold = group_order / static_cast<u64>(p);
    std::unordered_set<Elem, Hash> seen;
    std::vector<Elem> frontier{ops.id()};
    seen.insert(ops.id());
    if (seen.size() > threshold) return true;
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const Elem& x : frontier) {
            for (const Elem& g : gens) {
                Elem y = ops.mul(x, g);
                if (seen.insert(y).second) {
                    if (seen.size() > threshold) return true;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size() == group_order;
}

// Smallest subgroup containing the seeds and closed under conjugation by
// the given conjugators (e.g. the whole group's generators).
template <class Ops, class Hash>
std::vector<typename Ops::Elem> normal_closure(const Ops& ops,
                                               const std::vector<typename Ops::Elem>& conjugators,
                                               std::vector<typename Ops::Elem> seeds,
                                               u64 cap = kDefaultClosureCap) {
    using Elem = typename Ops::Elem;
    std::vector<Elem> members;
    for (;;) {
        members = subgroup_closure<Ops, Hash>(ops, seeds, cap);
        bool grown = false;
        for (const Elem& g : conjugators) {
            Elem gi = ops.inv(g);
            for (const Elem& s : seeds) {
                Elem c = ops.mul(ops.mul(g, s), gi);
                if (!std::binary_search(members.begin(), members.end(), c)) {
                    seeds.push_back(c);
                    grown = true;
                }
            }
        }
        if (!grown) return members;
    }
}

// Elements of `universe` commuting with every tester.
template <class Ops>
std::vector<typename Ops::Elem> centralizer_in(const Ops& ops,
                                               const std::vector<typename Ops::Elem>& universe,
                                               const std::vector<typename Ops::Elem>& testers) {
    std::vector<typename Ops::Elem> out;
    for (const auto& x : universe) {
        bool ok = true;
        for (const auto& t : testers) {
            if (!(ops.mul(x, t) == ops.mul(t, x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Derived subgroup as the normal closure of the generator commutators.
template <class Ops, class Hash>
std::vector<typename Ops::Elem> derived_subgroup(const Ops& ops,
                                                 const std::vector<typename Ops::Elem>& gens,
                                                 u64 cap = kDefaultClosureCap) {
    std::vector<typename Ops::Elem> seeds;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            auto c = ops.mul(ops.mul(gens[i], gens[j]), ops.mul(ops.inv(gens[i]), ops.inv(gens[j])));
            seeds.push_back(c);
        }
    return normal_closure<Ops, Hash>(ops, gens, std::move(seeds), cap);
}

// G^p: closure of all p-th powers of the universe.
template <class Ops, class Hash>
std::vector<typename Ops::Elem> pth_power_subgroup(const Ops& ops,
                                                   const std::vector<typename Ops::Elem>& universe,
                                                   i64 p, u64 cap = kDefaultClosureCap) {
    using Elem = typename Ops::Elem;
    std::unordered_set<Elem, Hash> gens;
    for (const Elem& x : universe) gens.insert(ops.pow(x, p));
    std::vector<Elem> gv(gens.begin(), gens.end());
    std::sort(gv.begin(), gv.end());
    return subgroup_closure<Ops, Hash>(ops, gv, cap);
}

// Frattini subgroup of a p-group given generators: the normal closure of
// the generator p-th powers and pairwise commutators (G/Phi is elementary
// abelian, so these suffice).
template <class Ops, class Hash>
std::vector<typename Ops::Elem> frattini_subgroup_pgroup(const Ops& ops,
                                                         const std::vector<typename Ops::Elem>& gens,
                                                         i64 p, u64 cap = kDefaultClosureCap) {
    std::vector<typename Ops::Elem> seeds;
    for (const auto& g : gens) seeds.push_back(ops.pow(g, p));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            seeds.push_back(ops.mul(ops.mul(gens[i], gens[j]), ops.mul(ops.inv(gens[i]), ops.inv(gens[j]))));
    return normal_closure<Ops, Hash>(ops, gens, std::move(seeds), cap);
}

// z(P) = log_p |P / Phi(P)|, the minimal number of generators of a p-group.
template <class Ops, class Hash>
int frattini_rank_pgroup(const Ops& ops, const std::vector<typename Ops::Elem>& gens,
                         u64 group_order, i64 p, u64 cap = kDefaultClosureCap) {
    auto phi = frattini_subgroup_pgroup<Ops, Hash>(ops, gens, p, cap);
    u64 idx = group_order / phi.size();
    int rank = 0;
    while (idx > 1) {
        if (idx % static_cast<u64>(p) != 0)
            throw std::logic_error("frattini_rank: index not a p-power (not a p-group?)");
        idx /= static_cast<u64>(p);
        ++rank;
    }
    return rank;
}

// Greedy generating set for a subgroup handed over as a plain member list
// (used when a closed set arrives without generator provenance).
template <class Ops, class Hash>
std::vector<typename Ops::Elem> extract_generators(const Ops& ops,
                                                   const std::vector<typename Ops::Elem>& members_sorted,
                                                   u64 cap = kDefaultClosureCap) {
    std::vector<typename Ops::Elem> gens;
    std::vector<typename Ops::Elem> cur{ops.id()};
    for (const auto& m : members_sorted) {
        if (cur.size() == members_sorted.size()) break;
        if (std::binary_search(cur.begin(), cur.end(), m)) continue;
        gens.push_back(m);
        cur = subgroup_closure<Ops, Hash>(ops, gens, cap);
    }
    return gens;
}

}  // namespace pgaut
