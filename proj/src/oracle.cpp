#include "pgaut/oracle.hpp"

#include <chrono>
#include <thread>

namespace pgaut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Element table: orders, inverses, and (for small groups) a flat Cayley
// table so the inner search loops are pure array lookups.
template <class G>
struct Index {
    const G* g = nullptr;
    std::vector<typename G::Elem> elems;
    std::unordered_map<typename G::Elem, int, ElemHash> pos;
    std::vector<int> invi;
    std::vector<i64> ord;
    std::vector<int32_t> table;
    int n = 0;
    int id_idx = 0;
    bool tabled = false;

    static constexpr int kTableCap = 4096;

    void build(const G& gg, u64 max_group) {
        if (gg.order() > max_group)
            throw ResourceLimitError("brute_force_aut: group order exceeds the search guard");
        g = &gg;
        elems = gg.elements();
        n = static_cast<int>(elems.size());
        pos.reserve(static_cast<size_t>(n) * 2);
        for (int k = 0; k < n; ++k) pos.emplace(elems[static_cast<size_t>(k)], k);
        id_idx = pos.at(gg.id());
        invi.resize(static_cast<size_t>(n));
        ord.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            invi[static_cast<size_t>(k)] = pos.at(gg.inv(elems[static_cast<size_t>(k)]));
            ord[static_cast<size_t>(k)] = gg.elem_order(elems[static_cast<size_t>(k)]);
        }
        tabled = n <= kTableCap;
        if (tabled) {
            table.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    table[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
                        pos.at(gg.mul(elems[static_cast<size_t>(x)], elems[static_cast<size_t>(y)]));
        }
    }

    int mul(int x, int y) const {
        if (tabled) return table[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)];
        return pos.at(g->mul(elems[static_cast<size_t>(x)], elems[static_cast<size_t>(y)]));
    }
    int conj(int a, int x) const { return mul(mul(a, x), invi[static_cast<size_t>(a)]); }
    int comm(int x, int y) const {
        return mul(mul(x, y), mul(invi[static_cast<size_t>(x)], invi[static_cast<size_t>(y)]));
    }
    int pow(int x, i64 k) const { return pos.at(g->pow(elems[static_cast<size_t>(x)], k)); }

    std::vector<int> bucket(i64 order_wanted) const {
        std::vector<int> out;
        for (int k = 0; k < n; ++k)
            if (ord[static_cast<size_t>(k)] == order_wanted) out.push_back(k);
        return out;
    }
};

// Reusable epoch-stamped scratch for the generation check.
struct GenScratch {
    std::vector<u64> stamp;
    std::vector<int> stack;
    u64 epoch = 0;
};

// Closure of the candidate images, early-exited once the size exceeds
// |G|/p (a proper subgroup has index at least p).
template <class G>
bool generates_idx(const Index<G>& ix, std::initializer_list<int> gens, i64 p, GenScratch& s) {
    const u64 order = static_cast<u64>(ix.n);
    const u64 threshold = order / static_cast<u64>(p);
    if (s.stamp.size() != static_cast<size_t>(ix.n)) s.stamp.assign(static_cast<size_t>(ix.n), 0);
    ++s.epoch;
    s.stack.clear();
    s.stamp[static_cast<size_t>(ix.id_idx)] = s.epoch;
    s.stack.push_back(ix.id_idx);
    u64 cnt = 1;
    if (cnt > threshold) return true;
    while (!s.stack.empty()) {
        int x = s.stack.back();
        s.stack.pop_back();
        for (int gidx : gens) {
            int y = ix.mul(x, gidx);
            if (s.stamp[static_cast<size_t>(y)] != s.epoch) {
                s.stamp[static_cast<size_t>(y)] = s.epoch;
                if (++cnt > threshold) return true;
                s.stack.push_back(y);
            }
        }
    }
    return cnt == order;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs `body(first_image_candidate, partition_stats, results)` over a
// partition of the first-image candidates; partitions are merged in index
// order so the outcome is schedule-independent.
template <class G, class Body>
BruteForceResult<G> run_partitioned(const std::vector<int>& first_cands, const OracleLimits& lim,
                                    int threads, Body body) {
    auto t0 = Clock::now();
    threads = resolve_threads(threads);
    int parts = std::min<int>(threads, std::max<int>(1, static_cast<int>(first_cands.size())));

    std::vector<std::vector<GenMap<G>>> found(static_cast<size_t>(parts));
    std::vector<SearchStats> stats(static_cast<size_t>(parts));
    std::vector<std::exception_ptr> errs(static_cast<size_t>(parts));

    auto work = [&](int part) {
        try {
            auto tp = Clock::now();
            SearchStats& st = stats[static_cast<size_t>(part)];
            st.partition = part;
            GenScratch scratch;
            size_t lo = first_cands.size() * static_cast<size_t>(part) / static_cast<size_t>(parts);
            size_t hi = first_cands.size() * (static_cast<size_t>(part) + 1) / static_cast<size_t>(parts);
            for (size_t k = lo; k < hi; ++k) {
                body(first_cands[k], st, found[static_cast<size_t>(part)], scratch);
                if (found[static_cast<size_t>(part)].size() > lim.max_aut)
                    throw ResourceLimitError("brute_force_aut: automorphism cap exceeded");
            }
            st.elapsed_s = seconds_since(tp);
        } catch (...) {
            errs[static_cast<size_t>(part)] = std::current_exception();
        }
    };

    if (parts == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(parts));
        for (int p = 0; p < parts; ++p) pool.emplace_back(work, p);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    BruteForceResult<G> out;
    for (int p = 0; p < parts; ++p) {
        out.total.merge(stats[static_cast<size_t>(p)]);
        out.partitions.push_back(std::move(stats[static_cast<size_t>(p)]));
        auto& v = found[static_cast<size_t>(p)];
        out.auts.maps.insert(out.auts.maps.end(), v.begin(), v.end());
    }
    if (out.auts.maps.size() > lim.max_aut)
        throw ResourceLimitError("brute_force_aut: automorphism cap exceeded");
    std::sort(out.auts.maps.begin(), out.auts.maps.end());
    out.auts.prov = AutSet<G>::Provenance::brute_force;
    out.auts.build_index();
    out.total.partition = -1;
    out.total.elapsed_s = seconds_since(t0);
    return out;
}

GenMap<SGroup> map_from_indices(const Index<SGroup>& ix, int ia, int ib, int ic) {
    GenMap<SGroup> f;
    f.img = {ix.elems[static_cast<size_t>(ia)], ix.elems[static_cast<size_t>(ib)],
             ix.elems[static_cast<size_t>(ic)]};
    f.hom_ok = f.aut_ok = true;
    return f;
}

}  // namespace

BruteForceResult<SGroup> brute_force_aut(const SGroup& g, const OracleLimits& lim, int threads) {
    const GroupParams& par = g.params();
    Index<SGroup> ix;
    ix.build(g, lim.max_group);

    // image candidates must preserve generator orders
    auto ca_cands = ix.bucket(par.mod_c);
    auto aa_cands = ix.bucket(par.mod_a);
    auto bb_cands = ix.bucket(par.mod_b);

    // relation targets, precomputed per element
    std::vector<int> pw_a(static_cast<size_t>(ix.n)), pw_b(static_cast<size_t>(ix.n)),
        pw_t(static_cast<size_t>(ix.n));
    for (int x = 0; x < ix.n; ++x) {
        pw_a[static_cast<size_t>(x)] = ix.pow(x, 1 + par.e * par.p);
        pw_b[static_cast<size_t>(x)] = ix.pow(x, 1 + par.d * par.p);
        pw_t[static_cast<size_t>(x)] = ix.pow(x, par.dshift_pow);
    }

    auto body = [&](int ca, SearchStats& st, std::vector<GenMap<SGroup>>& out, GenScratch& scratch) {
        u64 fail_conj_a = 0, fail_conj_b = 0, fail_comm = 0;
        const int ica = ix.invi[static_cast<size_t>(ca)];
        const int tgt = pw_t[static_cast<size_t>(ca)];
        for (int aa : aa_cands) {
            ++st.candidates;
            if (ix.mul(ix.mul(ca, aa), ica) != pw_a[static_cast<size_t>(aa)]) {
                ++fail_conj_a;
                continue;
            }
            for (int bb : bb_cands) {
                ++st.candidates;
                if (ix.mul(ix.mul(ca, bb), ica) != pw_b[static_cast<size_t>(bb)]) {
                    ++fail_conj_b;
                    continue;
                }
                if (ix.comm(aa, bb) != tgt) {
                    ++fail_comm;
                    continue;
                }
                if (!generates_idx(ix, {aa, bb, ca}, par.p, scratch)) {
                    ++st.generation_failures;
                    continue;
                }
                out.push_back(map_from_indices(ix, aa, bb, ca));
            }
        }
        st.relation_failures["c a c^-1 = a^(1+ep)"] += fail_conj_a;
        st.relation_failures["c b c^-1 = b^(1+dp)"] += fail_conj_b;
        st.relation_failures["[a,b] = c^(p^dshift)"] += fail_comm;
    };

    return run_partitioned<SGroup>(ca_cands, lim, threads, body);
}

BruteForceResult<TGroup> brute_force_aut(const TGroup& g, const OracleLimits& lim, int threads) {
    const GroupParams& par = g.params();
    Index<TGroup> ix;
    ix.build(g, lim.max_group);

    auto fa_cands = ix.bucket(par.mod_a);
    auto fb_cands = ix.bucket(par.mod_b);

    auto body = [&](int fa, SearchStats& st, std::vector<GenMap<TGroup>>& out, GenScratch& scratch) {
        u64 fail_ord = 0, fail_central = 0;
        for (int fb : fb_cands) {
            ++st.candidates;
            int dd = ix.comm(fa, fb);  // image of d is forced
            if (ix.ord[static_cast<size_t>(dd)] != par.mod_d) {
                ++fail_ord;
                continue;
            }
            if (ix.mul(fa, dd) != ix.mul(dd, fa) || ix.mul(fb, dd) != ix.mul(dd, fb)) {
                ++fail_central;
                continue;
            }
            if (!generates_idx(ix, {fa, fb, dd}, par.p, scratch)) {
                ++st.generation_failures;
                continue;
            }
            GenMap<TGroup> f;
            f.img = {ix.elems[static_cast<size_t>(fa)], ix.elems[static_cast<size_t>(fb)],
                     ix.elems[static_cast<size_t>(dd)]};
            f.hom_ok = f.aut_ok = true;
            out.push_back(f);
        }
        st.relation_failures["order of [a,b]"] += fail_ord;
        st.relation_failures["[a,b] central"] += fail_central;
    };

    return run_partitioned<TGroup>(fa_cands, lim, threads, body);
}

BruteForceResult<UGroup> brute_force_aut(const UGroup& g, const OracleLimits& lim, int threads) {
    const GroupParams& par = g.params();
    Index<UGroup> ix;
    ix.build(g, lim.max_group);

    auto fx_cands = ix.bucket(par.pn);
    auto fy_cands = ix.bucket(g.mod_y());

    std::vector<int> pw_x(static_cast<size_t>(ix.n));
    for (int x = 0; x < ix.n; ++x) pw_x[static_cast<size_t>(x)] = ix.pow(x, 1 + par.ppow[par.i]);

    auto body = [&](int fx, SearchStats& st, std::vector<GenMap<UGroup>>& out, GenScratch& scratch) {
        u64 fail_conj = 0;
        for (int fy : fy_cands) {
            ++st.candidates;
            if (ix.conj(fy, fx) != pw_x[static_cast<size_t>(fx)]) {
                ++fail_conj;
                continue;
            }
            if (!generates_idx(ix, {fx, fy}, par.p, scratch)) {
                ++st.generation_failures;
                continue;
            }
            GenMap<UGroup> f;
            f.img = {ix.elems[static_cast<size_t>(fx)], ix.elems[static_cast<size_t>(fy)]};
            f.hom_ok = f.aut_ok = true;
            out.push_back(f);
        }
        st.relation_failures["y x y^-1 = x^(1+p^i)"] += fail_conj;
    };

    return run_partitioned<UGroup>(fx_cands, lim, threads, body);
}

}  // namespace pgaut
