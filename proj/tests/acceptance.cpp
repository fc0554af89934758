// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion.  Exact integer arithmetic throughout;
// every expected value is pinned here.
//
// Known red: criterion 5 includes "z(Pi) = 7 at (3,4,1)" as stated.  Exact
// computation gives z(Pi) = 6 there (two independent Frattini computations;
// the printed relation U Y U^-1 = N^(p^(n-3)) V^e Y forces V into the
// Frattini subgroup when i = 1), so that item fails honestly and is
// reported with the analysis.  See README.md.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "pgaut/verify.hpp"

using namespace pgaut;
using Clock = std::chrono::steady_clock;

namespace {

std::map<std::string, VerificationReport> g_reports;
int g_failed_criteria = 0;

std::string key(const std::string& suite, i64 p, int n, int i) {
    std::ostringstream os;
    os << suite << "@" << p << "," << n << "," << i;
    return os.str();
}

const VerificationReport& suite_at(const std::string& suite, i64 p, int n, int i,
                                   const VerifyConfig& cfg = {}) {
    auto k = key(suite, p, n, i);
    auto it = g_reports.find(k);
    if (it == g_reports.end()) {
        auto rep = verify_suite(GroupParams::make(p, n, i), suite, cfg);
        it = g_reports.emplace(k, std::move(rep)).first;
        std::cout << "  [suite] " << k << ": " << it->second.count(CheckStatus::pass) << " pass, "
                  << it->second.count(CheckStatus::fail) << " fail, "
                  << it->second.count(CheckStatus::skipped) << " skipped ("
                  << it->second.total_ms / 1000.0 << " s)\n";
    }
    return it->second;
}

const CheckRecord* find_check(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.checks)
        if (c.id == id) return &c;
    return nullptr;
}

struct Item {
    bool ok;
    std::string what;
};

class Criterion {
public:
    Criterion(int num, std::string title) : num_(num), title_(std::move(title)), t0_(Clock::now()) {}

    void item(bool ok, const std::string& what) {
        items_.push_back({ok, what});
        if (!ok) ok_ = false;
    }

    void check_passes(const std::string& suite, i64 p, int n, int i, const std::string& id,
                      const std::string& what) {
        const auto* c = find_check(suite_at(suite, p, n, i), id);
        if (!c) {
            item(false, what + " [check " + id + " missing]");
            return;
        }
        std::string note = c->witness.empty() ? "" : " -- " + c->witness;
        item(c->status == CheckStatus::pass, what + note);
    }

    bool finish(double budget_s) {
        double secs = std::chrono::duration<double>(Clock::now() - t0_).count();
        if (budget_s > 0 && secs > budget_s) {
            ok_ = false;
            items_.push_back({false, "runtime " + std::to_string(secs) + " s exceeds the stated budget"});
        }
        std::cout << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << num_ << ": " << title_ << " ("
                  << secs << " s)\n";
        for (const auto& it : items_)
            if (!it.ok) std::cout << "       failed item: " << it.what << "\n";
        if (!ok_) ++g_failed_criteria;
        return ok_;
    }

private:
    int num_;
    std::string title_;
    Clock::time_point t0_;
    std::vector<Item> items_;
    bool ok_ = true;
};

u64 upow(i64 b, int e) {
    u64 acc = 1;
    for (int k = 0; k < e; ++k) acc *= static_cast<u64>(b);
    return acc;
}

void criterion1() {
    Criterion c(1, "group orders by normal-form enumeration");
    struct Row {
        i64 p;
        int n, i;
        GroupKind kind;
        u64 expect;
    };
    for (Row r : {Row{3, 3, 1, GroupKind::S, 243}, Row{3, 4, 2, GroupKind::S, 2187},
                  Row{3, 3, 2, GroupKind::S, 81}, Row{3, 3, 2, GroupKind::T, 27}}) {
        auto par = GroupParams::make(r.p, r.n, r.i);
        u64 formula = group_order(par, r.kind);
        u64 count = 0;
        if (r.kind == GroupKind::S)
            count = SGroup(par).elements().size();
        else
            count = TGroup(par).elements().size();
        std::ostringstream os;
        os << (r.kind == GroupKind::S ? "|S|" : "|T|") << " at (" << r.p << "," << r.n << "," << r.i
           << ") = " << count << ", expected " << r.expect;
        c.item(count == r.expect && formula == r.expect, os.str());
    }
    c.finish(1.0);
}

void criterion2() {
    Criterion c(2, "Aut(S) via named-generator closure matches the theorem formulas");
    c.check_passes("aut-low", 3, 3, 1, "alw.201-aut-order", "13122 at (3,3,1)");
    c.check_passes("aut-high", 3, 4, 2, "ah.200-aut-order", "78732 at (3,4,2)");
    c.check_passes("aut-lindop", 3, 3, 2, "al.200-aut-order", "1296 at (3,3,2)");
    c.check_passes("aut-lindop", 3, 4, 3, "al.200-aut-order", "3888 at (3,4,3)");
    for (auto [suite, p, n, i, id] :
         {std::tuple<const char*, i64, int, int, const char*>{"aut-low", 3, 3, 1, "alw.201-aut-order"},
          {"aut-high", 3, 4, 2, "ah.200-aut-order"},
          {"aut-lindop", 3, 3, 2, "al.200-aut-order"},
          {"aut-lindop", 3, 4, 3, "al.200-aut-order"}}) {
        const auto* r = find_check(suite_at(suite, p, n, i), id);
        c.item(r && r->ms < 60000.0, std::string("closure runtime within 60 s at ") + suite);
    }
    c.finish(0);
}

void criterion3() {
    Criterion c(3, "oracle equivalence: brute-force set equals the closure set");
    c.check_passes("aut-low", 3, 3, 1, "alw.202-oracle-equivalence", "(3,3,1)");
    c.check_passes("aut-lindop", 3, 3, 2, "al.201-oracle-equivalence", "(3,3,2)");
    c.check_passes("aut-high", 3, 4, 2, "ah.201-oracle-equivalence", "(3,4,2)");
    c.finish(600.0);
}

void criterion4() {
    Criterion c(4, "Aut(U): orders, Inn/Out, and the Sylow copy of S");
    c.check_passes("appendix", 3, 3, 1, "ap.040-aut-order", "|Aut(U)| = 486 at (3,3,1)");
    c.check_passes("appendix", 3, 4, 2, "ap.040-aut-order", "|Aut(U)| = 4374 at (3,4,2)");
    c.check_passes("appendix", 3, 3, 1, "ap.051-inn-order", "|Inn(U)| = 81");
    c.check_passes("appendix", 3, 3, 1, "ap.052-out-order", "|Out(U)| matches the formula");
    c.check_passes("appendix", 3, 3, 1, "ap.060-sylow-subgroup", "Sylow subgroup of order |S|");
    c.check_passes("appendix", 3, 3, 1, "ap.061-sylow-iso", "a -> alpha, b -> delta_x, c -> nu is an isomorphism");
    c.finish(60.0);
}

void criterion5() {
    Criterion c(5, "structure suite: kernels, ranks, normality, complements");
    c.check_passes("aut-high", 3, 4, 2, "ah.221-pi-is-ker-gamma", "ker Gamma = Pi at (3,4,2)");
    c.check_passes("aut-high", 3, 4, 2, "ah.231-ker-lambda", "ker Lambda of order p^(i-1) at (3,4,2)");
    c.check_passes("aut-lindop", 3, 3, 2, "al.210-ker-lambda", "ker Lambda of order p^(n-2) at (3,3,2)");
    c.check_passes("s2", 3, 3, 1, "s2.050-min-generators", "z(S) = 3");
    c.check_passes("aut-high", 3, 4, 2, "ah.222-pi-rank", "z(Pi) = 6 at (3,4,2)");

    {
        // ker Gamma = Phi (low regime): verified where the claim is true as
        // stated (i > 1); needs the full Aut(S) closure at (3,5,2)
        auto par = GroupParams::make(3, 5, 2);
        SGroup S(par);
        auto k = derive_appendix_constants(par);
        std::map<std::string, GenMap<SGroup>> m;
        for (auto& na : named_s_generators(S, SFamily::LowRegime, k)) m.emplace(na.name, na.map);
        std::vector<GenMap<SGroup>> agens, pgens;
        for (const char* nm : {"L", "M", "N", "U", "V", "W", "X", "Y", "Z"}) agens.push_back(m.at(nm));
        for (const char* nm : {"L", "M", "N", "V", "W", "X", "Y"}) pgens.push_back(m.at(nm));
        auto aut = aut_closure(S, agens, 1200000);
        auto ker = kernel_mod_pth_powers(S, aut);
        auto phi = aut_closure(S, pgens, 1200000);
        std::ostringstream os;
        os << "ker Gamma = Phi at (3,5,2): |Aut| = " << aut.size() << ", kernel " << ker.size()
           << ", |Phi| = " << phi.size();
        c.item(aut.size() == upow(3, 12) * 2 && ker.maps == phi.maps, os.str());
    }
    {
        // z(Pi) = 7 at (3,4,1), as stated.  Computation gives 6; the item is
        // kept faithful to the stated criterion and fails honestly.
        auto par = GroupParams::make(3, 4, 1);
        SGroup S(par);
        auto k = derive_appendix_constants(par);
        std::map<std::string, GenMap<SGroup>> m;
        for (auto& na : named_s_generators(S, SFamily::LowRegime, k)) m.emplace(na.name, na.map);
        std::vector<GenMap<SGroup>> pgens;
        for (const char* nm : {"L", "M", "N", "U", "V", "W", "X", "Y"}) pgens.push_back(m.at(nm));
        auto pi = aut_closure(S, pgens);
        int z = frattini_rank_autset(S, pi);
        std::ostringstream os;
        os << "z(Pi) at (3,4,1): expected 7 (as stated), computed " << z;
        if (z != 7)
            os << " -- the minimal-generation claim fails at i = 1: the verified relation "
                  "U Y U^-1 = N^(p^(n-3)) V^e Y forces V^e, hence V, into Pi^p [Pi,Pi], so six of the "
                  "eight printed generators suffice (see alw.223 and the README)";
        c.item(z == 7, os.str());
    }
    c.check_passes("aut-low", 3, 4, 1, "alw.224-g-not-normal", "G not normal at (3,4,1)");
    c.check_passes("s2", 3, 3, 1, "s2.080-nonsplit", "no complement of T at (3,3,1)");
    c.check_passes("s2", 3, 4, 2, "s2.080-nonsplit", "no complement of T at (3,4,2)");
    c.finish(300.0);
}

void criterion6() {
    Criterion c(6, "property suites: associativity, congruence grids, power shape, order formulas");
    c.check_passes("s2", 3, 3, 1, "s2.030-assoc-s", "associativity of S, exhaustive at 3^5");
    c.check_passes("s2", 3, 3, 1, "s2.031-assoc-t", "associativity of T");
    c.check_passes("s2", 3, 3, 1, "s2.032-assoc-u", "associativity of U");
    c.check_passes("s2", 3, 4, 2, "s2.030-assoc-s", "associativity of S, 1e5 seeded triples at (3,4,2)");
    c.check_passes("s2", 3, 3, 1, "s2.010-congruence-unit-power", "unit power congruence grid");
    c.check_passes("s2", 3, 3, 1, "s2.011-congruence-geom-sum", "geometric sum congruence grid");
    c.check_passes("appendix", 3, 3, 1, "ap.020-valuation-rule", "valuation rule grid");
    c.check_passes("s2", 3, 3, 1, "s2.063-power-shape", "p-th power shape on 1000 samples");
    c.check_passes("appendix", 3, 3, 1, "ap.021-u-order-formula", "order formula exhaustive over U");
    c.check_passes("appendix", 3, 3, 1, "ap.022-u-normal-criterion", "cyclic normality criterion exhaustive");
    c.finish(120.0);
}

void criterion7() {
    Criterion c(7, "every displayed relation holds or is adjudicated with a passing corrected reading");
    // parameter points covering every side condition: base low (3,3,1),
    // n > 2i+1 and i = 1 (3,4,1), i > 1 (3,5,2), p = 5 discrimination
    // (5,3,1), high regime (3,4,2) and (5,4,2), top index (3,3,2), (3,4,3)
    struct Pt {
        const char* suite;
        i64 p;
        int n, i;
    };
    for (Pt pt : {Pt{"aut-low", 3, 3, 1}, {"aut-low", 3, 4, 1}, {"aut-low", 3, 5, 2}, {"aut-low", 5, 3, 1},
                  {"aut-high", 3, 4, 2}, {"aut-high", 5, 4, 2}, {"aut-lindop", 3, 3, 2},
                  {"aut-lindop", 3, 4, 3}}) {
        const auto& rep = suite_at(pt.suite, pt.p, pt.n, pt.i);
        u64 rel = 0, adjudicated = 0;
        bool all_ok = true;
        for (const auto& r : rep.checks) {
            if (r.id.find("-rel-") == std::string::npos) continue;
            ++rel;
            if (r.status == CheckStatus::fail) all_ok = false;
            if (r.status == CheckStatus::pass && r.witness.find("displayed reading fails") != std::string::npos) {
                ++adjudicated;
                if (r.witness.find("corrected reading holds") == std::string::npos &&
                    r.witness.find("holds") == std::string::npos)
                    all_ok = false;
            }
        }
        std::ostringstream os;
        os << pt.suite << " at (" << pt.p << "," << pt.n << "," << pt.i << "): " << rel
           << " relation checks, " << adjudicated << " adjudicated";
        c.item(all_ok && rel > 0, os.str());
    }
    // the two flagged displays identify a passing reading
    {
        const auto* r = find_check(suite_at("aut-low", 5, 3, 1), "alw.117-rel-zmz-adjudicated");
        c.item(r && r->status == CheckStatus::pass && r->witness.find("holds") != std::string::npos,
               "Z M Z^-1 reading identified at (5,3,1)" + (r ? " -- " + r->witness : std::string()));
    }
    {
        const auto* r = find_check(suite_at("aut-low", 3, 4, 1), "alw.141-rel-uyu-i1-adjudicated");
        c.item(r && r->status == CheckStatus::pass && r->witness.find("holds") != std::string::npos,
               "U Y U^-1 reading identified at (3,4,1)" + (r ? " -- " + r->witness : std::string()));
    }
    // conjugation relations for Aut(U) and its Sylow subgroup
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 3, 1}, {3, 4, 2}}) {
        c.check_passes("appendix", p, n, i, "ap.033-beta-alpha-conj", "beta alpha beta^-1 relation");
        c.check_passes("appendix", p, n, i, "ap.034-aut-defining-relations", "Aut(U) defining relations");
        c.check_passes("appendix", p, n, i, "ap.061-sylow-iso", "Sylow presentation relations");
    }
    c.finish(0);
}

}  // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic, tolerance = equality)\n";
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "total: " << secs << " s, " << (7 - g_failed_criteria) << "/7 criteria passed\n";
    if (g_failed_criteria > 0)
        std::cout << "note: the z(Pi) = 7 item in criterion 5 is expected to fail; the computed value is 6 "
                     "and the discrepancy is analyzed in the README and in the aut-low report (alw.223)\n";
    return g_failed_criteria == 0 ? 0 : 1;
}
