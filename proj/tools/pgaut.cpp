// pgaut: command-line front end for the p-group automorphism toolkit.
//
//   pgaut info 3 3 1                 parameter summary and expected orders
//   pgaut verify --suite all 3 3 1   run verification suites, write a JSON report
//   pgaut aut --mode brute 3 3 1     compute Aut(S), cached on disk
//   pgaut oracle 3 3 1               brute-force search with statistics
//   pgaut ratio 3 4 2                minimal-generator-count ratios
//
// Exit codes: 0 ok, 1 check failure, 2 invalid parameters, 3 resource guard.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgaut/serialize.hpp"

using namespace pgaut;

namespace {

struct CommonOpts {
    i64 p = 3;
    int n = 3;
    int i = 1;
    i64 d = 0;  // 0 means "derive canonically"
    i64 e = 0;
    std::string out;
    std::string cache;
    int threads = 0;
    u64 seed = 12001;
    u64 max_group = 10000;
    u64 max_aut = 200000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("p,--p", o.p, "odd prime p");
    cmd->add_option("n,--n", o.n, "exponent n >= 2");
    cmd->add_option("i,--i", o.i, "index 1 <= i <= n-1");
    cmd->add_option("--d", o.d, "explicit d (requires --e)");
    cmd->add_option("--e", o.e, "explicit e (requires --d)");
    cmd->add_option("--out", o.out, "write the JSON report here");
    cmd->add_option("--cache", o.cache, "cache directory (default $PGAUT_CACHE_DIR or ./pgaut-cache)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--seed", o.seed, "seed for sampled checks");
    cmd->add_option("--max-group", o.max_group, "brute-force group-order guard");
    cmd->add_option("--max-aut", o.max_aut, "automorphism-count guard");
}

GroupParams make_params(const CommonOpts& o) {
    if ((o.d == 0) != (o.e == 0))
        throw std::invalid_argument("--d and --e must be given together");
    return o.d != 0 ? GroupParams::make(o.p, o.n, o.i, o.d, o.e) : GroupParams::make(o.p, o.n, o.i);
}

VerifyConfig make_config(const CommonOpts& o) {
    VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    cfg.limits.max_group = o.max_group;
    cfg.limits.max_aut = o.max_aut;
    return cfg;
}

std::filesystem::path cache_dir(const CommonOpts& o) {
    if (!o.cache.empty()) return o.cache;
    if (const char* env = std::getenv("PGAUT_CACHE_DIR")) return env;
    return "pgaut-cache";
}

u64 expected_aut_order(const GroupParams& par) {
    auto up = [&](int e) {
        u64 acc = 1;
        for (int k = 0; k < e; ++k) acc *= static_cast<u64>(par.p);
        return acc;
    };
    u64 pm1 = static_cast<u64>(par.p - 1);
    if (par.top_i()) return up(par.n + 1) * pm1 * pm1 * static_cast<u64>(par.p + 1);
    if (par.high()) return 2 * up(3 * par.n - 2 * par.i + 1) * pm1;
    return up(2 * par.n + 2) * pm1;
}

int cmd_info(const CommonOpts& o) {
    GroupParams par = make_params(o);
    auto k = derive_appendix_constants(par);
    std::cout << "p = " << par.p << ", n = " << par.n << ", i = " << par.i << ", regime "
              << (par.low() ? "LOW (2i < n)" : "HIGH (2i >= n)");
    if (par.top_i()) std::cout << ", subcase i = n-1";
    std::cout << "\n";
    if (par.n == 2) std::cout << "note: n = 2, so S = T is the Heisenberg group of order p^3\n";
    std::cout << "(d, e) = (" << par.d << ", " << par.e << ")   [(1+dp)(1+ep) = 1 mod p^n]\n";
    std::cout << "derived constants: " << constants_to_json(k).dump() << "\n";
    std::cout << "|S| = " << group_order(par, GroupKind::S) << ", |T| = " << group_order(par, GroupKind::T)
              << ", |U| = " << group_order(par, GroupKind::U) << "\n";
    std::cout << "normal-form moduli of S: a mod " << par.mod_a << ", b mod " << par.mod_b << ", c mod "
              << par.mod_c << "; central commutator = c^" << par.dshift_pow << "\n";
    if (par.low())
        std::cout << "Z(S) generated by c^" << par.dshift_pow << " and b^" << par.pp(par.n - par.i - 1) << "\n";
    else
        std::cout << "Z(S) generated by c^" << par.pp(par.n - par.i - 1) << "\n";
    std::cout << "expected |Aut(S)| = " << expected_aut_order(par) << "\n";
    u64 pm1 = static_cast<u64>(par.p - 1);
    u64 autu = 1;
    for (int q = 0; q < (par.low() ? 2 * par.n - 1 : 3 * par.n - 2 * par.i - 1); ++q)
        autu *= static_cast<u64>(par.p);
    std::cout << "expected |Aut(U)| = " << autu * pm1 << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    GroupParams par = make_params(o);
    auto rep = verify_suite(par, suite, make_config(o));
    for (const auto& c : rep.checks) {
        std::cout << "[" << status_name(c.status) << "] " << c.id;
        if (!c.witness.empty()) std::cout << " -- " << c.witness;
        std::cout << "\n";
    }
    std::cout << "suite " << suite << " at (p,n,i) = (" << par.p << "," << par.n << "," << par.i << "): "
              << rep.count(CheckStatus::pass) << " pass, " << rep.count(CheckStatus::fail) << " fail, "
              << rep.count(CheckStatus::skipped) << " skipped (" << rep.total_ms / 1000.0 << " s)\n";
    if (!o.out.empty()) write_text_atomic(o.out, report_to_json(rep).dump(2) + "\n");
    return rep.all_passed() ? 0 : 1;
}

AutSet<SGroup> compute_aut(const SGroup& g, const std::string& mode, const CommonOpts& o) {
    if (mode == "brute") {
        auto res = brute_force_aut(g, make_config(o).limits, o.threads);
        return std::move(res.auts);
    }
    auto k = derive_appendix_constants(g.params());
    auto named = named_s_generators(g, family_for(g.params()), k);
    std::vector<GenMap<SGroup>> gens;
    for (auto& na : named) gens.push_back(na.map);
    return aut_closure(g, gens, o.max_aut);
}

int cmd_aut(const CommonOpts& o, const std::string& mode) {
    GroupParams par = make_params(o);
    SGroup g(par);
    auto dir = cache_dir(o);
    std::ostringstream name;
    name << "aut-S-p" << par.p << "-n" << par.n << "-i" << par.i << "-d" << par.d << "-e" << par.e << "-"
         << mode << ".json";
    auto path = dir / name.str();

    AutSet<SGroup> set;
    bool loaded = false;
    if (std::filesystem::exists(path)) {
        std::ifstream is(path);
        json j = json::parse(is, nullptr, true);
        loaded = autset_from_json(j, g, mode, set);
    }
    if (!loaded) {
        set = compute_aut(g, mode, o);
        write_text_atomic(path, autset_to_json(g, set, "S", mode, o.seed).dump() + "\n");
    }
    std::cout << "|Aut(S)| = " << set.size() << " at (p,n,i,d,e) = (" << par.p << "," << par.n << ","
              << par.i << "," << par.d << "," << par.e << ")\n";
    std::cout << "mode " << mode << (loaded ? " (loaded from cache " : " (computed, cached at ")
              << path.string() << ")\n";
    std::cout << "provenance: "
              << (mode == "brute" ? "backtracking search over generator images"
                                  : "closure of the named generator family")
              << "\n";
    return 0;
}

int cmd_oracle(const CommonOpts& o) {
    GroupParams par = make_params(o);
    SGroup g(par);
    auto res = brute_force_aut(g, make_config(o).limits, o.threads);
    std::cout << "|Aut(S)| = " << res.auts.size() << " (brute force)\n";
    std::cout << "stats: " << stats_to_json(res.total).dump(2) << "\n";
    for (const auto& st : res.partitions)
        std::cout << "partition " << st.partition << ": " << st.candidates << " candidates, "
                  << st.generation_failures << " generation failures, " << st.elapsed_s << " s\n";
    return 0;
}

int cmd_ratio(const CommonOpts& o) {
    GroupParams par = make_params(o);
    auto r = ratio_report(par, make_config(o));
    std::cout << ratio_to_json(par, r).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact automorphism groups of the 3-generator p-groups S, T and of U"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string suite = "all";
    std::string mode = "closure";

    auto* info = app.add_subcommand("info", "parameter and order summary");
    add_common(info, o);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, o);
    verify->add_option("--suite", suite, "s2 | aut-high | aut-lindop | aut-low | appendix | all");
    auto* aut = app.add_subcommand("aut", "compute Aut(S), with an on-disk cache");
    add_common(aut, o);
    aut->add_option("--mode", mode, "closure | brute");
    auto* oracle = app.add_subcommand("oracle", "brute-force Aut(S) with search statistics");
    add_common(oracle, o);
    auto* ratio = app.add_subcommand("ratio", "minimal-generator-count ratios");
    add_common(ratio, o);

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_info(o);
        if (verify->parsed()) {
            const auto& s = known_suites();
            if (std::find(s.begin(), s.end(), suite) == s.end())
                throw std::invalid_argument("unknown suite '" + suite + "'");
            return cmd_verify(o, suite);
        }
        if (aut->parsed()) {
            if (mode != "closure" && mode != "brute") throw std::invalid_argument("unknown mode '" + mode + "'");
            return cmd_aut(o, mode);
        }
        if (oracle->parsed()) return cmd_oracle(o);
        if (ratio->parsed()) return cmd_ratio(o);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
