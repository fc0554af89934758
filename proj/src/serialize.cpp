#include "pgaut/serialize.hpp"

#include <fstream>

namespace pgaut {

json elem_to_json(const SElement& e) { return json::array({e.a, e.b, e.c}); }
json elem_to_json(const TElement& e) { return json::array({e.a, e.b, e.d}); }
json elem_to_json(const UElement& e) { return json::array({e.x, e.y}); }

SElement selem_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("cache: malformed element");
    return {j[0].get<i64>(), j[1].get<i64>(), j[2].get<i64>()};
}

json params_to_json(const GroupParams& par) {
    json j;
    j["p"] = par.p;
    j["n"] = par.n;
    j["i"] = par.i;
    j["d"] = par.d;
    j["e"] = par.e;
    j["regime"] = par.low() ? "low" : "high";
    return j;
}

json constants_to_json(const AppendixConstants& k) {
    json j;
    j["g"] = k.g;
    j["h"] = k.h;
    j["t"] = k.t;
    j["ell"] = k.ell;
    j["d"] = k.d;
    j["e"] = k.e;
    j["g0"] = k.g0;
    j["h0"] = k.h0;
    j["r"] = k.r;
    j["s"] = k.s;
    j["t_r"] = k.t_r;
    j["v"] = k.v;
    return j;
}

json stats_to_json(const SearchStats& st) {
    json j;
    j["candidates"] = st.candidates;
    json rf;
    for (const auto& [k, v] : st.relation_failures) rf[k] = v;
    j["relation_failures"] = std::move(rf);
    j["generation_failures"] = st.generation_failures;
    j["elapsed_s"] = st.elapsed_s;
    j["partition"] = st.partition;
    return j;
}

json report_to_json(const VerificationReport& rep) {
    json j;
    j["params"] = params_to_json(rep.params);
    json constants;
    try {
        constants = constants_to_json(derive_appendix_constants(rep.params));
    } catch (const std::exception& e) {
        constants = json{{"error", e.what()}};
    }
    j["constants"] = std::move(constants);
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["status"] = status_name(c.status);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        jc["ms"] = c.ms;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    json stats = stats_to_json(rep.oracle_stats);
    stats["suite"] = rep.suite;
    stats["total_ms"] = rep.total_ms;
    stats["pass"] = rep.count(CheckStatus::pass);
    stats["fail"] = rep.count(CheckStatus::fail);
    stats["skipped"] = rep.count(CheckStatus::skipped);
    j["stats"] = std::move(stats);
    j["version"] = rep.version;
    j["seed"] = rep.seed;
    return j;
}

json ratio_to_json(const GroupParams& par, const RatioReport& r) {
    json j;
    j["params"] = params_to_json(par);
    j["z_s"] = r.z_s;
    j["z_aut_s_sylow"] = r.z_aut_s_sylow;
    j["z_u"] = r.z_u;
    j["z_aut_u_sylow"] = r.z_aut_u_sylow;
    j["ratio_s"] = r.ratio_s;
    j["ratio_u"] = r.ratio_u;
    return j;
}

bool autset_from_json(const json& j, const SGroup& g, const std::string& mode, AutSet<SGroup>& out) {
    const GroupParams& par = g.params();
    if (!j.is_object() || !j.contains("format_version") || j["format_version"].get<int>() != kCacheFormatVersion)
        return false;
    if (j.value("group", "") != "S" || j.value("mode", "") != mode) return false;
    const auto& jp = j.at("params");
    if (jp.at("p").get<i64>() != par.p || jp.at("n").get<int>() != par.n || jp.at("i").get<int>() != par.i ||
        jp.at("d").get<i64>() != par.d || jp.at("e").get<i64>() != par.e)
        return false;
    out = AutSet<SGroup>{};
    out.prov = mode == "brute" ? AutSet<SGroup>::Provenance::brute_force : AutSet<SGroup>::Provenance::generators;
    for (const auto& jm : j.at("maps")) {
        if (!jm.is_array() || jm.size() != 3) throw std::invalid_argument("cache: malformed map record");
        GenMap<SGroup> f;
        f.img = {selem_from_json(jm[0]), selem_from_json(jm[1]), selem_from_json(jm[2])};
        f.hom_ok = f.aut_ok = true;
        out.maps.push_back(f);
    }
    if (out.maps.size() != j.at("count").get<size_t>()) throw std::invalid_argument("cache: count mismatch");
    out.build_index();
    return true;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    auto dir = path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << text;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace pgaut
