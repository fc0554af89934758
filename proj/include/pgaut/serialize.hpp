#pragma once

// JSON serialization: verification reports, search stats, and the on-disk
// automorphism-set cache.  Cache files are written deterministically
// (sorted canonical tuples, sorted keys) so a rerun with the same version
// and seed is byte-identical; writes go through a temp file and rename.

#include <filesystem>
#include <string>

#include "pgaut/automorphism.hpp"
#include "pgaut/verify.hpp"

#include "json.hpp"

namespace pgaut {

using json = nlohmann::ordered_json;

json params_to_json(const GroupParams& par);
json constants_to_json(const AppendixConstants& k);
json stats_to_json(const SearchStats& st);
json report_to_json(const VerificationReport& rep);
json ratio_to_json(const GroupParams& par, const RatioReport& r);

inline constexpr int kCacheFormatVersion = 1;

json elem_to_json(const SElement& e);
json elem_to_json(const TElement& e);
json elem_to_json(const UElement& e);
SElement selem_from_json(const json& j);

template <class G>
json autset_to_json(const G& g, const AutSet<G>& s, const std::string& group_tag, const std::string& mode,
                    u64 seed) {
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["version"] = kVersion;
    j["group"] = group_tag;
    j["mode"] = mode;
    j["seed"] = seed;
    j["params"] = params_to_json(g.params());
    j["count"] = s.maps.size();
    json maps = json::array();
    for (const auto& f : s.maps) {
        json images = json::array();
        for (const auto& e : f.img) images.push_back(elem_to_json(e));
        maps.push_back(images);
    }
    j["maps"] = std::move(maps);
    return j;
}

// Parses a cache file previously produced by autset_to_json for S; returns
// false when the header does not match the requested parameters/mode.
bool autset_from_json(const json& j, const SGroup& g, const std::string& mode, AutSet<SGroup>& out);

// Atomic write: temp file in the same directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace pgaut
