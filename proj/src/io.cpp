#include "negglue/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef NEGGLUE_DEFAULT_FIXTURES
#define NEGGLUE_DEFAULT_FIXTURES "fixtures"
#endif

namespace ng {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line/column (1-based)
        size_t off = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1, col = 1;
        for (size_t i = 0; i < off; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw JsonError(e.what(), line, col);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

json glue_to_json(const OptGlue& g) {
    if (!g) return nullptr;
    return {{"label", g->label}, {"strength", g->strength}};
}

OptGlue glue_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_object() || !j.contains("label") || !j.contains("strength"))
        throw SchemaError("glue must be null or {label, strength}");
    return Glue{j.at("label").get<std::string>(), j.at("strength").get<int>()};
}

static const char* kSideKeys[4] = {"north", "east", "south", "west"};

json to_json(const TileSystem& S) {
    json tiles = json::array();
    for (auto& t : S.tiles) {
        json jt = {{"id", t.id}};
        for (int d = 0; d < 4; ++d) jt[kSideKeys[d]] = glue_to_json(t.side[d]);
        tiles.push_back(jt);
    }
    json seed = json::array();
    for (auto& p : S.seed) seed.push_back({{"x", p.x}, {"y", p.y}, {"tile", S.tiles[p.tile].id}});
    json j;
    j["formatVersion"] = kFormatVersion;
    j["class"] = class_name(S.cls);
    j["temperature"] = S.temperature;
    j["negLabel"] = S.negLabel ? json(*S.negLabel) : json(nullptr);
    j["negStrength"] = S.negStrength;
    j["tiles"] = tiles;
    j["seed"] = seed;
    return j;
}

TileSystem tile_system_from_json(const json& j) {
    try {
        if (!j.is_object()) throw SchemaError("tile set must be an object");
        if (j.contains("formatVersion") && j["formatVersion"].get<int>() != kFormatVersion)
            throw SchemaError("unsupported formatVersion");
        TileSystem S;
        S.cls = parse_class(j.at("class").get<std::string>());
        S.temperature = j.at("temperature").get<int>();
        if (j.contains("negLabel") && !j["negLabel"].is_null()) S.negLabel = j["negLabel"].get<std::string>();
        S.negStrength = j.value("negStrength", -1);
        for (auto& jt : j.at("tiles")) {
            TileType t;
            t.id = jt.at("id").get<std::string>();
            for (int d = 0; d < 4; ++d)
                if (jt.contains(kSideKeys[d])) t.side[d] = glue_from_json(jt[kSideKeys[d]]);
            S.tiles.push_back(std::move(t));
        }
        std::unordered_map<std::string, int> ids;
        for (size_t i = 0; i < S.tiles.size(); ++i) ids.emplace(S.tiles[i].id, int(i));
        for (auto& js : j.at("seed")) {
            auto id = js.at("tile").get<std::string>();
            auto it = ids.find(id);
            if (it == ids.end()) throw SchemaError("seed references unknown tile '" + id + "'");
            S.seed.push_back({js.at("x").get<int>(), js.at("y").get<int>(), it->second});
        }
        return S;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("tile set: ") + e.what());
    }
}

json assembly_to_json(const TileSystem& S, const std::vector<Placement>& steps, size_t seedSize) {
    json out = json::array();
    for (size_t i = 0; i < steps.size(); ++i) {
        auto& p = steps[i];
        long long step = i < seedSize ? 0 : (long long)(i - seedSize + 1);
        out.push_back({{"x", p.x}, {"y", p.y}, {"tile", S.tiles[p.tile].id}, {"step", step}});
    }
    return {{"formatVersion", kFormatVersion}, {"tiles", out}};
}

std::vector<DumpEntry> assembly_from_json(const json& j) {
    try {
        const json& arr = j.is_object() ? j.at("tiles") : j;
        std::vector<DumpEntry> out;
        for (auto& e : arr)
            out.push_back({e.at("x").get<int>(), e.at("y").get<int>(), e.at("tile").get<std::string>(),
                           e.at("step").get<long long>()});
        return out;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("assembly: ") + e.what());
    }
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("NEGGLUE_FIXTURES"); env && *env) return env;
    return NEGGLUE_DEFAULT_FIXTURES;
}

}  // namespace ng
