#pragma once

#include "negglue/model.hpp"
#include "negglue/simulator.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ng {

using json = nlohmann::json;

constexpr int kFormatVersion = 1;

struct JsonError : std::runtime_error {
    JsonError(const std::string& msg, int line, int column)
        : std::runtime_error(msg), line(line), column(column) {}
    int line, column;
};

// schema problems in otherwise well-formed JSON
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json parse_json(const std::string& text);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

json glue_to_json(const OptGlue& g);
OptGlue glue_from_json(const json& j);

json to_json(const TileSystem& S);
TileSystem tile_system_from_json(const json& j);

// [{"x","y","tile","step"}], tile by id; seed tiles share step 0
json assembly_to_json(const TileSystem& S, const std::vector<Placement>& steps, size_t seedSize);
struct DumpEntry {
    int x, y;
    std::string tile;
    long long step;
    bool operator==(const DumpEntry&) const = default;
};
std::vector<DumpEntry> assembly_from_json(const json& j);

// directory holding bundled fixtures; NEGGLUE_FIXTURES overrides
std::string fixtures_dir();

}  // namespace ng
