#pragma once

#include "negglue/io.hpp"
#include "negglue/zigzag.hpp"

#include <string>

inline std::string fixture(const std::string& rel) { return ng::fixtures_dir() + "/" + rel; }

inline ng::TuringMachine load_tm(const std::string& name, std::vector<std::string>* inputs = nullptr) {
    auto j = ng::read_json_file(fixture("tm/" + name + ".json"));
    if (inputs) *inputs = j.at("inputs").get<std::vector<std::string>>();
    return ng::tm_from_json(j);
}
