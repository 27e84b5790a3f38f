#pragma once

#include "negglue/io.hpp"
#include "negglue/model.hpp"
#include "negglue/simulator.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ng {

struct CompileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Transition {
    std::string write;
    char move = 'R';  // 'L' or 'R'
    std::string next;
};

struct TuringMachine {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::string blank;
    std::string start;
    std::set<std::string> halts;
    std::map<std::pair<std::string, std::string>, Transition> delta;

    const Transition* find(const std::string& q, const std::string& s) const;
    bool halted(const std::string& q, const std::string& s) const;
};

json tm_to_json(const TuringMachine& M);
TuringMachine tm_from_json(const json& j);  // rejects nondeterministic machines

struct TmConfig {
    std::string state;
    long head = 0;
    std::map<long, std::string> tape;  // blank cells omitted
    bool operator==(const TmConfig&) const = default;
    std::string read(long pos, const std::string& blank) const;
};

// direct interpreter; trace[0] is the initial configuration
std::vector<TmConfig> interpret(const TuringMachine& M, const std::vector<std::string>& input, size_t maxSteps);

// symbols of the input word; multi-character symbols are separated by spaces
std::vector<std::string> split_input(const TuringMachine& M, const std::string& w);

struct ZigZagCheckReport {
    bool isZigzag = false;
    bool isCompact = false;
    std::vector<std::pair<Point, std::string>> violations;
    Termination reason = Termination::StepCap;
};

ZigZagCheckReport check_zigzag(const TileSystem& S, long long max_steps);

// what a compiled zig-zag tile says about its tape cell
struct CellCode {
    enum Kind { Seed, Turn, Coop, Extension, Cap } kind = Coop;
    std::string symbol;
    std::string head;  // state when the head sits on this cell, else empty
    bool executed = false;  // a transition fired in this cell during this row
};

struct ZigZagCodec {
    std::map<std::string, CellCode> byTile;
};

struct CompiledTm {
    TileSystem system;
    ZigZagCodec codec;
};

CompiledTm compile_tm_to_zigzag(const TuringMachine& M, const std::vector<std::string>& input);

struct IncompleteRow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RowConfig {
    std::string state;
    long head = 0;
    long left = 0;  // x of the first cell in the window
    std::vector<std::string> tape;
};

RowConfig extract_configuration(const TileSystem& S, const Assembly& A, int row, const ZigZagCodec& codec);

// configurations of all finished rows, consecutive repeats dropped (rows where the head only waited)
std::vector<TmConfig> row_trace(const TileSystem& S, const Assembly& A, const ZigZagCodec& codec,
                                const std::string& blank);

}  // namespace ng
