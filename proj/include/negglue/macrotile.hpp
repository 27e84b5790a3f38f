#pragma once

#include "negglue/io.hpp"
#include "negglue/model.hpp"
#include "negglue/simulator.hpp"
#include "negglue/zigzag.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ng {

struct MacroSegment {
    std::string srcTile;
    int x = 0, y = 0;
    bool operator==(const MacroSegment&) const = default;
};

struct MacroTileMap {
    int scale = 0;
    std::vector<long long> boundaries;  // i_{-1}=0 < i_0 < ... ; one more entry than segments
    std::vector<MacroSegment> segments;
    bool operator==(const MacroTileMap&) const = default;
};

json map_to_json(const MacroTileMap& M);
MacroTileMap map_from_json(const json& j);

struct CompiledMacro {
    TileSystem system;
    MacroTileMap map;
    int bits = 0;     // code width for the bump/dent compiler
    std::map<std::string, std::string> codes;  // glue label -> bit string (bump/dent compiler only)
};

// Input sides of every placement in a zig-zag run, in sequence order (seed row first, by x).
struct ZigZagRun {
    std::vector<Placement> order;
    std::vector<unsigned> inSides;  // bit d set when side d was an input
    RunResult run;
};
ZigZagRun zigzag_run(const TileSystem& Z, long long max_steps);

CompiledMacro compile_zigzag_to_rgtas(const TileSystem& Z, long long max_steps = 1'000'000);

// bump/dent compiler. The G weak north/south glue labels get (G+1)-bit binary codes 1..G, the empty
// glue (key "") all zeros. Blocks carry only the low code_width(G) bits; every macro-tile is a path
// of segment_length(code_width(G)) tiles.
namespace prg {
int code_width(int G);
int segment_length(int w);
}  // namespace prg
namespace macro {
// world cell of path index i of a bump/dent macro-tile at (X, Y); false for unknown profiles
bool prg_cell(const std::string& profile, int X, int Y, int i, Point& out, int& length);
}  // namespace macro
std::map<std::string, std::string> assign_glue_bitstrings(const TileSystem& Z);
CompiledMacro compile_zigzag_to_prgtas(const TileSystem& Z, long long max_steps = 1'000'000);

// writes code with one block and reads it back with a block above growing in readerDir ('L' or 'R');
// returns the bits the reader settled on, empty when the fragment got stuck
std::string prg_read_fragment(const std::string& code, char readerDir, int negStrength);
// the same for many codes of one width against a single reader set; written code -> bits read
std::map<std::string, std::string> prg_read_codes(const std::vector<std::string>& codes, char readerDir,
                                                  int negStrength);

// f: decodes one path segment of a compiled system into the simulated placement
struct Decoded {
    bool ok = false;
    std::string srcTile;
    int x = 0, y = 0;
    std::string why;
};
Decoded decode_segment(const TileSystem& S, const std::vector<Placement>& segment);

struct PathSimReport {
    bool singleSequence = false;
    bool boundariesOk = false;
    bool segmentsOk = false;
    long long firstDivergence = -1;  // segment index
    std::string message;
    size_t segmentsChecked = 0;
    bool ok() const { return singleSequence && boundariesOk && segmentsOk; }
};

// image under f of every completed segment of a run of S, as an assembly of the simulated system
Assembly decode_run(const TileSystem& S, const TileSystem& Z, const RunResult& run, const MacroTileMap& M);

PathSimReport verify_path_simulation(const TileSystem& S, const TileSystem& Z, const MacroTileMap& M,
                                     long long max_steps);

// Cooperative attachments in a run: (step index, position, tile, the two positive input sides)
struct CoopSite {
    size_t step;
    Point p;
    int tile;
    int sideA, sideB;
};
std::vector<CoopSite> cooperative_sites(const TileSystem& S, const RunResult& run);

// true when removing either positive input glue keeps the tile out of the frontier
struct AblationResult {
    bool withBoth = false;  // attachable with both inputs
    bool withoutA = false;  // still attachable without input A (should be false)
    bool withoutB = false;
};
AblationResult ablate(const TileSystem& S, const RunResult& run, const CoopSite& site);

}  // namespace ng
