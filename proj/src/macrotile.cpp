#include "negglue/macrotile.hpp"

#include <algorithm>
#include <set>

namespace ng {

json map_to_json(const MacroTileMap& M) {
    json segs = json::array();
    for (auto& s : M.segments) segs.push_back({{"srcTile", s.srcTile}, {"x", s.x}, {"y", s.y}});
    return {{"formatVersion", kFormatVersion}, {"scale", M.scale}, {"boundaries", M.boundaries}, {"segments", segs}};
}

MacroTileMap map_from_json(const json& j) {
    try {
        if (j.contains("formatVersion") && j["formatVersion"].get<int>() != kFormatVersion)
            throw SchemaError("unsupported formatVersion");
        MacroTileMap M;
        M.scale = j.at("scale").get<int>();
        M.boundaries = j.at("boundaries").get<std::vector<long long>>();
        for (auto& s : j.at("segments"))
            M.segments.push_back({s.at("srcTile").get<std::string>(), s.at("x").get<int>(), s.at("y").get<int>()});
        return M;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("macro-tile map: ") + e.what());
    }
}

ZigZagRun zigzag_run(const TileSystem& Z, long long max_steps) {
    ZigZagRun z;
    z.run = run(Z, Policy::Lexicographic, max_steps);
    std::vector<Placement> seed = Z.seed;
    std::sort(seed.begin(), seed.end(), [](auto& a, auto& b) { return Point{a.x, a.y} < Point{b.x, b.y}; });
    z.order = seed;
    z.inSides.assign(seed.size(), 0);
    Assembly A(Z.seed);
    for (size_t i = z.run.seedSize; i < z.run.steps.size(); ++i) {
        auto& p = z.run.steps[i];
        unsigned in = 0;
        for (int d = 0; d < 4; ++d) {
            int nb = A.at({p.x + DX[d], p.y + DY[d]});
            if (nb >= 0 && interaction_strength(Z.tiles[p.tile].side[d], Z.tiles[nb].side[opposite(d)], Z) > 0)
                in |= 1u << d;
        }
        A.place({p.x, p.y}, p.tile);
        z.order.push_back(p);
        z.inSides.push_back(in);
    }
    return z;
}

namespace macro {

int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::string tile_id(int i, const std::string& profile, const std::string& src) {
    return "m" + std::to_string(i) + ":" + profile + ":" + src;
}

bool parse_id(const std::string& id, int& i, std::string& profile, std::string& src) {
    if (id.size() < 2 || id[0] != 'm') return false;
    size_t a = id.find(':');
    if (a == std::string::npos) return false;
    size_t b = id.find(':', a + 1);
    if (b == std::string::npos) return false;
    try {
        size_t used = 0;
        i = std::stoi(id.substr(1, a - 1), &used);
        if (used != a - 1) return false;
    } catch (...) {
        return false;
    }
    profile = id.substr(a + 1, b - a - 1);
    src = id.substr(b + 1);
    return true;
}

}  // namespace macro

namespace {

using namespace macro;

// 12-tile paths inside a 4x3 block (F overhangs two cells into the block above)
const std::vector<Point> kPathF = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4},
                                   {2, 4}, {2, 3}, {2, 2}, {3, 2}, {3, 1}, {3, 0}};
const std::vector<Point> kPathE = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {2, 1},
                                   {1, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}};
constexpr int kNegIdx = 7, kNorthIdx = 9, kExitIdx = 11;

struct Profile {
    char kind;  // c t x s
    char dir;   // R L
    bool fShape;
};

Profile rg_profile(const std::string& p) {
    if (p.empty()) return {'?', 'R', true};
    if (p[0] == 's') return {'s', 'R', p.back() == 'F'};
    if (p.size() != 2) return {'?', 'R', true};
    return {p[0], p[1], p[0] != 'x'};
}

Point rg_cell(const Profile& pr, int X, int Y, int i) {
    Point o = (pr.fShape ? kPathF : kPathE)[i];
    if (pr.dir == 'L') o.x = 3 - o.x;
    return {4 * X + o.x, 3 * Y + o.y};
}

char par(int y) { return (y & 1) ? 'o' : 'e'; }

struct RgBuilder {
    const TileSystem& Z;
    TileSystem out;
    std::set<std::string> keys;

    explicit RgBuilder(const TileSystem& z) : Z(z) {
        out.cls = ModelClass::RgTAS;
        out.temperature = 1;
        out.negLabel = "neg";
        out.negStrength = -1;
    }

    static Glue neg() { return {"neg", -1}; }
    static Glue h(int y, const std::string& l) { return {std::string("h") + par(y) + ":" + l, 1}; }
    static Glue v(int y, const std::string& l) { return {std::string("v") + par(y) + ":" + l, 1}; }

    void emit(const std::string& profile, const TileType& z, int y, int seedX, bool seedLast) {
        std::string key = profile + ":" + z.id;
        if (!keys.insert(key).second) return;
        Profile pr = rg_profile(profile);
        std::vector<TileType> path(12);
        std::vector<Point> cell(12);
        for (int i = 0; i < 12; ++i) {
            path[i].id = tile_id(i, profile, z.id);
            cell[i] = rg_cell(pr, 0, 0, i);
        }
        for (int i = 0; i + 1 < 12; ++i) {
            int d = 0;
            while (cell[i].x + DX[d] != cell[i + 1].x || cell[i].y + DY[d] != cell[i + 1].y) ++d;
            Glue g{"p:" + key + "/" + std::to_string(i), 1};
            path[i].side[d] = g;
            path[i + 1].side[opposite(d)] = g;
        }
        int inH = pr.dir == 'R' ? W : E, outH = opposite(inH);
        switch (pr.kind) {
        case 'c':
            path[0].side[inH] = h(y, z.side[inH]->label);
            path[0].side[outH] = neg();
            path[0].side[S] = v(y - 1, z.side[S]->label);
            break;
        case 't': path[0].side[S] = v(y - 1, z.side[S]->label); break;
        case 'x': path[0].side[inH] = h(y, z.side[inH]->label); break;
        case 's':
            if (seedX > 0) path[0].side[W] = Glue{"seed/" + std::to_string(seedX), 1};
            break;
        }
        if (z.side[N]) {
            path[pr.fShape ? kNorthIdx : 11].side[N] = v(y, z.side[N]->label);
            // the joining tile above needs the negative glue already in place
            if (pr.fShape && z.side[N]->strength == 1) path[kNegIdx].side[outH] = neg();
        }
        if (pr.fShape) {
            if (pr.kind == 's') {
                if (!seedLast) path[kExitIdx].side[E] = Glue{"seed/" + std::to_string(seedX + 1), 1};
            } else if (z.side[outH]) {
                path[kExitIdx].side[outH] = h(y, z.side[outH]->label);
            }
        }
        for (auto& t : path) out.tiles.push_back(std::move(t));
    }
};

}  // namespace

CompiledMacro compile_zigzag_to_rgtas(const TileSystem& Z, long long max_steps) {
    auto rep = check_zigzag(Z, max_steps);
    if (!rep.isCompact) throw CompileError("input is not a compact zig-zag system");
    if (rep.reason != Termination::Terminal) throw CompileError("input did not terminate within the step cap");
    ZigZagRun zr = zigzag_run(Z, max_steps);
    RgBuilder b(Z);
    CompiledMacro out;
    out.map.scale = 12;
    out.map.boundaries = {0};
    std::set<Point> used;
    size_t w = Z.seed.size();
    for (size_t j = 0; j < zr.order.size(); ++j) {
        auto& p = zr.order[j];
        const TileType& z = Z.tiles[p.tile];
        std::string where = " at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        std::string prof;
        bool last = j + 1 == w;
        if (j < w) {
            if (p.y != 0 || p.x != int(j)) throw CompileError("seed must be a row starting at the origin");
            prof = "s" + std::to_string(j) + (last ? "E" : "F");
        } else {
            char dir = (p.y & 1) ? 'L' : 'R';
            unsigned in = zr.inSides[j];
            unsigned sideIn = 1u << (dir == 'R' ? W : E);
            if (in == (sideIn | 1u << S)) prof = std::string("c") + dir;
            else if (in == (1u << S)) prof = std::string("t") + dir;
            else if (in == sideIn) prof = std::string("x") + dir;
            else throw CompileError("unsupported input sides" + where + " (rows must alternate, row 1 growing west)");
            // the F path places its north glue before its last two tiles
            if (prof[0] != 'x' && z.side[N] && z.side[N]->strength == 2)
                throw CompileError("row ends on a tile with a south input" + where);
        }
        b.emit(prof, z, p.y, int(j), last);
        Profile pr = rg_profile(prof);
        for (int i = 0; i < 12; ++i)
            if (!used.insert(rg_cell(pr, p.x, p.y, i)).second) throw CompileError("macro-tiles overlap" + where);
        out.map.boundaries.push_back(12LL * (long long)(j + 1));
        out.map.segments.push_back({z.id, p.x, p.y});
    }
    if (w == 0) throw CompileError("empty seed");
    std::string seedProf = w == 1 ? "s0E" : "s0F";
    b.out.seed = {{0, 0, b.out.index(tile_id(0, seedProf, Z.tiles[zr.order[0].tile].id))}};
    out.system = std::move(b.out);
    return out;
}

namespace macro {
bool prg_cell(const std::string& profile, int X, int Y, int i, Point& out, int& length);
}

Decoded decode_segment(const TileSystem& S, const std::vector<Placement>& seg) {
    Decoded d;
    if (seg.empty()) {
        d.why = "empty segment";
        return d;
    }
    int i0;
    std::string prof, src;
    if (!parse_id(S.tiles[seg[0].tile].id, i0, prof, src) || i0 != 0) {
        d.why = "segment does not start with a macro-tile entry";
        return d;
    }
    // readers share their first tiles across simulated tiles; the last tile names the result
    {
        int k;
        std::string p2;
        if (!parse_id(S.tiles[seg.back().tile].id, k, p2, src) || src.empty() || src[0] == '~') {
            d.why = "segment ends inside a reader";
            return d;
        }
    }
    auto cellAt = [&](int X, int Y, int i, Point& c, int& len) {
        if (S.cls == ModelClass::PrgTAS) return prg_cell(prof, X, Y, i, c, len);
        Profile pr = rg_profile(prof);
        if (pr.kind == '?') return false;
        len = 12;
        c = rg_cell(pr, X, Y, i);
        return true;
    };
    Point c0;
    int len = 0;
    if (!cellAt(0, 0, 0, c0, len)) {
        d.why = "unknown macro-tile profile '" + prof + "'";
        return d;
    }
    Point cx, cy;
    int l2;
    cellAt(1, 0, 0, cx, l2);
    cellAt(0, 1, 0, cy, l2);
    int X = floordiv(seg[0].x - c0.x, cx.x - c0.x), Y = floordiv(seg[0].y - c0.y, cy.y - c0.y);
    if (int(seg.size()) != len) {
        d.why = "segment length " + std::to_string(seg.size()) + " != " + std::to_string(len);
        return d;
    }
    for (int i = 0; i < len; ++i) {
        int k;
        std::string p2, s2;
        Point c;
        if (!parse_id(S.tiles[seg[i].tile].id, k, p2, s2) || k != i || p2 != prof ||
            (s2 != src && !(S.cls == ModelClass::PrgTAS && !s2.empty() && s2[0] == '~'))) {
            d.why = "tile " + std::to_string(i) + " of the segment belongs to another macro-tile";
            return d;
        }
        cellAt(X, Y, i, c, len);
        if (c.x != seg[i].x || c.y != seg[i].y) {
            d.why = "tile " + std::to_string(i) + " of the segment is off the macro-tile path";
            return d;
        }
    }
    d.ok = true;
    d.srcTile = src;
    d.x = X;
    d.y = Y;
    return d;
}

Assembly decode_run(const TileSystem& S, const TileSystem& Z, const RunResult& run, const MacroTileMap& M) {
    Assembly A;
    for (size_t j = 0; j + 1 < M.boundaries.size(); ++j) {
        long long lo = M.boundaries[j], hi = M.boundaries[j + 1];
        if (hi > (long long)run.steps.size()) break;
        Decoded d = decode_segment(S, {run.steps.begin() + lo, run.steps.begin() + hi});
        if (!d.ok) throw std::runtime_error("segment " + std::to_string(j) + ": " + d.why);
        A.place({d.x, d.y}, Z.index(d.srcTile));
    }
    return A;
}

PathSimReport verify_path_simulation(const TileSystem& S, const TileSystem& Z, const MacroTileMap& M,
                                     long long max_steps) {
    PathSimReport r;
    auto ss = check_single_sequence(S, max_steps);
    r.singleSequence = ss.single;
    const auto& steps = ss.run.steps;
    ZigZagRun zr = zigzag_run(Z, max_steps);

    bool bOk = M.boundaries.size() == M.segments.size() + 1 && !M.boundaries.empty() && M.boundaries[0] == 0;
    long long maxLen = 0;
    for (size_t i = 1; i < M.boundaries.size(); ++i) {
        long long len = M.boundaries[i] - M.boundaries[i - 1];
        if (len <= 0) bOk = false;
        maxLen = std::max(maxLen, len);
    }
    if (maxLen != M.scale) bOk = false;
    if (M.segments.size() != zr.order.size()) bOk = false;
    if (ss.reason == Termination::Terminal && !M.boundaries.empty() && M.boundaries.back() != (long long)steps.size())
        bOk = false;
    r.boundariesOk = bOk;
    if (!bOk) r.message = "segment boundaries do not match the run";

    r.segmentsOk = true;
    size_t n = std::min(M.segments.size(), zr.order.size());
    if (M.boundaries.size() < n + 1) n = M.boundaries.empty() ? 0 : M.boundaries.size() - 1;
    auto fail = [&](size_t j, const std::string& why) {
        r.segmentsOk = false;
        r.firstDivergence = (long long)j;
        r.message = "segment " + std::to_string(j) + ": " + why;
    };
    for (size_t j = 0; j < n && r.segmentsOk; ++j) {
        long long lo = M.boundaries[j], hi = M.boundaries[j + 1];
        if (lo < 0 || hi > (long long)steps.size() || lo >= hi) {
            fail(j, "outside the produced sequence");
            break;
        }
        std::vector<Placement> seg(steps.begin() + lo, steps.begin() + hi);
        Decoded d = decode_segment(S, seg);
        if (!d.ok) {
            fail(j, d.why);
            break;
        }
        auto& want = zr.order[j];
        MacroSegment got{d.srcTile, d.x, d.y};
        if (got != MacroSegment{Z.tiles[want.tile].id, want.x, want.y}) {
            fail(j, "decodes to " + d.srcTile + "@(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")");
            break;
        }
        if (got != M.segments[j]) {
            fail(j, "map entry disagrees with the decoded placement");
            break;
        }
        ++r.segmentsChecked;
    }
    if (r.segmentsOk && n < zr.order.size()) fail(n, "missing");
    return r;
}

std::vector<CoopSite> cooperative_sites(const TileSystem& S, const RunResult& run) {
    std::vector<CoopSite> out;
    Assembly A;
    for (size_t i = 0; i < run.steps.size(); ++i) {
        auto& p = run.steps[i];
        if (i >= run.seedSize) {
            std::vector<int> pos;
            for (int d = 0; d < 4; ++d) {
                int nb = A.at({p.x + DX[d], p.y + DY[d]});
                if (nb >= 0 && interaction_strength(S.tiles[p.tile].side[d], S.tiles[nb].side[opposite(d)], S) > 0)
                    pos.push_back(d);
            }
            if (pos.size() >= 2) out.push_back({i, {p.x, p.y}, p.tile, pos[0], pos[1]});
        }
        A.place({p.x, p.y}, p.tile);
    }
    return out;
}

AblationResult ablate(const TileSystem& S, const RunResult& run, const CoopSite& site) {
    Assembly A;
    for (size_t i = 0; i < site.step; ++i) A.place({run.steps[i].x, run.steps[i].y}, run.steps[i].tile);
    AblationResult r;
    r.withBoth = binding_strength(S, A, site.p, site.tile) >= S.temperature;
    auto without = [&](int side) {
        Point q{site.p.x + DX[side], site.p.y + DY[side]};
        TileSystem S2 = S;
        TileType t = S.tiles[A.at(q)];
        t.side[opposite(side)].reset();
        t.id += "#ablated";
        S2.tiles.push_back(t);
        Assembly A2 = A;
        A2.erase(q);
        A2.place(q, int(S2.tiles.size() - 1));
        return binding_strength(S2, A2, site.p, site.tile) >= S2.temperature;
    };
    r.withoutA = without(site.sideA);
    r.withoutB = without(site.sideB);
    return r;
}

}  // namespace ng
