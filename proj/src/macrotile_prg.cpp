#include "negglue/macrotile.hpp"

#include <algorithm>
#include <set>

namespace ng {

namespace macro {
std::string tile_id(int i, const std::string& profile, const std::string& src);
bool parse_id(const std::string& id, int& i, std::string& profile, std::string& src);
}  // namespace macro

// Block of width 4w+4 and height 5. Columns: 0 and 4w+3 are connectors, bump pairs sit at
// 1+4j,2+4j (j = 0..w) and dent pairs at 3+4j,4+4j (j < w). Levels: 0 dents, 1 read lane,
// 2-3 the way back, 4 the written floor with bumps poking into the next block's level 0.
namespace prg {

int code_width(int G) {
    int w = 1;
    while ((1 << w) < G + 1) ++w;
    return w;
}

int segment_length(int w) { return 20 * w + 18; }

const std::vector<Point>& path(int w, char dir, bool turn) {
    static std::map<std::tuple<int, char, bool>, std::vector<Point>> cache;
    auto key = std::make_tuple(w, dir, turn);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int Wd = 4 * w + 4;
    std::vector<Point> p;
    if (turn) p = {{0, 0}, {0, 1}};
    else p = {{0, 4}, {0, 3}, {0, 2}, {0, 1}};
    for (int c = 1; c < Wd;) {
        if (c >= 3 && (c - 3) % 4 == 0 && c < 4 * w + 3) {
            p.insert(p.end(), {{c, 1}, {c, 0}, {c + 1, 0}, {c + 1, 1}});
            c += 2;
        } else {
            p.push_back({c, 1});
            ++c;
        }
    }
    for (int k = 0; k + 1 < Wd; ++k) {
        int c = Wd - 1 - k;
        if (k % 2 == 0) p.insert(p.end(), {{c, 2}, {c, 3}});
        else p.insert(p.end(), {{c, 3}, {c, 2}});
    }
    if (turn) p.insert(p.end(), {{0, 3}, {0, 4}});
    for (int c = 1; c < Wd;) {
        if ((c - 1) % 4 == 0 && c <= 4 * w + 1) {
            p.insert(p.end(), {{c, 4}, {c, 5}, {c + 1, 5}, {c + 1, 4}});
            c += 2;
        } else {
            p.push_back({c, 4});
            ++c;
        }
    }
    if (dir == 'L')
        for (auto& q : p) q.x = Wd - 1 - q.x;
    return cache.emplace(key, std::move(p)).first->second;
}

// dent cell read by a reader moving in dir, for dent pair j, and the side its bump lies on
Point read_cell(char dir, int j) { return dir == 'R' ? Point{3 + 4 * j, 0} : Point{4 + 4 * j, 0}; }
int bump_side(char dir) { return dir == 'R' ? W : E; }

struct Profile {
    char kind = '?';  // c t x s
    char dir = 'R';
    int w = 0;
};

Profile parse_profile(const std::string& p) {
    Profile r;
    size_t at = p.find('@');
    if (at == std::string::npos || at == 0) return r;
    try {
        r.w = std::stoi(p.substr(at + 1));
    } catch (...) {
        return r;
    }
    if (r.w < 1 || r.w > 30) return r;
    std::string head = p.substr(0, at);
    if (head[0] == 's') r.kind = 's';
    else if (head.size() == 2 && std::string("ctx").find(head[0]) != std::string::npos &&
             (head[1] == 'R' || head[1] == 'L')) {
        r.kind = head[0];
        r.dir = head[1];
    }
    return r;
}

struct BlockSpec {
    std::string profile;
    char dir = 'R';
    bool turn = false;
    std::optional<std::pair<int, Glue>> entry;
    std::string readBits;  // bits in reading order; empty when the block does not read
    std::string preTag;
    std::string src;
    std::string writeCode;  // one bit per dent pair, west to east
    std::optional<Glue> north;
    std::optional<std::pair<int, Glue>> exit;
};

struct Emitter {
    int w;
    TileSystem out;
    std::set<std::string> ids;

    explicit Emitter(int width) : w(width) {
        out.cls = ModelClass::PrgTAS;
        out.temperature = 1;
        out.negLabel = "neg";
        out.negStrength = -1;
    }

    static Glue neg() { return {"neg", -1}; }

    void emit(const BlockSpec& b) {
        const auto& cell = path(w, b.dir, b.turn);
        int L = int(cell.size());
        std::map<Point, int> at;
        for (int i = 0; i < L; ++i) at[cell[i]] = i;
        std::vector<int> reads;  // path indices in reading order
        if (!b.readBits.empty()) {
            for (int i = 0; i < L; ++i)
                for (int j = 0; j < w; ++j)
                    if (cell[i] == read_cell(b.dir, j)) reads.push_back(i);
            if (int(reads.size()) != w || int(b.readBits.size()) != w) throw std::logic_error("bad read layout");
        }
        std::vector<std::string> state(L, b.src);
        for (int i = 0, k = 0; !reads.empty() && i < reads.back(); ++i) {
            if (i == reads[k]) ++k;
            state[i] = "~" + b.readBits.substr(0, k) + "/" + b.preTag;
        }
        std::vector<TileType> tiles(L);
        for (int i = 0; i < L; ++i) tiles[i].id = macro::tile_id(i, b.profile, state[i]);
        for (int i = 0; i + 1 < L; ++i) {
            int d = 0;
            while (cell[i].x + DX[d] != cell[i + 1].x || cell[i].y + DY[d] != cell[i + 1].y) ++d;
            Glue g{"p:" + b.profile + ":" + state[i] + "/" + std::to_string(i), 1};
            tiles[i].side[d] = g;
            tiles[i + 1].side[opposite(d)] = g;
        }
        for (size_t r = 0; r < reads.size(); ++r)
            tiles[reads[r]].side[b.readBits[r] == '0' ? bump_side(b.dir) : S] = neg();
        for (int j = 0; j < w && !b.writeCode.empty(); ++j) {
            bool one = b.writeCode[j] == '1';
            // the row above grows the other way
            Point c = b.dir == 'R' ? (one ? Point{5 + 4 * j, 5} : Point{4 + 4 * j, 4})
                                   : (one ? Point{2 + 4 * j, 5} : Point{3 + 4 * j, 4});
            int s = one ? (b.dir == 'R' ? W : E) : N;
            auto& slot = tiles[at.at(c)].side[s];
            if (slot) throw std::logic_error("write glue clash");
            slot = neg();
        }
        if (b.entry) tiles[0].side[b.entry->first] = b.entry->second;
        if (b.north) tiles[L - 1].side[N] = *b.north;
        if (b.exit) tiles[L - 1].side[b.exit->first] = b.exit->second;
        for (auto& t : tiles)
            if (ids.insert(t.id).second) out.tiles.push_back(std::move(t));
    }
};

char par(int y) { return (y & 1) ? 'o' : 'e'; }
Glue hglue(int y, const std::string& l) { return {std::string("h") + par(y) + ":" + l, 1}; }
Glue vglue(int y, const std::string& l) { return {std::string("v") + par(y) + ":" + l, 1}; }

}  // namespace prg

namespace macro {

bool prg_cell(const std::string& profile, int X, int Y, int i, Point& out, int& length) {
    prg::Profile pr = prg::parse_profile(profile);
    if (pr.kind == '?') return false;
    const auto& p = prg::path(pr.w, pr.dir, pr.kind == 't');
    length = int(p.size());
    if (i < 0 || i >= length) return false;
    out = {(4 * pr.w + 4) * X + p[i].x, 5 * Y + p[i].y - 4};
    return true;
}

}  // namespace macro

std::map<std::string, std::string> assign_glue_bitstrings(const TileSystem& Z) {
    std::set<std::string> labels;
    for (auto& t : Z.tiles)
        for (int d : {N, S})
            if (t.side[d] && t.side[d]->strength == 1) labels.insert(t.side[d]->label);
    int w = int(labels.size()) + 1;
    auto bits = [&](int v) {
        std::string s(w, '0');
        for (int j = 0; j < w && j < 31; ++j)
            if (v >> j & 1) s[w - 1 - j] = '1';
        return s;
    };
    std::map<std::string, std::string> out;
    out[""] = bits(0);
    int i = 0;
    for (auto& l : labels) out[l] = bits(++i);
    return out;
}

std::map<std::string, std::string> prg_read_codes(const std::vector<std::string>& codes, char readerDir, int negStrength) {
    std::map<std::string, std::string> out;
    if (codes.empty()) return out;
    int w = int(codes[0].size());
    prg::Emitter em(w);
    em.out.negStrength = negStrength;
    char writerDir = readerDir == 'R' ? 'L' : 'R';
    std::string wprof = "x" + std::string(1, writerDir) + "@" + std::to_string(w);
    for (auto& code : codes) {
        if (int(code.size()) != w) throw std::invalid_argument("codes of unequal width");
        prg::BlockSpec wr;
        wr.profile = wprof;
        wr.dir = writerDir;
        wr.src = "writer" + code;
        wr.writeCode = code;
        wr.north = Glue{"up", 1};
        em.emit(wr);
    }
    for (int v = 0; v < (1 << w); ++v) {
        std::string c(w, '0');
        for (int j = 0; j < w; ++j)
            if (v >> (w - 1 - j) & 1) c[j] = '1';
        prg::BlockSpec rd;
        rd.profile = "t" + std::string(1, readerDir) + "@" + std::to_string(w);
        rd.dir = readerDir;
        rd.turn = true;
        rd.entry = {{S, Glue{"up", 1}}};
        rd.readBits = readerDir == 'R' ? c : std::string(c.rbegin(), c.rend());
        rd.preTag = "r";
        rd.src = c;
        em.emit(rd);
    }
    // one writer per run; the others never touch the lattice
    Compiled C(em.out);
    const int L = prg::segment_length(w);
    for (auto& code : codes) {
        State st(C, {{0, 0, em.out.index(macro::tile_id(0, wprof, "writer" + code))}});
        std::string last;
        int best = -1;
        for (int steps = 0; st.frontier_size() && steps < 4 * L; ++steps) {
            auto e = st.first();
            st.place(e.p, e.tile);
            int i;
            std::string prof, src;
            if (macro::parse_id(em.out.tiles[e.tile].id, i, prof, src) && prof[0] == 't' && i > best) {
                best = i;
                last = src;
            }
        }
        out[code] = st.frontier_size() == 0 && best == L - 1 ? last : "";
    }
    return out;
}

std::string prg_read_fragment(const std::string& code, char readerDir, int negStrength) {
    return prg_read_codes({code}, readerDir, negStrength)[code];
}

CompiledMacro compile_zigzag_to_prgtas(const TileSystem& Z, long long max_steps) {
    auto rep = check_zigzag(Z, max_steps);
    if (!rep.isCompact) throw CompileError("input is not a compact zig-zag system");
    if (rep.reason != Termination::Terminal) throw CompileError("input did not terminate within the step cap");
    ZigZagRun zr = zigzag_run(Z, max_steps);
    size_t nSeed = Z.seed.size();
    if (nSeed == 0) throw CompileError("empty seed");

    CompiledMacro out;
    out.codes = assign_glue_bitstrings(Z);
    // only the low bits can be nonzero; the blocks carry those
    int w = prg::code_width(int(out.codes.size()) - 1);
    out.bits = w;
    int L = prg::segment_length(w);
    std::string at = "@" + std::to_string(w);
    prg::Emitter em(w);
    out.map.scale = L;
    out.map.boundaries = {0};

    auto codeOf = [&](const std::optional<Glue>& g) {
        const std::string& c = out.codes.at(g && g->strength == 1 ? g->label : "");
        return c.substr(c.size() - w);
    };

    Assembly fin;
    for (auto& p : zr.order) fin.place({p.x, p.y}, p.tile);
    std::set<std::pair<char, std::string>> coopIn;
    std::map<std::tuple<char, std::string, std::string>, std::string> coopKey;
    std::set<Point> used;
    for (size_t j = 0; j < zr.order.size(); ++j) {
        auto& p = zr.order[j];
        const TileType& z = Z.tiles[p.tile];
        std::string where = " at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        prg::BlockSpec b;
        b.src = z.id;
        b.writeCode = codeOf(z.side[N]);
        if (z.side[N] && z.side[N]->strength == 2) b.north = prg::vglue(p.y, z.side[N]->label);
        if (j < nSeed) {
            if (p.y != 0 || p.x != int(j)) throw CompileError("seed must be a row starting at the origin");
            bool last = j + 1 == nSeed;
            b.profile = "s" + std::to_string(j) + (last ? "E" : "F") + at;
            b.dir = 'R';
            if (j > 0) b.entry = {{W, Glue{"seed/" + std::to_string(j), 1}}};
            if (!last) b.exit = {{E, Glue{"seed/" + std::to_string(j + 1), 1}}};
        } else {
            char dir = (p.y & 1) ? 'L' : 'R';
            int inH = dir == 'R' ? W : E, outH = opposite(inH);
            unsigned in = zr.inSides[j];
            unsigned sideIn = 1u << inH;
            b.dir = dir;
            if (in == (sideIn | 1u << S)) {
                b.profile = std::string("c") + dir + at;
                Glue h = prg::hglue(p.y, z.side[inH]->label);
                b.entry = {{inH, h}};
                b.preTag = h.label;
                std::string c = codeOf(z.side[S]);
                if (!z.side[S] || z.side[S]->strength != 1) throw CompileError("cooperative tile without a weak south glue" + where);
                b.readBits = dir == 'R' ? c : std::string(c.rbegin(), c.rend());
                auto [it, fresh] = coopKey.emplace(std::make_tuple(dir, h.label, c), z.id);
                if (!fresh && it->second != z.id) throw CompileError("two tiles share the same cooperative inputs" + where);
                coopIn.insert({dir, h.label});
            } else if (in == (1u << S)) {
                b.profile = std::string("t") + dir + at;
                b.turn = true;
                b.entry = {{S, prg::vglue(p.y - 1, z.side[S]->label)}};
            } else if (in == sideIn) {
                b.profile = std::string("x") + dir + at;
                b.entry = {{inH, prg::hglue(p.y, z.side[inH]->label)}};
            } else {
                throw CompileError("unsupported input sides" + where + " (rows must alternate, row 1 growing west)");
            }
            if (z.side[outH]) b.exit = {{outH, prg::hglue(p.y, z.side[outH]->label)}};
        }
        em.emit(b);
        for (int i = 0; i < L; ++i) {
            Point c;
            int len;
            macro::prg_cell(b.profile, p.x, p.y, i, c, len);
            if (!used.insert(c).second) throw CompileError("macro-tiles overlap" + where);
        }
        out.map.boundaries.push_back((long long)L * (long long)(j + 1));
        out.map.segments.push_back({z.id, p.x, p.y});
    }
    // a weak side glue leaving a row end would start a reader with nothing to read
    for (size_t j = nSeed; j < zr.order.size(); ++j) {
        auto& p = zr.order[j];
        char dir = (p.y & 1) ? 'L' : 'R';
        int outH = dir == 'R' ? E : W;
        const auto& g = Z.tiles[p.tile].side[outH];
        if (!g || fin.at({p.x + DX[outH], p.y}) >= 0) continue;
        if (coopIn.count({dir, prg::hglue(p.y, g->label).label}))
            throw CompileError("row end at (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                               ") exposes a cooperative side glue");
    }
    std::string seedProf = std::string("s0") + (nSeed == 1 ? "E" : "F") + at;
    em.out.seed = {{0, 0, em.out.index(macro::tile_id(0, seedProf, Z.tiles[zr.order[0].tile].id))}};
    out.system = std::move(em.out);
    return out;
}

}  // namespace ng
