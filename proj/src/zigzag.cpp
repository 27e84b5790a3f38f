#include "negglue/zigzag.hpp"

#include <algorithm>
#include <sstream>

namespace ng {

const Transition* TuringMachine::find(const std::string& q, const std::string& s) const {
    auto it = delta.find({q, s});
    return it == delta.end() ? nullptr : &it->second;
}

bool TuringMachine::halted(const std::string& q, const std::string& s) const {
    return halts.count(q) || !find(q, s);
}

json tm_to_json(const TuringMachine& M) {
    json d = json::array();
    for (auto& [k, t] : M.delta)
        d.push_back({{"state", k.first}, {"read", k.second}, {"write", t.write},
                     {"move", std::string(1, t.move)}, {"next", t.next}});
    return {{"formatVersion", kFormatVersion}, {"states", M.states}, {"alphabet", M.alphabet},
            {"blank", M.blank}, {"start", M.start}, {"halts", std::vector<std::string>(M.halts.begin(), M.halts.end())},
            {"delta", d}};
}

TuringMachine tm_from_json(const json& j) {
    TuringMachine M;
    try {
        M.states = j.at("states").get<std::vector<std::string>>();
        M.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        M.blank = j.at("blank").get<std::string>();
        M.start = j.at("start").get<std::string>();
        for (auto& h : j.at("halts")) M.halts.insert(h.get<std::string>());
        for (auto& e : j.at("delta")) {
            Transition t{e.at("write").get<std::string>(), 'R', e.at("next").get<std::string>()};
            auto mv = e.at("move").get<std::string>();
            if (mv != "L" && mv != "R") throw SchemaError("move must be L or R");
            t.move = mv[0];
            auto key = std::make_pair(e.at("state").get<std::string>(), e.at("read").get<std::string>());
            if (!M.delta.emplace(key, t).second)
                throw CompileError("nondeterministic machine: two transitions for (" + key.first + ", " +
                                   key.second + ")");
        }
    } catch (const json::exception& e) {
        throw SchemaError(std::string("turing machine: ") + e.what());
    }
    auto known = [](const std::vector<std::string>& v, const std::string& x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (!known(M.alphabet, M.blank)) throw SchemaError("blank not in alphabet");
    if (!known(M.states, M.start)) throw SchemaError("start state not declared");
    for (auto& [k, t] : M.delta)
        if (!known(M.states, k.first) || !known(M.states, t.next) || !known(M.alphabet, k.second) ||
            !known(M.alphabet, t.write))
            throw SchemaError("transition uses undeclared state or symbol");
    return M;
}

std::string TmConfig::read(long pos, const std::string& blank) const {
    auto it = tape.find(pos);
    return it == tape.end() ? blank : it->second;
}

std::vector<std::string> split_input(const TuringMachine& M, const std::string& w) {
    std::vector<std::string> out;
    if (w.find(' ') != std::string::npos) {
        std::istringstream ss(w);
        for (std::string s; ss >> s;) out.push_back(s);
    } else {
        for (char c : w) out.push_back(std::string(1, c));
    }
    for (auto& s : out)
        if (std::find(M.alphabet.begin(), M.alphabet.end(), s) == M.alphabet.end())
            throw SchemaError("input symbol '" + s + "' not in alphabet");
    return out;
}

std::vector<TmConfig> interpret(const TuringMachine& M, const std::vector<std::string>& input, size_t maxSteps) {
    TmConfig c;
    c.state = M.start;
    for (size_t i = 0; i < input.size(); ++i)
        if (input[i] != M.blank) c.tape[long(i)] = input[i];
    std::vector<TmConfig> trace{c};
    for (size_t n = 0; n < maxSteps; ++n) {
        std::string s = c.read(c.head, M.blank);
        if (M.halted(c.state, s)) break;
        const Transition* t = M.find(c.state, s);
        if (t->write == M.blank) c.tape.erase(c.head);
        else c.tape[c.head] = t->write;
        c.head += t->move == 'R' ? 1 : -1;
        c.state = t->next;
        trace.push_back(c);
    }
    return trace;
}

ZigZagCheckReport check_zigzag(const TileSystem& Z, long long max_steps) {
    ZigZagCheckReport r;
    if (Z.temperature != 2) r.violations.push_back({{0, 0}, "temperature is not 2"});
    RunResult run = ng::run(Z, Policy::Lexicographic, max_steps);
    r.reason = run.reason;
    bool single = true;
    for (size_t i = 0; i < run.frontierSizes.size(); ++i)
        if (run.frontierSizes[i] != 1) {
            auto& p = run.steps[run.seedSize + i];
            r.violations.push_back({{p.x, p.y}, "multiple frontier choices at step " + std::to_string(i + 1)});
            single = false;
            break;
        }
    // replay to recover the input sides of every attachment
    Assembly A(Z.seed);
    bool northIn = false;
    for (size_t i = run.seedSize; i < run.steps.size(); ++i) {
        auto& p = run.steps[i];
        const TileType& t = Z.tiles[p.tile];
        int up = A.at({p.x, p.y + 1});
        if (up >= 0 && interaction_strength(t.side[N], Z.tiles[up].side[S], Z) > 0) {
            r.violations.push_back({{p.x, p.y}, "north input side"});
            northIn = true;
        }
        A.place({p.x, p.y}, p.tile);
    }
    bool compact = true;
    for (auto& p : run.steps) {
        const TileType& t = Z.tiles[p.tile];
        auto st = [&](int d) { return t.side[d] ? t.side[d]->strength : 0; };
        if (st(N) + st(S) >= 4 || st(E) + st(W) >= 4) {
            r.violations.push_back({{p.x, p.y}, "opposite sides sum to 4 or more"});
            compact = false;
        }
    }
    r.isZigzag = single && !northIn && Z.temperature == 2;
    r.isCompact = r.isZigzag && compact;
    return r;
}

namespace {

std::string nz(const std::string& s) { return s.empty() ? "-" : s; }
std::string enc(const std::string& s, const std::string& h) { return s + "|" + nz(h); }

struct TmTileFactory {
    const TuringMachine& M;
    CompiledTm out;
    std::set<std::string> made;

    explicit TmTileFactory(const TuringMachine& m) : M(m) { out.system.cls = ModelClass::Plain; }

    // labels are tagged by the growth direction of the row that emits them
    static Glue vert(char dir, const std::string& content, bool edge, bool strong) {
        std::string lab = std::string(strong ? "V" : "v") + dir + ":" + content + (edge ? "|e" : "");
        return {lab, strong ? 2 : 1};
    }
    static Glue horiz(char dir, const std::string& sig, bool strong) {
        return {std::string(strong ? "H" : "h") + dir + ":" + nz(sig), strong ? 2 : 1};
    }

    void add(TileType t, CellCode code) {
        if (!made.insert(t.id).second) return;
        out.codec.byTile[t.id] = code;
        out.system.tiles.push_back(std::move(t));
    }

    // result of a cell that the head may act on
    struct Step {
        std::string sym, head, sig;
        bool executed = false, cap = false;
    };
    Step apply(char dir, const std::string& s, const std::string& h, const std::string& sig) const {
        Step r{s, h, "", false, false};
        if (!h.empty()) {
            if (M.halted(h, s)) {
                r.cap = true;
                return r;
            }
            const Transition* t = M.find(h, s);
            if (t->move == dir) {
                r.sym = t->write;
                r.head.clear();
                r.sig = t->next;
                r.executed = true;
            }
        } else if (!sig.empty()) {
            r.head = sig;
        }
        return r;
    }

    void build() {
        std::vector<std::string> heads{""};
        heads.insert(heads.end(), M.states.begin(), M.states.end());
        for (char dir : {'R', 'L'}) {
            char below = dir == 'R' ? 'L' : 'R';
            int in = dir == 'R' ? W : E, outSide = dir == 'R' ? E : W;
            for (auto& s : M.alphabet)
                for (auto& h : heads)
                    for (auto& sig : heads) {
                        if (!h.empty() && !sig.empty()) continue;
                        for (bool edge : {false, true}) {
                            Step st = apply(dir, s, h, sig);
                            TileType t;
                            t.side[S] = vert(below, enc(s, h), edge, false);
                            t.side[in] = horiz(dir, sig, false);
                            std::string id = std::string("coop") + dir + "|" + enc(s, h) + "|" + nz(sig) + (edge ? "|e" : "");
                            if (st.cap) {
                                t.id = "cap:" + id;
                                add(t, {CellCode::Cap, s, h, false});
                                continue;
                            }
                            t.id = id;
                            t.side[N] = vert(dir, enc(st.sym, st.head), false, false);
                            t.side[outSide] = horiz(dir, st.sig, edge);
                            add(t, {CellCode::Coop, st.sym, st.head, st.executed});
                        }
                    }
            // turn-start: sits on the previous row's extension (or the last seed cell)
            for (auto& s : M.alphabet)
                for (auto& h : heads)
                    for (bool edge : {false, true}) {
                        Step st = apply(dir, s, h, "");
                        TileType t;
                        t.side[S] = vert(below, enc(s, h), edge, true);
                        std::string id = std::string("turn") + dir + "|" + enc(s, h) + (edge ? "|e" : "");
                        if (st.cap) {
                            t.id = "cap:" + id;
                            add(t, {CellCode::Cap, s, h, false});
                            continue;
                        }
                        t.id = id;
                        t.side[N] = vert(dir, enc(st.sym, st.head), true, false);
                        t.side[outSide] = horiz(dir, st.sig, edge);
                        add(t, {CellCode::Turn, st.sym, st.head, st.executed});
                    }
            // extension: one fresh blank cell past the previous row
            for (auto& sig : heads) {
                TileType t;
                t.id = std::string("ext") + dir + "|" + nz(sig);
                t.side[in] = horiz(dir, sig, true);
                t.side[N] = vert(dir, enc(M.blank, sig), false, true);
                add(t, {CellCode::Extension, M.blank, sig, false});
            }
        }
    }
};

}  // namespace

CompiledTm compile_tm_to_zigzag(const TuringMachine& M, const std::vector<std::string>& inputIn) {
    for (auto& [k, t] : M.delta)
        if (t.move != 'L' && t.move != 'R') throw CompileError("bad move");
    std::vector<std::string> input = inputIn;
    if (input.empty()) input.push_back(M.blank);
    TmTileFactory f(M);
    f.out.system.temperature = 2;
    f.build();
    long w = long(input.size());
    for (long x = 0; x < w; ++x) {
        TileType t;
        t.id = "seed|" + std::to_string(x);
        bool last = x == w - 1, edge = x == 0;
        t.side[N] = TmTileFactory::vert('R', enc(input[x], x == 0 ? M.start : ""), edge, last);
        f.out.codec.byTile[t.id] = {CellCode::Seed, input[x], x == 0 ? M.start : "", false};
        f.out.system.tiles.push_back(t);
        f.out.system.seed.push_back({int(x), 0, int(f.out.system.tiles.size() - 1)});
    }
    return std::move(f.out);
}

RowConfig extract_configuration(const TileSystem& S, const Assembly& A, int row, const ZigZagCodec& codec) {
    std::vector<std::pair<int, const CellCode*>> cells;
    for (auto& [p, t] : A.cells()) {
        if (p.y != row) continue;
        auto it = codec.byTile.find(S.tiles[t].id);
        if (it == codec.byTile.end()) throw IncompleteRow("tile without a codec entry in row " + std::to_string(row));
        cells.push_back({p.x, &it->second});
    }
    if (cells.empty()) throw IncompleteRow("row " + std::to_string(row) + " is empty");
    std::sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.first < b.first; });
    bool hasExt = false;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i && cells[i].first != cells[i - 1].first + 1) throw IncompleteRow("row has a gap");
        if (cells[i].second->kind == CellCode::Cap) throw IncompleteRow("row ends in a halting cap");
        if (cells[i].second->kind == CellCode::Extension) hasExt = true;
    }
    if (row > 0 && !hasExt) throw IncompleteRow("row " + std::to_string(row) + " not finished");
    RowConfig r;
    r.left = cells.front().first;
    int heads = 0;
    for (auto& [x, c] : cells) {
        r.tape.push_back(c->symbol);
        if (!c->head.empty()) {
            r.state = c->head;
            r.head = x;
            ++heads;
        }
    }
    if (heads != 1) throw IncompleteRow("row does not hold exactly one head");
    return r;
}

std::vector<TmConfig> row_trace(const TileSystem& S, const Assembly& A, const ZigZagCodec& codec,
                                const std::string& blank) {
    std::vector<TmConfig> out;
    for (int row = 0;; ++row) {
        RowConfig rc;
        try {
            rc = extract_configuration(S, A, row, codec);
        } catch (const IncompleteRow&) {
            break;
        }
        TmConfig c;
        c.state = rc.state;
        c.head = rc.head;
        for (size_t i = 0; i < rc.tape.size(); ++i)
            if (rc.tape[i] != blank) c.tape[rc.left + long(i)] = rc.tape[i];
        if (out.empty() || !(out.back() == c)) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ng
