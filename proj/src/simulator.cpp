#include "negglue/simulator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ng {

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t zobrist(Point p, int tile, uint64_t salt) {
    uint64_t k = (uint64_t(uint32_t(p.x)) << 32) ^ uint32_t(p.y);
    return splitmix(splitmix(k ^ salt) + uint64_t(tile) * 0x2545f4914f6cdd1dULL);
}

}  // namespace

Compiled::Compiled(const TileSystem& S) : sys(&S), tau(S.temperature) {
    check_well_formed(S);
    std::unordered_map<std::string, int> ids;
    size_t n = S.tiles.size();
    lab.resize(n);
    str.resize(n);
    for (size_t t = 0; t < n; ++t)
        for (int d = 0; d < 4; ++d) {
            auto& g = S.tiles[t].side[d];
            if (!g) {
                lab[t][d] = -1;
                str[t][d] = 0;
                continue;
            }
            auto [it, fresh] = ids.emplace(g->label, int(ids.size()));
            lab[t][d] = it->second;
            int s = g->strength;
            if (s < 0 && S.cls == ModelClass::PrgTAS && S.negLabel && g->label == *S.negLabel) s = S.negStrength;
            str[t][d] = s;
        }
    numLabels = int(ids.size());
    for (int d = 0; d < 4; ++d) bySide[d].assign(numLabels, {});
    for (size_t t = 0; t < n; ++t)
        for (int d = 0; d < 4; ++d)
            if (lab[t][d] >= 0 && str[t][d] > 0) bySide[d][lab[t][d]].push_back(int(t));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return S.tiles[a].id < S.tiles[b].id; });
    rank.assign(n, 0);
    for (size_t i = 0; i < n; ++i) rank[order[i]] = int(i);
}

State::State(const Compiled& C, const std::vector<Placement>& seed) : c_(&C), a_(seed) {
    for (auto& s : seed) {
        h1_ ^= zobrist({s.x, s.y}, s.tile, 1);
        h2_ ^= zobrist({s.x, s.y}, s.tile, 2);
    }
    for (auto& s : seed)
        for (int d = 0; d < 4; ++d) refresh({s.x + DX[d], s.y + DY[d]});
}

int State::binding(Point p, int tile) const {
    int sum = 0;
    for (int d = 0; d < 4; ++d) {
        int nb = a_.at({p.x + DX[d], p.y + DY[d]});
        if (nb >= 0) sum += c_->interact(tile, d, nb);
    }
    return sum;
}

void State::refresh(Point p) {
    auto it = elig_.find(p);
    if (it != elig_.end()) {
        for (int t : it->second) order_.erase({p.y, p.x, c_->rank[t], t});
        elig_.erase(it);
    }
    if (a_.occupied(p)) return;
    std::vector<int> cand;
    for (int d = 0; d < 4; ++d) {
        int nb = a_.at({p.x + DX[d], p.y + DY[d]});
        if (nb < 0) continue;
        int od = opposite(d);
        int l = c_->lab[nb][od];
        if (l < 0 || c_->str[nb][od] <= 0) continue;
        auto& v = c_->bySide[d][l];
        cand.insert(cand.end(), v.begin(), v.end());
    }
    if (cand.empty()) return;
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<int> ok;
    for (int t : cand)
        if (binding(p, t) >= c_->tau) ok.push_back(t);
    if (ok.empty()) return;
    for (int t : ok) order_.insert({p.y, p.x, c_->rank[t], t});
    elig_.emplace(p, std::move(ok));
}

void State::place(Point p, int tile) {
    a_.place(p, tile);
    h1_ ^= zobrist(p, tile, 1);
    h2_ ^= zobrist(p, tile, 2);
    refresh(p);
    for (int d = 0; d < 4; ++d) refresh({p.x + DX[d], p.y + DY[d]});
}

std::vector<FrontierEntry> State::frontier() const {
    std::vector<FrontierEntry> out;
    out.reserve(order_.size());
    for (auto& [y, x, r, t] : order_) out.push_back({{x, y}, t});
    return out;
}

FrontierEntry State::first() const {
    auto& [y, x, r, t] = *order_.begin();
    return {{x, y}, t};
}

FrontierEntry State::nth(size_t i) const {
    auto it = order_.begin();
    std::advance(it, i);
    auto& [y, x, r, t] = *it;
    return {{x, y}, t};
}

const std::vector<int>& State::eligible(Point p) const {
    static const std::vector<int> none;
    auto it = elig_.find(p);
    return it == elig_.end() ? none : it->second;
}

std::vector<Point> State::frontier_positions() const {
    std::vector<Point> out;
    for (auto& [p, v] : elig_) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FrontierEntry> frontier(const TileSystem& S, const Assembly& A) {
    Compiled C(S);
    std::vector<Placement> cells;
    for (auto& [p, t] : A.cells()) cells.push_back({p.x, p.y, t});
    State st(C, cells);
    return st.frontier();
}

size_t RunResult::attachments() const { return steps.size() - seedSize; }

RunResult run(const TileSystem& S, Policy policy, long long max_steps, uint64_t rngSeed) {
    if (policy == Policy::Exhaustive) {
        auto d = check_directed(S, size_t(max_steps < 0 ? 0 : max_steps) + S.seed.size());
        RunResult r;
        r.steps = S.seed;
        r.seedSize = S.seed.size();
        r.steps.insert(r.steps.end(), d.path.begin(), d.path.end());
        r.assembly = Assembly(S.seed);
        for (auto& p : d.path) r.assembly.place({p.x, p.y}, p.tile);
        r.reason = d.verdict == Directedness::Inconclusive ? Termination::StepCap : Termination::Terminal;
        return r;
    }
    Compiled C(S);
    State st(C, S.seed);
    std::mt19937_64 rng(rngSeed);
    RunResult r;
    r.steps = S.seed;
    r.seedSize = S.seed.size();
    long long taken = 0;
    r.reason = Termination::StepCap;
    while (true) {
        if (max_steps <= 0) break;
        size_t fs = st.frontier_size();
        if (fs == 0) {
            r.reason = Termination::Terminal;
            break;
        }
        if (taken >= max_steps) break;
        r.frontierSizes.push_back(fs);
        FrontierEntry e = policy == Policy::Random ? st.nth(std::uniform_int_distribution<size_t>(0, fs - 1)(rng))
                                                   : st.first();
        st.place(e.p, e.tile);
        r.steps.push_back({e.p.x, e.p.y, e.tile});
        ++taken;
    }
    r.assembly = st.assembly();
    return r;
}

namespace {

struct Explorer {
    const Compiled& C;
    size_t bound;
    // per tile and side: least and greatest interaction any tile could contribute
    std::vector<std::array<int, 4>> minIn, maxIn;
    std::unordered_set<uint64_t> seen1;
    std::unordered_set<uint64_t> seen12;
    bool hitBound = false;
    bool haveTerminal = false;
    std::vector<Placement> terminal, other, path, bestPath;
    uint64_t termHash = 0;
    bool split = false;
    size_t states = 0;

    explicit Explorer(const Compiled& c, size_t b) : C(c), bound(b) {
        size_t n = C.lab.size();
        minIn.resize(n);
        maxIn.resize(n);
        for (size_t t = 0; t < n; ++t)
            for (int d = 0; d < 4; ++d) {
                int lo = 0, hi = 0;
                if (C.lab[t][d] >= 0) {
                    int od = opposite(d);
                    for (size_t u = 0; u < n; ++u)
                        if (C.lab[u][od] == C.lab[t][d]) {
                            lo = std::min(lo, C.str[t][d]);
                            hi = std::max(hi, C.str[t][d]);
                        }
                }
                minIn[t][d] = lo;
                maxIn[t][d] = hi;
            }
    }

    // Tiles that could ever sit at each position. Any attachment needs one
    // positive bond, so closing the seed under single positive matches
    // over-approximates every producible assembly. Abandoned past a budget.
    std::unordered_map<Point, std::vector<int>, PointHash> possible;
    bool closed = false;

    void close_over(const std::vector<Placement>& seed) {
        constexpr size_t kBudget = 4'000'000;
        size_t n = C.lab.size();
        std::map<std::pair<int, int>, std::vector<int>> attachers;  // (side, label) -> tiles binding across it
        for (size_t u = 0; u < n; ++u)
            for (int d = 0; d < 4; ++d)
                if (C.lab[u][opposite(d)] >= 0 && C.str[u][opposite(d)] > 0)
                    attachers[{d, C.lab[u][opposite(d)]}].push_back(int(u));
        if (seed.empty()) return;
        Point o{seed[0].x, seed[0].y};
        long long radius = (long long)bound + (long long)seed.size();
        std::unordered_set<Point, PointHash> fixed;
        std::vector<std::pair<Point, int>> work;
        for (auto& pl : seed) {
            fixed.insert({pl.x, pl.y});
            possible[{pl.x, pl.y}] = {pl.tile};
            work.push_back({{pl.x, pl.y}, pl.tile});
        }
        size_t pairs = seed.size();
        while (!work.empty()) {
            auto [q, v] = work.back();
            work.pop_back();
            for (int d = 0; d < 4; ++d) {
                if (C.lab[v][d] < 0 || C.str[v][d] <= 0) continue;
                Point r{q.x + DX[d], q.y + DY[d]};
                if (fixed.count(r) || std::llabs(r.x - o.x) + std::llabs(r.y - o.y) > radius) continue;
                auto it = attachers.find({d, C.lab[v][d]});
                if (it == attachers.end()) continue;
                auto& cell = possible[r];
                for (int u : it->second) {
                    if (std::find(cell.begin(), cell.end(), u) != cell.end()) continue;
                    cell.push_back(u);
                    work.push_back({r, u});
                    if (++pairs > kBudget) {
                        possible.clear();
                        return;
                    }
                }
            }
        }
        closed = true;
    }

    // With the closure: t is the only tile that can ever occupy p, its placed
    // neighbours already bind it, and it cannot weaken any tile that could
    // later arrive next to it. Placing it now reaches the same terminals.
    bool safe_closed(const State& st, Point p, int t) const {
        auto it = possible.find(p);
        if (it == possible.end() || it->second.size() != 1 || it->second[0] != t) return false;
        int sure = 0;
        for (int d = 0; d < 4; ++d) {
            Point q{p.x + DX[d], p.y + DY[d]};
            int nb = st.at(q);
            if (nb >= 0) {
                sure += C.interact(t, d, nb);
                continue;
            }
            auto jt = possible.find(q);
            if (jt == possible.end()) continue;
            for (int v : jt->second)
                if (C.interact(t, d, v) < 0) return false;
        }
        return sure >= C.tau;
    }

    // A forced move: the only tile that can ever sit at p, it can never lose
    // eligibility, and it never lowers a neighbour's binding. Committing it
    // first preserves the set of reachable terminal assemblies.
    bool safe(const State& st, Point p, int t) const {
        if (closed) return safe_closed(st, p, t);
        auto& el = st.eligible(p);
        if (el.size() != 1) return false;
        int sure = 0;
        for (int d = 0; d < 4; ++d) {
            Point q{p.x + DX[d], p.y + DY[d]};
            int nb = st.at(q);
            if (nb >= 0) sure += C.interact(t, d, nb);
            else {
                if (minIn[t][d] < 0) return false;
                sure += minIn[t][d];
            }
        }
        if (sure < C.tau) return false;
        size_t n = C.lab.size();
        for (size_t u = 0; u < n; ++u) {
            if (int(u) == t) continue;
            int best = 0;
            for (int d = 0; d < 4; ++d) {
                int nb = st.at({p.x + DX[d], p.y + DY[d]});
                best += nb >= 0 ? C.interact(int(u), d, nb) : maxIn[u][d];
            }
            if (best >= C.tau) return false;
        }
        return true;
    }

    void commit_forced(State& st, std::vector<Placement>& trail) {
        bool progress = true;
        while (progress && st.assembly().size() <= bound) {
            progress = false;
            for (Point p : st.frontier_positions()) {
                auto& el = st.eligible(p);
                if (el.size() != 1) continue;
                int t = el[0];
                if (!safe(st, p, t)) continue;
                st.place(p, t);
                trail.push_back({p.x, p.y, t});
                progress = true;
            }
        }
    }

    void explore(State st) {
        if (split) return;
        size_t mark = path.size();
        commit_forced(st, path);
        uint64_t key = st.hash() ^ (st.hash2() * 0x9e3779b97f4a7c15ULL);
        if (!seen12.insert(key).second) {
            path.resize(mark);
            return;
        }
        ++states;
        if (st.assembly().size() > bound) {
            hitBound = true;
            path.resize(mark);
            return;
        }
        if (st.frontier_size() == 0) {
            if (!haveTerminal) {
                haveTerminal = true;
                terminal = st.assembly().sorted();
                termHash = st.hash();
                bestPath = path;
            } else if (st.hash() != termHash || st.assembly().sorted() != terminal) {
                other = st.assembly().sorted();
                split = true;
            }
            path.resize(mark);
            return;
        }
        for (auto& e : st.frontier()) {
            State child = st;
            child.place(e.p, e.tile);
            path.push_back({e.p.x, e.p.y, e.tile});
            explore(std::move(child));
            path.pop_back();
            if (split) break;
        }
        path.resize(mark);
    }
};

}  // namespace

DirectedResult check_directed(const TileSystem& S, size_t max_assembly_size) {
    Compiled C(S);
    Explorer ex(C, max_assembly_size);
    ex.close_over(S.seed);
    ex.explore(State(C, S.seed));
    DirectedResult r;
    r.statesExplored = ex.states;
    if (ex.split) {
        r.verdict = Directedness::NotDirected;
        r.terminalA = ex.terminal;
        r.terminalB = ex.other;
    } else if (ex.hitBound) {
        r.verdict = Directedness::Inconclusive;
    } else if (ex.haveTerminal) {
        r.verdict = Directedness::Directed;
        r.terminalA = ex.terminal;
        r.path = ex.bestPath;
    }
    return r;
}

SingleSequenceResult check_single_sequence(const TileSystem& S, long long max_steps) {
    SingleSequenceResult r;
    r.run = run(S, Policy::Lexicographic, max_steps);
    r.reason = r.run.reason;
    for (size_t i = 0; i < r.run.frontierSizes.size(); ++i)
        if (r.run.frontierSizes[i] != 1) {
            r.single = false;
            r.firstBranchingStep = (long long)i;
            r.branching = r.run.frontierSizes[i];
            break;
        }
    return r;
}

}  // namespace ng
