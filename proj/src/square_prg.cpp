#include "negglue/square.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

// Layout (world coordinates, K = counter width):
//   corner    [0,K)x[0,K)     seed at the origin, column up, spine east, teeth hanging off the spine
//   counter 1 [0,K)x[K,N)     grows north; copy-row corners stick out into column K
//   crawler   columns K, K+1  walks down counter 1 and starts counter 2 beside its seed row
//   counter 2 [K,N)x[0,K)     grows east (frame transposed)
//   counter 3 [N-K,N)x[K,N)   grows north; its cap ends top-left and continues as the offshoot
//   offshoot  row N-1         runs west until the crawler blocks it, teeth hang down to fill the gap
//
// Counters are drawn in a canonical frame: u in [0,K) across, v up. Bit i sits in columns
// 1+4(k-1-i) .. +3, so the least significant bit is east. Copy rows (X) run east and are 2 tall,
// increment rows (Y) run west and are 3 tall; each row reads the bits of the row below through
// a pair of tiles that differ only in where their negative glue sits.

namespace ng {

int PrgSquareParams::height() const { return 5 * values(); }

PrgSquareParams prg_square_params(int N) {
    if (N < kPrgSquareMin) throw UnsupportedSize("prgTAS square needs N >= " + std::to_string(kPrgSquareMin));
    PrgSquareParams p;
    p.N = N;
    p.n = (N - 1) / 5;
    while ((1 << p.k) < p.n) ++p.k;
    p.K = 5 + 4 * p.k;
    int c = (p.K + 4) / 5;
    p.n0 = (1 << p.k) - p.n + c;
    p.x = N - (p.K + 5 * (p.n - c));
    if (p.x < 1 || p.x > 9 || p.values() < 1 || N < 2 * p.K + 2)
        throw UnsupportedSize("no prgTAS square layout for N=" + std::to_string(N));
    return p;
}

namespace {

struct Cell {
    Point c;
    OptGlue g[4];
    std::string name;
};
using Piece = std::vector<Cell>;

int toward(Point a, Point b) {
    for (int d = 0; d < 4; ++d)
        if (a.x + DX[d] == b.x && a.y + DY[d] == b.y) return d;
    throw std::logic_error("cells are not adjacent");
}

void put(Cell& a, int d, Glue g) {
    if (a.g[d]) throw std::logic_error("glue clash on " + a.name);
    a.g[d] = std::move(g);
}

void join(Cell& a, Cell& b, const std::string& label) {
    int d = toward(a.c, b.c);
    put(a, d, {label, 1});
    put(b, opposite(d), {label, 1});
}

void neg(Cell& a, int d) { put(a, d, {"neg", -1}); }

// u/v of a counter to world: o + (a u + b v, c u + d v)
struct Frame {
    Point o;
    int a = 1, b = 0, c = 0, d = 1;
    Point map(Point p) const { return {o.x + a * p.x + b * p.y, o.y + c * p.x + d * p.y}; }
    int side(int s) const {
        int dx = a * DX[s] + b * DY[s], dy = c * DX[s] + d * DY[s];
        for (int t = 0; t < 4; ++t)
            if (DX[t] == dx && DY[t] == dy) return t;
        throw std::logic_error("frame is not a signed permutation");
    }
};

class Gen {
public:
    explicit Gen(int negStrength) {
        sys.cls = ModelClass::PrgTAS;
        sys.temperature = 1;
        sys.negLabel = "neg";
        sys.negStrength = negStrength;
    }

    TileSystem sys;
    std::vector<Placement> plan;
    std::vector<GeneratedSquare::Probe> probes;

    // registers the tiles of a piece (identical glue sets share one type), placing them when asked
    std::vector<int> emit(const Piece& p, const Frame& f, bool place) {
        std::vector<int> out;
        for (auto& c : p) {
            TileType t;
            for (int s = 0; s < 4; ++s)
                if (c.g[s]) t.side[f.side(s)] = c.g[s];
            std::string sig;
            for (auto& g : t.side) sig += g ? g->label + (g->strength < 0 ? "-|" : "+|") : "|";
            auto it = bySig_.find(sig);
            int idx;
            if (it != bySig_.end()) {
                idx = it->second;
            } else {
                idx = int(sys.tiles.size());
                t.id = c.name;
                for (int n = 2; !ids_.insert(t.id).second; ++n) t.id = c.name + "~" + std::to_string(n);
                sys.tiles.push_back(std::move(t));
                bySig_.emplace(sig, idx);
            }
            out.push_back(idx);
            if (place) {
                Point w = f.map(c.c);
                plan.push_back({w.x, w.y, idx});
            }
        }
        return out;
    }

private:
    std::map<std::string, int> bySig_;
    std::set<std::string> ids_;
};

const std::vector<Point> kX = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {3, 1}, {3, 0}};
const std::vector<Point> kY = {{3, 2}, {3, 1}, {3, 0}, {2, 0}, {2, 1}, {2, 2},
                               {2, 3}, {1, 3}, {1, 2}, {1, 1}, {0, 1}, {0, 2}};
const std::vector<Point> kSeed1 = {{3, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}, {0, 0}};
const std::vector<Point> kSeed2 = {{3, 1}, {3, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {1, 1}, {1, 0}, {0, 0}, {0, 1}};
// right margin, relative to (K-4, copy row base); the copy part, then the next increment row's part
const std::vector<Point> kXREdge = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}};
const std::vector<Point> kXRSmooth = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {2, 1}, {1, 1}, {0, 1}};
const std::vector<Point> kYR = {{0, 2}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {2, 4}, {2, 3}, {1, 3}, {0, 3}, {0, 4}};

struct CounterSpec {
    std::string pre;
    Frame f;
    int hS = 1;
    bool edge = false;         // copy rows stick out at u=K for the crawler
    bool endWest = false;      // cap ends top-left heading west instead of top-right heading east
    Point from;                // predecessor of the seed row's first tile
    std::string in, out;
};

class Counter {
public:
    Counter(Gen& g, const PrgSquareParams& p, CounterSpec s) : G(g), P(p), sp(std::move(s)), K(p.K), k(p.k) {
        T = 5 * P.values() + P.x - 1;
    }

    std::vector<int> bases;  // copy row bases, bottom to top
    std::vector<int> values;

    void build() {
        library();
        seed_row();
        int val = P.n0, xb = sp.hS;
        for (bool first = true;; first = false) {
            bases.push_back(xb);
            values.push_back(val);
            bool last = val == (1 << k) - 1;
            copy_row(xb, val, first, last);
            if (last) break;
            increment_row(xb + 2, val);
            ++val;
            xb += 5;
        }
    }

private:
    Gen& G;
    const PrgSquareParams& P;
    CounterSpec sp;
    int K, k, T;

    std::string L(const std::string& s) const { return sp.pre + s; }
    int ox(int i) const { return 1 + 4 * (k - 1 - i); }
    static std::string F(bool first) { return first ? "F" : ""; }

    Piece chain(const std::vector<Point>& pts, Point at, const std::string& name,
                const std::function<std::string(int)>& label) const {
        Piece p;
        for (size_t j = 0; j < pts.size(); ++j)
            p.push_back({{at.x + pts[j].x, at.y + pts[j].y}, {}, L(name) + "#" + std::to_string(j)});
        for (size_t j = 0; j + 1 < p.size(); ++j) join(p[j], p[j + 1], L(label(int(j))));
        return p;
    }
    void enter(Cell& c, Point from, const std::string& l) const { put(c, toward(c.c, from), {L(l), 1}); }
    void hang(Piece& p, size_t on, Point at, const std::string& name) const {
        p.push_back({at, {}, L(name)});
        join(p[on], p.back(), L(name));
    }

    Piece xblock(int i, int f, int r, bool first, int xb) const {
        std::string st = "r" + std::to_string(r) + "g" + std::to_string(f & r) + F(first);
        std::string X = "X" + std::to_string(i);
        Piece p = chain(kX, {ox(i), xb}, X + st, [&](int j) { return X + "/" + std::to_string(j) + st; });
        enter(p[0], {ox(i) - 1, xb}, X + ".f" + std::to_string(f) + F(first));
        std::string next = i > 0 ? "X" + std::to_string(i - 1) : "XR";
        enter(p[7], {ox(i) + 4, xb}, next + ".f" + std::to_string(f & r) + F(first));
        neg(p[0], r ? S : E);
        if (r) neg(p[3], E);
        else neg(p[5], N);
        return p;
    }

    Piece yblock(int i, int c, int r, int yb) const {
        std::string Y = "Y" + std::to_string(i), cs = "c" + std::to_string(c), rs = "r" + std::to_string(r);
        Piece p = chain(kY, {ox(i), yb}, Y + rs + cs,
                        [&](int j) { return Y + "/" + std::to_string(j) + (j < 3 ? cs : rs + cs); });
        enter(p[0], {ox(i) + 4, yb + 2}, Y + "." + cs);
        std::string next = i + 1 < k ? "Y" + std::to_string(i + 1) : "YL";
        enter(p[11], {ox(i) - 1, yb + 2}, next + ".c" + std::to_string(r & c));
        neg(p[3], r ? S : W);
        if (r ^ c) neg(p[7], W);
        else neg(p[11], N);
        return p;
    }

    // registers every block variant so the tile set does not depend on which values occur
    void library() {
        for (int i = 0; i < k; ++i)
            for (int a = 0; a < 2; ++a)
                for (int r = 0; r < 2; ++r) {
                    G.emit(yblock(i, a, r, 0), sp.f, false);
                    for (int first = 0; first < 2; ++first) G.emit(xblock(i, a, r, first, 0), sp.f, false);
                }
    }

    void probe(const Piece& right, const Piece& wrong, size_t at) {
        auto a = G.emit(right, sp.f, true);
        auto b = G.emit(wrong, sp.f, false);
        G.probes.push_back({sp.f.map(right[at].c), a[at], b[at]});
    }

    void seed_row() {
        std::vector<Point> pts;
        std::vector<std::pair<size_t, Point>> fills;
        std::vector<std::pair<size_t, int>> negs;
        auto add = [&](const std::vector<Point>& rel, Point o) {
            for (auto q : rel) pts.push_back({o.x + q.x, o.y + q.y});
        };
        int top = sp.hS - 1;
        if (sp.hS == 1) {
            add({{3, 0}, {2, 0}, {1, 0}, {0, 0}}, {K - 4, 0});
        } else {
            add({{3, 0}, {3, 1}, {2, 1}, {2, 0}, {1, 0}, {1, 1}, {0, 1}}, {K - 4, 0});
            fills.push_back({4, {K - 4, 0}});
        }
        if (sp.edge) negs.push_back({0, E});
        for (int i = 0; i < k; ++i) {
            size_t b = pts.size();
            int bit = (P.n0 >> i) & 1;
            if (sp.hS == 1) {
                add(kSeed1, {ox(i), 0});
                negs.push_back(bit ? std::pair{b + 3, int(W)} : std::pair{b + 5, int(N)});
            } else {
                add(kSeed2, {ox(i), 0});
                negs.push_back(bit ? std::pair{b + 5, int(W)} : std::pair{b + 9, int(N)});
            }
        }
        pts.push_back({0, top});
        if (sp.hS == 2) fills.push_back({pts.size() - 1, {0, 0}});
        Piece p = chain(pts, {0, 0}, "S", [](int j) { return "S/" + std::to_string(j); });
        enter(p[0], sp.from, sp.in);
        enter(p[pts.size() - 1], {0, sp.hS}, "XLF");
        for (auto [i, d] : negs) neg(p[i], d);
        for (size_t j = 0; j < fills.size(); ++j) hang(p, fills[j].first, fills[j].second, "Sf" + std::to_string(j));
        G.emit(p, sp.f, true);
    }

    void copy_row(int xb, int val, bool first, bool last) {
        Piece lm = chain({{0, xb}}, {0, 0}, "XL" + F(first), [](int) { return ""; });
        enter(lm[0], {0, xb - 1}, "XL" + F(first));
        enter(lm[0], {1, xb}, "X" + std::to_string(k - 1) + ".f1" + F(first));
        hang(lm, 0, {0, xb + 1}, "XLf");
        G.emit(lm, sp.f, true);
        int f = 1;
        for (int i = k - 1; i >= 0; --i) {
            int r = (val >> i) & 1;
            probe(xblock(i, f, r, first, xb), xblock(i, f, 1 - r, first, xb), 0);
            f &= r;
        }
        right_margin(xb, first, last);
    }

    void increment_row(int yb, int val) {
        int c = 1;
        for (int i = 0; i < k; ++i) {
            int r = (val >> i) & 1;
            probe(yblock(i, c, r, yb), yblock(i, c, 1 - r, yb), 3);
            c &= r;
        }
        Piece lm = chain({{0, yb + 2}}, {0, 0}, "YL", [](int) { return ""; });
        enter(lm[0], {1, yb + 2}, "YL.c0");
        enter(lm[0], {0, yb + 3}, "XL");
        hang(lm, 0, {0, yb + 1}, "YLf1");
        hang(lm, 1, {0, yb}, "YLf0");
        G.emit(lm, sp.f, true);
    }

    std::vector<Point> cap_points(int Pl) const {
        std::vector<Point> pts;
        auto ends_east = [&](int lo, int hi) {  // entered from below (K-1, lo), ends at (K-1, hi)
            int n = hi - lo + 1;
            if (n % 2 == 0) {
                for (int r = 0; r < n; ++r)
                    for (int q = 0; q < K; ++q) pts.push_back({r % 2 == 0 ? K - 1 - q : q, lo + r});
                return;
            }
            if (n < 3) throw std::logic_error("cap of one row cannot end east");
            for (int q = K - 1; q >= 0; --q) pts.push_back({q, lo});
            for (int u = 0; u < K; ++u)
                for (int q = 0; q < n - 1; ++q) pts.push_back({u, u % 2 == 0 ? lo + 1 + q : hi - q});
        };
        if (!sp.endWest) {
            ends_east(Pl + 1, T);
        } else {
            if (T > Pl + 1) ends_east(Pl + 1, T - 1);
            for (int q = K - 1; q >= 0; --q) pts.push_back({q, T});
        }
        return pts;
    }

    void right_margin(int xb, bool first, bool last) {
        const auto& xr = sp.edge ? kXREdge : kXRSmooth;
        std::string tag = (last ? ".f1" : ".f0") + F(first);
        std::vector<Point> pts;
        for (auto q : xr) pts.push_back({K - 4 + q.x, xb + q.y});
        size_t nx = pts.size();
        int Pl = xb + 2;
        if (!last) {
            for (auto q : kYR) pts.push_back({K - 4 + q.x, xb + q.y});
        } else {
            for (int u = K - 4; u < K; ++u) pts.push_back({u, Pl});
            for (auto q : cap_points(Pl)) pts.push_back(q);
        }
        Piece p = chain(pts, {0, 0}, last ? "C" + F(first) : "XR" + tag, [&](int j) {
            return (size_t(j) < nx || !last ? "XR/" : "C/") + std::to_string(j) + tag;
        });
        enter(p[0], {K - 5, xb}, "XR" + tag);
        if (sp.edge && !first) neg(p[4], S);
        if (!last) {
            enter(p.back(), {K - 5, xb + 4}, "Y0.c1");
            hang(p, p.size() - 1, {K - 3, xb + 4}, "XRf");
        } else {
            put(p.back(), sp.endWest ? W : E, {sp.out, 1});
            std::map<Point, size_t> at;
            for (size_t j = nx; j < p.size(); ++j) at[p[j].c] = j;
            std::vector<int> pockets{0};
            for (int i = 0; i < k; ++i) pockets.insert(pockets.end(), {ox(i) + 2, ox(i) + 3});
            for (int u : pockets) hang(p, at.at({u, Pl + 1}), {u, Pl}, "Cf" + std::to_string(u));
        }
        G.emit(p, sp.f, true);
    }
};

}  // namespace

GeneratedSquare generate_prg_square(int N, int negStrength) {
    if (N < kPrgSquareMin) return generate_fallback_square(N, ModelClass::PrgTAS, negStrength);
    PrgSquareParams prm = prg_square_params(N);
    const int K = prm.K;
    Gen G(negStrength);
    Frame id;

    Piece corner;
    for (int y = 0; y < K; ++y) corner.push_back({{0, y}, {}, "k#" + std::to_string(y)});
    for (int x = 1; x < K; ++x) corner.push_back({{x, K - 1}, {}, "k#" + std::to_string(K - 1 + x)});
    for (size_t j = 0; j + 1 < corner.size(); ++j) join(corner[j], corner[j + 1], "k/" + std::to_string(j));
    put(corner.back(), Side::N, {"c1:in", 1});
    for (size_t j = K; j < corner.size(); ++j) put(corner[j], Side::S, {"kt/1", 1});
    G.emit(corner, id, true);
    for (int x = 1; x < K; ++x) {
        Piece tooth;
        for (int d = 1; d < K; ++d) {
            tooth.push_back({{x, K - 1 - d}, {}, "kt" + std::to_string(d)});
            put(tooth.back(), Side::N, {"kt/" + std::to_string(d), 1});
            if (d + 1 < K) put(tooth.back(), Side::S, {"kt/" + std::to_string(d + 1), 1});
        }
        G.emit(tooth, id, true);
    }

    int hS3 = prm.x == 1 ? 2 : 1;
    Counter c1(G, prm, {"c1:", {{0, K}}, 1, true, false, {K - 1, -1}, "in", "c1:out"});
    c1.build();

    // crawler: down column K, around each copy-row corner through column K+1
    const int T = 5 * prm.values() + prm.x - 1;
    auto wy = [&](int v) { return K + v; };
    int xbV = c1.bases.back();
    Piece cr;
    auto step = [&](Point p, const std::string& name, const std::string& link) {
        cr.push_back({p, {}, name});
        if (cr.size() > 1) join(cr[cr.size() - 2], cr.back(), link);
    };
    for (int m = T - xbV - 2; m >= 0; --m) step({K, wy(xbV + 2 + m)}, "cr.t" + std::to_string(m), "cr/t" + std::to_string(m + 1));
    put(cr.front(), Side::W, {"c1:out", 1});
    std::vector<size_t> reads, hangs;
    for (int j = int(c1.bases.size()) - 1; j >= 0; --j) {
        int y = wy(c1.bases[j]);
        step({K + 1, y + 2}, "cr.d1", "cr/d0");
        step({K + 1, y + 1}, "cr.d2", "cr/d1");
        step({K + 1, y}, "cr.d3", "cr/d2");
        step({K + 1, y - 1}, "cr.d4", "cr/d3");
        step({K, y - 1}, j ? "cr.go" : "cr.stop", "cr/d4");
        reads.push_back(cr.size() - 1);
        if (j) {
            step({K, y - 2}, "cr.s1", "cr/s1");
            hangs.push_back(cr.size() - 1);
            step({K, y - 3}, "cr.s2", "cr/s2");
        }
    }
    auto ending = [](Cell& c, bool go) {
        neg(c, go ? Side::W : Side::N);
        if (!go) put(c, Side::S, {"c2:in", 1});
    };
    std::vector<Cell> alts;
    for (size_t r : reads) {
        bool go = cr[r].name == "cr.go";
        Cell alt = cr[r];
        alt.g[Side::S].reset();
        if (!go) put(alt, Side::S, {"cr/s1", 1});
        ending(cr[r], go);
        ending(alt, !go);
        alt.name = go ? "cr.stop" : "cr.go";
        alts.push_back(alt);
    }
    for (size_t h : hangs) {
        cr.push_back({{K + 1, cr[h].c.y}, {}, "cr.f"});
        join(cr[h], cr.back(), "cr/f");
    }
    auto placed = G.emit(cr, id, true);
    for (size_t i = 0; i < reads.size(); ++i) {
        auto w = G.emit({alts[i]}, id, false);
        G.probes.push_back({cr[reads[i]].c, placed[reads[i]], w[0]});
    }

    Counter c2(G, prm, {"c2:", {{K, 0}, 0, 1, 1, 0}, 1, false, false, {K, 0}, "in", "c3:in"});
    c2.build();
    Counter c3(G, prm, {"c3:", {{N - K, K}}, hS3, false, true, {K - 1, -1}, "in", "off"});
    c3.build();

    for (int x = N - K - 1; x > K; --x) {
        Piece col;
        col.push_back({{x, N - 1}, {}, "off"});
        put(col[0], Side::E, {"off", 1});
        put(col[0], Side::W, {"off", 1});
        put(col[0], Side::S, {"tt", 1});
        int bottom = x == K + 1 ? wy(xbV + 3) : K;
        for (int y = N - 2; y >= bottom; --y) {
            col.push_back({{x, y}, {}, "tt"});
            put(col.back(), Side::N, {"tt", 1});
            put(col.back(), Side::S, {"tt", 1});
        }
        G.emit(col, id, true);
    }

    GeneratedSquare out;
    out.system = std::move(G.sys);
    out.system.seed = {G.plan.front()};
    out.plan = std::move(G.plan);
    out.probes = std::move(G.probes);
    out.values = c1.values;
    return out;
}

}  // namespace ng
