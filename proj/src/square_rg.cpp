#include "negglue/gadget.hpp"
#include "negglue/square.hpp"

#include <cmath>
#include <string>

namespace ng {

using namespace gadget;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int digits_for(long long b, long long v) {  // least m with b^m >= v
    int m = 0;
    while (ipow(b, m) < v) ++m;
    return m;
}

}  // namespace

RgSquareParams rg_square_params(int N) {
    if (N < kRgSquareMin) throw UnsupportedSize("rgTAS square needs N >= " + std::to_string(kRgSquareMin));
    RgSquareParams p;
    p.N = N;
    double lg = std::log2(double(N));
    double lo = lg / std::log2(lg);
    p.k = 0;
    while ((1 << p.k) < lo) ++p.k;
    p.b = 1 << p.k;
    if (p.b < 2) p.b = 2, p.k = 1;
    p.n = digits_for(p.b, N);
    p.c = (N - 4 * p.n) / 8;
    p.r = (N - 4 * p.n) % 8;
    if (p.c < 2 || p.n < 2) throw UnsupportedSize("rgTAS square layout does not fit N=" + std::to_string(N));
    p.m = digits_for(p.b, p.c);
    p.s = ipow(p.b, p.m) - p.c;
    return p;
}

namespace {

struct Out {
    std::string label;
    bool weak;
};

// a column's east side as seen by the next column
struct Edge {
    std::string fam;
    char st = 'O';  // T token, A token directly above, O other
    char mk = 'm';  // t top, m middle, b bottom
    bool ln = false;  // the next column is the last one
    bool strong = false;
    std::string label() const {
        return fam + (strong ? "!" : "") + ":" + st + mk + (ln ? "1" : "0");
    }
};

struct RgGen {
    RgSquareParams p;
    Builder B{ModelClass::RgTAS, -1};
    const Shape& F = shape("F16");
    const Shape& T = shape("T14");
    const Shape& S18 = shape("S18");
    int w = 0;
    std::vector<Point> redge, ledge;
    std::vector<std::pair<Point, int>> ledgeFill;
    int xN = 0;
    Glue up0{"up0", 1};

    explicit RgGen(const RgSquareParams& q) : p(q), w(4 + q.r) { edge_paths(); }

    static std::string dig(const std::string& fam, long long v, bool a, char pos) {
        return fam + ":" + std::to_string(v) + "," + (a ? "1" : "0") + "," + pos;
    }

    int index_of(const std::vector<Point>& path, Point c) const {
        for (size_t i = 0; i < path.size(); ++i)
            if (path[i] == c) return int(i);
        return -1;
    }

    void edge_paths() {
        for (int x = 0; x < w; ++x) redge.push_back({x, 0});
        for (Point c : {Point{w - 1, 1}, {w, 1}, {w, 2}, {w - 1, 2}, {w - 1, 3}}) redge.push_back(c);
        for (int x = w - 2, k = 0; x >= 0; --x, ++k)
            for (int i = 0; i < 3; ++i) redge.push_back({x, k % 2 == 0 ? 3 - i : 1 + i});
        xN = w - 1;
        for (Point c : {Point{w - 1, 0}, {w - 1, 1}, {w, 1}, {w, 2}, {w - 1, 2}, {w - 1, 3}}) ledge.push_back(c);
        int last = w % 2 == 0 ? 0 : 1;  // odd widths leave column 0 above the exit cell to fill tiles
        for (int x = w - 2, k = 0; x >= last; --x, ++k)
            for (int i = 0; i < 4; ++i) ledge.push_back({x, k % 2 == 0 ? 3 - i : i});
        if (last == 1) {
            ledge.push_back({0, 0});
            for (int y = 1; y < 4; ++y) ledgeFill.push_back({{0, y}, index_of(ledge, {1, y})});
        }
    }

    std::vector<GlueAt> block_glues(const Shape& sh, const std::string& pred, const std::string& read,
                                    const Out* up, const std::string& exit) {
        std::vector<GlueAt> g;
        if (!pred.empty()) g.push_back({0, W, {pred, 1}});
        if (!read.empty()) g.push_back({0, S, {read, 1}});
        if (!pred.empty() && !read.empty()) g.push_back({0, E, Builder::neg()});
        if (up) {
            g.push_back({sh.up, N, {up->label, 1}});
            if (up->weak) {
                if (sh.neg < 0) throw std::logic_error("shape has no negative-glue slot");
                g.push_back({sh.neg, E, Builder::neg()});
            }
        }
        if (!exit.empty()) g.push_back({sh.exit, E, {exit, 1}});
        return g;
    }

    void block(const std::string& key, const Shape& sh, Frame f, Point o, const std::string& pred,
               const std::string& read, const Out* up, const std::string& exit, bool top = false) {
        if (!B.defined(key))
            B.define(key, sh.path, f, block_glues(sh, pred, read, up, exit), {},
                     top ? std::optional<Glue>(up0) : std::nullopt);
        B.place(key, o);
    }

    // east-side output of the edge column: the tile at (w-1,3), with the negative glue on (w,2) facing it
    void edge_block(const std::string& key, bool left, Point o, const std::string& in, const std::string& northOut,
                    const std::string& exitW, const Edge& east, bool top) {
        if (!B.defined(key)) {
            const auto& path = left ? ledge : redge;
            std::vector<GlueAt> g;
            g.push_back({0, left ? S : W, {in, 1}});
            if (!northOut.empty()) g.push_back({index_of(path, {xN, 3}), N, {northOut, 1}});
            if (!exitW.empty()) g.push_back({int(path.size()) - 1, W, {exitW, 1}});
            g.push_back({index_of(path, {w - 1, 3}), E, {east.label(), 1}});
            if (!east.strong) g.push_back({index_of(path, {w, 2}), N, Builder::neg()});
            B.define(key, path, Frame::R, g, left ? ledgeFill : std::vector<std::pair<Point, int>>{},
                     top ? std::optional<Glue>(up0) : std::nullopt);
        }
        B.place(key, o);
    }

    std::vector<Edge> counter();
    void shifter(std::vector<Edge> west);
    void top_filler();
};

std::vector<Edge> RgGen::counter() {
    const int n = p.n, b = p.b, D = 2 * p.c;
    std::vector<long long> v(n, 0);
    long long s = p.s;
    for (int i = 0; i < p.m; ++i) v[i] = s % b, s /= b;
    auto act = [&](int i) { return i < p.m; };
    auto pos = [&](int i) { return i == 0 ? 'F' : i == n - 1 ? 'Z' : 'M'; };
    std::vector<Edge> east(D);
    // row 0: the seed row, value s
    for (int i = 0; i < n; ++i) {
        std::string key = "sd" + std::to_string(i) + ":" + std::to_string(v[i]);
        Out up{dig("cu", v[i], act(i), pos(i)), true};
        block(key, S18, Frame::R, {4 * i, 0}, i ? "seed/" + std::to_string(i) : "", "", &up,
              "seed/" + std::to_string(i + 1));
    }
    B.sys.seed = {B.plan.front()};
    east[D - 1] = {"ce", 'O', 'b'};
    edge_block("eRs", false, {4 * n, 0}, "seed/" + std::to_string(n), "eu:go", "", east[D - 1], false);
    bool halt = false;
    for (int R = 1; R < D; ++R) {
        int y = 4 * R, d = D - 1 - R;
        if (R % 2 == 1) {
            if (halt != (R == D - 1)) throw std::logic_error("counter halted on the wrong row");
            east[d] = halt ? Edge{"ce", 'T', 't', false, true} : Edge{"ce", 'O', 'm'};
            std::string h = halt ? "1" : "0";
            edge_block(halt ? "eLh" : "eLg", true, {4 * n, y}, halt ? "eu:halt" : "eu:go", "", "li:" + h, east[d],
                       halt);
            for (int i = n - 1; i >= 0; --i) {
                std::string read = dig("cu", v[i], act(i), pos(i));
                std::string exit = pos(i) == 'F' ? "" : "li:" + h;
                std::string key = "L" + h + "|" + read;
                if (halt) {
                    block(key, T, Frame::L, {4 * i, y}, "li:1", read, nullptr, exit, true);
                } else {
                    Out up = pos(i) == 'F' ? Out{dig("cd!", v[i], true, 'F'), false}
                                           : Out{dig("cd", v[i], act(i), pos(i)), true};
                    block(key, F, Frame::L, {4 * i, y}, "li:0", read, &up, exit);
                }
            }
        } else {
            int carry = 1;
            bool am = true;
            std::string pred;
            for (int i = 0; i < n; ++i) {
                std::string read = i == 0 ? dig("cd!", v[0], true, 'F') : dig("cd", v[i], act(i), pos(i));
                if (!act(i) && carry) throw std::logic_error("counter overflowed into a constant digit");
                long long nv = act(i) ? (v[i] + carry) % b : v[i];
                int nc = act(i) && v[i] + carry >= b;
                bool nam = am && (!act(i) || nv == b - 1);
                std::string exit = pos(i) == 'Z' ? std::string("re:") + (nam ? "1" : "0")
                                                 : "ri:" + std::to_string(nc) + "," + (nam ? "1" : "0");
                Out up{dig("cu", nv, act(i), pos(i)), true};
                std::string key = (i == 0 ? "Rt|" : "Rc|" + pred + "|") + read;
                block(key, F, Frame::R, {4 * i, y}, pred, read, &up, exit);
                v[i] = nv, carry = nc, am = nam, pred = exit;
            }
            halt = am;
            east[d] = {"ce", 'O', 'm'};
            edge_block(std::string("eR:") + (am ? "1" : "0"), false, {4 * n, y}, pred, am ? "eu:halt" : "eu:go", "",
                       east[d], false);
        }
    }
    return east;
}

void RgGen::shifter(std::vector<Edge> west) {
    const int D = 2 * p.c;
    for (int j = 1; j < D; ++j) {
        int X0 = 4 * p.n + w + 4 * (j - 1);
        std::vector<Edge> east(D);
        if (j % 2 == 1) {
            bool wt = false, iwT = false, last = false;
            for (int d = 0; d < D; ++d) {
                const Edge& Wd = west[d];
                std::string pred = d == 0 ? "" : std::string("pd:") + (wt ? "1" : "0") + (iwT ? "1" : "0") + (last ? "1" : "0");
                last = last || Wd.ln;
                bool token = d > 0 && wt;
                bool bottom = Wd.mk == 'b';
                if (bottom && token != last) throw std::logic_error("shifter token missed the bottom");
                std::string exit = bottom ? "" : std::string("pd:") + (Wd.st == 'T' ? "1" : "0") + (token ? "1" : "0") + (last ? "1" : "0");
                std::string key = "D|" + pred + "|" + Wd.label() + (last ? "|L" : "");
                Point o{X0, 4 * (D - 1 - d)};
                if (last) {
                    block(key, T, Frame::D, o, pred, Wd.label(), nullptr, exit, d == 0);
                } else {
                    east[d] = {"xd", token ? 'T' : iwT ? 'A' : 'O', Wd.mk, false, bottom};
                    Out up{east[d].label(), !bottom};
                    block(key, F, Frame::D, o, pred, Wd.label(), &up, exit, d == 0);
                }
                wt = Wd.st == 'T', iwT = token;
            }
            if (last) return;
        } else {
            bool bb = false, l2 = false;
            for (int d = D - 1; d >= 0; --d) {
                const Edge& Wd = west[d];
                std::string pred = d == D - 1 ? "" : std::string("pu:") + (bb ? "1" : "0") + (l2 ? "1" : "0");
                bool token = Wd.st == 'A';
                l2 = l2 || (token && bb);
                bool top = Wd.mk == 't';
                east[d] = {"xu", token ? 'T' : 'O', Wd.mk, l2, top};
                Out up{east[d].label(), !top};
                std::string exit = top ? "" : std::string("pu:") + (d == D - 1 ? "1" : "0") + (l2 ? "1" : "0");
                std::string key = "U|" + pred + "|" + Wd.label();
                block(key, F, Frame::U, {X0, 4 * (D - 1 - d)}, pred, Wd.label(), &up, exit, top);
                bb = d == D - 1;
            }
        }
        west = std::move(east);
    }
    throw std::logic_error("shifter never reached its last column");
}

void RgGen::top_filler() {
    int L = 4 * p.n + p.r, y0 = 8 * p.c;
    int first = int(B.sys.tiles.size());
    for (int i = 1; i <= L; ++i) {
        TileType t{"top" + std::to_string(i), {}};
        t.side[S] = Glue{"up" + std::to_string(i - 1), 1};
        if (i < L) t.side[N] = Glue{"up" + std::to_string(i), 1};
        B.add_tile(t);
    }
    for (int x = 0; x < p.N; ++x)
        for (int i = 0; i < L; ++i) B.plan.push_back({x, y0 + i, first + i});
}

}  // namespace

GeneratedSquare generate_rg_square(int N) {
    if (N < kRgSquareMin) return generate_fallback_square(N, ModelClass::RgTAS, -1);
    RgGen g(rg_square_params(N));
    g.shifter(g.counter());
    g.top_filler();
    return {std::move(g.B.sys), std::move(g.B.plan), false};
}

}  // namespace ng
