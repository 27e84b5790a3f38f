#include "negglue/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace ng {

const char* side_name(int d) {
    static const char* names[4] = {"north", "east", "south", "west"};
    return names[d & 3];
}

const char* class_name(ModelClass c) {
    switch (c) {
        case ModelClass::RgTAS: return "rgtas";
        case ModelClass::PrgTAS: return "prgtas";
        default: return "plain";
    }
}

ModelClass parse_class(const std::string& s) {
    if (s == "rgtas") return ModelClass::RgTAS;
    if (s == "prgtas") return ModelClass::PrgTAS;
    if (s == "plain") return ModelClass::Plain;
    throw MalformedTileSet("unknown class '" + s + "'");
}

int TileSystem::find(const std::string& id) const {
    for (size_t i = 0; i < tiles.size(); ++i)
        if (tiles[i].id == id) return int(i);
    return -1;
}

int TileSystem::index(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw MalformedTileSet("unknown tile id '" + id + "'");
    return i;
}

int interaction_strength(const OptGlue& a, const OptGlue& b) {
    if (!a || !b || a->label != b->label) return 0;
    if (a->strength != b->strength)
        throw MalformedTileSet("label '" + a->label + "' declared with strengths " +
                               std::to_string(a->strength) + " and " + std::to_string(b->strength));
    return a->strength;
}

int interaction_strength(const OptGlue& a, const OptGlue& b, const TileSystem& S) {
    int s = interaction_strength(a, b);
    if (s < 0 && S.cls == ModelClass::PrgTAS && S.negLabel && a->label == *S.negLabel)
        return S.negStrength;
    return s;
}

Assembly::Assembly(const std::vector<Placement>& seed) {
    for (auto& p : seed) {
        place({p.x, p.y}, p.tile);
        seedDomain.push_back({p.x, p.y});
    }
}

int Assembly::at(Point p) const {
    auto it = cells_.find(p);
    return it == cells_.end() ? -1 : it->second;
}

void Assembly::place(Point p, int tile) {
    auto [it, fresh] = cells_.emplace(p, tile);
    if (!fresh)
        throw OccupiedPosition("position (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                               ") already occupied");
}

std::vector<Placement> Assembly::sorted() const {
    std::vector<Placement> out;
    out.reserve(cells_.size());
    for (auto& [p, t] : cells_) out.push_back({p.x, p.y, t});
    std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    return out;
}

int binding_strength(const TileSystem& S, const Assembly& A, Point p, int tile) {
    if (A.occupied(p))
        throw OccupiedPosition("position (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                               ") already occupied");
    const TileType& t = S.tiles[tile];
    int sum = 0;
    for (int d = 0; d < 4; ++d) {
        int nb = A.at({p.x + DX[d], p.y + DY[d]});
        if (nb < 0) continue;
        sum += interaction_strength(t.side[d], S.tiles[nb].side[opposite(d)], S);
    }
    return sum;
}

namespace {

// Stoer-Wagner global min cut on a weighted undirected graph
long long min_cut(int n, const std::vector<std::vector<std::pair<int, int>>>& adj) {
    if (n <= 1) return std::numeric_limits<long long>::max();
    // merged adjacency as maps, nodes merged into representatives
    std::vector<std::map<int, long long>> g(n);
    for (int u = 0; u < n; ++u)
        for (auto [v, w] : adj[u]) g[u][v] += w;
    std::vector<bool> alive(n, true);
    long long best = std::numeric_limits<long long>::max();
    for (int phase = n; phase > 1; --phase) {
        std::vector<long long> key(n, 0);
        std::vector<bool> inA(n, false);
        std::priority_queue<std::pair<long long, int>> pq;
        int start = -1;
        for (int i = 0; i < n; ++i)
            if (alive[i]) { start = i; break; }
        pq.push({0, start});
        int prev = -1, last = -1;
        int added = 0;
        while (added < phase) {
            int u = -1;
            while (!pq.empty()) {
                auto [k, v] = pq.top();
                pq.pop();
                if (!inA[v] && k == key[v]) { u = v; break; }
            }
            if (u < 0) {
                // disconnected remainder
                for (int i = 0; i < n; ++i)
                    if (alive[i] && !inA[i]) { u = i; break; }
            }
            inA[u] = true;
            ++added;
            prev = last;
            last = u;
            for (auto [v, w] : g[u]) {
                if (!alive[v] || inA[v]) continue;
                key[v] += w;
                pq.push({key[v], v});
            }
        }
        best = std::min(best, key[last]);
        // merge last into prev
        for (auto [v, w] : g[last]) {
            if (v == prev) continue;
            g[prev][v] += w;
            g[v][prev] += w;
            g[v].erase(last);
        }
        g[prev].erase(last);
        alive[last] = false;
        g[last].clear();
    }
    return best;
}

}  // namespace

bool is_tau_stable(const TileSystem& S, const Assembly& A, int tau) {
    size_t n = A.size();
    if (n <= 1) return true;
    std::unordered_map<Point, int, PointHash> idx;
    std::vector<Point> pts;
    for (auto& [p, t] : A.cells()) {
        idx[p] = int(pts.size());
        pts.push_back(p);
    }
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (size_t i = 0; i < n; ++i) {
        Point p = pts[i];
        const TileType& t = S.tiles[A.at(p)];
        for (int d : {E, N}) {
            Point q{p.x + DX[d], p.y + DY[d]};
            auto it = idx.find(q);
            if (it == idx.end()) continue;
            int s = interaction_strength(t.side[d], S.tiles[A.at(q)].side[opposite(d)], S);
            if (s <= 0) continue;
            adj[i].push_back({it->second, s});
            adj[it->second].push_back({int(i), s});
        }
    }
    // connectivity first; at tau 1 that is the whole answer
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, w] : adj[u])
            if (!seen[v]) { seen[v] = true; ++reached; stack.push_back(v); }
    }
    if (reached != n) return false;
    if (tau <= 1) return true;
    return min_cut(int(n), adj) >= tau;
}

bool ValidationReport::has(const std::string& what) const {
    for (auto& v : violations)
        if (v.what == what) return true;
    return false;
}

void check_well_formed(const TileSystem& S) {
    std::unordered_map<std::string, int> strengthOf, ids;
    for (size_t i = 0; i < S.tiles.size(); ++i) {
        const auto& t = S.tiles[i];
        if (!ids.emplace(t.id, int(i)).second) throw MalformedTileSet("duplicate tile id '" + t.id + "'");
        for (auto& g : t.side) {
            if (!g) continue;
            auto [it, fresh] = strengthOf.emplace(g->label, g->strength);
            if (!fresh && it->second != g->strength)
                throw MalformedTileSet("label '" + g->label + "' declared with strengths " +
                                       std::to_string(it->second) + " and " + std::to_string(g->strength));
        }
    }
    for (auto& p : S.seed)
        if (p.tile < 0 || p.tile >= int(S.tiles.size())) throw MalformedTileSet("seed references unknown tile");
}

ValidationReport validate_class(const TileSystem& S) {
    ValidationReport r;
    auto add = [&](std::string what, std::string where = {}) {
        r.violations.push_back({std::move(what), std::move(where)});
    };
    std::map<std::string, int> strengthOf;
    std::set<std::string> negLabels;
    for (auto& t : S.tiles)
        for (int d = 0; d < 4; ++d) {
            auto& g = t.side[d];
            if (!g) continue;
            auto [it, fresh] = strengthOf.emplace(g->label, g->strength);
            if (!fresh && it->second != g->strength) add("label declared with unequal strengths", g->label);
            if (g->strength < 0) negLabels.insert(g->label);
            if (S.cls != ModelClass::Plain && std::abs(g->strength) != 1)
                add("strength magnitude ≠ 1", t.id + ":" + side_name(d));
            if (g->strength == 0) add("zero-strength glue", t.id + ":" + side_name(d));
        }
    if (S.cls == ModelClass::Plain) return r;
    if (negLabels.size() > 1) add("multiple negative glue types");
    if (negLabels.empty()) add("no negative glue type");
    if (negLabels.size() == 1 && (!S.negLabel || *S.negLabel != *negLabels.begin()))
        add("declared negative label does not match tile set");
    if (S.temperature != 1) add("temperature ≠ 1");
    if (S.cls == ModelClass::RgTAS && S.negStrength != -1) add("rgTAS negative strength ≠ -1");
    if (S.cls == ModelClass::PrgTAS && S.negStrength > -1) add("prgTAS negative strength > -1");
    if (S.seed.size() != 1 || S.seed[0].x != 0 || S.seed[0].y != 0) add("seed is not a single tile at the origin");
    return r;
}

}  // namespace ng
