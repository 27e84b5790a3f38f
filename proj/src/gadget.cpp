#include "negglue/gadget.hpp"
#include "negglue/io.hpp"

#include <algorithm>
#include <set>

namespace ng::gadget {

extern const char* const kLibraryJson;

namespace {

std::map<std::string, Shape> load_library() {
    std::map<std::string, Shape> out;
    json j = json::parse(kLibraryJson);
    for (auto& [name, s] : j.at("shapes").items()) {
        Shape sh;
        sh.name = name;
        for (auto& c : s.at("path")) sh.path.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
        sh.neg = s.at("neg").get<int>();
        sh.up = s.at("up").get<int>();
        sh.exit = s.at("exit").get<int>();
        out.emplace(name, std::move(sh));
    }
    return out;
}

Point linear(Frame f, int du, int dv) {
    switch (f) {
    case Frame::R: return {du, dv};
    case Frame::L: return {-du, dv};
    case Frame::D: return {dv, -du};
    case Frame::U: return {dv, du};
    }
    return {du, dv};
}

int side_of(Point d) {
    for (int s = 0; s < 4; ++s)
        if (DX[s] == d.x && DY[s] == d.y) return s;
    throw std::logic_error("cells are not adjacent");
}

}  // namespace

const Shape& shape(const std::string& name) {
    static const std::map<std::string, Shape> lib = load_library();
    auto it = lib.find(name);
    if (it == lib.end()) throw std::out_of_range("no gadget shape " + name);
    return it->second;
}

Point to_world(Frame f, Point c) {
    switch (f) {
    case Frame::R: return c;
    case Frame::L: return {3 - c.x, c.y};
    case Frame::D: return {c.y, 3 - c.x};
    case Frame::U: return {c.y, c.x};
    }
    return c;
}

int world_side(Frame f, int s) { return side_of(linear(f, DX[s], DY[s])); }

Builder::Builder(ModelClass cls, int negStrength) {
    sys.cls = cls;
    sys.temperature = 1;
    sys.negLabel = "neg";
    sys.negStrength = negStrength;
}

void Builder::add_tile(TileType t) { sys.tiles.push_back(std::move(t)); }

void Builder::define(const std::string& key, const std::vector<Point>& path, Frame f,
                     const std::vector<GlueAt>& glues, const std::vector<std::pair<Point, int>>& fills,
                     const std::optional<Glue>& topFill, int topRow) {
    if (blocks_.count(key)) throw std::logic_error("block defined twice: " + key);
    Block b;
    std::vector<TileType> tiles(path.size() + fills.size());
    for (size_t i = 0; i < tiles.size(); ++i) {
        tiles[i].id = key + "#" + std::to_string(i);
        b.cells.push_back(to_world(f, i < path.size() ? path[i] : fills[i - path.size()].first));
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int d = side_of({b.cells[i + 1].x - b.cells[i].x, b.cells[i + 1].y - b.cells[i].y});
        Glue g{"p:" + key + "/" + std::to_string(i), 1};
        tiles[i].side[d] = g;
        tiles[i + 1].side[opposite(d)] = g;
    }
    for (size_t j = 0; j < fills.size(); ++j) {
        size_t i = path.size() + j;
        int a = fills[j].second;
        int d = side_of({b.cells[i].x - b.cells[a].x, b.cells[i].y - b.cells[a].y});
        Glue g{"f:" + key + "/" + std::to_string(j), 1};
        tiles[a].side[d] = g;
        tiles[i].side[opposite(d)] = g;
    }
    for (auto& ga : glues) {
        auto& slot = tiles.at(ga.idx).side[world_side(f, ga.side)];
        if (slot) throw std::logic_error("glue clash in block " + key + " at " + std::to_string(ga.idx));
        slot = ga.glue;
    }
    if (topFill)
        for (size_t i = 0; i < tiles.size(); ++i)
            if (b.cells[i].y == topRow) {
                if (tiles[i].side[N]) throw std::logic_error("top glue clash in block " + key);
                tiles[i].side[N] = *topFill;
            }
    for (auto& t : tiles) {
        b.tiles.push_back(int(sys.tiles.size()));
        sys.tiles.push_back(std::move(t));
    }
    blocks_.emplace(key, std::move(b));
}

void Builder::place(const std::string& key, Point o) {
    auto& b = blocks_.at(key);
    for (size_t i = 0; i < b.cells.size(); ++i) plan.push_back({o.x + b.cells[i].x, o.y + b.cells[i].y, b.tiles[i]});
}

std::optional<std::vector<Point>> find_path(const std::vector<Point>& cells, Point start, std::optional<Point> end,
                                            const std::function<bool(const std::vector<Point>&)>& ok) {
    std::set<Point> free(cells.begin(), cells.end());
    if (!free.erase(start)) return std::nullopt;
    std::vector<Point> path{start};
    std::function<bool()> dfs = [&]() -> bool {
        if (free.empty()) return (!end || path.back() == *end) && ok(path);
        Point p = path.back();
        if (end && p == *end) return false;
        for (int d = 0; d < 4; ++d) {
            Point q{p.x + DX[d], p.y + DY[d]};
            if (!free.erase(q)) continue;
            path.push_back(q);
            if (dfs()) return true;
            path.pop_back();
            free.insert(q);
        }
        return false;
    };
    if (dfs()) return path;
    return std::nullopt;
}

}  // namespace ng::gadget
