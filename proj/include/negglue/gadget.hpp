#pragma once

#include "negglue/model.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Path gadgets laid out in a canonical frame: u runs along the growth direction,
// v points at the next row (or column). Canonical sides: E = forward, W = back,
// N = towards the next row, S = towards the row already built.
namespace ng::gadget {

enum class Frame { R, L, D, U };

struct Shape {
    std::string name;
    std::vector<Point> path;
    int neg = -1, up = -1, exit = -1;
};

const Shape& shape(const std::string& name);

Point to_world(Frame f, Point c);
int world_side(Frame f, int canonicalSide);

struct GlueAt {
    int idx;
    int side;  // canonical
    Glue glue;
};

class Builder {
public:
    Builder(ModelClass cls, int negStrength);

    TileSystem sys;
    std::vector<Placement> plan;  // intended placements in construction order

    static Glue neg() { return {"neg", -1}; }

    bool defined(const std::string& key) const { return blocks_.count(key) != 0; }
    // registers the tile types of a block once. fills are off-path cells, each hung on one path tile;
    // topFill adds a north glue along the body's top row
    void define(const std::string& key, const std::vector<Point>& path, Frame f, const std::vector<GlueAt>& glues,
                const std::vector<std::pair<Point, int>>& fills = {}, const std::optional<Glue>& topFill = std::nullopt,
                int topRow = 3);
    void place(const std::string& key, Point origin);
    void add_tile(TileType t);

private:
    struct Block {
        std::vector<Point> cells;  // world offsets
        std::vector<int> tiles;
    };
    std::map<std::string, Block> blocks_;
};

// Hamiltonian path over cells from start (and ending at end when given) accepted by ok
std::optional<std::vector<Point>> find_path(const std::vector<Point>& cells, Point start, std::optional<Point> end,
                                            const std::function<bool(const std::vector<Point>&)>& ok);

}  // namespace ng::gadget
