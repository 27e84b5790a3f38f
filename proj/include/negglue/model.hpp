#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ng {

struct MalformedTileSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OccupiedPosition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Glue {
    std::string label;
    int strength = 1;
    bool operator==(const Glue&) const = default;
};

using OptGlue = std::optional<Glue>;

// side order is fixed everywhere: N E S W
enum Side { N = 0, E = 1, S = 2, W = 3 };
constexpr int DX[4] = {0, 1, 0, -1};
constexpr int DY[4] = {1, 0, -1, 0};
inline int opposite(int d) { return (d + 2) & 3; }
const char* side_name(int d);

struct TileType {
    std::string id;
    OptGlue side[4];
    bool operator==(const TileType&) const = default;
};

struct Point {
    int x = 0, y = 0;
    bool operator==(const Point&) const = default;
    bool operator<(const Point& o) const { return y != o.y ? y < o.y : x < o.x; }
};

struct PointHash {
    size_t operator()(const Point& p) const {
        return std::hash<uint64_t>()((uint64_t(uint32_t(p.x)) << 32) | uint32_t(p.y));
    }
};

struct Placement {
    int x = 0, y = 0;
    int tile = -1;  // index into TileSystem::tiles
    bool operator==(const Placement&) const = default;
};

enum class ModelClass { Plain, RgTAS, PrgTAS };
const char* class_name(ModelClass c);
ModelClass parse_class(const std::string& s);

struct TileSystem {
    ModelClass cls = ModelClass::Plain;
    int temperature = 1;
    std::optional<std::string> negLabel;
    int negStrength = -1;
    std::vector<TileType> tiles;
    std::vector<Placement> seed;

    int find(const std::string& id) const;  // -1 if absent
    int index(const std::string& id) const;  // throws
};

// interaction of two glues that face each other
int interaction_strength(const OptGlue& a, const OptGlue& b, const TileSystem& S);
int interaction_strength(const OptGlue& a, const OptGlue& b);

class Assembly {
public:
    Assembly() = default;
    explicit Assembly(const std::vector<Placement>& seed);

    bool occupied(Point p) const { return cells_.count(p) != 0; }
    int at(Point p) const;  // -1 if empty
    void place(Point p, int tile);
    void erase(Point p) { cells_.erase(p); }
    size_t size() const { return cells_.size(); }
    const std::unordered_map<Point, int, PointHash>& cells() const { return cells_; }
    std::vector<Placement> sorted() const;
    std::vector<Point> seedDomain;

private:
    std::unordered_map<Point, int, PointHash> cells_;
};

int binding_strength(const TileSystem& S, const Assembly& A, Point p, int tile);

bool is_tau_stable(const TileSystem& S, const Assembly& A, int tau);

struct Violation {
    std::string what;
    std::string where;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& what) const;
};

ValidationReport validate_class(const TileSystem& S);

// throws MalformedTileSet on label/strength collisions, duplicate ids, bad seed refs
void check_well_formed(const TileSystem& S);

}  // namespace ng
