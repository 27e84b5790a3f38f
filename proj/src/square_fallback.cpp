#include "negglue/square.hpp"

#include <string>

namespace ng {

GeneratedSquare generate_fallback_square(int N, ModelClass cls, int negStrength) {
    if (N < 1) throw UnsupportedSize("square side must be positive");
    GeneratedSquare g;
    g.fallback = true;
    TileSystem& sys = g.system;
    sys.cls = cls;
    sys.temperature = 1;
    sys.negLabel = "neg";
    sys.negStrength = negStrength;
    auto row = [](int i) { return Glue{"fr" + std::to_string(i), 1}; };
    auto col = [](int j) { return Glue{"fc" + std::to_string(j), 1}; };
    for (int i = 0; i < N; ++i) {
        TileType t{"r" + std::to_string(i), {}};
        if (i > 0) t.side[Side::W] = row(i);
        if (i + 1 < N) t.side[Side::E] = row(i + 1);
        if (N > 1) t.side[Side::N] = col(1);
        if (i == 0) t.side[Side::S] = Glue{"neg", -1};  // faces nothing; declares the class's negative glue
        sys.tiles.push_back(t);
    }
    for (int j = 1; j < N; ++j) {
        TileType t{"c" + std::to_string(j), {}};
        t.side[Side::S] = col(j);
        if (j + 1 < N) t.side[Side::N] = col(j + 1);
        sys.tiles.push_back(t);
    }
    sys.seed = {{0, 0, 0}};
    for (int i = 0; i < N; ++i) g.plan.push_back({i, 0, i});
    for (int i = 0; i < N; ++i)
        for (int j = 1; j < N; ++j) g.plan.push_back({i, j, N + j - 1});
    return g;
}

}  // namespace ng
