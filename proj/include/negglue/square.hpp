#pragma once

#include "negglue/model.hpp"

#include <stdexcept>
#include <vector>

namespace ng {

struct UnsupportedSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratedSquare {
    TileSystem system;
    std::vector<Placement> plan;  // intended placement of every tile, in construction order
    bool fallback = false;
    // bit-read sites: at each, only `right` may attach once the reading tile's predecessor is down
    struct Probe {
        Point at;
        int right = -1, wrong = -1;
    };
    std::vector<Probe> probes;
    std::vector<int> values;  // values read by the first counter's copy rows, bottom to top
};

// spanning-tree tile set for small N: a row along y=0 with a column over every cell
GeneratedSquare generate_fallback_square(int N, ModelClass cls, int negStrength = -1);

struct RgSquareParams {
    int N = 0, b = 0, k = 0, n = 0, c = 0, r = 0;
    long long s = 0;
    int m = 0;  // digits that actually count; the remaining n-m are constant zero
};

constexpr int kRgSquareMin = 28;

RgSquareParams rg_square_params(int N);
GeneratedSquare generate_rg_square(int N);  // falls back below kRgSquareMin

struct PrgSquareParams {
    int N = 0, n = 0, k = 0, K = 0, n0 = 0, x = 0;
    int height() const;  // rows of one counter, 5(n - ceil(K/5))
    int values() const { return (1 << k) - n0; }
};

// smallest N with a corner, three counters and a two-column gap between the first and third
constexpr int kPrgSquareMin = 36;

PrgSquareParams prg_square_params(int N);
GeneratedSquare generate_prg_square(int N, int negStrength = -1);

}  // namespace ng
