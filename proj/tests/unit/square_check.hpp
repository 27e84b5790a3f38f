#pragma once

#include "negglue/simulator.hpp"
#include "negglue/square.hpp"

#include <set>
#include <string>

// runs a generated square to a terminal assembly and reports the first mismatch with the plan
inline std::string square_mismatch(const ng::GeneratedSquare& g, int N, int negStrength = 0) {
    ng::TileSystem S = g.system;
    if (negStrength) S.negStrength = negStrength;
    auto res = ng::run(S, ng::Policy::Lexicographic, 50'000'000);
    if (res.reason != ng::Termination::Terminal) return "not terminal";
    const auto& A = res.assembly;
    for (auto& p : g.plan) {
        int t = A.at({p.x, p.y});
        if (t != p.tile)
            return "at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") planned " + S.tiles[p.tile].id +
                   " got " + (t < 0 ? std::string("nothing") : S.tiles[t].id);
    }
    if (A.size() != g.plan.size()) return "assembly has tiles outside the plan";
    if (A.size() != size_t(N) * N) return "plan is not the full square";
    for (auto& [p, t] : A.cells())
        if (p.x < 0 || p.y < 0 || p.x >= N || p.y >= N) return "tile outside the square";
    return "";
}

// every frontier entry along the deterministic run is the planned tile at its position
inline std::string off_plan_attachment(const ng::GeneratedSquare& g, int negStrength = 0) {
    ng::TileSystem S = g.system;
    if (negStrength) S.negStrength = negStrength;
    std::unordered_map<ng::Point, int, ng::PointHash> want;
    for (auto& p : g.plan) want[{p.x, p.y}] = p.tile;
    ng::Compiled C(S);
    ng::State st(C, S.seed);
    while (st.frontier_size()) {
        for (auto& e : st.frontier()) {
            auto it = want.find(e.p);
            if (it == want.end() || it->second != e.tile)
                return "unplanned " + S.tiles[e.tile].id + " at (" + std::to_string(e.p.x) + "," +
                       std::to_string(e.p.y) + ")";
        }
        auto e = st.first();
        st.place(e.p, e.tile);
    }
    return "";
}
