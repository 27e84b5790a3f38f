#pragma once

#include "negglue/model.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <tuple>

namespace ng {

// Label-interned view of a tile system; all hot loops go through this.
struct Compiled {
    explicit Compiled(const TileSystem& S);
    const TileSystem* sys;
    int tau;
    std::vector<std::array<int, 4>> lab;  // -1 = null side
    std::vector<std::array<int, 4>> str;  // effective strengths
    std::vector<int> rank;                // position of tile id in sorted id order
    // bySide[d][label] = tiles with that positive label on side d
    std::vector<std::vector<int>> bySide[4];
    int numLabels = 0;

    int interact(int t, int d, int u) const {
        return lab[t][d] >= 0 && lab[t][d] == lab[u][opposite(d)] ? str[t][d] : 0;
    }
};

struct FrontierEntry {
    Point p;
    int tile;
    bool operator==(const FrontierEntry&) const = default;
};

// Assembly plus incrementally maintained frontier.
class State {
public:
    State(const Compiled& C, const std::vector<Placement>& seed);

    const Compiled& C() const { return *c_; }
    const Assembly& assembly() const { return a_; }
    int at(Point p) const { return a_.at(p); }
    int binding(Point p, int tile) const;
    void place(Point p, int tile);
    size_t frontier_size() const { return order_.size(); }
    std::vector<FrontierEntry> frontier() const;
    // least attachment by (y, x, tile id)
    FrontierEntry first() const;
    FrontierEntry nth(size_t i) const;
    const std::vector<int>& eligible(Point p) const;
    std::vector<Point> frontier_positions() const;
    uint64_t hash() const { return h1_; }
    uint64_t hash2() const { return h2_; }

private:
    void refresh(Point p);
    const Compiled* c_;
    Assembly a_;
    std::unordered_map<Point, std::vector<int>, PointHash> elig_;
    std::set<std::tuple<int, int, int, int>> order_;  // y, x, rank, tile
    uint64_t h1_ = 0, h2_ = 0;
};

// frontier of an arbitrary assembly, computed from scratch
std::vector<FrontierEntry> frontier(const TileSystem& S, const Assembly& A);

enum class Policy { Lexicographic, Random, Exhaustive };
enum class Termination { Terminal, StepCap };

struct RunResult {
    std::vector<Placement> steps;  // seed placements first, then attachments
    Termination reason = Termination::StepCap;
    std::vector<size_t> frontierSizes;  // size before each attachment decision
    Assembly assembly;
    size_t attachments() const;
    size_t seedSize = 0;
};

RunResult run(const TileSystem& S, Policy policy, long long max_steps, uint64_t rngSeed = 0);

enum class Directedness { Directed, NotDirected, Inconclusive };

struct DirectedResult {
    Directedness verdict = Directedness::Inconclusive;
    std::vector<Placement> terminalA, terminalB;  // witness pair when not directed
    std::vector<Placement> path;                  // attachment order reaching terminalA
    size_t statesExplored = 0;
};

DirectedResult check_directed(const TileSystem& S, size_t max_assembly_size);

struct SingleSequenceResult {
    bool single = true;
    long long firstBranchingStep = -1;
    size_t branching = 0;  // frontier size at that step
    Termination reason = Termination::StepCap;
    RunResult run;
};

SingleSequenceResult check_single_sequence(const TileSystem& S, long long max_steps);

}  // namespace ng
