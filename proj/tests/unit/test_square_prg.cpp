#include "square_check.hpp"

#include <cmath>
#include <set>

#include <doctest.h>

using namespace ng;

TEST_CASE("prg square parameters") {
    auto p = prg_square_params(41);
    CHECK(p.n == 8);
    CHECK(p.k == 3);
    CHECK(p.K == 17);
    CHECK(p.n0 == 4);
    CHECK(p.x == 4);
    auto q = prg_square_params(100);
    CHECK(q.n == 19);
    CHECK(q.k == 5);
    CHECK(q.K == 25);
    CHECK(q.n0 == 18);
    CHECK(q.x == 5);
    CHECK(q.height() == 70);
    for (int N = kPrgSquareMin; N <= 5000; ++N) {
        auto r = prg_square_params(N);
        REQUIRE(r.x >= 1);
        REQUIRE(r.x <= 9);
        REQUIRE(r.K + r.height() + r.x == N);
    }
    CHECK_THROWS_AS(prg_square_params(kPrgSquareMin - 1), UnsupportedSize);
}

TEST_CASE("prg square assembles exactly for every negative strength") {
    for (int N : {41, 73, 100, 256}) {
        auto g = generate_prg_square(N);
        CHECK(validate_class(g.system).ok());
        std::vector<Placement> first;
        for (int s : {-1, -2, -3, -5}) {
            CAPTURE(N);
            CAPTURE(s);
            CHECK(square_mismatch(g, N, s) == "");
            TileSystem S = g.system;
            S.negStrength = s;
            auto r = run(S, Policy::Lexicographic, 10LL * N * N);
            REQUIRE(r.reason == Termination::Terminal);
            if (first.empty()) first = r.assembly.sorted();
            else CHECK(r.assembly.sorted() == first);
        }
    }
}

TEST_CASE("prg square offers no unplanned attachment") {
    for (int N : {36, 41, 58, 77}) {
        CAPTURE(N);
        auto g = generate_prg_square(N);
        CHECK(off_plan_attachment(g, -1) == "");
        CHECK(off_plan_attachment(g, -4) == "");
    }
}

TEST_CASE("prg square seed has exactly one attachment") {
    auto g = generate_prg_square(41);
    Assembly A(g.system.seed);
    int n = 0;
    for (int d = 0; d < 4; ++d)
        for (size_t t = 0; t < g.system.tiles.size(); ++t)
            if (binding_strength(g.system, A, {DX[d], DY[d]}, int(t)) >= 1) ++n;
    CHECK(n == 1);
    CHECK(frontier(g.system, A).size() == 1);
}

TEST_CASE("bit reads admit exactly one of the two probe tiles") {
    auto g = generate_prg_square(73);
    REQUIRE(g.probes.size() > 50);
    for (int s : {-1, -2, -5}) {
        CAPTURE(s);
        TileSystem S = g.system;
        S.negStrength = s;
        Compiled C(S);
        State st(C, S.seed);
        std::unordered_map<Point, const GeneratedSquare::Probe*, PointHash> at;
        for (auto& p : g.probes) at[p.at] = &p;
        size_t seen = 0;
        while (st.frontier_size()) {
            for (auto pos : st.frontier_positions()) {
                auto it = at.find(pos);
                if (it == at.end()) continue;
                CHECK(st.binding(pos, it->second->right) >= 1);
                CHECK(st.binding(pos, it->second->wrong) < 1);
                at.erase(it);
                ++seen;
            }
            auto e = st.first();
            st.place(e.p, e.tile);
        }
        CHECK(seen == g.probes.size());
    }
}

TEST_CASE("prg counter counts from n0 to all ones") {
    auto g = generate_prg_square(41);
    CHECK(g.values == std::vector<int>{4, 5, 6, 7});
    for (int N : {64, 100, 300}) {
        auto p = prg_square_params(N);
        auto h = generate_prg_square(N);
        CHECK(int(h.values.size()) == p.values());
        CHECK(h.values.front() == p.n0);
        CHECK(h.values.back() == (1 << p.k) - 1);
    }
}

TEST_CASE("crawler continues past copy rows and stops at the seed row") {
    auto g = generate_prg_square(56);
    auto p = prg_square_params(56);
    std::vector<const GeneratedSquare::Probe*> crawl;
    for (auto& q : g.probes)
        if (q.at.x == p.K) crawl.push_back(&q);
    REQUIRE(int(crawl.size()) == p.values());
    for (size_t i = 0; i < crawl.size(); ++i) {
        bool stop = i + 1 == crawl.size();
        CHECK(g.system.tiles[crawl[i]->right].id == (stop ? "cr.stop" : "cr.go"));
    }
    CHECK(crawl.back()->at.y == p.K);
}

TEST_CASE("prg square tile count grows like log N") {
    auto ratio = [](int N) { return double(generate_prg_square(N).system.tiles.size()) / std::log2(double(N)); };
    double C = ratio(64) * 1.25;
    for (int N : {64, 100, 128, 256, 512, 1024, 2048, 4096}) {
        CAPTURE(N);
        CHECK(ratio(N) <= C);
    }
}

TEST_CASE("prg square grows along many orders") {
    auto g = generate_prg_square(41);
    auto r = check_single_sequence(g.system, 10 * 41 * 41);
    CHECK_FALSE(r.single);
    CHECK(r.firstBranchingStep >= 0);
    CHECK(r.branching >= 2);
}

TEST_CASE("small prg squares use the fallback") {
    for (int N : {1, 11, 35}) {
        CAPTURE(N);
        auto g = generate_prg_square(N, -2);
        CHECK(g.fallback);
        CHECK(g.system.cls == ModelClass::PrgTAS);
        CHECK(validate_class(g.system).ok());
        CHECK(square_mismatch(g, N) == "");
    }
    auto d = check_directed(generate_prg_square(11).system, 2 * 11 * 11);
    CHECK(d.verdict == Directedness::Directed);
}
