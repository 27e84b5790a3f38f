#include "negglue/macrotile.hpp"
#include "square_check.hpp"

#include <cmath>

#include <doctest.h>

using namespace ng;

TEST_CASE("rg square parameters for N=256") {
    auto p = rg_square_params(256);
    CHECK(p.b == 4);
    CHECK(p.k == 2);
    CHECK(p.n == 4);
    CHECK(p.c == 30);
    CHECK(p.r == 0);
    CHECK(p.s == 34);
}

TEST_CASE("rg square assembles exactly") {
    for (int N : {28, 29, 35, 64}) {
        CAPTURE(N);
        auto g = generate_rg_square(N);
        CHECK(validate_class(g.system).ok());
        CHECK(square_mismatch(g, N) == "");
    }
}

TEST_CASE("rg square never offers an unplanned attachment") {
    for (int N : {28, 37, 50}) {
        CAPTURE(N);
        CHECK(off_plan_attachment(generate_rg_square(N)) == "");
    }
}

TEST_CASE("rg square is independent of attachment order") {
    auto g = generate_rg_square(45);
    auto a = run(g.system, Policy::Lexicographic, 10'000'000);
    for (uint64_t seed : {1u, 2u, 3u}) {
        auto b = run(g.system, Policy::Random, 10'000'000, seed);
        REQUIRE(b.reason == Termination::Terminal);
        CHECK(b.assembly.sorted() == a.assembly.sorted());
    }
}

TEST_CASE("rg square cooperation needs both inputs") {
    auto g = generate_rg_square(40);
    auto r = run(g.system, Policy::Lexicographic, 10'000'000);
    auto sites = cooperative_sites(g.system, r);
    REQUIRE(sites.size() > 20);
    size_t checked = 0;
    for (size_t i = 0; i < sites.size(); i += 3) {
        auto a = ablate(g.system, r, sites[i]);
        CHECK(a.withBoth);
        CHECK_FALSE(a.withoutA);
        CHECK_FALSE(a.withoutB);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("rg square tile count grows like log N / log log N") {
    auto ratio = [](int N) {
        double lg = std::log2(double(N));
        return double(generate_rg_square(N).system.tiles.size()) / (lg / std::log2(lg));
    };
    double C = ratio(64) * 1.5;
    for (int N : {64, 128, 256, 512, 1024, 2048})
        CHECK(ratio(N) <= C);
}

TEST_CASE("small rg squares use the spanning-tree fallback") {
    for (int N : {1, 2, 7, 27}) {
        CAPTURE(N);
        auto g = generate_rg_square(N);
        CHECK(g.fallback);
        CHECK(validate_class(g.system).ok());
        CHECK(square_mismatch(g, N) == "");
    }
    CHECK_THROWS_AS(rg_square_params(27), UnsupportedSize);
}

TEST_CASE("small squares are directed") {
    for (int N : {1, 4, 9, 15}) {
        CAPTURE(N);
        auto g = generate_rg_square(N);
        auto d = check_directed(g.system, size_t(N) * N);
        CHECK(d.verdict == Directedness::Directed);
    }
}
