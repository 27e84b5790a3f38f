#include "negglue/io.hpp"
#include "negglue/simulator.hpp"

#include <random>

#include <doctest.h>

using namespace ng;

namespace {

TileType tile(const std::string& id, OptGlue n, OptGlue e, OptGlue s, OptGlue w) {
    TileType t;
    t.id = id;
    t.side[N] = n;
    t.side[E] = e;
    t.side[S] = s;
    t.side[W] = w;
    return t;
}

TileSystem prg_with(int s) {
    TileSystem S;
    S.cls = ModelClass::PrgTAS;
    S.negLabel = "neg";
    S.negStrength = s;
    return S;
}

}  // namespace

TEST_CASE("interaction strength") {
    TileSystem P = prg_with(-3);
    CHECK(interaction_strength(Glue{"a", 1}, Glue{"a", 1}) == 1);
    CHECK(interaction_strength(Glue{"a", 1}, Glue{"b", 1}) == 0);
    CHECK(interaction_strength(Glue{"a", 1}, std::nullopt) == 0);
    CHECK(interaction_strength(Glue{"neg", -1}, Glue{"neg", -1}, P) == -3);
    CHECK(interaction_strength(Glue{"neg", -1}, Glue{"a", 1}, P) == 0);
    CHECK_THROWS_AS(interaction_strength(Glue{"a", 1}, Glue{"a", 2}), MalformedTileSet);
}

TEST_CASE("interaction strength is symmetric and diagonal on random pairs") {
    std::mt19937 rng(7);
    const char* labels[] = {"a", "b", "c", "neg"};
    TileSystem P = prg_with(-2);
    auto draw = [&]() -> OptGlue {
        int l = int(rng() % 5);
        if (l == 4) return std::nullopt;
        return Glue{labels[l], l == 3 ? -1 : 1 + int(l == 2)};
    };
    for (int i = 0; i < 1000; ++i) {
        OptGlue a = draw(), b = draw();
        int ab = interaction_strength(a, b, P), ba = interaction_strength(b, a, P);
        CHECK(ab == ba);
        if (ab != 0) CHECK(a->label == b->label);
    }
}

TEST_CASE("binding strength sums neighbours including the negative glue") {
    for (int s : {-1, -2}) {
        TileSystem S = prg_with(s);
        S.tiles = {tile("left", {}, Glue{"x", 1}, {}, {}), tile("below", Glue{"y", 1}, {}, {}, {}),
                   tile("repel", {}, {}, {}, Glue{"neg", -1}), tile("joiner", {}, Glue{"neg", -1}, Glue{"y", 1}, Glue{"x", 1})};
        Assembly A;
        A.place({0, 1}, 0);
        A.place({1, 0}, 1);
        A.place({2, 1}, 2);
        CHECK(binding_strength(S, A, {1, 1}, 3) == 2 + s);
        CHECK_THROWS_AS(binding_strength(S, A, {0, 1}, 3), OccupiedPosition);
    }
    TileSystem S;
    S.tiles = {tile("a", {}, Glue{"x", 1}, {}, {}), tile("b", {}, {}, {}, Glue{"x", 1})};
    Assembly A;
    A.place({0, 0}, 0);
    CHECK(binding_strength(S, A, {1, 0}, 1) == 1);
}

TEST_CASE("binding strength matches a brute-force sum on random assemblies") {
    std::mt19937 rng(11);
    TileSystem S = prg_with(-2);
    const char* labels[] = {"a", "b", "neg"};
    for (int i = 0; i < 12; ++i) {
        TileType t;
        t.id = "t" + std::to_string(i);
        for (int d = 0; d < 4; ++d) {
            int l = int(rng() % 4);
            if (l < 3) t.side[d] = Glue{labels[l], l == 2 ? -1 : 1};
        }
        S.tiles.push_back(t);
    }
    for (int trial = 0; trial < 200; ++trial) {
        Assembly A;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                if ((x != 1 || y != 1) && rng() % 2) A.place({x, y}, int(rng() % S.tiles.size()));
        int t = int(rng() % S.tiles.size());
        int want = 0;
        for (int d = 0; d < 4; ++d) {
            int nb = A.at({1 + DX[d], 1 + DY[d]});
            if (nb < 0) continue;
            auto& a = S.tiles[t].side[d];
            auto& b = S.tiles[nb].side[opposite(d)];
            if (a && b && a->label == b->label) want += a->label == "neg" ? S.negStrength : a->strength;
        }
        CHECK(binding_strength(S, A, {1, 1}, t) == want);
    }
}

TEST_CASE("tau stability") {
    TileSystem S;
    S.tiles = {tile("a", {}, Glue{"x", 1}, {}, {}), tile("b", {}, {}, {}, Glue{"x", 1}), tile("c", {}, {}, {}, Glue{"z", 1})};
    Assembly one;
    one.place({0, 0}, 0);
    CHECK(is_tau_stable(S, one, 1));
    Assembly two = one;
    two.place({1, 0}, 1);
    CHECK(is_tau_stable(S, two, 1));
    CHECK_FALSE(is_tau_stable(S, two, 2));
    Assembly loose = one;
    loose.place({1, 0}, 2);
    CHECK_FALSE(is_tau_stable(S, loose, 1));
}

TEST_CASE("class validation") {
    TileSystem S;
    S.cls = ModelClass::RgTAS;
    S.negLabel = "n1";
    S.tiles = {tile("a", Glue{"n1", -1}, Glue{"n2", -1}, {}, {}), tile("b", Glue{"p", 2}, {}, {}, {})};
    S.seed = {{0, 0, 0}};
    auto r = validate_class(S);
    CHECK(r.has("multiple negative glue types"));
    CHECK(r.has("strength magnitude ≠ 1"));
    TileSystem P = prg_with(-5);
    P.temperature = 1;
    P.tiles = {tile("a", Glue{"neg", -1}, Glue{"p", 1}, {}, {})};
    P.seed = {{0, 0, 0}};
    CHECK(validate_class(P).ok());
}

TEST_CASE("frontier excludes lone negative glues") {
    TileSystem S = prg_with(-1);
    S.tiles = {tile("seed", Glue{"neg", -1}, Glue{"e", 1}, {}, {}), tile("up", {}, {}, Glue{"neg", -1}, {}),
               tile("right", {}, {}, {}, Glue{"e", 1})};
    S.seed = {{0, 0, 0}};
    auto f = frontier(S, Assembly(S.seed));
    REQUIRE(f.size() == 1);
    CHECK(f[0].p == Point{1, 0});
    CHECK(f[0].tile == 2);
}

TEST_CASE("run stops at the step cap or at a terminal assembly") {
    TileSystem S;
    S.tiles = {tile("s", {}, Glue{"e", 1}, {}, {}), tile("r", {}, Glue{"e", 1}, {}, Glue{"e", 1})};
    S.seed = {{0, 0, 0}};
    auto r = run(S, Policy::Lexicographic, 0);
    CHECK(r.reason == Termination::StepCap);
    CHECK(r.steps.size() == 1);
    r = run(S, Policy::Lexicographic, 25);
    CHECK(r.reason == Termination::StepCap);
    CHECK(r.attachments() == 25);
    S.tiles[1].side[E].reset();
    r = run(S, Policy::Lexicographic, 25);
    CHECK(r.reason == Termination::Terminal);
    CHECK(r.steps.size() == 2);
}

TEST_CASE("directedness") {
    TileSystem S;
    S.tiles = {tile("s", {}, Glue{"e", 1}, {}, {}), tile("a", {}, {}, {}, Glue{"e", 1}), tile("b", {}, {}, {}, Glue{"e", 1})};
    S.seed = {{0, 0, 0}};
    auto d = check_directed(S, 10);
    CHECK(d.verdict == Directedness::NotDirected);
    CHECK(d.terminalA != d.terminalB);
    S.tiles.pop_back();
    CHECK(check_directed(S, 10).verdict == Directedness::Directed);
    TileSystem L;
    L.tiles = {tile("s", {}, Glue{"e", 1}, {}, {}), tile("r", {}, Glue{"e", 1}, {}, Glue{"e", 1})};
    L.seed = {{0, 0, 0}};
    CHECK(check_directed(L, 20).verdict == Directedness::Inconclusive);
}

TEST_CASE("single sequence") {
    TileSystem S;
    S.tiles = {tile("s", {}, {}, {}, {})};
    S.seed = {{0, 0, 0}};
    CHECK(check_single_sequence(S, 10).single);
    S.tiles = {tile("s", Glue{"u", 1}, Glue{"e", 1}, {}, {}), tile("a", {}, {}, {}, Glue{"e", 1}),
               tile("b", {}, {}, Glue{"u", 1}, {})};
    auto r = check_single_sequence(S, 10);
    CHECK_FALSE(r.single);
    CHECK(r.firstBranchingStep == 0);
    CHECK(r.branching == 2);
}

TEST_CASE("json round trips") {
    TileSystem S = prg_with(-2);
    S.tiles = {tile("a", Glue{"neg", -1}, Glue{"p", 1}, {}, {}), tile("b", {}, {}, {}, Glue{"p", 1})};
    S.seed = {{0, 0, 0}};
    TileSystem T = tile_system_from_json(parse_json(to_json(S).dump()));
    CHECK(T.cls == S.cls);
    CHECK(T.negStrength == -2);
    CHECK(T.negLabel == S.negLabel);
    CHECK(T.tiles == S.tiles);
    CHECK(T.seed == S.seed);
    auto r = run(S, Policy::Lexicographic, 10);
    auto dump = assembly_from_json(parse_json(assembly_to_json(S, r.steps, r.seedSize).dump()));
    REQUIRE(dump.size() == 2);
    CHECK(dump[1] == DumpEntry{1, 0, "b", 1});
}

TEST_CASE("malformed json reports line and column") {
    try {
        parse_json("{\n  \"a\": [1,\n  }");
        FAIL("no error");
    } catch (const JsonError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 0);
    }
}
