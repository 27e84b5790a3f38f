#include "fixtures.hpp"
#include "negglue/macrotile.hpp"

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

TileSystem zig_fixture(const std::string& name) {
    return tile_system_from_json(read_json_file(fixture("zigzag/" + name + ".json")));
}

std::string tape_word(const TmConfig& c, const std::string& blank) {
    std::string w;
    for (auto& [pos, sym] : c.tape)
        if (sym != blank) w += sym;
    return w;
}

}  // namespace

TEST_CASE("zig-zag checker") {
    CHECK(check_zigzag(zig_fixture("binary_counter"), 100000).isCompact);
    CHECK(check_zigzag(zig_fixture("seed_row3"), 100000).isCompact);

    TileSystem Z;
    Z.temperature = 2;
    Z.tiles = {tile("s", {}, Glue{"e", 2}, {}, {}), tile("r", {}, Glue{"f", 2}, {}, Glue{"e", 2})};
    Z.seed = {{0, 0, 0}};
    auto rep = check_zigzag(Z, 100);
    CHECK(rep.isZigzag);
    CHECK_FALSE(rep.isCompact);

    TileSystem U;
    U.temperature = 2;
    U.tiles = {tile("s", {}, {}, Glue{"d", 2}, {}), tile("below", Glue{"d", 2}, {}, {}, {})};
    U.seed = {{0, 0, 0}};
    rep = check_zigzag(U, 100);
    CHECK_FALSE(rep.isZigzag);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].second == "north input side");

    U.temperature = 1;
    CHECK_FALSE(check_zigzag(U, 100).isZigzag);
}

TEST_CASE("turing machine interpreter") {
    auto M = load_tm("unary_increment");
    auto t = interpret(M, split_input(M, "111"), 1000);
    REQUIRE(t.size() == 5);
    CHECK(tape_word(t.back(), M.blank) == "1111");
    CHECK(M.halts.count(t.back().state));

    auto P = load_tm("odd_parity");
    std::vector<std::string> inputs;
    load_tm("odd_parity", &inputs);
    for (auto& w : inputs) {
        auto tr = interpret(P, split_input(P, w), 10000);
        CHECK(P.halts.count(tr.back().state));
    }

    TuringMachine H;
    H.states = {"h"};
    H.alphabet = {"_"};
    H.blank = "_";
    H.start = "h";
    H.halts = {"h"};
    auto e = interpret(H, {}, 10);
    CHECK(e.size() == 1);
    CHECK(e[0].tape.empty());
}

TEST_CASE("tm json round trip") {
    auto M = load_tm("copy3");
    auto R = tm_from_json(tm_to_json(M));
    CHECK(R.states == M.states);
    CHECK(R.alphabet == M.alphabet);
    CHECK(R.halts == M.halts);
    CHECK(R.delta.size() == M.delta.size());
    for (auto& [k, v] : M.delta) {
        auto* got = R.find(k.first, k.second);
        REQUIRE(got);
        CHECK(got->write == v.write);
        CHECK(got->move == v.move);
        CHECK(got->next == v.next);
    }
}

TEST_CASE("compiled zig-zag rows match the interpreter") {
    for (std::string name : {"unary_increment", "odd_parity", "copy3", "binary_counter"}) {
        std::vector<std::string> inputs;
        auto M = load_tm(name, &inputs);
        for (auto& w : inputs) {
            CAPTURE(name);
            CAPTURE(w);
            auto in = split_input(M, w);
            auto ct = compile_tm_to_zigzag(M, in);
            auto rep = check_zigzag(ct.system, 1'000'000);
            REQUIRE(rep.isCompact);
            CHECK(rep.reason == Termination::Terminal);
            auto r = run(ct.system, Policy::Lexicographic, 1'000'000);
            CHECK(row_trace(ct.system, r.assembly, ct.codec, M.blank) == interpret(M, in, 100000));
        }
    }
}

TEST_CASE("seed row fixture compiles to a 36-step rg path") {
    auto Z = zig_fixture("seed_row3");
    auto r = run(Z, Policy::Lexicographic, 10000);
    CHECK(r.reason == Termination::Terminal);
    auto C = compile_zigzag_to_rgtas(Z);
    auto rs = run(C.system, Policy::Lexicographic, 100000);
    CHECK(rs.steps.size() == 36);
    CHECK(verify_path_simulation(C.system, Z, C.map, 100000).ok());
}

TEST_CASE("macro-tile map round trip and a corrupted boundary") {
    auto Z = zig_fixture("binary_counter");
    auto C = compile_zigzag_to_rgtas(Z);
    CHECK(map_from_json(parse_json(map_to_json(C.map).dump())) == C.map);
    CHECK(verify_path_simulation(C.system, Z, C.map, 1'000'000).ok());
    auto bad = C.map;
    bad.boundaries[1] += 1;
    auto r = verify_path_simulation(C.system, Z, bad, 1'000'000);
    CHECK_FALSE(r.ok());
    CHECK(r.firstDivergence == 0);
}

TEST_CASE("rg compile has one negative glue and a bounded tile blow-up") {
    for (std::string name : {"unary_increment", "odd_parity", "copy3"}) {
        std::vector<std::string> inputs;
        auto M = load_tm(name, &inputs);
        auto Z = compile_tm_to_zigzag(M, split_input(M, inputs[0])).system;
        auto C = compile_zigzag_to_rgtas(Z);
        CAPTURE(name);
        CHECK(C.system.cls == ModelClass::RgTAS);
        CHECK(validate_class(C.system).ok());
        CHECK(C.map.scale == 12);
        CHECK(C.system.tiles.size() <= 12 * Z.tiles.size());
        for (auto& t : C.system.tiles)
            for (auto& g : t.side)
                if (g && g->strength < 0) CHECK(g->label == *C.system.negLabel);
    }
}

TEST_CASE("cooperative attachments need both inputs") {
    auto Z = zig_fixture("binary_counter");
    auto r = run(Z, Policy::Lexicographic, 100000);
    auto sites = cooperative_sites(Z, r);
    REQUIRE_FALSE(sites.empty());
    for (auto& s : sites) {
        auto a = ablate(Z, r, s);
        CHECK(a.withBoth);
        CHECK_FALSE(a.withoutA);
        CHECK_FALSE(a.withoutB);
    }
}
