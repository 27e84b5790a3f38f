#include "fixtures.hpp"
#include "negglue/macrotile.hpp"

#include <set>

#include <doctest.h>

using namespace ng;

TEST_CASE("glue codes are injective with an all-zero empty glue") {
    TileSystem Z;
    Z.temperature = 2;
    for (std::string l : {"a", "b", "c"}) {
        TileType t;
        t.id = "t" + l;
        t.side[N] = Glue{l, 1};
        t.side[S] = Glue{"strong", 2};
        Z.tiles.push_back(t);
    }
    auto codes = assign_glue_bitstrings(Z);
    CHECK(codes.size() == 4);
    std::set<std::string> distinct;
    for (auto& [l, c] : codes) {
        CHECK(c.size() == 4);
        distinct.insert(c);
    }
    CHECK(distinct.size() == 4);
    CHECK(codes.at("") == "0000");
    CHECK(codes.count("strong") == 0);
    CHECK(assign_glue_bitstrings(Z) == codes);
}

TEST_CASE("code width and segment length") {
    CHECK(prg::code_width(0) == 1);
    CHECK(prg::code_width(1) == 1);
    CHECK(prg::code_width(3) == 2);
    CHECK(prg::code_width(4) == 3);
    CHECK(prg::code_width(7) == 3);
    CHECK(prg::code_width(8) == 4);
    for (int w = 1; w <= 8; ++w)
        for (std::string p : {"cR@", "cL@", "tR@", "tL@", "xR@", "s0F@"}) {
            Point c;
            int len = 0;
            REQUIRE(macro::prg_cell(p + std::to_string(w), 0, 0, 0, c, len));
            CHECK(len == prg::segment_length(w));
        }
}

TEST_CASE("bit reader reconstructs a written code") {
    for (int s : {-1, -2, -5}) {
        CAPTURE(s);
        CHECK(prg_read_fragment("0011", 'L', s) == "0011");
        CHECK(prg_read_fragment("0011", 'R', s) == "0011");
    }
}

TEST_CASE("read after unpack round-trips every code") {
    for (int s : {-1, -2, -5})
        for (char dir : {'L', 'R'})
            for (int v = 0; v < 8; ++v) {
                std::string c;
                for (int j = 2; j >= 0; --j) c += char('0' + (v >> j & 1));
                CAPTURE(s);
                CAPTURE(dir);
                CHECK(prg_read_fragment(c, dir, s) == c);
            }
    TileSystem Z;
    for (int i = 1; i <= 7; ++i) {
        TileType t;
        t.id = "g" + std::to_string(i);
        t.side[N] = Glue{"g" + std::to_string(i), 1};
        Z.tiles.push_back(t);
    }
    auto codes = assign_glue_bitstrings(Z);
    REQUIRE(codes.at("g5").size() == 8);
    std::string low = codes.at("g5").substr(8 - prg::code_width(7));
    CHECK(low == "101");
    CHECK(std::stoi(prg_read_fragment(low, 'L', -3), nullptr, 2) == 5);
}

TEST_CASE("tm zig-zag compiles to a prgTAS path simulation") {
    for (std::string name : {"unary_increment", "odd_parity", "copy3"}) {
        std::vector<std::string> inputs;
        auto M = load_tm(name, &inputs);
        auto& w = inputs.front();
        CAPTURE(name);
        CAPTURE(w);
        auto Z = compile_tm_to_zigzag(M, split_input(M, w)).system;
        auto C = compile_zigzag_to_prgtas(Z);
        CHECK(validate_class(C.system).ok());
        CHECK(C.map.scale == prg::segment_length(C.bits));
        for (int s : {-1, -2, -5}) {
            CAPTURE(s);
            TileSystem S = C.system;
            S.negStrength = s;
            auto r = verify_path_simulation(S, Z, C.map, 20'000'000);
            CHECK(r.singleSequence);
            CHECK(r.boundariesOk);
            CHECK_MESSAGE(r.segmentsOk, r.message);
        }
    }
}
