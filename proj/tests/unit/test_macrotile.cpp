#include "fixtures.hpp"
#include "negglue/macrotile.hpp"

#include <doctest.h>

using namespace ng;

TEST_CASE("tm zig-zag compiles to scale-12 rgTAS") {
    for (std::string name : {"unary_increment", "odd_parity", "copy3"}) {
        std::vector<std::string> inputs;
        auto M = load_tm(name, &inputs);
        for (auto& w : inputs) {
            CAPTURE(name);
            CAPTURE(w);
            auto Z = compile_tm_to_zigzag(M, split_input(M, w)).system;
            auto rep = check_zigzag(Z, 200000);
            REQUIRE(rep.isCompact);
            auto C = compile_zigzag_to_rgtas(Z);
            CHECK(validate_class(C.system).ok());
            auto r = verify_path_simulation(C.system, Z, C.map, 5'000'000);
            CHECK(r.singleSequence);
            CHECK(r.boundariesOk);
            CHECK_MESSAGE(r.segmentsOk, r.message);
        }
    }
}

TEST_CASE("tm -> zig-zag -> rgTAS -> decode matches the interpreter") {
    for (std::string name : {"unary_increment", "odd_parity", "copy3"}) {
        std::vector<std::string> inputs;
        auto M = load_tm(name, &inputs);
        for (auto& w : inputs) {
            CAPTURE(name);
            CAPTURE(w);
            auto in = split_input(M, w);
            auto ct = compile_tm_to_zigzag(M, in);
            auto C = compile_zigzag_to_rgtas(ct.system);
            auto r = run(C.system, Policy::Lexicographic, 5'000'000);
            REQUIRE(r.reason == Termination::Terminal);
            Assembly A = decode_run(C.system, ct.system, r, C.map);
            auto got = row_trace(ct.system, A, ct.codec, M.blank);
            auto want = interpret(M, in, 100000);
            CHECK(got.size() == want.size());
            CHECK(got == want);
            int rows = 0;
            for (auto& [p, t] : A.cells()) rows = std::max(rows, p.y + 1);
            CHECK(rows >= 10);
        }
    }
}
