#include "negglue/render.hpp"
#include "negglue/simulator.hpp"
#include "negglue/square.hpp"

#include <doctest.h>

using namespace ng;

namespace {

size_t count(const std::string& s, const std::string& what) {
    size_t n = 0;
    for (size_t k = s.find(what); k != std::string::npos; k = s.find(what, k + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("svg of a single tile") {
    TileSystem S;
    S.tiles = {{"seed", {}}};
    auto svg = render_svg(S, {{0, 0, 0}});
    CHECK(count(svg, "<rect") == 1);
    CHECK(count(svg, "class=\"neg\"") == 0);
}

TEST_CASE("svg of an empty assembly is an empty canvas") {
    auto svg = render_svg(TileSystem{}, {});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "</svg>") == 1);
    CHECK(count(svg, "<rect") == 0);
}

TEST_CASE("one negative glue gives one marker") {
    TileSystem S;
    S.cls = ModelClass::PrgTAS;
    S.negLabel = "neg";
    TileType a{"a", {}}, b{"b", {}};
    a.side[E] = Glue{"x", 1};
    b.side[W] = Glue{"x", 1};
    b.side[N] = Glue{"neg", -1};
    S.tiles = {a, b};
    auto svg = render_svg(S, {{0, 0, 0}, {1, 0, 1}});
    CHECK(count(svg, "<rect") == 2);
    CHECK(count(svg, "class=\"neg\"") == 1);
}

TEST_CASE("y grows upward") {
    TileSystem S;
    S.tiles = {{"low", {}}, {"high", {}}};
    RenderStyle st;
    st.cell = 10;
    auto svg = render_svg(S, {{0, 0, 0}, {0, 1, 1}}, st);
    auto low = svg.find("<title>low"), high = svg.find("<title>high");
    REQUIRE(low != std::string::npos);
    CHECK(svg.rfind("y=\"10\"", low) > svg.rfind("<rect", low) - 1);
    CHECK(svg.rfind("y=\"0\"", high) > svg.rfind("<rect", high) - 1);
}

TEST_CASE("prg square of side 11 renders 121 cells deterministically") {
    auto g = generate_prg_square(11);
    auto r = run(g.system, Policy::Lexicographic, 100000);
    REQUIRE(r.reason == Termination::Terminal);
    RenderStyle st;
    st.cell = 8;
    st.colorBy = RenderStyle::Gadget;
    auto svg = render_svg(g.system, r.steps, st);
    CHECK(count(svg, "<rect") == 121);
    CHECK(svg.find("width=\"88\" height=\"88\"") != std::string::npos);
    CHECK(render_svg(g.system, r.steps, st) == svg);
}
