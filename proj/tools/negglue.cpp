#include "negglue/io.hpp"
#include "negglue/macrotile.hpp"
#include "negglue/render.hpp"
#include "negglue/simulator.hpp"
#include "negglue/square.hpp"
#include "negglue/zigzag.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace ng;

namespace {

enum Exit { Ok = 0, Failed = 1, StepCap = 2, NotDirected = 3, Usage = 64, DataErr = 65, NoInput = 66 };

struct InputMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// relative paths that do not exist here are looked up in the fixture directory
std::string resolve(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (fs::path(path).is_relative()) {
        auto alt = fs::path(fixtures_dir()) / path;
        if (fs::exists(alt)) return alt.string();
    }
    throw InputMissing("no such file: " + path);
}

json load(const std::string& path) { return read_json_file(resolve(path)); }

void save(const std::string& path, const json& j) {
    if (path.empty() || path == "-")
        std::cout << j.dump(1) << '\n';
    else
        write_text_file(path, j.dump(1) + "\n");
}

ModelClass model_of(const std::string& m) {
    if (m == "rgtas") return ModelClass::RgTAS;
    if (m == "prgtas") return ModelClass::PrgTAS;
    throw CLI::ValidationError("--model", "expected rgtas or prgtas");
}

Policy policy_of(const std::string& p) {
    if (p == "lex") return Policy::Lexicographic;
    if (p == "random") return Policy::Random;
    throw CLI::ValidationError("--policy", "expected lex or random");
}

std::vector<Placement> placements_of(const TileSystem& S, const std::vector<DumpEntry>& dump) {
    std::vector<DumpEntry> d = dump;
    std::stable_sort(d.begin(), d.end(), [](auto& a, auto& b) { return a.step < b.step; });
    std::vector<Placement> out;
    for (auto& e : d) out.push_back({e.x, e.y, S.index(e.tile)});
    return out;
}

struct Opts {
    std::string model = "prgtas", in, out, z, s, map, tm, input, assembly, policy = "lex", colorBy = "tile", trace;
    int n = 0, negStrength = -1, cell = 16, from = 16, to = 4096, directed = 0;
    long long maxSteps = 10'000'000;
    uint64_t seed = 0;
    bool noTicks = false;
};

int gen_square(const Opts& o) {
    auto cls = model_of(o.model);
    if (cls == ModelClass::RgTAS && o.negStrength != -1) throw CLI::ValidationError("--neg-strength", "rgTAS is fixed at -1");
    auto g = cls == ModelClass::RgTAS ? generate_rg_square(o.n) : generate_prg_square(o.n, o.negStrength);
    save(o.out, to_json(g.system));
    std::cerr << "tiles " << g.system.tiles.size() << (g.fallback ? " (fallback)" : "") << '\n';
    return Ok;
}

int compile_tm(const Opts& o) {
    auto M = tm_from_json(load(o.tm));
    auto ct = compile_tm_to_zigzag(M, split_input(M, o.input));
    save(o.out, to_json(ct.system));
    return Ok;
}

int compile_zigzag(const Opts& o) {
    auto Z = tile_system_from_json(load(o.in));
    auto cls = model_of(o.model);
    auto C = cls == ModelClass::RgTAS ? compile_zigzag_to_rgtas(Z, o.maxSteps) : compile_zigzag_to_prgtas(Z, o.maxSteps);
    if (cls == ModelClass::PrgTAS) C.system.negStrength = o.negStrength;
    save(o.out, to_json(C.system));
    if (!o.map.empty()) save(o.map, map_to_json(C.map));
    std::cerr << "tiles " << C.system.tiles.size() << " scale " << C.map.scale << '\n';
    return Ok;
}

int simulate(const Opts& o) {
    auto S = tile_system_from_json(load(o.in));
    if (o.directed > 0) {
        auto d = check_directed(S, size_t(o.directed));
        std::cerr << "explored " << d.statesExplored << " assemblies\n";
        if (d.verdict == Directedness::NotDirected) {
            std::cerr << "not directed: two distinct terminal assemblies\n";
            return NotDirected;
        }
        if (d.verdict == Directedness::Inconclusive) std::cerr << "directedness inconclusive at bound " << o.directed << '\n';
    }
    auto r = run(S, policy_of(o.policy), o.maxSteps, o.seed);
    if (!o.trace.empty()) {
        std::ofstream f(o.trace);
        for (size_t i = 0; i < r.frontierSizes.size(); ++i) {
            auto& p = r.steps[r.seedSize + i];
            f << json{{"step", i + 1}, {"frontier", r.frontierSizes[i]}, {"x", p.x}, {"y", p.y},
                      {"tile", S.tiles[p.tile].id}}
                     .dump()
              << '\n';
        }
    }
    if (!o.out.empty()) save(o.out, assembly_to_json(S, r.steps, r.seedSize));
    bool terminal = r.reason == Termination::Terminal;
    std::cerr << (terminal ? "terminal" : "step cap") << " after " << r.attachments() << " attachments, "
              << r.assembly.size() << " tiles\n";
    return terminal ? Ok : StepCap;
}

int verify_path_sim(const Opts& o) {
    auto S = tile_system_from_json(load(o.s));
    auto Z = tile_system_from_json(load(o.z));
    auto M = map_from_json(load(o.map));
    auto r = verify_path_simulation(S, Z, M, o.maxSteps);
    std::cout << (r.ok() ? "ok" : "FAILED") << ": " << r.segmentsChecked << " segments";
    if (!r.ok()) std::cout << ", first divergence at segment " << r.firstDivergence << ": " << r.message;
    std::cout << '\n';
    return r.ok() ? Ok : Failed;
}

int verify_class(const Opts& o) {
    auto S = tile_system_from_json(load(o.in));
    auto r = validate_class(S);
    for (auto& v : r.violations) std::cout << v.what << (v.where.empty() ? "" : ": " + v.where) << '\n';
    std::cout << (r.ok() ? "ok" : "FAILED") << '\n';
    return r.ok() ? Ok : Failed;
}

int render(const Opts& o) {
    auto S = tile_system_from_json(load(o.in));
    std::vector<Placement> cells;
    if (!o.assembly.empty()) {
        cells = placements_of(S, assembly_from_json(load(o.assembly)));
    } else {
        auto r = run(S, Policy::Lexicographic, o.maxSteps);
        cells = r.steps;
    }
    RenderStyle st;
    st.cell = o.cell;
    st.ticks = !o.noTicks;
    st.colorBy = parse_color_by(o.colorBy);
    auto svg = render_svg(S, cells, st);
    if (o.out.empty() || o.out == "-")
        std::cout << svg;
    else
        write_text_file(o.out, svg);
    return Ok;
}

int sweep(const Opts& o) {
    auto cls = model_of(o.model);
    std::cout << "N,tiles,log2N,tiles_per_log2N,fallback\n";
    for (long N = o.from; N <= o.to; N *= 2) {
        auto g = cls == ModelClass::RgTAS ? generate_rg_square(int(N)) : generate_prg_square(int(N), o.negStrength);
        double l = std::log2(double(N));
        std::cout << N << ',' << g.system.tiles.size() << ',' << l << ',' << g.system.tiles.size() / l << ','
                  << (g.fallback ? 1 : 0) << '\n';
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negative-glue tile assembly toolkit"};
    app.require_subcommand(1);
    Opts o;
    std::function<int()> action;

    auto* gs = app.add_subcommand("gen-square", "generate an N x N square tile set");
    gs->add_option("--model", o.model, "rgtas or prgtas")->required();
    gs->add_option("--n", o.n, "side length")->required()->check(CLI::Range(1, 1 << 20));
    gs->add_option("--neg-strength", o.negStrength, "strength of the negative glue (prgtas)")->check(CLI::Range(-1000, -1));
    gs->add_option("--out", o.out, "output tile set, - for stdout");
    gs->callback([&] { action = [&] { return gen_square(o); }; });

    auto* ct = app.add_subcommand("compile-tm", "compile a Turing machine and input into a zig-zag tile set");
    ct->add_option("--tm", o.tm, "machine json")->required();
    ct->add_option("--input", o.input, "input word")->required();
    ct->add_option("--out", o.out, "output tile set");
    ct->callback([&] { action = [&] { return compile_tm(o); }; });

    auto* cz = app.add_subcommand("compile-zigzag", "compile a compact zig-zag system to a negative-glue path system");
    cz->add_option("--model", o.model, "rgtas or prgtas")->required();
    cz->add_option("--in", o.in, "zig-zag tile set")->required();
    cz->add_option("--out", o.out, "output tile set");
    cz->add_option("--map", o.map, "macro-tile map output");
    cz->add_option("--neg-strength", o.negStrength, "strength of the negative glue (prgtas)")->check(CLI::Range(-1000, -1));
    cz->add_option("--max-steps", o.maxSteps, "cap on the zig-zag run");
    cz->callback([&] { action = [&] { return compile_zigzag(o); }; });

    auto* sim = app.add_subcommand("simulate", "run a tile system; exit 0 terminal, 2 step cap, 3 not directed");
    sim->add_option("--in", o.in, "tile set")->required();
    sim->add_option("--max-steps", o.maxSteps, "attachment cap")->check(CLI::NonNegativeNumber);
    sim->add_option("--policy", o.policy, "lex or random");
    sim->add_option("--seed", o.seed, "rng seed for the random policy");
    sim->add_option("--out", o.out, "assembly dump");
    sim->add_option("--trace", o.trace, "frontier trace, one json object per line");
    sim->add_option("--check-directed", o.directed, "search all producible assemblies up to this size first");
    sim->callback([&] { action = [&] { return simulate(o); }; });

    auto* ver = app.add_subcommand("verify", "check a compiled system");
    ver->require_subcommand(1);
    auto* ps = ver->add_subcommand("path-sim", "check that S path-simulates Z under the map");
    ps->add_option("--s", o.s, "compiled system")->required();
    ps->add_option("--z", o.z, "zig-zag system")->required();
    ps->add_option("--map", o.map, "macro-tile map")->required();
    ps->add_option("--max-steps", o.maxSteps, "attachment cap");
    ps->callback([&] { action = [&] { return verify_path_sim(o); }; });
    auto* vc = ver->add_subcommand("class", "check the model-class constraints");
    vc->add_option("--in", o.in, "tile set")->required();
    vc->callback([&] { action = [&] { return verify_class(o); }; });

    auto* rs = app.add_subcommand("render-svg", "draw an assembly");
    rs->add_option("--in", o.in, "tile set")->required();
    rs->add_option("--assembly", o.assembly, "assembly dump; simulated when absent");
    rs->add_option("--out", o.out, "svg output");
    rs->add_option("--cell", o.cell, "cell size in px")->check(CLI::Range(2, 256));
    rs->add_option("--color-by", o.colorBy, "tile, gadget or step");
    rs->add_flag("--no-ticks", o.noTicks, "omit glue ticks");
    rs->add_option("--max-steps", o.maxSteps, "attachment cap when simulating");
    rs->callback([&] { action = [&] { return render(o); }; });

    auto* sw = app.add_subcommand("sweep", "tile counts of square generators, N doubling");
    sw->add_option("--model", o.model, "rgtas or prgtas")->required();
    sw->add_option("--from", o.from, "first N")->check(CLI::Range(1, 1 << 20));
    sw->add_option("--to", o.to, "last N")->check(CLI::Range(1, 1 << 20));
    sw->add_option("--neg-strength", o.negStrength)->check(CLI::Range(-1000, -1));
    sw->callback([&] { action = [&] { return sweep(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }
    try {
        return action();
    } catch (const JsonError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what() << '\n';
        return DataErr;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return DataErr;
    } catch (const MalformedTileSet& e) {
        std::cerr << "malformed tile set: " << e.what() << '\n';
        return DataErr;
    } catch (const InputMissing& e) {
        std::cerr << e.what() << '\n';
        return NoInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failed;
    }
}
