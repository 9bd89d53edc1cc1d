#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kmodenum/cli.hpp"

int main(int argc, char** argv) {
    using namespace kmodenum::cli;

    CLI::App app{"Exact vertex enumeration for {x : Sx = b, x >= 0} via branch decompositions"};
    app.require_subcommand(1);

    std::string input;
    VerticesFlags vflags;
    auto* vertices = app.add_subcommand("vertices", "enumerate all vertices");
    vertices->add_option("input", input, "polyhedron file")->required();
    vertices->add_flag("--normalize", vflags.normalize, "append the row sum(x) = 1");
    vertices->add_option("--decomp", vflags.decomp, "auto, exhaustive, greedy, or a decomposition file")
        ->capture_default_str();
    vertices->add_flag("--check", vflags.check, "compare against the brute-force oracle");
    vertices->add_flag("--json", vflags.json, "JSON output");
    vertices->add_flag("--allow-unbounded", vflags.allow_unbounded, "enumerate unbounded polyhedra with a warning");
    vertices->add_option("--max-exhaustive", vflags.max_exhaustive, "largest column count for exhaustive search")
        ->capture_default_str();
    vertices->add_option("--oracle-cap", vflags.oracle_cap, "largest column count for the oracle")
        ->capture_default_str();

    ModulesFlags mflags;
    std::string subset;
    auto* modules = app.add_subcommand("modules", "report Q and k-module verdicts");
    modules->add_option("input", input, "polyhedron file")->required();
    modules->add_option("k", mflags.k, "module bound")->required();
    modules->add_option("--subset", subset, "comma-separated column names to test");
    modules->add_option("--max-size", mflags.max_subset_size, "largest subset size when sweeping")
        ->capture_default_str();
    modules->add_flag("--normalize", mflags.normalize, "append the row sum(x) = 1");
    modules->add_flag("--check", mflags.check, "compare against the definitional test");
    modules->add_flag("--json", mflags.json, "JSON output");

    DecomposeFlags dflags;
    std::string output;
    auto* decomp = app.add_subcommand("decompose", "write a branch decomposition of the variable columns");
    decomp->add_option("input", input, "polyhedron file")->required();
    decomp->add_option("--strategy", dflags.strategy, "auto, exhaustive, or greedy")
        ->check(CLI::IsMember({"auto", "exhaustive", "greedy"}))
        ->capture_default_str();
    decomp->add_flag("--normalize", dflags.normalize, "append the row sum(x) = 1");
    decomp->add_option("--max-exhaustive", dflags.max_exhaustive, "largest column count for exhaustive search")
        ->capture_default_str();
    decomp->add_option("-o,--output", output, "decomposition file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    if (*vertices) return cmd_vertices(input, vflags, std::cout, std::cerr);
    if (*modules) {
        if (!subset.empty()) mflags.subset = subset;
        return cmd_modules(input, mflags, std::cout, std::cerr);
    }
    if (!output.empty()) dflags.output = output;
    return cmd_decompose(input, dflags, std::cout, std::cerr);
}
