#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <unistd.h>

#include "kmodenum/cli.hpp"
#include "kmodenum/errors.hpp"
#include "support/instances.hpp"

using namespace kmodenum;
using namespace kmodenum::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("kmodenum_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

const TempDir& tmp() {
    static TempDir dir;
    return dir;
}

std::string file_for(const PolyhedronSpec& p, const std::string& name) {
    std::ostringstream text;
    write_hpoly(text, p);
    return tmp().write(name, text.str());
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run vertices(const std::string& input, VerticesFlags flags = {}) {
    std::ostringstream out, err;
    const int code = cmd_vertices(input, flags, out, err);
    return {code, out.str(), err.str()};
}

std::set<std::string> text_vertices(const std::string& out) {
    std::set<std::string> lines;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') lines.insert(line);
    }
    return lines;
}

std::set<std::string> json_vertices(const std::string& out) {
    std::set<std::string> lines;
    const auto parsed = nlohmann::json::parse(out);
    for (const auto& v : parsed["vertices"]) {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : " ") + x.get<std::string>();
        lines.insert(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("parsing the polyhedron format") {
    std::istringstream plain("1 2\n1 1\nb: 1\n");
    const PolyhedronSpec p = parse_hpoly(plain);
    CHECK(p.column_names() == std::vector<std::string>{"x1", "x2"});
    CHECK(p.rhs() == kmodenum::testing::vec({1}));

    std::istringstream named("2 3\n# cols: a b c\n1 0 -1/2\n\n0 1 1\nb: 1/3 2\n");
    const PolyhedronSpec q = parse_hpoly(named);
    CHECK(q.column_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(q.matrix()(0, 2) == Rational(-1, 2));
    CHECK(q.rhs()[0] == Rational(1, 3));

    for (const char* bad : {"", "1\n1 1\nb: 1\n", "1 2\n1\nb: 1\n", "1 2\n1 x\nb: 1\n", "1 2\n1 1\n",
                            "1 2\n1 1\nb: 1 2\n", "1 2\n1 1\nb: 1\nextra\n", "1 2\n# cols: a\n1 1\nb: 1\n",
                            "1 2\n# cols: a a\n1 1\nb: 1\n", "1 2\n1 1/0\nb: 1\n", "1 0\nb: 1\n",
                            "1 2\n# note\n1 1\nb: 1\n", "2 2\n1 1\nb: 1\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_hpoly(in), ParseError);
    }
}

TEST_CASE("write and parse round trip") {
    const PolyhedronSpec p = kmodenum::testing::random_bounded_instance(12);
    std::stringstream text;
    write_hpoly(text, p);
    const PolyhedronSpec back = parse_hpoly(text);
    CHECK(back.matrix().col_names() == p.matrix().col_names());
    CHECK(back.rhs() == p.rhs());
    for (std::size_t r = 0; r < p.num_rows(); ++r) CHECK(back.matrix().row(r) == p.matrix().row(r));
}

TEST_CASE("vertices: simple edge, infeasible input, parse errors") {
    const Run edge = vertices(tmp().write("edge.txt", "1 2\n1 1\nb: 1\n"));
    CHECK(edge.code == kSuccess);
    CHECK(text_vertices(edge.out) == std::set<std::string>{"0 1", "1 0"});

    const Run empty = vertices(tmp().write("empty.txt", "1 1\n1\nb: -1\n"));
    CHECK(empty.code == kEmpty);
    CHECK(empty.err.find("empty polyhedron") != std::string::npos);

    CHECK(vertices(tmp().write("bad.txt", "1 2\n1 q\nb: 1\n")).code == kParseError);
    CHECK(vertices((tmp().path / "missing.txt").string()).code == kParseError);
}

TEST_CASE("vertices: the example network normalizes to three vertices and matches the oracle") {
    VerticesFlags flags;
    flags.normalize = true;
    flags.check = true;
    const Run run = vertices(file_for(PolyhedronSpec(kmodenum::testing::example_network_matrix(), RationalVector(6)), "net.txt"),
                             flags);
    CHECK(run.code == kSuccess);
    CHECK(text_vertices(run.out).size() == 3);
    CHECK(run.err.find("check: ok") != std::string::npos);
}

TEST_CASE("vertices: text and JSON agree; fixed columns are reported") {
    // x1 is pinned to 2; x2 + x3 + x4 = 1.
    const std::string input = tmp().write("pinned.txt", "2 4\n1 0 0 0\n0 1 1 1\nb: 2 1\n");
    const Run text = vertices(input);
    VerticesFlags json_flags;
    json_flags.json = true;
    const Run json = vertices(input, json_flags);
    REQUIRE(text.code == kSuccess);
    REQUIRE(json.code == kSuccess);
    CHECK(text_vertices(text.out) == json_vertices(json.out));
    CHECK(text_vertices(text.out) == std::set<std::string>{"2 1 0 0", "2 0 1 0", "2 0 0 1"});
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["fixed"]["x1"] == "2");
    CHECK(j["Q"] == nlohmann::json::array({"x2", "x3", "x4"}));
    CHECK(j["k"].get<int>() + 1 == j["width"].get<int>());
}

TEST_CASE("vertices: unbounded input is refused unless allowed") {
    const std::string input = tmp().write("ray.txt", "1 3\n1 -1 1\nb: 1\n");
    const Run refused = vertices(input);
    CHECK(refused.code == kUnboundedRefused);
    VerticesFlags allow;
    allow.allow_unbounded = true;
    allow.check = true;
    const Run allowed = vertices(input, allow);
    CHECK(allowed.code == kSuccess);
    CHECK(allowed.err.find("warning") != std::string::npos);
    CHECK(text_vertices(allowed.out) == std::set<std::string>{"1 0 0", "0 0 1"});
}

TEST_CASE("vertices: b = 0 reports the origin with a hint") {
    const Run run = vertices(file_for(PolyhedronSpec(kmodenum::testing::example_network_matrix(), RationalVector(6)), "cone.txt"));
    CHECK(run.code == kSuccess);
    CHECK(text_vertices(run.out) == std::set<std::string>{"0 0 0 0 0 0 0 0 0"});
    CHECK(run.err.find("--normalize") != std::string::npos);
}

TEST_CASE("vertices: an oracle cap that is too small fails the check") {
    VerticesFlags flags;
    flags.check = true;
    flags.oracle_cap = 1;
    CHECK(vertices(tmp().write("edge2.txt", "1 2\n1 1\nb: 1\n"), flags).code == kCheckMismatch);
}

TEST_CASE("decompose output drives vertices to the same result") {
    for (unsigned seed = 1; seed <= 8; ++seed) {
        const std::string input = file_for(kmodenum::testing::random_bounded_instance(seed), "rand.txt");
        const std::string tree = (tmp().path / "tree.txt").string();
        DecomposeFlags dflags;
        dflags.strategy = "greedy";
        dflags.output = tree;
        std::ostringstream out, err;
        REQUIRE(cmd_decompose(input, dflags, out, err) == kSuccess);

        const Run automatic = vertices(input);
        VerticesFlags from_file;
        from_file.decomp = tree;
        const Run replay = vertices(input, from_file);
        CHECK(replay.code == kSuccess);
        CHECK(text_vertices(replay.out) == text_vertices(automatic.out));
    }
    VerticesFlags broken;
    broken.decomp = tmp().write("broken_tree.txt", "merge m1 = nope x1\nroot = m1\n");
    CHECK(vertices(tmp().write("edge3.txt", "1 2\n1 1\nb: 1\n"), broken).code == kParseError);
}

TEST_CASE("decompose: widths on band and small inputs") {
    std::ostringstream out, err;
    DecomposeFlags greedy;
    greedy.strategy = "greedy";
    REQUIRE(cmd_decompose(file_for(kmodenum::testing::band_instance(12, 3), "band.txt"), greedy, out, err) == 0);
    const std::string text = out.str();
    const auto pos = text.find("# width: ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stoi(text.substr(pos + 9)) <= 3);

    std::ostringstream two, two_err;
    CHECK(cmd_decompose(tmp().write("two.txt", "1 2\n1 1\nb: 1\n"), DecomposeFlags{}, two, two_err) == 0);
    CHECK(two.str().find("root = ") != std::string::npos);

    DecomposeFlags exhaustive;
    exhaustive.strategy = "exhaustive";
    exhaustive.max_exhaustive = 3;
    std::ostringstream o, e;
    CHECK(cmd_decompose(file_for(kmodenum::testing::band_instance(6, 1), "band6.txt"), exhaustive, o, e) ==
          kParseError);
}

TEST_CASE("modules: block example, forced subsets, and the definitional cross-check") {
    const std::string blocks = tmp().write("blocks.txt", "2 4\n1 1 0 0\n0 0 1 1\nb: 1 1\n");
    ModulesFlags flags;
    flags.k = 0;
    flags.check = true;
    std::ostringstream out, err;
    CHECK(cmd_modules(blocks, flags, out, err) == kSuccess);
    CHECK(out.str().find("{x1,x2}: yes") != std::string::npos);
    CHECK(out.str().find("{x3,x4}: yes") != std::string::npos);
    CHECK(out.str().find("{x1,x3}: no") != std::string::npos);

    ModulesFlags subset;
    subset.k = 2;
    subset.subset = "x1,x3";
    std::ostringstream sout, serr;
    CHECK(cmd_modules(blocks, subset, sout, serr) == kSuccess);
    CHECK(sout.str().find("{x1,x3}: yes") != std::string::npos);

    subset.subset = "x9";
    std::ostringstream bout, berr;
    CHECK(cmd_modules(blocks, subset, bout, berr) == kParseError);

    ModulesFlags net;
    net.k = 1;
    net.normalize = true;
    net.check = true;
    net.max_subset_size = 4;
    std::ostringstream nout, nerr;
    CHECK(cmd_modules(file_for(PolyhedronSpec(kmodenum::testing::example_network_matrix(), RationalVector(6)), "net2.txt"), net,
                      nout, nerr) == kSuccess);
    CHECK(nerr.str().find("check: ok") != std::string::npos);
}
