#ifndef KMODENUM_CLI_HPP
#define KMODENUM_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmodenum/faceenum.hpp"
#include "kmodenum/kmodule.hpp"
#include "kmodenum/polyhedron.hpp"

namespace kmodenum::cli {

enum ExitCode : int {
    kSuccess = 0,
    kEmpty = 1,
    kParseError = 2,
    kCheckMismatch = 3,
    kUnboundedRefused = 4,
};

/**
 * Text format:
 *
 *     m n
 *     # cols: name1 ... nameN        (optional; default x1..xn)
 *     <m lines of n rationals>
 *     b: <m rationals>
 *
 * Blank lines are ignored. Anything else malformed is a ParseError.
 */
PolyhedronSpec parse_hpoly(std::istream& in);
PolyhedronSpec read_hpoly_file(const std::string& path);
void write_hpoly(std::ostream& out, const PolyhedronSpec& poly);

/// Appends the row sum_i x_i = 1.
PolyhedronSpec normalized(const PolyhedronSpec& poly);

struct PipelineOptions {
    bool normalize = false;
    std::string decomp = "auto";  // auto | exhaustive | greedy | <path>
    bool allow_unbounded = false;
    std::size_t max_exhaustive = 8;
};

struct PipelineResult {
    PolyhedronSpec input;  // after optional normalization
    Reduction reduction;
    std::size_t width = 1;
    std::size_t k = 0;
    bool bounded = true;
    bool cone = false;  // b = 0 without normalization: origin reported directly
    std::string strategy{};
    EnumerationTrace trace{};
    VertexSet reduced_vertices{};
    VertexSet vertices{};  // in the input's coordinates
    BoundReport bounds{};
};

/// normalize -> feasibility -> reduce -> decompose -> enumerate -> lift.
/// Library exceptions propagate unchanged; the cmd_* functions map them to
/// exit codes.
PipelineResult run_pipeline(const PolyhedronSpec& poly, const PipelineOptions& options);

struct VerticesFlags : PipelineOptions {
    bool check = false;
    bool json = false;
    std::size_t oracle_cap = 16;
};

struct ModulesFlags {
    std::size_t k = 0;
    std::optional<std::string> subset;  // comma-separated column names
    std::size_t max_subset_size = 3;
    bool normalize = false;
    bool check = false;
    bool json = false;
};

struct DecomposeFlags {
    std::string strategy = "auto";  // auto | exhaustive | greedy
    bool normalize = false;
    std::size_t max_exhaustive = 8;
    std::optional<std::string> output;  // decomposition file; stdout when absent
};

int cmd_vertices(const std::string& input, const VerticesFlags& flags, std::ostream& out, std::ostream& err);
int cmd_modules(const std::string& input, const ModulesFlags& flags, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& input, const DecomposeFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace kmodenum::cli

#endif  // KMODENUM_CLI_HPP
