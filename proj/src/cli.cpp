#include "kmodenum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "kmodenum/branchdec.hpp"
#include "kmodenum/errors.hpp"
#include "kmodenum/matroid.hpp"
#include "kmodenum/oracle.hpp"

namespace kmodenum::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
    }
    try {
        return std::stoul(tok);
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + tok + "'", line);
    }
}

RationalVector parse_values(const std::vector<std::string>& toks, std::size_t first, std::size_t expected,
                            std::size_t line) {
    if (toks.size() - first != expected) {
        throw ParseError("expected " + std::to_string(expected) + " values, got " +
                             std::to_string(toks.size() - first),
                         line);
    }
    RationalVector out;
    out.reserve(expected);
    for (std::size_t i = first; i < toks.size(); ++i) {
        try {
            out.push_back(parse_rational(toks[i]));
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational number: '" + toks[i] + "'", line);
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::vector<std::string> vertex_strings(const RationalVector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

bool all_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

PolyhedronSpec load(const std::string& input, bool normalize) {
    PolyhedronSpec poly = read_hpoly_file(input);
    return normalize ? normalized(poly) : poly;
}

/// Positions of `subset` within the sorted set `within`, skipping members
/// that are not in `within`.
ColumnSet local_positions(const ColumnSet& subset, const ColumnSet& within) {
    std::vector<std::size_t> out;
    for (std::size_t i : subset) {
        auto it = std::lower_bound(within.begin(), within.end(), i);
        if (it != within.end() && *it == i) out.push_back(static_cast<std::size_t>(it - within.begin()));
    }
    return ColumnSet(std::move(out));
}

struct ChosenDecomposition {
    BranchDecomposition decomposition;
    std::string strategy;
};

ChosenDecomposition choose_decomposition(const LinearMatroid& matroid, const std::string& how,
                                         std::size_t max_exhaustive) {
    const std::size_t n = matroid.ground_size();
    if (how == "auto") {
        if (n <= max_exhaustive) return {decompose(matroid, DecompositionStrategy::Exhaustive, max_exhaustive), "exhaustive"};
        return {decompose(matroid, DecompositionStrategy::Greedy), "greedy"};
    }
    if (how == "exhaustive") return {decompose(matroid, DecompositionStrategy::Exhaustive, max_exhaustive), how};
    if (how == "greedy") return {decompose(matroid, DecompositionStrategy::Greedy), how};
    std::ifstream file(how);
    if (!file) throw MalformedDecomposition("cannot open decomposition file '" + how + "'");
    return {read_decomposition(file, matroid.matrix().col_names()), "file"};
}

void print_fixed(std::ostream& out, const Reduction& red) {
    std::vector<std::string> parts;
    for (const auto& f : red.fixed) parts.push_back(f.name + "=" + to_string(f.value));
    out << "# fixed: " << (parts.empty() ? "none" : join(parts, " ")) << "\n";
}

Json fixed_json(const Reduction& red) {
    Json fixed = Json::object();
    for (const auto& f : red.fixed) fixed[f.name] = to_string(f.value);
    return fixed;
}

}  // namespace

PolyhedronSpec parse_hpoly(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string raw;
    for (std::size_t no = 1; std::getline(in, raw); ++no) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (split_ws(raw).empty()) continue;
        lines.emplace_back(no, raw);
    }
    std::size_t pos = 0;
    auto next = [&](const std::string& what) -> const std::pair<std::size_t, std::string>& {
        if (pos >= lines.size()) {
            throw ParseError("unexpected end of input, expected " + what, lines.empty() ? 1 : lines.back().first);
        }
        return lines[pos++];
    };

    const auto& [header_no, header] = next("header 'm n'");
    const auto dims = split_ws(header);
    if (dims.size() != 2) throw ParseError("header must be 'm n'", header_no);
    const std::size_t m = parse_count(dims[0], header_no);
    const std::size_t n = parse_count(dims[1], header_no);
    if (n == 0) throw ParseError("column count must be positive", header_no);

    std::vector<std::string> col_names;
    if (pos < lines.size() && lines[pos].second.find_first_not_of(" \t") != std::string::npos &&
        lines[pos].second[lines[pos].second.find_first_not_of(" \t")] == '#') {
        const auto& [no, text] = lines[pos++];
        auto toks = split_ws(text);
        if (toks.size() < 2 || toks[0] != "#" || toks[1] != "cols:") {
            if (!(toks.size() >= 1 && toks[0] == "#cols:")) throw ParseError("expected '# cols: <names>'", no);
            toks.erase(toks.begin());
        } else {
            toks.erase(toks.begin(), toks.begin() + 2);
        }
        if (toks.size() != n) {
            throw ParseError("expected " + std::to_string(n) + " column names, got " + std::to_string(toks.size()),
                             no);
        }
        col_names = toks;
        std::vector<std::string> sorted = col_names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParseError("duplicate column name", no);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) col_names.push_back("x" + std::to_string(i + 1));
    }

    std::vector<std::string> row_names;
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& [no, text] = next("matrix row " + std::to_string(r + 1));
        const auto toks = split_ws(text);
        if (toks.front().rfind("b:", 0) == 0) throw ParseError("'b:' line before all matrix rows were read", no);
        rows.push_back(parse_values(toks, 0, n, no));
        row_names.push_back("r" + std::to_string(r + 1));
    }

    const auto& [b_no, b_text] = next("'b:' line");
    auto toks = split_ws(b_text);
    if (toks.front() == "b:") {
        toks.erase(toks.begin());
    } else if (toks.front().rfind("b:", 0) == 0) {
        toks.front() = toks.front().substr(2);
    } else {
        throw ParseError("expected 'b:' followed by " + std::to_string(m) + " values", b_no);
    }
    RationalVector b = parse_values(toks, 0, m, b_no);
    if (pos != lines.size()) throw ParseError("trailing content after the 'b:' line", lines[pos].first);

    return PolyhedronSpec(RationalMatrix::from_rows(rows, std::move(row_names), std::move(col_names)), std::move(b));
}

PolyhedronSpec read_hpoly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return parse_hpoly(in);
}

void write_hpoly(std::ostream& out, const PolyhedronSpec& poly) {
    const RationalMatrix& s = poly.matrix();
    out << s.rows() << " " << s.cols() << "\n# cols: " << join(s.col_names(), " ") << "\n";
    for (std::size_t r = 0; r < s.rows(); ++r) {
        out << join(vertex_strings(s.row(r)), " ") << "\n";
    }
    out << "b:";
    for (const auto& x : poly.rhs()) out << " " << to_string(x);
    out << "\n";
}

PolyhedronSpec normalized(const PolyhedronSpec& poly) {
    RationalMatrix s = poly.matrix();
    std::string name = "sum";
    while (std::find(s.row_names().begin(), s.row_names().end(), name) != s.row_names().end()) name += "_";
    s.append_row(name, RationalVector(s.cols(), Rational(1)));
    RationalVector b = poly.rhs();
    b.push_back(1);
    return PolyhedronSpec(std::move(s), std::move(b));
}

PipelineResult run_pipeline(const PolyhedronSpec& poly_in, const PipelineOptions& options) {
    const PolyhedronSpec poly = options.normalize ? normalized(poly_in) : poly_in;
    if (poly.is_empty()) throw EmptyPolyhedron();

    PipelineResult result{poly, reduce(poly)};
    result.bounded = poly.is_bounded();
    result.cone = !options.normalize && all_zero(poly.rhs());
    if (!result.bounded && !result.cone && !options.allow_unbounded) {
        const auto& ranges = poly.ranges();
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            if (!ranges[i].upper) throw UnboundedPolyhedron(poly.column_names()[i]);
        }
    }

    const PolyhedronSpec& reduced = result.reduction.reduced;
    const std::size_t q = reduced.num_columns();
    result.reduced_vertices = VertexSet(reduced.column_names());
    std::optional<ModTree> tree;
    if (q == 0) {
        result.strategy = "none";
    } else if (q == 1) {
        result.strategy = "single";
        tree = single_column_tree(reduced);
    } else {
        const LinearMatroid matroid(reduced.matrix());
        ChosenDecomposition chosen = choose_decomposition(matroid, options.decomp, options.max_exhaustive);
        result.strategy = chosen.strategy;
        tree = to_mod_family(reduced, chosen.decomposition);
    }
    if (tree) {
        result.width = tree->width();
        result.k = tree->k();
    }

    if (result.cone || q == 0) {
        // A pointed cone has the origin as its only vertex, and with Q empty
        // P is the single point given by the fixed values.
        result.reduced_vertices.insert(RationalVector(q));
    } else {
        result.reduced_vertices =
            enumerate_vertices(reduced, *tree, &result.trace, EnumerateOptions{options.allow_unbounded});
        result.bounds = check_enumeration_bounds(reduced, *tree, result.trace, result.reduced_vertices);
    }

    result.vertices = VertexSet(poly.column_names());
    for (const auto& v : result.reduced_vertices.points()) result.vertices.insert(result.reduction.lift(v));
    result.vertices.verify(poly);
    return result;
}

int cmd_vertices(const std::string& input, const VerticesFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<PipelineResult> run;
    try {
        run = run_pipeline(read_hpoly_file(input), flags);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const MalformedDecomposition& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const EmptyPolyhedron& e) {
        err << "error: " << e.what() << "\n";
        return kEmpty;
    } catch (const UnboundedPolyhedron& e) {
        err << "error: " << e.what() << "; pass --allow-unbounded to enumerate anyway, or --normalize for a cone\n";
        return kUnboundedRefused;
    }
    const PipelineResult& r = *run;
    if (r.cone) {
        err << "note: b = 0, so P is a cone whose only vertex is the origin; use --normalize to enumerate its "
               "extreme rays as vertices of the slice sum(x) = 1\n";
    } else if (!r.bounded) {
        err << "warning: P is unbounded; the listed points are vertices, but completeness is not guaranteed\n";
    }

    int code = kSuccess;
    if (flags.check) {
        try {
            const VertexSet expected = oracle::brute_force_vertices(r.input, flags.oracle_cap);
            if (!(expected == r.vertices)) {
                err << "check: MISMATCH (enumerated " << r.vertices.size() << ", oracle " << expected.size() << ")\n";
                for (const auto& v : expected.points()) {
                    if (!r.vertices.contains(v)) err << "  missing: " << join(vertex_strings(v), " ") << "\n";
                }
                for (const auto& v : r.vertices.points()) {
                    if (!expected.contains(v)) err << "  extra: " << join(vertex_strings(v), " ") << "\n";
                }
                code = kCheckMismatch;
            } else if (!r.bounds.ok()) {
                err << "check: counting bound violated at some node\n";
                code = kCheckMismatch;
            } else {
                err << "check: ok (" << expected.size() << " vertices match the brute-force oracle)\n";
            }
        } catch (const CapExceeded& e) {
            err << "check: cannot run oracle: " << e.what() << " (raise --oracle-cap)\n";
            code = kCheckMismatch;
        }
    }

    if (flags.json) {
        Json j;
        j["vertices"] = Json::array();
        for (const auto& v : r.vertices.points()) j["vertices"].push_back(vertex_strings(v));
        j["width"] = r.width;
        j["k"] = r.k;
        j["Q"] = r.reduction.reduced.column_names();
        j["fixed"] = fixed_json(r.reduction);
        out << j.dump(2) << "\n";
    } else {
        out << "# columns: " << join(r.input.column_names(), " ") << "\n";
        out << "# Q: " << join(r.reduction.reduced.column_names(), " ") << "\n";
        print_fixed(out, r.reduction);
        out << "# decomposition: " << r.strategy << ", width " << r.width << ", k " << r.k << "\n";
        for (const auto& v : r.vertices.points()) out << join(vertex_strings(v), " ") << "\n";
        out << "# " << r.vertices.size() << " vertices\n";
    }
    return code;
}

int cmd_modules(const std::string& input, const ModulesFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<PolyhedronSpec> loaded;
    try {
        loaded = load(input, flags.normalize);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    const PolyhedronSpec& poly = *loaded;
    if (poly.is_empty()) {
        err << "error: empty polyhedron\n";
        return kEmpty;
    }
    const Reduction red = reduce(poly);
    const std::size_t n = poly.num_columns();

    std::vector<ColumnSet> subsets;
    if (flags.subset) {
        std::vector<std::string> names;
        std::stringstream ss(*flags.subset);
        for (std::string name; std::getline(ss, name, ',');) {
            if (!name.empty()) names.push_back(name);
        }
        try {
            subsets.push_back(poly.matrix().columns_named(names));
        } catch (const std::out_of_range&) {
            err << "error: --subset names a column that does not exist\n";
            return kParseError;
        }
    } else {
        // All nonempty subsets up to the size cap, ordered by size and then
        // lexicographically by index.
        const std::size_t cap = std::min(flags.max_subset_size, n);
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
            if (pick.size() == size) {
                subsets.emplace_back(pick);
                return;
            }
            for (std::size_t c = from; c < n; ++c) {
                pick.push_back(c);
                self(self, c + 1, size);
                pick.pop_back();
            }
        };
        for (std::size_t size = 1; size <= cap; ++size) rec(rec, 0, size);
    }

    const RationalMatrix s_q = red.reduced.matrix();
    std::size_t mismatches = 0;
    Json rows = Json::array();
    std::ostringstream text;
    for (const ColumnSet& a : subsets) {
        const bool module = is_k_module(poly, a, flags.k);
        const std::size_t dim = interface_dim(poly, a);
        if (flags.check) {
            const bool literal = oracle::definitional_k_module_check(s_q, local_positions(a, red.kept), flags.k);
            if (literal != module || (dim <= flags.k) != module) ++mismatches;
        }
        const auto names = poly.matrix().names_of(a);
        rows.push_back({{"columns", names}, {"module", module}, {"interface_dim", dim}});
        text << "{" << join(names, ",") << "}: " << (module ? "yes" : "no") << " (interface dim " << dim << ")\n";
    }

    if (flags.json) {
        Json j;
        j["Q"] = red.reduced.column_names();
        j["fixed"] = fixed_json(red);
        j["k"] = flags.k;
        j["subsets"] = rows;
        out << j.dump(2) << "\n";
    } else {
        out << "# Q: " << join(red.reduced.column_names(), " ") << "\n";
        print_fixed(out, red);
        out << "# " << flags.k << "-module verdicts\n" << text.str();
    }
    if (flags.check) {
        if (mismatches) {
            err << "check: MISMATCH on " << mismatches << " subsets against the definitional test\n";
            return kCheckMismatch;
        }
        err << "check: ok (" << subsets.size() << " subsets agree with the definitional test)\n";
    }
    return kSuccess;
}

int cmd_decompose(const std::string& input, const DecomposeFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<PolyhedronSpec> loaded;
    try {
        loaded = load(input, flags.normalize);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    if (flags.strategy != "auto" && flags.strategy != "exhaustive" && flags.strategy != "greedy") {
        err << "error: unknown strategy '" << flags.strategy << "'\n";
        return kParseError;
    }
    const PolyhedronSpec& poly = *loaded;

    // Decompositions are over Q, the columns the vertices command will see;
    // an empty polyhedron has no Q, so the full matrix is used instead.
    RationalMatrix ground = poly.matrix();
    if (poly.is_empty()) {
        err << "note: the polyhedron is empty; decomposing the full column matroid\n";
    } else {
        ground = reduce(poly).reduced.matrix();
    }
    if (ground.cols() == 0) {
        err << "note: no variable columns, nothing to decompose\n";
        out << "# width: 1\n# k: 0\n";
        return kSuccess;
    }

    const LinearMatroid matroid(ground);
    std::optional<BranchDecomposition> d;
    std::string used = "single";
    try {
        if (ground.cols() == 1) {
            d.emplace(1, std::vector<BranchDecomposition::Edge>{}, std::vector<std::optional<std::size_t>>{0});
        } else {
            ChosenDecomposition chosen = choose_decomposition(matroid, flags.strategy, flags.max_exhaustive);
            d.emplace(std::move(chosen.decomposition));
            used = chosen.strategy;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    const std::size_t width = width_of(matroid, *d);
    if (flags.output) {
        std::ofstream file(*flags.output);
        if (!file) {
            err << "error: cannot write '" << *flags.output << "'\n";
            return kParseError;
        }
        write_decomposition(file, *d, matroid);
        out << "strategy " << used << ", width " << width << ", k " << width - 1 << "\n";
    } else {
        out << "# strategy: " << used << "\n";
        write_decomposition(out, *d, matroid);
    }
    return kSuccess;
}

}  // namespace kmodenum::cli
