#pragma once

// Command-line front end.  run() takes the arguments after the program name
// and writes to the given streams, so the commands can be exercised in-process.
//
// Exit codes: 0 success (for solve: at least one answer set), 1 no answer
// set, 2 usage, input or evaluation error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "expression.hpp"
#include "oracle.hpp"
#include "program.hpp"
#include "solver.hpp"
#include "table.hpp"

namespace fuzzyasp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_no_answer_set = 1;
inline constexpr int exit_error = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string measure_text(const FuzzyTruth& x) {
    const Measure m = measure(x);
    return "(t=" + format_number(m.t) + ", k=" + format_number(m.k) + ")";
}

inline nlohmann::ordered_json value_json(const FuzzyTruth& x) {
    const Measure m = measure(x);
    return {{"a", x.a()}, {"b", x.b()},         {"c", x.c()}, {"d", x.d()},
            {"truncated", x.truncated()}, {"t", m.t}, {"k", m.k}};
}

inline nlohmann::ordered_json interpretation_json(const GroundProgram& p, const Interpretation& i) {
    auto lits = nlohmann::ordered_json::array();
    for (LiteralId id = 0; id < p.literal_count(); ++id)
        lits.push_back({{"literal", p.name(id)}, {"value", value_json(i[id])}});
    return lits;
}

inline void print_interpretation(std::ostream& out, const GroundProgram& p, const Interpretation& i,
                                 const std::string& indent) {
    for (LiteralId id = 0; id < p.literal_count(); ++id)
        out << indent << p.name(id) << " : " << render_quadruple(i[id]) << " " << measure_text(i[id]) << "\n";
}

inline int solve_command(const std::string& file, bool json, bool trace, const SolverOptions& base,
                         std::ostream& out) {
    SolverOptions opts = base;
    opts.trace = trace;
    const SolveReport report = solve(parse(read_file(file)), opts);
    const GroundProgram& p = report.program;

    if (json) {
        nlohmann::ordered_json doc;
        doc["answer_sets"] = nlohmann::ordered_json::array();
        for (const auto& as : report.answer_sets) doc["answer_sets"].push_back(interpretation_json(p, as));
        doc["candidates"] = nlohmann::ordered_json::array();
        for (const auto& c : report.candidates) {
            nlohmann::ordered_json cj;
            cj["origin"] = c.origin;
            cj["status"] = to_string(c.diagnosis.status);
            cj["detail"] = c.diagnosis.detail;
            cj["iterations"] = c.iterations;
            cj["literal"] = c.diagnosis.literal ? nlohmann::ordered_json(p.name(*c.diagnosis.literal)) : nullptr;
            cj["rule"] = c.diagnosis.rule ? nlohmann::ordered_json(*c.diagnosis.rule) : nullptr;
            if (c.interpretation) cj["interpretation"] = interpretation_json(p, *c.interpretation);
            doc["candidates"].push_back(std::move(cj));
        }
        doc["iterations"] = report.iterations;
        doc["search_complete"] = report.search_complete;
        if (trace) {
            doc["trace"] = nlohmann::ordered_json::array();
            for (const auto& step : report.trace) doc["trace"].push_back(interpretation_json(p, step));
        }
        out << doc.dump(2) << "\n";
    } else {
        if (trace) {
            for (std::size_t n = 0; n < report.trace.size(); ++n) {
                out << "% pass " << n << "\n";
                print_interpretation(out, p, report.trace[n], "%   ");
            }
        }
        for (std::size_t n = 0; n < report.answer_sets.size(); ++n) {
            out << "Answer set " << n + 1 << "\n";
            print_interpretation(out, p, report.answer_sets[n], "  ");
        }
        for (const auto& c : report.candidates)
            if (!c.diagnosis.ok())
                out << "% rejected " << c.origin << ": " << to_string(c.diagnosis.status) << " - "
                    << c.diagnosis.detail << "\n";
        if (report.answer_sets.empty()) out << "No answer set\n";
        if (!report.search_complete) out << "% warning: naf-value search stopped at its cap\n";
        out << "% answer sets: " << report.answer_sets.size() << ", candidates: " << report.candidates.size()
            << ", passes: " << report.iterations << "\n";
    }
    return report.answer_sets.empty() ? exit_no_answer_set : exit_ok;
}

inline const char* truth_symbol(Relation r) { return r == Relation::equal ? "=_t" : "≤_t"; }
inline const char* knowledge_symbol(Relation r) { return r == Relation::equal ? "=_k" : "≤_k"; }

inline void order_command(const FuzzyTruth& x, const FuzzyTruth& y, double tol, std::ostream& out) {
    const Measure mx = measure(x), my = measure(y);
    out << "x = " << render(x) << "  t = " << format_number(mx.t) << "  k = " << format_number(mx.k) << "\n";
    out << "y = " << render(y) << "  t = " << format_number(my.t) << "  k = " << format_number(my.k) << "\n";
    const Ordering o = compare(x, y, tol);
    out << "truth:     "
        << (o.truth == Relation::greater ? std::string("y ") + truth_symbol(o.truth) + " x"
                                         : std::string("x ") + truth_symbol(o.truth) + " y")
        << "\n";
    out << "knowledge: "
        << (o.knowledge == Relation::greater ? std::string("y ") + knowledge_symbol(o.knowledge) + " x"
                                             : std::string("x ") + knowledge_symbol(o.knowledge) + " y")
        << "\n";
}

inline int parse_step(const std::string& step) {
    std::string den = step;
    if (const auto slash = step.find('/'); slash != std::string::npos) {
        if (step.substr(0, slash) != "1") throw Error("step must be written 1/n, got '" + step + "'");
        den = step.substr(slash + 1);
    } else if (step != "1") {
        throw Error("step must be written 1/n, got '" + step + "'");
    }
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(den, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != den.size() || n < 1) throw Error("step must be written 1/n with n >= 1, got '" + step + "'");
    return n;
}

inline void table_command(int n, std::ostream& out) {
    const auto rows = lattice_table(n);
    const std::string step = Rational::reduced(1, n).str();
    out << "# restricted values over the lattice with step " << step << ": " << rows.size() << "\n";
    out << std::left << std::setw(6) << "class" << std::setw(28) << "params" << std::setw(22) << "t"
        << std::setw(22) << "k" << std::setw(10) << "t exact" << std::setw(10) << "k exact"
        << "reference\n";
    std::size_t referenced = 0, mismatched = 0;
    for (const auto& row : rows) {
        out << std::left << std::setw(6) << to_string(row.shape) << std::setw(28) << lattice_params(row, n)
            << std::setw(22) << format_number(row.t) << std::setw(22) << format_number(row.k) << std::setw(10)
            << row.exact_t.str() << std::setw(10) << row.exact_k.str();
        if (row.reference) {
            ++referenced;
            out << row.reference->label;
            if (row.mismatch) {
                ++mismatched;
                out << " MISMATCH reference (" << row.reference->t.str() << ", " << row.reference->k.str()
                    << ") computed (" << row.exact_t.str() << ", " << row.exact_k.str() << ")";
            } else {
                out << " ok";
            }
        }
        out << "\n";
    }
    if (n == 3) {
        out << "# reference rows found: " << referenced << "/" << reference_rows_thirds().size()
            << ", mismatches: " << mismatched << "\n";
    }
}

} // namespace detail

inline int run(const std::vector<std::string>& arguments, std::ostream& out, std::ostream& err) {
    CLI::App app{"Answer set programming with interval, triangular and trapezoidal fuzzy truth values",
                 "fuzzyasp"};
    app.require_subcommand(1);

    SolverOptions solver_opts;
    double tol = default_tolerance;
    std::uint64_t seed = oracle::default_seed;

    std::string file;
    bool json = false, trace = false;
    auto* solve_cmd = app.add_subcommand("solve", "Compute and verify the answer sets of a program");
    solve_cmd->add_option("file", file, "Program file")->required();
    solve_cmd->add_flag("--json", json, "Emit a JSON document");
    solve_cmd->add_flag("--trace", trace, "Show every pass of the fixpoint iteration");
    solve_cmd->add_option("--tol", solver_opts.tolerance, "Comparison tolerance");
    solve_cmd->add_option("--max-iter", solver_opts.max_iterations, "Iteration cap per fixpoint");

    auto* parse_cmd = app.add_subcommand("parse-only", "Parse and ground a program, print the ground rules");
    parse_cmd->add_option("file", file, "Program file")->required();

    std::vector<std::string> expression;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a connective expression (! not & | agg)");
    eval_cmd->add_option("expression", expression, "Expression")->required();
    eval_cmd->add_option("--tol", tol, "Comparison tolerance");

    std::string lhs, rhs;
    auto* order_cmd = app.add_subcommand("order", "Compare two values in the truth and knowledge orders");
    order_cmd->add_option("x", lhs, "First value")->required();
    order_cmd->add_option("y", rhs, "Second value")->required();
    order_cmd->add_option("--tol", tol, "Comparison tolerance");

    std::vector<std::string> literals;
    auto* measure_cmd = app.add_subcommand("measure", "Print the (t, k) pair of each value");
    measure_cmd->add_option("values", literals, "Fuzzy literals")->required();

    std::string step = "1/3";
    auto* table_cmd = app.add_subcommand("table", "Tabulate (t, k) over a lattice of restricted values");
    table_cmd->add_option("--step", step, "Lattice step 1/n");

    auto* oracle_cmd = app.add_subcommand("oracle", "Numerical cross-checks");
    oracle_cmd->require_subcommand(1);
    auto* mean_cmd = oracle_cmd->add_subcommand("mean", "Quadrature mean of a value's density");
    mean_cmd->add_option("value", lhs, "Fuzzy literal")->required();
    std::size_t samples = 1'000'000;
    auto* prob_cmd = oracle_cmd->add_subcommand("prob", "Monte Carlo estimate of Prob(p <= q)");
    prob_cmd->add_option("x", lhs, "Value of p")->required();
    prob_cmd->add_option("y", rhs, "Value of q")->required();
    prob_cmd->add_option("--samples", samples, "Sample count");
    prob_cmd->add_option("--seed", seed, "Random seed");
    std::size_t depth = 1;
    auto* closure_cmd = oracle_cmd->add_subcommand("closure", "Closure of values under the connectives");
    closure_cmd->add_option("values", literals, "Fuzzy literals")->required();
    closure_cmd->add_option("--depth", depth, "Operator depth (at most 4)");

    try {
        std::vector<std::string> reversed(arguments.rbegin(), arguments.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*solve_cmd) return detail::solve_command(file, json, trace, solver_opts, out);
        if (*parse_cmd) {
            out << render(ground(parse(detail::read_file(file))));
            return exit_ok;
        }
        if (*eval_cmd) {
            std::string text;
            for (const auto& part : expression) text += (text.empty() ? "" : " ") + part;
            const FuzzyTruth v = evaluate(text, tol);
            out << render(v) << " " << detail::measure_text(v) << (v.truncated() ? " truncated" : "") << "\n";
            return exit_ok;
        }
        if (*order_cmd) {
            detail::order_command(parse_fuzzy(lhs), parse_fuzzy(rhs), tol, out);
            return exit_ok;
        }
        if (*measure_cmd) {
            for (const auto& lit : literals) {
                const FuzzyTruth v = parse_fuzzy(lit);
                const Measure m = measure(v);
                out << render(v) << (v.truncated() ? " truncated" : "") << "  (t, k) = (" << format_number(m.t)
                    << ", " << format_number(m.k) << ")\n";
            }
            return exit_ok;
        }
        if (*table_cmd) {
            detail::table_command(detail::parse_step(step), out);
            return exit_ok;
        }
        if (*mean_cmd) {
            const FuzzyTruth v = parse_fuzzy(lhs);
            const double q = oracle::integrate_density_mean(v);
            const double t = truth_degree(v);
            out << "quadrature mean = " << format_number(q) << "\nclosed-form t   = " << format_number(t)
                << "\n|difference|    = " << format_number(std::abs(q - t)) << "\n";
            return exit_ok;
        }
        if (*prob_cmd) {
            const auto e = oracle::prob_leq(parse_fuzzy(lhs), parse_fuzzy(rhs), samples, seed);
            out << "Prob(p <= q) = " << format_number(e.probability) << " +/- " << format_number(e.standard_error)
                << " (samples " << e.samples << ", seed " << seed << ")\n";
            return exit_ok;
        }
        if (*closure_cmd) {
            std::vector<FuzzyTruth> seeds;
            for (const auto& lit : literals) seeds.push_back(parse_fuzzy(lit));
            const auto values = oracle::closure_enumerate(seeds, depth);
            for (const auto& v : values) out << render(v) << " " << detail::measure_text(v) << "\n";
            out << "% " << values.size() << " values\n";
            return exit_ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace fuzzyasp::cli
