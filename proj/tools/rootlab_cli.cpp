// Command-line front end: run a method on a benchmark problem, regenerate
// the error tables, estimate convergence orders, verify the weight-function
// conditions, and render basins of attraction.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootlab/analysis.hpp"
#include "rootlab/basins.hpp"
#include "rootlab/conditions.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/format.hpp"
#include "rootlab/precision.hpp"
#include "rootlab/problems.hpp"
#include "rootlab/schemes.hpp"

#ifndef ROOTLAB_GOLDEN_DIR
#define ROOTLAB_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace rootlab;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int env_digits() {  // 0 when ROOTLAB_DIGITS is unset
    const char* s = std::getenv("ROOTLAB_DIGITS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 10000000)
        throw std::invalid_argument("ROOTLAB_DIGITS must be a positive digit count, got '" +
                                    std::string(s) + "'");
    return static_cast<int>(v);
}

// --digits accepts "auto" (ROOTLAB_DIGITS if set, else the command's own
// default) or an explicit decimal digit count.
int resolve_digits(const std::string& flag, int fallback) {
    if (flag != "auto") {
        char* end = nullptr;
        long v = std::strtol(flag.c_str(), &end, 10);
        if (flag.empty() || *end != '\0' || v < 1 || v > 10000000)
            throw std::invalid_argument("--digits wants a positive digit count or 'auto', got '" +
                                        flag + "'");
        return static_cast<int>(v);
    }
    if (int e = env_digits()) return e;
    return fallback;
}

MethodId method_from(const std::string& label, double A, double alpha) {
    MethodId id(method_kind_from_label(label));
    id.neta_a = A;
    id.khattri_alpha = alpha;
    return id;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary keeps bytes identical across runs
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

const char* kMethodVocabulary =
    "methods: newton a3 dd2 KT0 NNN kh1 d2 d4 d6 KT NNNN d7 d9";

// ---------------------------------------------------------------- solve ----

struct SolveArgs {
    std::string method = "d2";
    std::string problem = "f1";
    int iters = 3;
    std::string digits = "auto";
    double A = 0.0;
    double alpha = 1.0;
    std::string csv;  // optional trace dump
};

int cmd_solve(const SolveArgs& args) {
    MethodId id = method_from(args.method, args.A, args.alpha);
    const Problem& prob = problem_by_name(args.problem);
    int digits = resolve_digits(args.digits, 300);
    PrecisionContext ctx(digits);

    Trace<Real> trace = run(id, target_of(prob), Real(prob.x0), args.iters, prob.root(),
                            prob.name);

    std::printf("method %s on %s: f(x) = %s\n", args.method.c_str(), prob.name.c_str(),
                prob.expression.c_str());
    std::printf("x0 = %s, %d digits, %d iterations requested\n\n", prob.x0.c_str(), digits,
                args.iters);
    std::printf(" n  %-34s %s\n", "x_n", "|x_n - x*|");
    for (size_t n = 0; n < trace.iterates.size(); ++n)
        std::printf("%2zu  %-34s %s\n", n, render_cell(trace.iterates[n], 25).c_str(),
                    render_cell(trace.errors[n]).c_str());
    std::printf("\n");

    if (trace.errors.size() >= 4) {
        try {
            CocEstimate est = coc_of_errors(trace.errors);
            std::printf("coc (last three errors) = %.4f\n", est.value.to_double());
        } catch (const std::invalid_argument&) {
            std::printf("coc undefined on this trace\n");
        }
    }
    std::printf("evaluations: f %ld, f' %ld\n", trace.f_evals, trace.fp_evals);

    if (!args.csv.empty()) {
        std::string text = "n,x,abs_error\n";
        for (size_t n = 0; n < trace.iterates.size(); ++n)
            text += std::to_string(n) + ',' + render_cell(trace.iterates[n], 25) + ',' +
                    render_cell(trace.errors[n]) + '\n';
        write_text_file(args.csv, text);
        std::printf("wrote %s\n", args.csv.c_str());
    }

    switch (trace.termination) {
        case Termination::completed: std::printf("termination: completed\n"); break;
        case Termination::early_exit:
            std::printf("termination: early exit at iteration %d (an f-value vanished; the "
                        "iterate is the root at working precision)\n",
                        trace.early_exit_iteration);
            break;
        case Termination::error:
            std::printf("termination: error at iteration %d: %s\n", trace.error_iteration,
                        trace.error_message.c_str());
            std::fprintf(stderr, "numerical failure: %s\n", trace.error_message.c_str());
            return kExitNumerical;
    }
    return kExitSuccess;
}

// ---------------------------------------------------------------- table ----

struct TableArgs {
    std::string id;        // table2..table7; empty = explicit lists
    std::string methods;   // comma-separated labels
    std::string problems;  // comma-separated problem names
    std::string x0;        // optional start override for explicit lists
    int iters = 3;
    std::string digits = "auto";
    std::string golden_dir = ROOTLAB_GOLDEN_DIR;
    std::string format = "md";
    std::string out;
    bool check_golden = false;
    double A = 0.0;
    double alpha = 1.0;
};

int cmd_table(TableArgs args) {
    // bare `table` demo: regenerate the first stored comparison table
    if (args.id.empty() && args.methods.empty() && args.problems.empty()) args.id = "table2";

    ErrorTable table;
    GoldenTable golden;
    bool have_golden = false;

    if (!args.id.empty()) {
        golden = load_golden_csv(args.golden_dir + "/" + args.id + ".csv");
        have_golden = true;
        // stored tables carry their published working precision
        int digits = resolve_digits(args.digits, golden.rows.front().digits);
        table = error_table(recipe_for(golden), args.iters, digits);
    } else {
        if (args.methods.empty() || args.problems.empty())
            throw std::invalid_argument("table wants --id, or both --methods and --problems");
        std::vector<RowSpec> rows;
        for (const std::string& p : args.problems.empty() ? std::vector<std::string>{}
                                                          : split_list(args.problems)) {
            problem_by_name(p);  // validate before queuing work
            for (const std::string& m : split_list(args.methods)) {
                RowSpec spec{method_from(m, args.A, args.alpha), p, std::nullopt};
                if (!args.x0.empty()) spec.x0 = args.x0;
                rows.push_back(spec);
            }
        }
        if (rows.empty()) throw std::invalid_argument("no table rows requested");
        table = error_table(rows, args.iters, resolve_digits(args.digits, 300));
    }

    std::string rendered = args.format == "csv" ? to_csv(table) : to_markdown(table);
    std::fputs(rendered.c_str(), stdout);
    if (!args.out.empty()) {
        write_text_file(args.out, rendered);
        std::printf("wrote %s\n", args.out.c_str());
    }

    if (args.check_golden) {
        if (!have_golden)
            throw std::invalid_argument("--check-golden wants --id to name the stored table");
        DiffReport diff = compare_to_golden(table, golden);
        for (const std::string& note : diff.notes) std::printf("note: %s\n", note.c_str());
        for (const std::string& m : diff.mismatches) std::printf("mismatch: %s\n", m.c_str());
        std::printf("golden check %s for %s: %d rows, %d cells checked, %d coc values checked\n",
                    diff.ok ? "passed" : "FAILED", golden.id.c_str(), diff.rows,
                    diff.cells_checked, diff.coc_checked);
        return diff.ok ? kExitSuccess : kExitCheckFailed;
    }
    return kExitSuccess;
}

// ------------------------------------------------------------------ coc ----

int cmd_coc(std::vector<std::string> values, const std::string& digits_flag) {
    if (values.empty()) {
        values = {"1e-20", "1e-320", "1e-5120"};  // demo: a textbook order-16 trace
        std::printf("no errors given; demo values %s %s %s\n", values[0].c_str(),
                    values[1].c_str(), values[2].c_str());
    }
    if (values.size() != 3)
        throw std::invalid_argument("coc wants exactly three consecutive error values");

    PrecisionContext ctx(resolve_digits(digits_flag, 300));
    Real e1(values[0]), e2(values[1]), e3(values[2]);
    try {
        Real value = coc(e1, e2, e3);
        std::printf("coc(%s, %s, %s) = %.4f\n", values[0].c_str(), values[1].c_str(),
                    values[2].c_str(), value.to_double());
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitSuccess;
}

// ----------------------------------------------------- check-conditions ----

struct ConditionArgs {
    std::string weights = "W1,W2,W3";
    std::string digits = "auto";
    std::string step = "1e-20";
    std::string tol = "1e-8";
};

WeightFamily family_from(const std::string& name) {
    if (name == "W1") return WeightFamily::W1;
    if (name == "W2") return WeightFamily::W2;
    if (name == "W3") return WeightFamily::W3;
    throw std::invalid_argument("unknown weight family '" + name + "' (want W1, W2 or W3)");
}

int cmd_check_conditions(const ConditionArgs& args) {
    std::vector<std::string> names = split_list(args.weights);
    if (names.empty()) throw std::invalid_argument("--weights wants at least one family");

    int digits = resolve_digits(args.digits, 100);
    int failures = 0;
    for (const std::string& name : names) {
        WeightFamily fam = family_from(name);
        PrecisionContext ctx(digits);
        ConditionReport report =
            check_weight_conditions(make_weights<Real>(fam), Real(args.step), Real(args.tol));

        std::printf("[%s] %zu conditions, finite differences: step %s, tolerance %s, %d digits\n",
                    name.c_str(), report.checks.size(), args.step.c_str(), args.tol.c_str(),
                    digits);
        for (const ConditionCheck& check : report.checks) {
            std::printf("  %-12s required %-5ld measured %-18.10g |err| %-9.2e %s\n",
                        check.condition.label().c_str(), check.condition.expected,
                        check.measured.to_double(), check.error.to_double(),
                        check.pass ? "pass" : "FAIL");
            if (!check.pass) ++failures;
        }
        std::printf("[%s] %s\n", name.c_str(),
                    report.all_pass ? "all conditions pass" : "CONDITIONS FAILED");
    }
    if (failures > 0) {
        std::printf("%d condition(s) failed\n", failures);
        return kExitCheckFailed;
    }
    std::printf("all requested families pass\n");
    return kExitSuccess;
}

// --------------------------------------------------------------- basins ----

struct BasinArgs {
    std::string method = "d4";
    std::string problem = "p1";
    std::string resolution = "256x256";
    double xmin = -3.0, xmax = 3.0, ymin = -3.0, ymax = 3.0;
    int max_iters = 100;
    double tol = 1e-3;
    std::string digits = "machine";
    std::string out;  // output path prefix
    bool shade = false;
    double A = 0.0;
    double alpha = 1.0;
};

int cmd_basins(const BasinArgs& args) {
    BasinConfig cfg;
    cfg.problem = polynomial_by_name(args.problem);
    cfg.method = method_from(args.method, args.A, args.alpha);
    unsigned w = 0, h = 0;
    if (std::sscanf(args.resolution.c_str(), "%ux%u", &w, &h) != 2 || w < 1 || h < 1)
        throw std::invalid_argument("--resolution wants WIDTHxHEIGHT, got '" + args.resolution +
                                    "'");
    cfg.width = static_cast<int>(w);
    cfg.height = static_cast<int>(h);
    cfg.x_min = args.xmin;
    cfg.x_max = args.xmax;
    cfg.y_min = args.ymin;
    cfg.y_max = args.ymax;
    cfg.max_iterations = args.max_iters;
    cfg.tolerance = args.tol;

    BasinImage image = args.digits == "machine"
                           ? render_basin(cfg)
                           : render_basin_hp(cfg, resolve_digits(args.digits, 50));

    std::string prefix =
        args.out.empty() ? "basin_" + args.method + "_" + args.problem : args.out;
    write_ppm(image, prefix + ".ppm", args.shade);
    write_basin_csv(image, prefix + ".csv");
    write_basin_sidecar(image, prefix + ".txt");

    std::map<int, long> counts;
    for (int a : image.assignment) counts[a]++;
    auto roots = cfg.problem.roots_double();
    double total = static_cast<double>(image.assignment.size());
    for (size_t j = 0; j < roots.size(); ++j) {
        long n = counts.count(static_cast<int>(j)) ? counts[static_cast<int>(j)] : 0;
        std::printf("root %zu at (%g, %g): %.2f%% (%ld pixels)\n", j, roots[j].re, roots[j].im,
                    100.0 * n / total, n);
    }
    long none = counts.count(kNoRoot) ? counts[kNoRoot] : 0;
    std::printf("unconverged: %.2f%% (%ld pixels)\n", 100.0 * none / total, none);
    std::printf("wrote %s.ppm, %s.csv, %s.txt\n", prefix.c_str(), prefix.c_str(),
                prefix.c_str());
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root-finding laboratory: optimal multipoint methods, error tables, "
                 "convergence orders, weight-function conditions, basins of attraction"};
    app.require_subcommand(0, 1);
    app.footer(std::string(kMethodVocabulary) +
               "\nproblems: f1..f6 table5 table6 table7 (real), p1 p2 p3 (complex)\n"
               "environment: ROOTLAB_DIGITS overrides every 'auto' precision default");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Run one method on one problem and print the iterates and errors");
    solve->add_option("--method", solve_args.method, "method label")->capture_default_str();
    solve->add_option("--problem", solve_args.problem, "problem name (f1..f6, table5..table7)")
        ->capture_default_str();
    solve->add_option("--iters", solve_args.iters, "iterations to run")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    solve->add_option("--digits", solve_args.digits,
                      "working precision in decimal digits; auto = ROOTLAB_DIGITS or 300 "
                      "(7000 reproduces the published tables)")
        ->capture_default_str();
    solve->add_option("--A", solve_args.A, "NNN/NNNN family parameter")->capture_default_str();
    solve->add_option("--alpha", solve_args.alpha, "kh1 step parameter")->capture_default_str();
    solve->add_option("--csv", solve_args.csv, "also write the trace to this CSV file");
    solve->footer("example: rootlab solve --method d2 --problem f1 --digits 7000 --iters 3");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand(
        "table", "Regenerate an error table (a stored one by id, or methods x problems)");
    CLI::Option* table_id =
        table->add_option("--id", table_args.id, "stored table id (table2..table7); bare "
                                                 "`table` runs table2");
    table->add_option("--methods", table_args.methods, "comma-separated method labels")
        ->excludes(table_id);
    table->add_option("--problems", table_args.problems, "comma-separated problem names")
        ->excludes(table_id);
    table->add_option("--x0", table_args.x0, "starting-point override for explicit lists");
    table->add_option("--iters", table_args.iters, "iterations per row")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    table->add_option("--digits", table_args.digits,
                      "working precision; auto = ROOTLAB_DIGITS, else the stored table's "
                      "published precision with --id, else 300")
        ->capture_default_str();
    table->add_option("--golden-dir", table_args.golden_dir, "directory of stored tables")
        ->capture_default_str();
    table->add_option("--format", table_args.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"md", "csv"}));
    table->add_option("--out", table_args.out, "also write the table to this file");
    table->add_flag("--check-golden", table_args.check_golden,
                    "compare against the stored table; exit 1 on mismatch");
    table->add_option("--A", table_args.A, "NNN/NNNN family parameter for explicit lists")
        ->capture_default_str();
    table->add_option("--alpha", table_args.alpha, "kh1 step parameter for explicit lists")
        ->capture_default_str();
    table->footer("example: rootlab table --id table7 --check-golden");

    std::vector<std::string> coc_values;
    std::string coc_digits = "auto";
    CLI::App* coc_cmd = app.add_subcommand(
        "coc", "Computational order of convergence from three consecutive errors");
    coc_cmd->add_option("errors", coc_values,
                        "three error values e1 e2 e3 (demo values when omitted)");
    coc_cmd->add_option("--digits", coc_digits,
                        "working precision in decimal digits; auto = ROOTLAB_DIGITS or 300")
        ->capture_default_str();
    coc_cmd->footer("example: rootlab coc 1e-20 1e-320 1e-5120");

    ConditionArgs cond_args;
    CLI::App* cond = app.add_subcommand(
        "check-conditions", "Verify the sixteenth-order weight-function conditions numerically");
    cond->add_option("--weights", cond_args.weights, "comma-separated families to check")
        ->capture_default_str();
    cond->add_option("--digits", cond_args.digits,
                     "working precision in decimal digits; auto = ROOTLAB_DIGITS or 100")
        ->capture_default_str();
    cond->add_option("--step", cond_args.step, "finite-difference step")->capture_default_str();
    cond->add_option("--tol", cond_args.tol, "absolute pass tolerance")->capture_default_str();
    cond->footer("example: rootlab check-conditions --weights W1");

    BasinArgs basin_args;
    CLI::App* basins = app.add_subcommand(
        "basins", "Render a basins-of-attraction image (PPM + CSV + sidecar)");
    basins->add_option("--method", basin_args.method, "method label")->capture_default_str();
    basins->add_option("--problem", basin_args.problem, "polynomial name (p1, p2, p3)")
        ->capture_default_str();
    basins->add_option("--resolution", basin_args.resolution, "grid size as WIDTHxHEIGHT")
        ->capture_default_str();
    basins->add_option("--xmin", basin_args.xmin, "left edge")->capture_default_str();
    basins->add_option("--xmax", basin_args.xmax, "right edge")->capture_default_str();
    basins->add_option("--ymin", basin_args.ymin, "bottom edge")->capture_default_str();
    basins->add_option("--ymax", basin_args.ymax, "top edge")->capture_default_str();
    basins->add_option("--max-iters", basin_args.max_iters, "iteration budget per pixel")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    basins->add_option("--tol", basin_args.tol, "convergence tolerance")->capture_default_str();
    basins->add_option("--digits", basin_args.digits,
                       "machine = double precision; a digit count switches to the "
                       "arbitrary-precision path (ROOTLAB_DIGITS does not apply)")
        ->capture_default_str();
    basins->add_option("--out", basin_args.out,
                       "output path prefix (default basin_<method>_<problem>)");
    basins->add_flag("--shade", basin_args.shade, "darken colors by iteration count");
    basins->add_option("--A", basin_args.A, "NNN/NNNN family parameter")->capture_default_str();
    basins->add_option("--alpha", basin_args.alpha, "kh1 step parameter")
        ->capture_default_str();
    basins->footer("example: rootlab basins --method d4 --problem p1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (table->parsed()) return cmd_table(table_args);
        if (coc_cmd->parsed()) return cmd_coc(coc_values, coc_digits);
        if (cond->parsed()) return cmd_check_conditions(cond_args);
        if (basins->parsed()) return cmd_basins(basin_args);
        std::cout << app.help();
        return kExitSuccess;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
