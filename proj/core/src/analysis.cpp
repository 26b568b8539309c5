#include "rootlab/analysis.hpp"

#include <mpfr.h>

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "rootlab/format.hpp"
#include "rootlab/precision.hpp"
#include "rootlab/problems.hpp"

namespace rootlab {

namespace {

const char* kGoldenHeader = "method,problem,x0,param,digits,e1,e2,e3,coc,value_check,coc_rule";
const char* kFailureMarker = "---";

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string param_of(const MethodId& id) {
    switch (id.kind) {
        case MethodKind::neta8:
        case MethodKind::neta16: return "A=" + format_double(id.neta_a);
        case MethodKind::khattri: return "alpha=" + format_double(id.khattri_alpha);
        default: return "";
    }
}

TableRow make_row(const RowSpec& spec, const Problem& prob, int iterations, int digits) {
    PrecisionContext ctx(digits);
    TableRow row;
    row.method = method_label(spec.method.kind);
    row.problem = prob.name;
    row.x0 = spec.x0 ? *spec.x0 : prob.x0;
    row.param = param_of(spec.method);

    Trace<Real> trace =
        run(spec.method, target_of(prob), Real(row.x0), iterations, prob.root(), prob.name);

    for (int n = 1; n <= iterations; ++n) {
        if (trace.termination == Termination::error && n >= trace.error_iteration) {
            row.cells.push_back(kFailureMarker);
        } else if (static_cast<size_t>(n) < trace.errors.size()) {
            row.cells.push_back(render_cell(trace.errors[n]));
        } else {
            row.cells.push_back("0");  // stationary after an early exit
        }
    }

    if (trace.termination == Termination::error) {
        row.failed = true;
        row.note = trace.error_message;
        row.coc_cell = kFailureMarker;
        return row;
    }

    try {
        CocEstimate est = coc_of_errors(trace.errors);
        double v = est.value.to_double();
        row.coc_value = v;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        row.coc_cell = buf;
    } catch (const std::invalid_argument&) {
        row.coc_cell = kFailureMarker;
    }
    return row;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

Real coc(const Real& e1, const Real& e2, const Real& e3) {
    for (const Real* e : {&e1, &e2, &e3})
        if (!e->is_finite() || !(*e > Real(0)))
            throw std::invalid_argument("coc needs three positive errors");
    Real r_low = e2 / e1;
    Real r_high = e3 / e2;
    if (r_low == Real(1) || r_high == Real(1))
        throw std::invalid_argument("coc is undefined for equal consecutive errors");
    return log(r_high) / log(r_low);
}

CocEstimate coc_of_errors(const std::vector<Real>& errors) {
    if (errors.size() < 3) throw std::invalid_argument("coc needs at least three errors");
    size_t n = errors.size();
    CocEstimate est{coc(errors[n - 3], errors[n - 2], errors[n - 1]), {n - 3, n - 2, n - 1}};
    return est;
}

ErrorTable error_table(const std::vector<RowSpec>& rows, int iterations, int digits) {
    if (iterations < 1) throw std::invalid_argument("error_table needs at least one iteration");
    ErrorTable table;
    table.iterations = iterations;
    table.digits = digits;

    std::vector<const Problem*> probs;
    probs.reserve(rows.size());
    for (const RowSpec& spec : rows) probs.push_back(&problem_by_name(spec.problem));

    table.rows.resize(rows.size());
    if (mpfr_buildopt_tls_p() && rows.size() > 1) {
        std::vector<std::future<TableRow>> futures;
        futures.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            futures.push_back(std::async(std::launch::async, make_row, rows[i], std::cref(*probs[i]),
                                         iterations, digits));
        for (size_t i = 0; i < rows.size(); ++i) table.rows[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < rows.size(); ++i)
            table.rows[i] = make_row(rows[i], *probs[i], iterations, digits);
    }
    return table;
}

ErrorTable error_table(const std::vector<MethodId>& methods, const std::string& problem,
                       int iterations, int digits) {
    std::vector<RowSpec> rows;
    rows.reserve(methods.size());
    for (const MethodId& m : methods) rows.push_back({m, problem, std::nullopt});
    return error_table(rows, iterations, digits);
}

std::string to_markdown(const ErrorTable& table) {
    std::ostringstream out;
    out << "| method | problem | x0 | param |";
    for (int n = 1; n <= table.iterations; ++n) out << " |x" << n << "-x*| |";
    out << " coc |\n";
    out << "|---|---|---|---|";
    for (int n = 0; n < table.iterations; ++n) out << "---|";
    out << "---|\n";
    for (const TableRow& row : table.rows) {
        out << "| " << row.method << " | " << row.problem << " | " << row.x0 << " | "
            << (row.param.empty() ? "-" : row.param) << " |";
        for (const std::string& cell : row.cells) out << " " << cell << " |";
        out << " " << row.coc_cell << " |\n";
    }
    return out.str();
}

std::string to_csv(const ErrorTable& table) {
    std::ostringstream out;
    out << "method,problem,x0,param,digits";
    for (int n = 1; n <= table.iterations; ++n) out << ",e" << n;
    out << ",coc\n";
    for (const TableRow& row : table.rows) {
        out << row.method << ',' << row.problem << ',' << row.x0 << ',' << row.param << ','
            << table.digits;
        for (const std::string& cell : row.cells) out << ',' << cell;
        out << ',' << row.coc_cell << '\n';
    }
    return out.str();
}

GoldenTable load_golden_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table: " + path);

    GoldenTable golden;
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.rfind('.');
    golden.id = dot == std::string::npos ? base : base.substr(0, dot);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != kGoldenHeader)
                throw std::runtime_error(path + ":1: unexpected header: " + line);
            continue;
        }
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 11)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 11 fields, got " + std::to_string(f.size()));
        GoldenRow row;
        row.method = f[0];
        row.problem = f[1];
        row.x0 = f[2];
        row.param = f[3];
        try {
            row.digits = std::stoi(f[4]);
            row.coc = std::stod(f[8]);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number");
        }
        row.cells = {f[5], f[6], f[7]};
        row.value_check = f[9];
        row.coc_rule = f[10];
        if (row.value_check != "cells" && row.value_check != "none")
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad value_check: " + row.value_check);
        if (row.coc_rule != "pm0.05" && row.coc_rule != "pm0.5" && row.coc_rule != "min15.5")
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad coc_rule: " + row.coc_rule);
        golden.rows.push_back(std::move(row));
    }
    if (golden.rows.empty()) throw std::runtime_error(path + ": no rows");
    return golden;
}

MethodId method_for_row(const GoldenRow& row) {
    MethodId id(method_kind_from_label(row.method));
    if (row.param.empty()) return id;
    size_t eq = row.param.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("bad method parameter: " + row.param);
    std::string key = row.param.substr(0, eq);
    double value = std::stod(row.param.substr(eq + 1));
    if (key == "A" && (id.kind == MethodKind::neta8 || id.kind == MethodKind::neta16))
        id.neta_a = value;
    else if (key == "alpha" && id.kind == MethodKind::khattri)
        id.khattri_alpha = value;
    else
        throw std::invalid_argument("parameter " + key + " does not apply to " + row.method);
    return id;
}

std::vector<RowSpec> recipe_for(const GoldenTable& golden) {
    std::vector<RowSpec> rows;
    rows.reserve(golden.rows.size());
    for (const GoldenRow& r : golden.rows) rows.push_back({method_for_row(r), r.problem, r.x0});
    return rows;
}

bool cell_agrees(const std::string& golden_cell, const std::string& computed_cell) {
    Cell g, c;
    try {
        g = parse_cell(golden_cell);
        c = parse_cell(computed_cell);
    } catch (const std::invalid_argument&) {
        return golden_cell == computed_cell;
    }
    if (g.is_zero || c.is_zero) return g.is_zero == c.is_zero;
    if (g.negative != c.negative || g.exponent != c.exponent) return false;
    auto digit_string = [](const Cell& cell) {
        std::string s = std::to_string(cell.mantissa);
        while (static_cast<int>(s.size()) < cell.mantissa_digits) s.insert(s.begin(), '0');
        return s;
    };
    std::string gs = digit_string(g), cs = digit_string(c);
    size_t k = std::min<size_t>(2, std::min(gs.size(), cs.size()));
    return gs.compare(0, k, cs, 0, k) == 0;
}

DiffReport compare_to_golden(const ErrorTable& table, const GoldenTable& golden) {
    if (table.rows.size() != golden.rows.size())
        throw std::invalid_argument("table shape mismatch: " + std::to_string(table.rows.size()) +
                                    " rows vs " + std::to_string(golden.rows.size()));
    if (table.iterations != 3)
        throw std::invalid_argument("golden comparison expects three-iteration tables");

    DiffReport report;
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const TableRow& row = table.rows[i];
        const GoldenRow& ref = golden.rows[i];
        std::string tag = golden.id + " " + ref.method + "/" + ref.problem;
        if (row.method != ref.method || row.problem != ref.problem)
            throw std::invalid_argument("row " + std::to_string(i) + " misaligned: " + row.method +
                                        "/" + row.problem + " vs " + ref.method + "/" + ref.problem);
        ++report.rows;
        if (table.digits != ref.digits)
            report.notes.push_back(tag + ": computed at " + std::to_string(table.digits) +
                                   " digits, reference pins " + std::to_string(ref.digits));
        if (row.failed) {
            report.ok = false;
            report.mismatches.push_back(tag + ": run failed (" + row.note + ")");
            continue;
        }
        if (ref.value_check == "cells") {
            for (int n = 0; n < 3; ++n) {
                ++report.cells_checked;
                if (!cell_agrees(ref.cells[static_cast<size_t>(n)], row.cells[static_cast<size_t>(n)])) {
                    report.ok = false;
                    report.mismatches.push_back(
                        tag + " e" + std::to_string(n + 1) + ": reference " +
                        ref.cells[static_cast<size_t>(n)] + ", computed " +
                        row.cells[static_cast<size_t>(n)]);
                }
            }
        }
        ++report.coc_checked;
        if (!row.coc_value) {
            report.ok = false;
            report.mismatches.push_back(tag + ": coc undefined, expected " + format_double(ref.coc));
            continue;
        }
        double v = *row.coc_value;
        bool coc_ok = true;
        std::string rule_text;
        if (ref.coc_rule == "pm0.05") {
            coc_ok = v >= ref.coc - 0.05 && v <= ref.coc + 0.05;
            rule_text = "within 0.05 of " + format_double(ref.coc);
        } else if (ref.coc_rule == "pm0.5") {
            coc_ok = v >= ref.coc - 0.5 && v <= ref.coc + 0.5;
            rule_text = "within 0.5 of " + format_double(ref.coc);
        } else {  // min15.5
            coc_ok = v >= 15.5;
            rule_text = "at least 15.5";
        }
        if (!coc_ok) {
            report.ok = false;
            report.mismatches.push_back(tag + ": coc " + row.coc_cell + " not " + rule_text);
        }
    }
    return report;
}

}  // namespace rootlab
