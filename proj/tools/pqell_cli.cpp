// pqell: evaluate, tabulate and verify generalized complete elliptic integrals.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain, 4 non-convergence.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pqell/elliptic.hpp"
#include "pqell/gtrig.hpp"
#include "pqell/report.hpp"
#include "pqell/suites.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonConvergence = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

// Snaps start + i*step to 15 significant digits so 0:0.9:0.1 yields 0.3, not 0.30000000000000004.
double snap(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

Range parse_range(const std::string& text)
{
    Range r;
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("range must be start:stop:step, got '" + text + "'");
    try {
        std::size_t used = 0;
        auto num = [&](const std::string& s) {
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        };
        r.start = num(text.substr(0, a));
        r.stop = num(text.substr(a + 1, b - a - 1));
        r.step = num(text.substr(b + 1));
    } catch (const std::logic_error&) {
        throw UsageError("range must be start:stop:step, got '" + text + "'");
    }
    if (!(r.step > 0.0) || !(r.stop >= r.start)) throw UsageError("range needs step > 0 and stop >= start");
    return r;
}

std::vector<double> expand(const Range& r)
{
    std::vector<double> out;
    const double count = std::floor((r.stop - r.start) / r.step + 1e-9);
    if (count > 1e6) throw UsageError("range has too many points");
    for (long i = 0; i <= static_cast<long>(count); ++i) out.push_back(snap(r.start + static_cast<double>(i) * r.step));
    return out;
}

struct EvalSettings {
    std::string method = "auto";
    std::optional<double> tol;
    double lambda = 0.25;
    std::optional<double> x;
};

pqell::EllipticOptions elliptic_options(const EvalSettings& s)
{
    pqell::EllipticOptions opt;
    if (s.method == "quad")
        opt.backend = pqell::Backend::quadrature;
    else if (s.method == "series")
        opt.backend = pqell::Backend::series;
    else if (s.method == "lambda")
        opt.backend = pqell::Backend::lambda;
    else if (s.method == "agm")
        opt.backend = pqell::Backend::agm;
    opt.lambda = s.lambda;
    if (s.tol) {
        opt.quad.target_abs_tol = *s.tol;
        opt.quad.target_rel_tol = *s.tol;
        opt.series.tol = *s.tol;
    }
    return opt;
}

bool is_trig(const std::string& f)
{
    return f == "sin" || f == "cos" || f == "tan" || f == "arcsin" || f == "sn" || f == "arcsn" || f == "pi";
}

// Evaluates one row. The fourth positional is r for K/E and sn/arcsn (with
// --x as the argument), and the argument itself for sin/cos/tan/arcsin.
pqell::OutputRow evaluate_row(const std::string& fn, double p, double q, double arg, const EvalSettings& s)
{
    pqell::OutputRow row;
    row.function = fn;
    row.p = p;
    row.q = q;
    row.r = arg;
    row.method = s.method;
    auto exact = [](double v) { return pqell::EvalResult{v, pqell::Method::quadrature, 0.0}; };

    if (fn == "K" || fn == "E") {
        const pqell::PQParams pq(p, q);
        const auto opt = elliptic_options(s);
        try {
            row.result = fn == "K" ? pqell::K_pq(pq, arg, opt) : pqell::E_pq(pq, arg, opt);
        } catch (const pqell::DivergenceError&) {
            row.result.reset();
        }
        return row;
    }
    if (!is_trig(fn)) throw UsageError("unknown function '" + fn + "'");
    if (s.method != "auto" && s.method != "quad") throw UsageError("trigonometric functions support --method quad only");
    const pqell::PQParams pq(p, q);
    if (fn == "pi") {
        row.result = exact(pq.half_period());
        row.result->method = pqell::Method::closed_form;
        row.result->error_estimate = 1e-15 * pq.half_period();
    } else if (fn == "sin")
        row.result = exact(pqell::sin_pq(pq, arg));
    else if (fn == "cos")
        row.result = exact(pqell::cos_pq(pq, arg));
    else if (fn == "tan")
        row.result = exact(pqell::tan_pq(pq, arg));
    else if (fn == "arcsin")
        row.result = exact(pqell::arcsin_pq(pq, arg));
    else {
        if (!s.x) throw UsageError(fn + " needs --x");
        row.function = fn + "@x=" + pqell::format_number(*s.x);
        row.result = exact(fn == "sn" ? pqell::sn_pq(pq, *s.x, arg) : pqell::arcsn_pq(pq, *s.x, arg));
    }
    return row;
}

int run_eval(const std::string& fn, double p, double q, double r, const EvalSettings& s)
{
    const auto row = evaluate_row(fn, p, q, r, s);
    std::cout << pqell::kOutputHeader << "\n" << row.csv() << "\n";
    if (!row.result) {
        std::cerr << "pqell: " << fn << " diverges at p=" << p << " q=" << q << " r=" << r << "\n";
        return kExitNonConvergence;
    }
    return 0;
}

int run_table(const std::string& fn, double p, double q, const std::string& range, const EvalSettings& s)
{
    const auto values = expand(parse_range(range));
    std::string out = std::string(pqell::kOutputHeader) + "\n";
    for (double r : values) out += evaluate_row(fn, p, q, r, s).csv() + "\n";
    std::cout << out;
    return 0;
}

int run_verify(const std::string& suite, const std::string& gp, const std::string& gq, const std::string& gr, bool csv)
{
    bool known = false;
    for (auto name : pqell::suite_names()) known = known || name == suite;
    if (!known) throw UsageError("unknown suite '" + suite + "'");
    auto grid = pqell::GridSpec::defaults();
    if (!gp.empty()) grid.p_values = expand(parse_range(gp));
    if (!gq.empty()) grid.q_values = expand(parse_range(gq));
    if (!gr.empty()) grid.r_values = expand(parse_range(gr));
    try {
        grid.validate();
    } catch (const pqell::DomainError& e) {
        throw UsageError(e.what());
    }
    const auto reports = pqell::run_suite(suite, grid);
    std::cout << (csv ? pqell::render_csv(reports) : pqell::render_text(reports));
    return pqell::verify_exit_code(reports) == 0 ? 0 : kExitVerifyFail;
}

int run_figure()
{
    const pqell::PQParams a(1.5, 2.25);
    const pqell::PQParams b(2.0, 2.0);
    std::string out;
    out += "# pi_{1.5,2.25}/2 = " + pqell::format_number(0.5 * a.half_period()) + "\n";
    out += "# K and E at r = 0 equal pi_{p,q}/2 for each pair\n";
    out += "# E_{p,q}(1) = 1 for both pairs, not pi_{p,q}/2; K_{p,q}(r) diverges as r -> 1 for p <= 2\n";
    out += "r,K_1.5_2.25,E_1.5_2.25,K_2_2,E_2_2\n";
    for (int i = 0; i <= 999; ++i) {
        const double r = snap(i * 1e-3);
        out += pqell::format_number(r) + "," + pqell::format_number(pqell::K_pq(a, r).value) + "," +
               pqell::format_number(pqell::E_pq(a, r).value) + "," + pqell::format_number(pqell::K_pq(b, r).value) +
               "," + pqell::format_number(pqell::E_pq(b, r).value) + "\n";
    }
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pqell: generalized (p,q) complete elliptic integrals"};
    app.require_subcommand(1);

    EvalSettings settings;
    auto add_eval_flags = [&](CLI::App* cmd) {
        cmd->add_option("--method", settings.method, "backend: auto|quad|series|lambda|agm")
            ->check(CLI::IsMember({"auto", "quad", "series", "lambda", "agm"}));
        cmd->add_option("--tol", settings.tol, "quadrature and series tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--lambda", settings.lambda, "lambda for --method lambda");
        cmd->add_option("--x", settings.x, "argument for sn/arcsn (the positional is then r)");
    };

    std::string fn;
    double p = 0.0, q = 0.0, r = 0.0;
    auto* eval = app.add_subcommand("eval", "evaluate one value");
    eval->add_option("function", fn, "K|E|sin|cos|tan|arcsin|sn|arcsn|pi")->required();
    eval->add_option("p", p)->required();
    eval->add_option("q", q)->required();
    eval->add_option("r", r, "modulus r (argument x for sin/cos/tan/arcsin)")->required();
    add_eval_flags(eval);

    std::string range;
    auto* table = app.add_subcommand("table", "tabulate over a start:stop:step range");
    table->add_option("function", fn)->required();
    table->add_option("p", p)->required();
    table->add_option("q", q)->required();
    table->add_option("range", range, "start:stop:step")->required();
    add_eval_flags(table);

    std::string suite, grid_p, grid_q, grid_r;
    bool csv = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "derivatives|trig|turan|r-convexity|corollary|series|all")->required();
    verify->add_option("--grid-p", grid_p, "start:stop:step");
    verify->add_option("--grid-q", grid_q, "start:stop:step");
    verify->add_option("--grid-r", grid_r, "start:stop:step");
    verify->add_flag("--csv", csv, "CSV instead of text");

    app.add_subcommand("figure", "CSV of K, E for (1.5,2.25) and (2,2) over r in [0, 0.999]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(fn, p, q, r, settings);
        if (table->parsed()) return run_table(fn, p, q, range, settings);
        if (verify->parsed()) return run_verify(suite, grid_p, grid_q, grid_r, csv);
        return run_figure();
    } catch (const UsageError& e) {
        std::cerr << "pqell: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pqell::DomainError& e) {
        std::cerr << "pqell: domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const pqell::NonConvergenceError& e) {
        std::cerr << "pqell: no convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    }
}
