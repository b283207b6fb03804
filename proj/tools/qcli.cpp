// Command-line front end: single-value evaluation, table/CSV emission,
// identity-verification suites, and functional-equation solving from
// serialized quotient specs.
//
// Exit codes: 0 success, 1 validation/usage error, 2 verification failure,
// 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qeuler/qeuler.hpp"
#include "qeuler/spec_io.hpp"
#include "qeuler/verify.hpp"

namespace {

// fixed 17-significant-digit decimal formatting; output must be
// byte-identical across runs
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct EvalResult {
    double value;
    double rel_err;
};

struct Args {
    double q = 0.0;
    std::optional<double> x, y, z, tol;
    std::optional<int> m, n;
    qeuler::Precision prec;
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw qeuler::domain_error(std::string("missing required option ") + flag);
    return *v;
}

int need_int(const std::optional<int>& v, const char* flag) {
    if (!v) throw qeuler::domain_error(std::string("missing required option ") + flag);
    return *v;
}

EvalResult eval_fn(const std::string& fn, const Args& a) {
    const qeuler::QParam q(a.q);
    const qeuler::Precision& prec = a.prec;
    if (fn == "bracket") return {qeuler::q_bracket(need(a.x, "--x"), q), 2.3e-16};
    if (fn == "qpoch-inf") return {qeuler::qpoch_inf(need(a.x, "--x"), q, prec), prec.rel_tol};
    if (fn == "gamma") {
        const qeuler::GammaValue v = qeuler::gamma_q(need(a.x, "--x"), q, prec);
        return {v.value, v.achieved_rel_err};
    }
    if (fn == "log-gamma") {
        const qeuler::GammaValue v = qeuler::gamma_q(need(a.x, "--x"), q, prec);
        return {v.log_value, v.achieved_rel_err};
    }
    if (fn == "digamma") {
        const qeuler::DigammaValue v = qeuler::digamma_q(need(a.x, "--x"), q, prec);
        return {v.value, v.achieved_rel_err};
    }
    if (fn == "digamma-deriv") {
        const int n = need_int(a.n, "--n");
        if (n < 1) throw qeuler::domain_error("--n must be >= 1");
        const qeuler::DigammaValue v =
            qeuler::digamma_q_deriv(need(a.x, "--x"), static_cast<unsigned>(n), q, prec);
        return {v.value, v.achieved_rel_err};
    }
    if (fn == "digamma-plana") {
        const qeuler::DigammaValue v = qeuler::digamma_q_plana(need(a.x, "--x"), q, prec);
        return {v.value, v.achieved_rel_err};
    }
    if (fn == "beta")
        return {qeuler::beta_q(need(a.x, "--x"), need(a.y, "--y"), q, prec), prec.rel_tol};
    if (fn == "gfunc") return {qeuler::g_q_func(need(a.x, "--x"), q, prec), prec.rel_tol};
    if (fn == "sinq") return {qeuler::gosper_sin_q(need(a.z, "--z"), q, prec), prec.rel_tol};
    if (fn == "mq") return {qeuler::m_q_constant(q, prec), prec.rel_tol};
    if (fn == "mu") return {qeuler::mu_q(need(a.x, "--x"), q, prec).mu, prec.rel_tol};
    if (fn == "gdec") return {qeuler::g_q_decrement(need(a.x, "--x"), q, prec), prec.rel_tol};
    if (fn == "stirling")
        return {qeuler::log_gamma_q_asymptotic(need(a.x, "--x"), q, prec), prec.rel_tol};
    if (fn == "qfactorial") {
        const int n = need_int(a.n, "--n");
        if (n < 0) throw qeuler::domain_error("--n must be >= 0");
        return {qeuler::q_factorial(static_cast<unsigned>(n), q), 2.3e-16};
    }
    throw qeuler::domain_error("unknown --fn '" + fn + "'");
}

std::string args_json(const std::string& fn, const Args& a) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* k, const std::string& v) {
        if (!first) os << ",";
        first = false;
        os << "\"" << k << "\":" << v;
    };
    (void)fn;
    if (a.x) put("x", fmt(*a.x));
    if (a.y) put("y", fmt(*a.y));
    if (a.z) put("z", fmt(*a.z));
    if (a.m) put("m", std::to_string(*a.m));
    if (a.n) put("n", std::to_string(*a.n));
    return "{" + os.str() + "}";
}

void print_scalar(const std::string& fn, const Args& a, const EvalResult& r,
                  const std::string& format) {
    if (format == "plain") {
        std::cout << fmt(r.value) << "\n";
    } else if (format == "json") {
        std::cout << "{\"fn\":\"" << fn << "\",\"q\":" << fmt(a.q) << ",\"args\":"
                  << args_json(fn, a) << ",\"value\":" << fmt(r.value)
                  << ",\"rel_err\":" << fmt(r.rel_err) << "}\n";
    } else {  // csv
        std::cout << "fn,q,value,rel_err\n"
                  << fn << "," << fmt(a.q) << "," << fmt(r.value) << "," << fmt(r.rel_err)
                  << "\n";
    }
}

struct Grid {
    double start = 0.0, stop = 0.0;
    int count = 0;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    char colon1 = 0, colon2 = 0;
    std::istringstream is(text);
    if (!(is >> g.start >> colon1 >> g.stop >> colon2 >> g.count) || colon1 != ':' ||
        colon2 != ':' || !is.eof())
        throw qeuler::domain_error("--grid expects start:stop:count");
    if (g.count < 1 || g.count > 10000000)
        throw qeuler::domain_error("--grid count out of range");
    return g;
}

std::vector<double> grid_points(const Grid& g) {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(g.count));
    if (g.count == 1) {
        xs.push_back(g.start);
        return xs;
    }
    for (int i = 0; i < g.count; ++i)
        xs.push_back(g.start + (g.stop - g.start) * static_cast<double>(i) /
                                   static_cast<double>(g.count - 1));
    return xs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-gamma, q-digamma, q-beta and related Eulerian-function evaluations"};
    app.require_subcommand(1);

    std::string fn, format = "plain", grid_text, spec_path, suite, variant = "half-shift";
    Args args;
    bool exact = false;
    double q_value = 0.0;
    std::optional<double> x_opt, y_opt, z_opt, tol_opt, q_opt;
    std::optional<int> m_opt, n_opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", q_value, "base q > 0")->required();
        sub->add_option("--x", x_opt, "argument x");
        sub->add_option("--y", y_opt, "argument y");
        sub->add_option("--z", z_opt, "argument z");
        sub->add_option("--m", m_opt, "integer m");
        sub->add_option("--n", n_opt, "integer n");
        sub->add_option("--tol", tol_opt, "tolerance override");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate one function at one point");
    c_eval->add_option("--fn", fn, "function name")->required();
    add_common(c_eval);

    CLI::App* c_table = app.add_subcommand("table", "emit a value table over a grid");
    c_table->add_option("--fn", fn, "function name")->required();
    c_table->add_option("--grid", grid_text, "start:stop:count")->required();
    add_common(c_table);

    CLI::App* c_verify = app.add_subcommand("verify", "run a named invariant suite");
    c_verify->add_option("--suite", suite, "suite name or 'all'")->required();
    c_verify->add_option("--q", q_opt, "restrict the suite to one q");
    c_verify->add_option("--tol", tol_opt, "tolerance override");

    CLI::App* c_pi = app.add_subcommand("pi", "pi from the reflection identity");
    c_pi->add_flag("--exact", exact, "evaluate the full identity, not the leading term");
    add_common(c_pi);

    CLI::App* c_sin = app.add_subcommand("sin", "sin(pi x) approximation");
    c_sin->add_option("--variant", variant, "half-shift | pi-form")
        ->check(CLI::IsMember({"half-shift", "pi-form"}));
    add_common(c_sin);

    CLI::App* c_solve = app.add_subcommand("solve", "build and verify a functional-equation solution");
    c_solve->add_option("--spec", spec_path, "QuotientSpec JSON file")->required();
    c_solve->add_option("--fn", fn, "equation family: gamma | reciprocal")
        ->check(CLI::IsMember({"gamma", "reciprocal"}));
    c_solve->add_option("--grid", grid_text, "start:stop:count");
    add_common(c_solve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    args.q = q_value;
    args.x = x_opt;
    args.y = y_opt;
    args.z = z_opt;
    args.m = m_opt;
    args.n = n_opt;
    args.tol = tol_opt;
    if (tol_opt) {
        if (!(*tol_opt > 0.0 && *tol_opt < 1.0)) {
            std::cerr << "qcli: --tol must lie in (0,1)\n";
            return 1;
        }
        if (!c_verify->parsed() && !c_solve->parsed()) args.prec.rel_tol = *tol_opt;
    }

    try {
        if (c_eval->parsed()) {
            print_scalar(fn, args, eval_fn(fn, args), format);
            return 0;
        }

        if (c_table->parsed()) {
            const Grid g = parse_grid(grid_text);
            if (format == "csv") std::cout << "x,value,rel_err\n";
            std::string rows_json;
            for (double x : grid_points(g)) {
                Args a = args;
                a.x = x;
                if (fn == "sinq") a.z = x;
                const EvalResult r = eval_fn(fn, a);
                if (format == "csv")
                    std::cout << fmt(x) << "," << fmt(r.value) << "," << fmt(r.rel_err) << "\n";
                else if (format == "plain")
                    std::cout << fmt(x) << " " << fmt(r.value) << "\n";
                else
                    rows_json += (rows_json.empty() ? "" : ",") + std::string("{\"x\":") +
                                 fmt(x) + ",\"value\":" + fmt(r.value) +
                                 ",\"rel_err\":" + fmt(r.rel_err) + "}";
            }
            if (format == "json")
                std::cout << "{\"fn\":\"" << fn << "\",\"q\":" << fmt(args.q)
                          << ",\"rows\":[" << rows_json << "]}\n";
            return 0;
        }

        if (c_verify->parsed()) {
            std::vector<std::string> names;
            if (suite == "all")
                names = qeuler::verify::suite_names();
            else
                names.push_back(suite);
            bool all_passed = true;
            for (const std::string& name : names) {
                const qeuler::verify::SuiteResult r =
                    qeuler::verify::run_suite(name, q_opt, tol_opt);
                all_passed = all_passed && r.passed;
                std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL")
                          << " max_residual=" << fmt(r.max_residual) << " tol=" << fmt(r.tolerance)
                          << " checks=" << r.checks << "\n";
            }
            return all_passed ? 0 : 2;
        }

        if (c_pi->parsed()) {
            const qeuler::QParam q(args.q);
            const double v = qeuler::pi_approx(q, args.prec, exact);
            Args a = args;
            const EvalResult r{v, exact ? 1e-14 : std::exp(2.0 * M_PI * M_PI / std::log(
                                                               q.sub_unit() ? q.q() : 1.0 / q.q()))};
            print_scalar(exact ? "pi-exact" : "pi-leading", a, r, format);
            return 0;
        }

        if (c_sin->parsed()) {
            const qeuler::QParam q(args.q);
            const qeuler::SinVariant v = (variant == "half-shift") ? qeuler::SinVariant::HalfShift
                                                                   : qeuler::SinVariant::PiForm;
            const double val = qeuler::sin_approx(need(args.x, "--x"), q, v, args.prec);
            print_scalar("sin-" + variant, args, {val, 1e-13}, format);
            return 0;
        }

        if (c_solve->parsed()) {
            std::ifstream in(spec_path);
            if (!in) {
                std::cerr << "qcli: cannot open spec file " << spec_path << "\n";
                return 1;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            const qeuler::QuotientSpec spec = qeuler::quotient_spec_from_json(buf.str());
            const qeuler::QParam q(args.q);
            const bool reciprocal = (fn == "reciprocal");
            const qeuler::FESolution sol = reciprocal ? qeuler::solve_reciprocal_type(spec, q)
                                                      : qeuler::solve_gamma_type(spec, q);
            const double tol = tol_opt.value_or(1e-11);
            std::vector<double> xs;
            if (!grid_text.empty())
                xs = grid_points(parse_grid(grid_text));
            else
                xs.push_back(need(args.x, "--x"));
            double worst = 0.0;
            if (!reciprocal)
                worst = std::fabs(sol(spec.w) - 1.0);  // initial condition f(w) = 1
            if (format == "csv") std::cout << "x,value,rel_err\n";
            std::string rows_json;
            for (double x : xs) {
                const double v = sol(x);
                const double res = sol.residual(x);
                worst = std::max(worst, res);
                if (format == "csv")
                    std::cout << fmt(x) << "," << fmt(v) << "," << fmt(res) << "\n";
                else if (format == "plain")
                    std::cout << fmt(x) << " " << fmt(v) << " " << fmt(res) << "\n";
                else
                    rows_json += (rows_json.empty() ? "" : ",") + std::string("{\"x\":") +
                                 fmt(x) + ",\"value\":" + fmt(v) + ",\"rel_err\":" + fmt(res) +
                                 "}";
            }
            if (format == "json")
                std::cout << "{\"fn\":\"solve-" << (reciprocal ? "reciprocal" : "gamma")
                          << "\",\"q\":" << fmt(args.q) << ",\"spec\":"
                          << qeuler::quotient_spec_to_json(spec) << ",\"rows\":[" << rows_json
                          << "],\"max_residual\":" << fmt(worst) << "}\n";
            else
                std::cout << "max_residual " << fmt(worst) << "\n";
            return worst <= tol ? 0 : 2;
        }
    } catch (const qeuler::domain_error& e) {
        std::cerr << "qcli: " << e.what() << "\n";
        return 1;
    } catch (const qeuler::error& e) {
        std::cerr << "qcli: numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "qcli: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
