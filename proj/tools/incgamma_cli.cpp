// Command-line front end: evaluate Q(a,x), invert it, locate the negative
// zero of gamma*, dump exact coefficient tables, and emit the term/remainder
// data behind the series-comparison figures.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "incgamma/coeffs.hpp"
#include "incgamma/errors.hpp"
#include "incgamma/expansions.hpp"
#include "incgamma/golden_tables.hpp"
#include "incgamma/inversion.hpp"
#include "incgamma/oracle.hpp"
#include "incgamma/special.hpp"
#include "record.hpp"

using namespace incgamma;
using cli::fmt_double;
using cli::Table;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

void print_table(const Table& t, const std::string& format) {
    std::cout << (format == "json" ? cli::emit_json(t) : cli::emit_csv(t));
}

int cmd_eval(double a, double x, const std::string& regime, int terms,
             const std::string& format) {
    Table t;
    t.cols = {"a", "x", "q", "regime", "termsUsed", "errorEstimate"};
    EvalReport rep;
    if (regime == "auto") {
        rep = hybrid_q(a, x);
    } else if (regime == "transition") {
        const double tau = (x - a) / std::sqrt(a);
        int N = terms >= 0 ? terms
                           : optimal_truncation(eq7_term_mags(a, tau, kMaxC));
        rep = q_transition(a, tau, N);
        rep.value = std::clamp(rep.value, 0.0, 1.0);
    } else if (regime == "uniform") {
        int N = terms >= 0 ? terms
                           : optimal_truncation(eq5_term_mags(a, x / a, 24));
        rep = q_uniform(a, x / a, N);
        rep.value = std::clamp(rep.value, 0.0, 1.0);
    } else if (regime == "outer") {
        const double lg = log_gamma(a);
        int N = terms >= 0 ? terms : 8;
        if (x / a > 1.0) {
            rep = gamma_outer_upper(a, x, N);
            double q = std::exp(rep.value - lg);
            rep.value = std::clamp(q, 0.0, 1.0);
            rep.errorEstimate = rep.firstNeglected * q;
        } else {
            rep = gamma_outer_lower(a, x, N);
            double p = std::exp(rep.value - lg);
            rep.value = std::clamp(1.0 - p, 0.0, 1.0);
            rep.errorEstimate = rep.firstNeglected * p;
        }
    } else if (regime == "reference") {
        rep.value = oracle_q(BigFloat(a), BigFloat(x)).to_double();
        rep.regime = Regime::Reference;
        rep.errorEstimate = 1e-25;
    } else {
        std::cerr << "eval: unknown regime '" << regime << "'\n";
        return kExitInput;
    }
    t.add_row({fmt_double(a), fmt_double(x), fmt_double(rep.value), regime_name(rep.regime),
               std::to_string(rep.termsUsed), fmt_double(rep.errorEstimate)});
    print_table(t, format);
    return 0;
}

int cmd_invert(double a, double q, bool verify, const std::string& format) {
    QuantileResult res = quantile(a, q, -1, verify);
    Table t;
    t.cols = {"a", "q", "x", "tau0", "termsUsed", "errorEstimate"};
    std::vector<std::string> row{fmt_double(a),      fmt_double(q),
                                 fmt_double(res.x),  fmt_double(res.tau0),
                                 std::to_string(res.termsUsed), fmt_double(res.errorEstimate)};
    if (verify) {
        t.cols.push_back("residual");
        row.push_back(fmt_double(res.residual));
    }
    t.add_row(std::move(row));
    print_table(t, format);
    return 0;
}

int cmd_zero(double a, bool verify, const std::string& format) {
    ZeroResult res = negative_zero(a);
    Table t;
    t.cols = {"a", "xMinus", "tau1", "termsUsed", "errorEstimate"};
    std::vector<std::string> row{fmt_double(a), fmt_double(res.xMinus), fmt_double(res.tau1),
                                 std::to_string(res.termsUsed), fmt_double(res.errorEstimate)};
    if (verify) {
        t.cols.push_back("gammastar");
        row.push_back(oracle_gammastar(BigFloat(a), BigFloat(res.xMinus)).to_string(25));
    }
    t.add_row(std::move(row));
    print_table(t, format);
    return 0;
}

int cmd_coeffs(const std::string& family, int maxN, bool checkTables) {
    if (family.size() != 1 || std::string("baCdPef").find(family) == std::string::npos) {
        std::cerr << "coeffs: family must be one of b a C d P e f\n";
        return kExitInput;
    }
    const char fam = family[0];
    if (checkTables) {
        if (fam != 'C' && fam != 'd') {
            std::cerr << "coeffs: --check tables has golden data only for C and d\n";
            return kExitInput;
        }
        const int depth = std::min(maxN, fam == 'C' ? golden::kGoldenCMax : golden::kGoldenDMax);
        for (int n = 0; n <= depth; ++n) {
            const RationalPoly& gen = (fam == 'C') ? c_poly(n) : d_poly(n);
            const std::string a = dump_poly_line(fam, n, gen);
            const std::string b = dump_poly_line(fam, n, golden::poly(fam, n));
            if (a != b) {
                std::cerr << "coeffs: golden-table mismatch at " << fam << " " << n << "\n"
                          << "  generated: " << a << "\n  golden:    " << b << "\n";
                return kExitVerify;
            }
        }
        std::cout << "coeffs: " << fam << " 0.." << depth << " match the golden table\n";
        return 0;
    }
    if (fam == 'e' || fam == 'f') {
        SeriesTable t = (fam == 'e') ? gen_e_table(maxN, maxN / 2) : gen_f_table(maxN, maxN / 2);
        for (const auto& line : dump_table_lines(fam, t)) std::cout << line << "\n";
        return 0;
    }
    for (int n = (fam == 'P' ? 1 : 0); n <= maxN; ++n) {
        const RationalPoly* p = nullptr;
        switch (fam) {
            case 'b': p = &b_poly(n); break;
            case 'a': p = &a_poly(n); break;
            case 'C': p = &c_poly(n); break;
            case 'd': p = &d_poly(n); break;
            case 'P': p = &p_poly(n); break;
        }
        std::cout << dump_poly_line(fam, n, *p) << "\n";
    }
    return 0;
}

int cmd_figure(int id, double aOpt, double tauOpt, int nmax, const std::string& format) {
    double a = 3.0, tau = 0.0;
    if (id == 1)
        tau = 0.1;
    else if (id == 2)
        tau = 1.1;
    else if (id == 3)
        tau = 1.321;
    else if (id != 0) {
        std::cerr << "figure: --id must be 1, 2 or 3\n";
        return kExitInput;
    }
    if (!std::isnan(aOpt)) a = aOpt;
    if (!std::isnan(tauOpt)) tau = tauOpt;
    if (id == 0 && (std::isnan(aOpt) || std::isnan(tauOpt))) {
        std::cerr << "figure: give --id or both --a and --tau\n";
        return kExitInput;
    }

    const double x = a + tau * std::sqrt(a);
    const BigFloat qRef = oracle_q(BigFloat(a), BigFloat(x));
    std::vector<double> t7 = eq7_term_mags(a, tau, nmax);
    std::vector<double> t5 = eq5_term_mags(a, x / a, nmax / 2);
    std::vector<double> parts = eq7_partials(a, tau, nmax);

    Table t;
    t.cols = {"n", "term_eq7", "term_eq5", "remainder_eq7"};
    for (int n = 0; n <= nmax; ++n) {
        const double rem = std::fabs((BigFloat(parts[n]) - qRef).to_double());
        std::string eq5cell;
        if (n % 2 == 0 && n / 2 < static_cast<int>(t5.size())) eq5cell = fmt_double(t5[n / 2]);
        t.add_row({std::to_string(n), fmt_double(t7[n]), eq5cell, fmt_double(rem)});
    }
    print_table(t, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transition-region evaluation of the normalised incomplete gamma function"};
    app.require_subcommand(1);
    std::string format = "csv";

    auto* eval = app.add_subcommand("eval", "evaluate Q(a, x)");
    double ea = 0, ex = 0;
    std::string eregime = "auto";
    int eterms = -1;
    eval->add_option("--a", ea, "shape parameter a > 0")->required();
    eval->add_option("--x", ex, "evaluation point x >= 0")->required();
    eval->add_option("--regime", eregime, "auto|transition|uniform|outer|reference");
    eval->add_option("--terms", eterms, "series terms (default: optimal truncation)");
    eval->add_option("--format", format, "csv|json");

    auto* invert = app.add_subcommand("invert", "solve Q(a, x) = q for x");
    double ia = 0, iq = 0;
    bool iverify = false;
    invert->add_option("--a", ia, "shape parameter a > 0")->required();
    invert->add_option("--q", iq, "target 0 < q < 1")->required();
    invert->add_flag("--verify", iverify, "report |Q(a,x) - q|");
    invert->add_option("--format", format, "csv|json");

    auto* zero = app.add_subcommand("zero", "negative zero of gamma*(a, .)");
    double za = 0;
    bool zverify = false;
    zero->add_option("--a", za, "negative non-integer a")->required();
    zero->add_flag("--verify", zverify, "report oracle gamma*(a, x-)");
    zero->add_option("--format", format, "csv|json");

    auto* coeffs = app.add_subcommand("coeffs", "dump exact coefficient tables");
    std::string cfamily;
    int cmax = 8;
    std::string ccheck;
    coeffs->add_option("--family", cfamily, "b|a|C|d|P|e|f")->required();
    coeffs->add_option("--max", cmax, "largest index to emit");
    coeffs->add_option("--check", ccheck, "'tables': verify against the golden tables");

    auto* figure = app.add_subcommand("figure", "term/remainder data for the comparison figures");
    int fid = 0, fnmax = 40;
    double fa = std::numeric_limits<double>::quiet_NaN();
    double ftau = std::numeric_limits<double>::quiet_NaN();
    figure->add_option("--id", fid, "preset 1|2|3 (a=3, tau=0.1|1.1|1.321)");
    figure->add_option("--a", fa, "override a");
    figure->add_option("--tau", ftau, "override tau");
    figure->add_option("--nmax", fnmax, "largest term index (default 40)");
    figure->add_option("--format", format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*eval) return cmd_eval(ea, ex, eregime, eterms, format);
        if (*invert) return cmd_invert(ia, iq, iverify, format);
        if (*zero) return cmd_zero(za, zverify, format);
        if (*coeffs) {
            if (!ccheck.empty() && ccheck != "tables") {
                std::cerr << "coeffs: unknown --check mode '" << ccheck << "'\n";
                return kExitInput;
            }
            return cmd_coeffs(cfamily, cmax, ccheck == "tables");
        }
        if (*figure) return cmd_figure(fid, fa, ftau, fnmax, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
