/*
  ellcot — elliptic generalized cotangent Dirichlet series and
  elliptic Dedekind-Rademacher sums, with a numerical verification CLI

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "ellcot/report_json.hpp"
#include "ellcot/verify.hpp"

using namespace ellcot;

namespace {

struct Options {
    std::string subcommand;            // transform|cocycle|reciprocity|hat|berndt|degeneration|suite
    std::string alpha = "0,1,2,1";     // p,q,D,den
    std::string matrix = "0,-1,1,0";   // a,b,c,d
    std::string matrix2;               // second matrix for cocycle
    std::string charmat = "0.31,0.67,0.13,0.44";
    std::string tau = "0,1";
    std::string xy = "0.231,0.017,0.173,-0.011";
    std::string r = "2/3";
    int l = 4;
    int m = 1, n = 1;
    long terms = 400;
    long radius = 400;
    double tol = 1e-8;
    double imtau = 8.0;
    long long c_disc = 0;
    std::string out;
    std::string format = "json";
    std::string config;
    std::string part = "i";
    std::string c_list = "2,3,5", l_list = "2,3";
    bool suite_all = false;
    bool flip_eps = false;
    bool radius_set = false;
};

std::vector<double> parse_doubles(const std::string& s, size_t expect, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.size() != expect)
        throw CLI::ValidationError(std::string(what) + ": expected " + std::to_string(expect) +
                                   " comma-separated values");
    return out;
}

std::vector<long long> parse_ints(const std::string& s, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

QuadraticNumber parse_alpha(const std::string& s) {
    auto v = parse_ints(s, "--alpha");
    if (v.size() != 4) throw CLI::ValidationError("--alpha: expected p,q,D,den");
    return QuadraticNumber(v[0], v[1], v[2], v[3]);
}

UnimodularMatrix parse_matrix(const std::string& s, const char* what) {
    auto v = parse_ints(s, what);
    if (v.size() != 4) throw CLI::ValidationError(std::string(what) + ": expected a,b,c,d");
    return UnimodularMatrix(v[0], v[1], v[2], v[3]);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

TruncationPolicy load_policy(const Options& o) {
    TruncationPolicy p;
    p.max_index = o.radius_set ? o.radius : o.terms;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw CLI::ValidationError("--config: cannot open " + o.config);
        nlohmann::json j;
        in >> j;
        if (j.contains("max_index")) p.max_index = j["max_index"].get<long>();
        if (j.contains("tail_tol")) p.tail_tol = j["tail_tol"].get<double>();
        if (j.contains("theta_terms")) p.theta_terms = j["theta_terms"].get<long>();
    }
    p.validate();
    return p;
}

void print_report(const VerificationReport& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.identity_id
              << "  abs_residual=" << r.abs_residual << "  rel_residual=" << r.rel_residual
              << "  tol=" << r.tolerance << " (" << r.params.at("criterion") << ")"
              << "  elapsed=" << r.elapsed_ms << "ms\n";
}

int write_reports(const Options& o, const std::vector<VerificationReport>& reports) {
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        out << reports_to_json(reports).dump(2) << "\n";
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

template <class C>
CharMat<real_t<C>> to_charmat(const std::string& s) {
    auto v = parse_doubles(s, 4, "--charmat");
    using R = real_t<C>;
    return CharMat<R>{{R(v[0]), R(v[1])}, {R(v[2]), R(v[3])}};
}

template <class C>
int run_verify(const Options& o) {
    using R = real_t<C>;
    auto tv = parse_doubles(o.tau, 2, "--tau");
    const C tau_c{R(tv[0]), R(tv[1])};
    TruncationPolicy policy = load_policy(o);
    std::vector<VerificationReport> reports;

    if (o.subcommand == "berndt") {
        QuadraticNumber alpha = parse_alpha(o.alpha);
        long long c = o.c_disc != 0 ? o.c_disc : alpha.D();
        reports.push_back(check_berndt<C>(o.l, c, policy, o.tol, ResidualCriterion::Rel, o.flip_eps));
    } else if (o.subcommand == "transform") {
        ModularParameter<C> mp(tau_c, policy.theta_terms);
        reports.push_back(check_transform<C>(parse_matrix(o.matrix, "--matrix"), o.l,
                                             parse_alpha(o.alpha), to_charmat<C>(o.charmat), mp,
                                             policy, o.tol));
    } else if (o.subcommand == "cocycle") {
        ModularParameter<C> mp(tau_c, policy.theta_terms);
        auto xyv = parse_doubles(o.xy, 4, "--xy");
        reports.push_back(check_cocycle<C>(parse_matrix(o.matrix, "--matrix"),
                                           parse_matrix(o.matrix2.empty() ? "0,-1,1,0" : o.matrix2,
                                                        "--matrix2"),
                                           o.l, C(R(xyv[0]), R(xyv[1])), to_charmat<C>(o.charmat),
                                           mp, o.tol));
    } else if (o.subcommand == "reciprocity") {
        ModularParameter<C> mp(tau_c, policy.theta_terms);
        reports.push_back(check_reciprocity<C>(parse_matrix(o.matrix, "--matrix"), o.l,
                                               parse_rational(o.r), to_charmat<C>(o.charmat), mp,
                                               o.tol));
    } else if (o.subcommand == "hat") {
        ModularParameter<C> mp(tau_c, policy.theta_terms);
        auto xyv = parse_doubles(o.xy, 4, "--xy");
        reports.push_back(check_hat<C>(parse_matrix(o.matrix, "--matrix"), o.l, parse_rational(o.r),
                                       to_charmat<C>(o.charmat), C(R(xyv[0]), R(xyv[1])),
                                       C(R(xyv[2]), R(xyv[3])), mp, o.tol));
    } else if (o.subcommand == "degeneration") {
        if (o.part == "i") {
            reports.push_back(check_degeneration<C>(o.l, parse_alpha(o.alpha),
                                                    to_charmat<C>(o.charmat), o.imtau, policy,
                                                    o.tol));
        } else {
            reports.push_back(check_degeneration_edr<C>(o.m, o.n, parse_rational(o.r),
                                                        to_charmat<C>(o.charmat), o.imtau, o.tol));
        }
    } else if (o.subcommand == "suite") {
        // a representative battery of every identity at moderate budgets
        QuadraticNumber r2(0, 1, 2, 1), phi(1, 1, 5, 2);
        CharMat<real_t<C>> M = to_charmat<C>(o.charmat);
        ModularParameter<C> mp(C(R(0), R(1)), policy.theta_terms);
        ModularParameter<C> mpg(C(R(1) / 10, R(12) / 10), policy.theta_terms);
        TruncationPolicy small = policy;
        small.max_index = std::min<long>(policy.max_index, 120);
        reports.push_back(check_transform<C>(UnimodularMatrix::T(), 4, r2, M, mp, small, 1e-10,
                                             ResidualCriterion::Abs));
        reports.push_back(check_transform<C>(UnimodularMatrix::S(), 4, r2, M, mp, small, 1e-4));
        reports.push_back(
            check_cocycle<C>(UnimodularMatrix::T(), UnimodularMatrix::S(), 5,
                             C(R(37) / 100, R(21) / 100), M, mpg, 1e-10));
        reports.push_back(
            check_reciprocity<C>(UnimodularMatrix(1, 0, 1, 1), 3, Rational(2, 3), M, mpg, 1e-9));
        reports.push_back(check_hat<C>(UnimodularMatrix::S(), 2, Rational(1, 2), M,
                                       C(R(231) / 1000, R(17) / 1000), C(R(173) / 1000, R(-11) / 1000),
                                       mpg, 1e-8));
        TruncationPolicy bp = policy;
        bp.max_index = std::max<long>(policy.max_index, 50000);
        reports.push_back(check_berndt<C>(3, 5, bp, 1e-8));
        reports.push_back(check_degeneration<C>(5, r2, M, 8.0, small, 1e-6));
        CharMat<real_t<C>> M2{{R(31) / 100, R(1) / 2}, {R(13) / 100, R(1) / 2}};
        reports.push_back(check_degeneration_edr<C>(2, 3, Rational(1, 2), M2, 8.0, 1e-8));
        CharMat<real_t<C>> Mc{{R(15) / 100, R(1)}, {R(3) / 10, R(1)}};
        reports.push_back(check_degeneration_edr<C>(1, 1, Rational(2, 3), Mc, 8.0, 1e-8));
    } else {
        std::cerr << "error: unknown verify subcommand\n";
        return 2;
    }

    for (const auto& r : reports) print_report(r);
    int rc = write_reports(o, reports);
    int failures = 0;
    for (const auto& r : reports) failures += r.pass ? 0 : 1;
    std::cout << reports.size() - failures << "/" << reports.size() << " checks passed\n";
    return rc;
}

template <class C>
int run_table(const Options& o) {
    TruncationPolicy policy = load_policy(o);
    auto cs = parse_ints(o.c_list, "--c");
    auto ls = parse_ints(o.l_list, "--l");
    std::ostream* osp = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        osp = &file;
    }
    std::ostream& os = *osp;
    if (o.format == "csv") {
        os << "c,l,s,alpha,eps,xi_series,xi_closed_form,abs_diff\n";
        for (long long c : cs) {
            auto pell = pell_4(c);
            QuadraticNumber alpha = pell.alpha();
            for (long long l : ls) {
                auto series = cot_dirichlet<C>(2 * static_cast<int>(l) - 1, alpha, policy);
                C rhs = berndt_rhs<C>(static_cast<int>(l), alpha, pell.eps);
                os << c << "," << l << "," << 2 * l - 1 << ",\"" << alpha.str() << "\"," << pell.eps
                   << "," << detail::fmt_double(to_double(series.value.real())) << ","
                   << detail::fmt_double(to_double(rhs.real())) << ","
                   << detail::fmt_double(to_double(std::abs(to_cdouble(series.value - rhs)))) << "\n";
            }
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (long long c : cs) {
            auto pell = pell_4(c);
            QuadraticNumber alpha = pell.alpha();
            for (long long l : ls) {
                auto series = cot_dirichlet<C>(2 * static_cast<int>(l) - 1, alpha, policy);
                C rhs = berndt_rhs<C>(static_cast<int>(l), alpha, pell.eps);
                nlohmann::ordered_json row;
                row["c"] = c;
                row["l"] = l;
                row["s"] = 2 * l - 1;
                row["alpha"] = alpha.str();
                row["eps"] = pell.eps;
                row["xi_series"] = to_double(series.value.real());
                row["xi_closed_form"] = to_double(rhs.real());
                arr.push_back(row);
            }
        }
        os << arr.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"ellcot: special functions of real quadratic irrationals and the numeric\n"
                 "certification of their transformation and reciprocity identities"};
    app.require_subcommand(1);

    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--alpha", o.alpha, "quadratic number p,q,D,den for (p+q*sqrt(D))/den");
        cmd->add_option("--matrix", o.matrix, "SL2(Z) matrix a,b,c,d");
        cmd->add_option("--matrix2", o.matrix2, "second SL2(Z) matrix (cocycle)");
        cmd->add_option("--charmat", o.charmat, "character matrix x',x,y',y");
        cmd->add_option("--tau", o.tau, "modular parameter re,im");
        cmd->add_option("--xy", o.xy, "sample point reX,imX,reY,imY (hat/cocycle)");
        cmd->add_option("--l", o.l, "integer weight/order");
        cmd->add_option("--m", o.m, "first EDR index (degeneration part ii)");
        cmd->add_option("--n", o.n, "second EDR index (degeneration part ii)");
        cmd->add_option("--r", o.r, "rational argument n/d");
        cmd->add_option("--terms", o.terms, "series cutoff N");
        cmd->add_option("--radius", o.radius, "lattice cutoff (overrides --terms when given)")
            ->each([&o](const std::string&) { o.radius_set = true; });
        cmd->add_option("--tol", o.tol, "residual tolerance");
        cmd->add_option("--imtau", o.imtau, "Im tau for degeneration checks");
        cmd->add_option("--c", o.c_disc, "squarefree discriminant (berndt)");
        cmd->add_option("--out", o.out, "write JSON report to this path");
        cmd->add_option("--config", o.config, "JSON config overriding truncation defaults");
        cmd->add_flag("--flip-eps", o.flip_eps, "negative control: flip the Pell unit sign");
    };

    CLI::App* verify = app.add_subcommand("verify", "check one identity family");
    verify->require_subcommand(1);
    for (const char* name : {"transform", "cocycle", "reciprocity", "hat", "berndt", "degeneration"}) {
        CLI::App* cmd = verify->add_subcommand(name);
        add_common(cmd);
        if (std::string(name) == "degeneration")
            cmd->add_option("--part", o.part, "i (series) or ii (EDR sums)");
    }
    CLI::App* suite = verify->add_subcommand("suite", "run every identity battery");
    add_common(suite);
    suite->add_flag("--all", o.suite_all, "run the full battery");

    CLI::App* table = app.add_subcommand("table", "tabulate special values");
    CLI::App* tb = table->add_subcommand("berndt", "xi(2l-1, alpha) table");
    tb->add_option("--c", o.c_list, "discriminant list, e.g. 2,3,5");
    tb->add_option("--l", o.l_list, "l list, e.g. 2,3,4");
    tb->add_option("--terms", o.terms, "series cutoff N");
    tb->add_option("--format", o.format, "json|csv");
    tb->add_option("--out", o.out, "output path");
    tb->add_option("--config", o.config, "JSON config overriding truncation defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    PrecisionMode mode = PrecisionMode::Double;
    if (const char* env = std::getenv("ELLCOT_PRECISION")) {
        std::string v = env;
        if (v == "extended")
            mode = PrecisionMode::Extended;
        else if (v != "double" && !v.empty()) {
            std::cerr << "error: ELLCOT_PRECISION must be double or extended\n";
            return 2;
        }
    }
    set_precision_mode(mode);

    try {
        if (table->parsed()) {
            return mode == PrecisionMode::Extended ? run_table<CQuad>(o) : run_table<CDouble>(o);
        }
        for (auto* sub : verify->get_subcommands()) {
            o.subcommand = sub->get_name();
            break;
        }
        return mode == PrecisionMode::Extended ? run_verify<CQuad>(o) : run_verify<CDouble>(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ellcot::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
