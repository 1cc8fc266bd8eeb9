// Command-line front end for the Dunkl calculus.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error,
// 3 internal invariant violation.

#include "dunkl/harmonic.hpp"
#include "dunkl/integrate.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dunkl;
using json = nlohmann::ordered_json;

struct Common {
    std::string system;
    std::string kappa;
    bool json = false;
};

struct Args {
    Common common;
    std::string poly;
    std::string xi;
    std::string profile;
    std::string route;
    std::string y;
    std::string kind = "gauss";
    std::string suite;
    std::string report;
    unsigned deg = 6;
    unsigned count = 50;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;
};

DunklContext make_context(const Common& c) {
    RationalVector kappa = c.kappa.empty() ? RationalVector{} : parse_rational_list(c.kappa);
    return DunklContext(build_root_system(c.system, kappa));
}

std::string complex_text(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g %c %.17gi", z.real(), z.imag() < 0 ? '-' : '+', std::fabs(z.imag()));
    return buf;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_apply(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    RationalVector xi = parse_rational_list(a.xi);
    if (xi.size() != ctx.dim()) throw InputError("--xi needs " + std::to_string(ctx.dim()) + " components");
    Poly out = dunkl_apply(ctx, xi, p);
    emit(a.common, json{{"result", format(out)}}, format(out));
    return 0;
}

int cmd_laplacian(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    std::string route = a.route.empty() ? "sq" : a.route;
    Poly out(ctx.dim());
    if (route == "sq")
        out = dunkl_laplacian_sq(ctx, p);
    else if (route == "expr")
        out = dunkl_laplacian_expr(ctx, p);
    else
        throw InputError("--route must be sq or expr for laplacian");
    emit(a.common, json{{"route", route}, {"result", format(out)}}, format(out));
    return 0;
}

int cmd_hobson(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    RadialProfile phi = parse_profile(a.profile);
    WeightedFunction lhs = hobson_lhs(ctx, p, phi);
    WeightedFunction rhs = hobson_rhs(ctx, p, phi);
    WeightedFunction res = lhs - rhs;
    std::string residual = res.is_zero() ? "0" : format(res);
    emit(a.common, json{{"lhs", format(lhs)}, {"rhs", format(rhs)}, {"residual", residual}},
         "lhs: " + format(lhs) + "\nrhs: " + format(rhs) + "\nresidual: " + residual);
    return res.is_zero() ? 0 : 1;
}

int cmd_project(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    std::string route = a.route.empty() ? "series" : a.route;
    if (route == "series") {
        Poly h = clebsch_project_series(ctx, p);
        emit(a.common, json{{"route", route}, {"result", format(h)}}, format(h));
        return 0;
    }
    if (route != "maxwell" && route != "check") throw InputError("--route must be series, maxwell or check");
    MaxwellProjection mx = clebsch_project_maxwell(ctx, p);
    if (route == "maxwell") {
        if (!mx.value) {
            emit(a.common, json{{"route", route}, {"result", nullptr}, {"note", mx.note}}, "skipped: " + mx.note);
            return 0;
        }
        emit(a.common, json{{"route", route}, {"result", format(*mx.value)}}, format(*mx.value));
        return 0;
    }
    Poly h = clebsch_project_series(ctx, p);
    if (!mx.value) {
        emit(a.common, json{{"route", route}, {"series", format(h)}, {"maxwell", nullptr}, {"note", mx.note}},
             format(h) + "\nmaxwell: skipped: " + mx.note);
        return 0;
    }
    bool same = *mx.value == h;
    emit(a.common, json{{"route", route}, {"series", format(h)}, {"maxwell", format(*mx.value)}, {"equal", same}},
         format(h) + "\nmaxwell: " + (same ? "equal" : "differs: " + format(*mx.value)));
    return same ? 0 : 1;
}

int cmd_decompose(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    HarmonicDecomposition dec = harmonic_decompose(ctx, p);
    json comps = json::array();
    std::ostringstream text;
    for (const auto& c : dec.components) {
        comps.push_back({{"j", c.j}, {"h", format(c.h)}});
        text << "j=" << c.j << ": " << format(c.h) << "\n";
    }
    bool exact = recompose(dec, ctx.dim()) == p;
    std::string body = text.str();
    if (!body.empty()) body.pop_back();
    emit(a.common, json{{"components", comps}, {"recomposes", exact}}, body.empty() ? "0" : body);
    return exact ? 0 : 1;
}

int cmd_hermite(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    Poly h = hermite_poly(ctx, p);
    WeightedFunction res = rodrigues_residual(ctx, p);
    std::string residual = res.is_zero() ? "0" : format(res);
    emit(a.common, json{{"result", format(h)}, {"rodrigues_residual", residual}}, format(h));
    return res.is_zero() ? 0 : 1;
}

int cmd_pizzetti(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    Rational mean = pizzetti_mean(ctx, p);
    json j{{"mean", to_string(mean)}, {"alternating_sign_variant", to_string(pizzetti_mean_alternating(ctx, p))}};
    int code = 0;
    if (ctx.system().is_coordinate_system()) {
        RationalVector kappa = coordinate_kappa(ctx);
        Rational oracle = 0;
        for (const auto& [e, c] : p.terms()) {
            std::vector<unsigned> beta(ctx.dim());
            bool even = true;
            for (std::size_t i = 0; i < ctx.dim(); ++i) {
                even = even && e[i] % 2 == 0;
                beta[i] = e[i] / 2u;
            }
            if (even) oracle += c * sphere_oracle_z2d(kappa, beta);
        }
        j["oracle"] = to_string(oracle);
        j["oracle_match"] = oracle == mean;
        if (oracle != mean) code = 1;
    }
    emit(a.common, j, to_string(mean));
    return code;
}

int cmd_transform(const Args& a) {
    DunklContext ctx = make_context(a.common);
    Poly p = parse_poly(a.poly, ctx.dim());
    std::vector<double> y;
    {
        std::stringstream ss(a.y);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                y.push_back(std::stod(item, &used));
                if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw InputError("bad number '" + item + "' in --y");
            }
        }
    }
    if (y.size() != ctx.dim()) throw InputError("--y needs " + std::to_string(ctx.dim()) + " components");
    Comparison cmp;
    if (a.kind == "sphere")
        cmp = sph1_compare(ctx, p, y);
    else if (a.kind == "gauss")
        cmp = hecke_compare(ctx, p, y);
    else if (a.kind == "hermite")
        cmp = hermite_eigen_compare(ctx, p, y);
    else
        throw InputError("--kind must be sphere, gauss or hermite");
    double tol = a.tolerance.value_or(a.kind == "sphere" ? 1e-9 : 1e-8);
    bool ok = cmp.abs_residual() <= tol;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", cmp.abs_residual());
    emit(a.common,
         json{{"kind", a.kind},
              {"lhs", complex_json(cmp.lhs)},
              {"rhs", complex_json(cmp.rhs)},
              {"abs_residual", cmp.abs_residual()},
              {"rel_residual", cmp.rel_residual()},
              {"tolerance", tol},
              {"status", ok ? "pass" : "fail"}},
         "lhs: " + complex_text(cmp.lhs) + "\nrhs: " + complex_text(cmp.rhs) + "\nresidual: " + buf);
    return ok ? 0 : 1;
}

int cmd_verify(const Args& a) {
    DunklContext ctx = make_context(a.common);
    SuiteOptions opts;
    opts.system_label = a.common.system + (a.common.kappa.empty() ? "" : " kappa=" + a.common.kappa);
    opts.max_degree = a.deg;
    opts.count = a.count;
    opts.seed = a.seed;
    opts.tolerance = a.tolerance;
    VerificationReport rep = run_suite(a.suite, ctx, opts);
    json j = rep.to_json();
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        if (!out) throw InputError("cannot write report '" + a.report + "'");
        out << j.dump(2) << "\n";
    }
    if (a.common.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite " << rep.suite << " on " << rep.system << ": " << rep.cases.size() << " cases, "
                  << rep.count(CaseStatus::pass) << " pass, " << rep.count(CaseStatus::fail) << " fail, "
                  << rep.count(CaseStatus::skipped) << " skipped\n";
        for (const auto& c : rep.cases)
            if (c.status == CaseStatus::fail) std::cout << "FAIL " << c.name << ": " << c.residual << "\n";
    }
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dunkl-operator calculus and verification suites"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--system", args.common.system, "z2:d=N, a:d=N, b:d=N, d:d=N or custom:<file>")->required();
        sub->add_option("--kappa", args.common.kappa, "multiplicities per orbit, comma separated rationals");
        sub->add_flag("--json", args.common.json, "machine-readable output");
    };
    auto add_poly = [&](CLI::App* sub) { sub->add_option("--poly", args.poly, "polynomial in x1..xd")->required(); };

    auto* apply = app.add_subcommand("apply", "D_xi p");
    add_common(apply);
    add_poly(apply);
    apply->add_option("--xi", args.xi, "direction, comma separated rationals")->required();

    auto* lap = app.add_subcommand("laplacian", "Dunkl Laplacian of p");
    add_common(lap);
    add_poly(lap);
    lap->add_option("--route", args.route, "sq (default) or expr");

    auto* hob = app.add_subcommand("hobson", "both sides of Hobson's formula for p and a radial profile");
    add_common(hob);
    add_poly(hob);
    hob->add_option("--profile", args.profile, "radial profile, e.g. r^(7/2) or exp(-1/2*r^2)")->required();

    auto* proj = app.add_subcommand("project", "Clebsch projection onto k-harmonics");
    add_common(proj);
    add_poly(proj);
    proj->add_option("--route", args.route, "series (default), maxwell or check");

    auto* dec = app.add_subcommand("decompose", "p = sum ||x||^(2j) h_j with k-harmonic h_j");
    add_common(dec);
    add_poly(dec);

    auto* her = app.add_subcommand("hermite", "generalized Hermite polynomial H_{p,k}");
    add_common(her);
    add_poly(her);

    auto* piz = app.add_subcommand("pizzetti", "normalized spherical mean of p against h_k^2");
    add_common(piz);
    add_poly(piz);

    auto* tr = app.add_subcommand("transform", "transform-side identities for Z2^d at a point y");
    add_common(tr);
    add_poly(tr);
    tr->add_option("--y", args.y, "point, comma separated decimals")->required();
    tr->add_option("--kind", args.kind, "sphere, gauss (default) or hermite");
    tr->add_option("--tolerance", args.tolerance, "absolute tolerance");

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    add_common(ver);
    ver->add_option("suite", args.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--deg", args.deg, "maximum polynomial degree (default 6)")->check(CLI::Range(0u, 12u));
    ver->add_option("--count", args.count, "number of random polynomials (default 50)")->check(CLI::Range(1u, 10000u));
    ver->add_option("--seed", args.seed, "random seed (default 1)");
    ver->add_option("--report", args.report, "write the JSON report to this path");
    ver->add_option("--tolerance", args.tolerance, "override every numeric tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (apply->parsed()) return cmd_apply(args);
        if (lap->parsed()) return cmd_laplacian(args);
        if (hob->parsed()) return cmd_hobson(args);
        if (proj->parsed()) return cmd_project(args);
        if (dec->parsed()) return cmd_decompose(args);
        if (her->parsed()) return cmd_hermite(args);
        if (piz->parsed()) return cmd_pizzetti(args);
        if (tr->parsed()) return cmd_transform(args);
        if (ver->parsed()) return cmd_verify(args);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
