#include "dunkl/verify.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/integrate.hpp"
#include "dunkl/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace dunkl {

namespace {

constexpr std::size_t kResidualTextLimit = 240;

std::string index_name(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "p%03zu", i);
    return buf;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string clip(std::string s) {
    if (s.size() > kResidualTextLimit) s = s.substr(0, kResidualTextLimit) + " ...";
    return s;
}

CaseResult exact_case(std::string name, const Poly& residual, std::string detail = "") {
    CaseResult c{std::move(name), CaseStatus::pass, "0", std::move(detail), std::nullopt};
    if (!residual.is_zero()) {
        c.status = CaseStatus::fail;
        c.residual = clip(format(residual));
    }
    return c;
}

CaseResult exact_case(std::string name, const WeightedFunction& residual, std::string detail = "") {
    CaseResult c{std::move(name), CaseStatus::pass, "0", std::move(detail), std::nullopt};
    if (!residual.is_zero()) {
        c.status = CaseStatus::fail;
        c.residual = clip(format(residual));
    }
    return c;
}

CaseResult exact_case(std::string name, const Rational& residual, std::string detail = "") {
    CaseResult c{std::move(name), CaseStatus::pass, "0", std::move(detail), std::nullopt};
    if (residual != 0) {
        c.status = CaseStatus::fail;
        c.residual = to_string(residual);
    }
    return c;
}

enum class Measure { absolute, relative };

CaseResult numeric_case(std::string name, const Comparison& cmp, double tol, Measure measure,
                        std::string detail = "") {
    double abs = cmp.abs_residual(), rel = cmp.rel_residual();
    double r = measure == Measure::absolute ? abs : rel;
    CaseResult c{std::move(name), CaseStatus::pass, sci(r), std::move(detail),
                 NumericDetail{cmp.lhs, cmp.rhs, abs, rel}};
    if (!(r <= tol)) c.status = CaseStatus::fail;
    std::string what = (measure == Measure::absolute ? "absolute" : "relative");
    c.detail = c.detail.empty() ? what + " tolerance " + sci(tol) : c.detail + "; " + what + " tolerance " + sci(tol);
    return c;
}

unsigned degree_of(const Poly& p) { return p.is_zero() ? 0u : static_cast<unsigned>(p.degree()); }

/// Homogeneous polynomials cycling through degrees 0..max_degree.
std::vector<Poly> suite_polys(const DunklContext& ctx, const SuiteOptions& opts, unsigned max_degree,
                              std::uint64_t stream = 0) {
    Sampler s(opts.seed * 0x9E3779B97F4A7C15ULL + stream);
    std::vector<Poly> out;
    for (unsigned i = 0; i < opts.count; ++i) out.push_back(s.homogeneous(ctx.dim(), i % (max_degree + 1), 4));
    return out;
}

std::string monomial_name(std::size_t dim, const Exponent& e) { return format(Poly::monomial(dim, e)); }

// ---------------------------------------------------------------------------

void suite_hobson(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto profiles = standard_profiles(ctx);
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    Poly r2 = Poly::norm_squared(ctx.dim());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& phi : profiles)
            rep.cases.push_back(exact_case(index_name(i) + "/" + format(phi), hobson_residual(ctx, polys[i], phi),
                                           "p = " + clip(format(polys[i]))));
        // Polynomial route: r^(2N) expanded as a polynomial.
        unsigned n = std::max(1u, degree_of(polys[i]));
        WeightedFunction lhs = hobson_lhs(ctx, polys[i], RadialProfile::power(2 * n));
        WeightedFunction direct(poly_of_dunkl(ctx, polys[i], pow(r2, n)), RadialProfile::power(0));
        rep.cases.push_back(exact_case(index_name(i) + "/polynomial-route", lhs - direct));
    }
    for (const auto& phi : profiles) {
        WeightedFunction lhs = hobson_lhs(ctx, r2, phi);
        WeightedFunction rhs(Poly::constant(ctx.dim(), 1), radial_laplacian(ctx, phi));
        rep.cases.push_back(exact_case("radial-laplacian/" + format(phi), lhs - rhs));
    }
    // Delta_k ||x||^s = s (s + 2 lambda) ||x||^(s-2)
    const Rational& lambda = ctx.constants().lambda;
    for (const Rational& s : {Rational(3), Rational(7, 2), Rational(-2 * lambda), Rational(-5, 3)}) {
        WeightedFunction lhs = hobson_lhs(ctx, r2, RadialProfile::power(s));
        WeightedFunction rhs(Poly::constant(ctx.dim(), 1), RadialProfile::power(s - 2, s * (s + 2 * lambda)));
        rep.cases.push_back(exact_case("power-laplacian/" + format(RadialProfile::power(s)), lhs - rhs));
    }
}

void suite_commutativity(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    Sampler s(opts.seed + 17);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        RationalVector xi = s.vector(ctx.dim()), eta = s.vector(ctx.dim());
        rep.cases.push_back(exact_case(index_name(i) + "/commutator", commutator_residual(ctx, xi, eta, polys[i])));
        Poly op = s.homogeneous(ctx.dim(), static_cast<unsigned>(i % 4), 3);
        std::vector<std::size_t> reversed(ctx.dim());
        for (std::size_t j = 0; j < ctx.dim(); ++j) reversed[j] = ctx.dim() - 1 - j;
        rep.cases.push_back(exact_case(index_name(i) + "/order",
                                       poly_of_dunkl(ctx, op, polys[i]) -
                                           poly_of_dunkl_ordered(ctx, op, polys[i], reversed)));
    }
}

void suite_laplacian_routes(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    for (std::size_t i = 0; i < polys.size(); ++i)
        rep.cases.push_back(exact_case(index_name(i) + "/sq-vs-expr",
                                       dunkl_laplacian_sq(ctx, polys[i]) - dunkl_laplacian_expr(ctx, polys[i])));
    // Invariant polynomials: ||x||^(2k) and power sums of even degree.
    std::size_t d = ctx.dim();
    Poly r2 = Poly::norm_squared(d);
    for (unsigned k = 1; k <= 3; ++k) {
        Poly q = pow(r2, k);
        rep.cases.push_back(exact_case("invariant/r^" + std::to_string(2 * k),
                                       dunkl_laplacian_sq(ctx, q) - invariant_laplacian(ctx, q)));
    }
    for (unsigned e : {4u, 6u}) {
        Poly q(d);
        for (std::size_t j = 0; j < d; ++j) q += pow(Poly::variable(d, j), e);
        rep.cases.push_back(exact_case("invariant/power-sum-" + std::to_string(e),
                                       dunkl_laplacian_sq(ctx, q) - invariant_laplacian(ctx, q)));
    }
}

void suite_com00(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        unsigned j = 1 + static_cast<unsigned>(i % 3);
        std::size_t l = i % ctx.dim();
        rep.cases.push_back(exact_case(index_name(i) + "/j" + std::to_string(j) + "-l" + std::to_string(l + 1),
                                       com00_residual(ctx, j, l, polys[i])));
    }
}

void suite_ad_formula(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto targets = suite_polys(ctx, opts, opts.max_degree);
    Sampler s(opts.seed + 29);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        unsigned m = static_cast<unsigned>(i % 5);
        Poly op = s.homogeneous(ctx.dim(), m, 2);
        rep.cases.push_back(exact_case(index_name(i) + "/m" + std::to_string(m), ad_formula_residual(ctx, op, targets[i]),
                                       "p = " + clip(format(op))));
    }
}

void suite_projection(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Poly& p = polys[i];
        std::string base = index_name(i);
        Poly h = clebsch_project_series(ctx, p);
        rep.cases.push_back(exact_case(base + "/harmonic", dunkl_laplacian_sq(ctx, h)));
        rep.cases.push_back(exact_case(base + "/idempotent", clebsch_project_series(ctx, h) - h));
        MaxwellProjection mx = clebsch_project_maxwell(ctx, p);
        if (mx.value) {
            rep.cases.push_back(exact_case(base + "/maxwell", *mx.value - h));
        } else {
            rep.cases.push_back({base + "/maxwell", CaseStatus::skipped, "0", mx.note, std::nullopt});
        }
        HarmonicDecomposition dec = harmonic_decompose(ctx, p);
        CaseResult c = exact_case(base + "/decompose", recompose(dec, ctx.dim()) - p,
                                  std::to_string(dec.components.size()) + " components");
        for (const auto& comp : dec.components)
            if (!is_k_harmonic(ctx, comp.h) || degree_of(comp.h) + 2 * comp.j != degree_of(p)) {
                c.status = CaseStatus::fail;
                c.detail += "; component j=" + std::to_string(comp.j) + " is not a harmonic of the right degree";
            }
        rep.cases.push_back(std::move(c));
    }
    for (unsigned m = 0; m <= std::min(4u, opts.max_degree); ++m) {
        std::vector<Poly> images;
        bool ok = true;
        for (const Exponent& e : monomials_of_degree(ctx.dim(), m)) {
            Poly h = clebsch_project_series(ctx, Poly::monomial(ctx.dim(), e));
            if (!is_k_harmonic(ctx, h) || clebsch_project_series(ctx, h) != h) ok = false;
            images.push_back(std::move(h));
        }
        std::size_t rank = rational_rank(images), expected = harmonic_dimension(ctx.dim(), m);
        CaseResult c{"surjectivity/m" + std::to_string(m), CaseStatus::pass, "0",
                     "rank " + std::to_string(rank) + ", dim H_m " + std::to_string(expected), std::nullopt};
        if (!ok || rank != expected) {
            c.status = CaseStatus::fail;
            c.residual = ok ? "rank mismatch" : "image not fixed by the projection";
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_pizzetti(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    std::size_t d = ctx.dim();
    const Rational& lambda = ctx.constants().lambda;
    {
        Poly r2 = Poly::norm_squared(d);
        Rational alt = pizzetti_mean_alternating(ctx, r2);
        rep.cases.push_back(exact_case("sign/mean-of-r^2", pizzetti_mean(ctx, r2) - 1,
                                       "positive coefficients give 1 on the unit sphere; the (-1)^l form gives " +
                                           to_string(alt)));
    }
    if (ctx.system().is_coordinate_system()) {
        RationalVector kappa = coordinate_kappa(ctx);
        for (unsigned deg = 0; deg <= 8; deg += 2)
            for (const Exponent& half : monomials_of_degree(d, deg / 2)) {
                Exponent e;
                std::vector<unsigned> beta(d);
                for (std::size_t j = 0; j < d; ++j) {
                    e[j] = static_cast<std::uint8_t>(2 * half[j]);
                    beta[j] = half[j];
                }
                Poly p = Poly::monomial(d, e);
                rep.cases.push_back(exact_case("oracle/" + monomial_name(d, e),
                                               pizzetti_mean(ctx, p) - sphere_oracle_z2d(kappa, beta)));
            }
    }
    bool zero_kappa = std::all_of(ctx.system().orbit_multiplicities().begin(),
                                  ctx.system().orbit_multiplicities().end(), [](const Rational& k) { return k == 0; });
    if (zero_kappa)
        for (unsigned a = 0; a <= 4; ++a) {
            Poly p = pow(Poly::variable(d, 0), 2 * a);
            Rational classical = pochhammer(Rational(1, 2), a) / pochhammer(Rational(static_cast<long>(d)) / 2, a);
            rep.cases.push_back(exact_case("classical/x1^" + std::to_string(2 * a), pizzetti_mean(ctx, p) - classical));
        }
    auto polys = suite_polys(ctx, opts, std::min(opts.max_degree, 8u));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Poly& p = polys[i];
        Rational mean = pizzetti_mean(ctx, p);
        Rational worst = 0;
        for (std::size_t r = 0; r < ctx.root_count(); ++r) {
            Rational diff = pizzetti_mean(ctx, ctx.reflect(r, p)) - mean;
            if (diff != 0) worst = diff;
        }
        rep.cases.push_back(exact_case(index_name(i) + "/invariance", worst));
        Rational polar = 0;
        for (const auto& [deg, part] : homogeneous_components(p))
            if (deg % 2 == 0)
                polar += pizzetti_mean(ctx, part) * power(2, static_cast<int>(deg / 2)) * pochhammer(lambda + 1, deg / 2);
        rep.cases.push_back(exact_case(index_name(i) + "/gaussian-polar", gaussian_moment(ctx, p) - polar));
    }
    for (unsigned m = 0; m <= std::min(4u, opts.max_degree); ++m)
        for (const Exponent& e : monomials_of_degree(d, m)) {
            Poly h = clebsch_project_series(ctx, Poly::monomial(d, e));
            rep.cases.push_back(exact_case("mean-value/m" + std::to_string(m) + "/" + monomial_name(d, e),
                                           mean_value_check(ctx, h) - h.constant_term()));
        }
}

void suite_hermite(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    auto polys = suite_polys(ctx, opts, opts.max_degree);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Poly& p = polys[i];
        rep.cases.push_back(exact_case(index_name(i) + "/rodrigues", rodrigues_residual(ctx, p)));
        rep.cases.push_back(exact_case(index_name(i) + "/diffgauss", diffgauss_residual(ctx, p)));
        Poly h = clebsch_project_series(ctx, p);
        rep.cases.push_back(exact_case(index_name(i) + "/harmonic-fixed", hermite_poly(ctx, h) - h));
    }
}

// ---------------------------------------------------------------------------

/// Six points with norms 0 .. 5 along varying directions.
std::vector<std::vector<double>> transform_grid(std::size_t d) {
    const double norms[] = {0.0, 0.5, 1.25, 2.0, 3.5, 5.0};
    std::vector<std::vector<double>> out;
    for (std::size_t k = 0; k < 6; ++k) {
        std::vector<double> v(d);
        double n2 = 0;
        for (std::size_t j = 0; j < d; ++j) {
            v[j] = (j + k) % 2 ? 1.0 : -0.5 - 0.25 * static_cast<double>(j);
            n2 += v[j] * v[j];
        }
        for (auto& x : v) x *= norms[k] / std::sqrt(n2);
        out.push_back(std::move(v));
    }
    return out;
}

std::string point_name(std::size_t k) { return "y" + std::to_string(k); }

Comparison doubling(const SeriesValue& base, const std::function<SeriesValue(unsigned)>& at) {
    return {base.value, at(2 * base.order).value};
}

void suite_transforms(const DunklContext& ctx, const SuiteOptions& opts, VerificationReport& rep) {
    RationalVector kappa = coordinate_kappa(ctx);
    std::size_t d = ctx.dim();
    auto tol = [&](double dflt) { return opts.tolerance.value_or(dflt); };
    const double t_sph = tol(1e-9), t_hecke = tol(1e-8), t_hankel = tol(1e-10), t_dtmul = tol(1e-8),
                 t_double = tol(1e-12), t_kernel = tol(1e-12);
    double lambda = ctx.constants().lambda.get_d();
    auto grid = transform_grid(d);

    // Kernel checks.
    const double pts[] = {-2.0, -1.0, 0.0, 0.5, 1.5};
    for (double x : pts)
        for (double y : pts) {
            std::array<double, 1> xs{x};
            std::array<Complex, 1> ys{Complex(0, -y)};
            RationalVector zero{Rational(0)};
            Comparison c{dunkl_kernel_z2d(zero, xs, ys), std::exp(Complex(0, -x * y))};
            char name[64];
            std::snprintf(name, sizeof name, "kernel/exp/x=%g/y=%g", x, y);
            rep.cases.push_back(numeric_case(name, c, t_kernel, Measure::relative));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (double x : {0.3, 1.0, 2.0}) {
            double defect = kernel_eigen_defect(kappa[j], x, Complex(0, -1.7));
            Comparison c{Complex(defect), Complex(0)};
            char name[64];
            std::snprintf(name, sizeof name, "kernel/eigen/axis%zu/x=%g", j + 1, x);
            rep.cases.push_back(numeric_case(name, c, t_kernel, Measure::absolute, "relative defect of D E = y E"));
        }
    {
        std::vector<double> x0(d, 0.0);
        std::vector<Complex> y0(d, Complex(0.4, -1.1));
        Comparison c{dunkl_kernel_z2d(kappa, x0, y0), Complex(1)};
        rep.cases.push_back(numeric_case("kernel/origin", c, t_kernel, Measure::relative));
    }

    auto polys = suite_polys(ctx, opts, std::min(4u, opts.max_degree));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Poly& p = polys[i];
        Poly h = clebsch_project_series(ctx, p);
        unsigned m = degree_of(p);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const auto& y = grid[k];
            std::string base = index_name(i) + "/" + point_name(k);
            rep.cases.push_back(numeric_case(base + "/sphere-pairing", sph1_compare(ctx, p, y), t_sph, Measure::absolute));
            rep.cases.push_back(numeric_case(base + "/hecke", hecke_compare(ctx, p, y), t_hecke, Measure::absolute));
            rep.cases.push_back(
                numeric_case(base + "/hermite-eigen", hermite_eigen_compare(ctx, p, y), t_hecke, Measure::absolute));
            auto sph = sphere_pairing_numeric(ctx, p, y);
            rep.cases.push_back(numeric_case(
                base + "/doubling-sphere",
                doubling(sph, [&](unsigned n) { return sphere_pairing_numeric(ctx, p, y, n); }), t_double,
                Measure::relative, "truncation order " + std::to_string(sph.order)));
            auto gauss = dunkl_transform_gauss_poly(ctx, p, y);
            rep.cases.push_back(numeric_case(
                base + "/doubling-gauss",
                doubling(gauss, [&](unsigned n) { return dunkl_transform_gauss_poly(ctx, p, y, n); }), t_double,
                Measure::relative, "truncation order " + std::to_string(gauss.order)));

            // Three characterizations of a k-harmonic h.
            if (!h.is_zero()) {
                double r2 = 0;
                for (double v : y) r2 += v * v;
                Complex phase = std::pow(Complex(0, -1), static_cast<int>(m));
                Comparison hecke2{dunkl_transform_gauss_poly(ctx, h, y).value,
                                  phase * h.evaluate(y) * std::exp(-r2 / 2)};
                CaseResult c = numeric_case(base + "/harmonic-equivalence", hecke2, t_hecke, Measure::absolute);
                Poly h_neg(h.dim());
                for (const auto& [e, coef] : h.terms())
                    h_neg.add_term(e, e.degree() % 2 ? Rational(-coef) : Rational(coef));
                RadialProfile g = RadialProfile::gaussian(Rational(-1, 2));
                bool laplace = is_k_harmonic(ctx, h);
                bool gauss_rule = (hobson_lhs(ctx, h, g) - WeightedFunction(h_neg, g)).is_zero();
                Comparison harmonic_pair{sphere_pairing_numeric(ctx, h, y).value,
                                phase * scaled_bessel(lambda, m, std::sqrt(r2)) * h.evaluate(y)};
                bool sph_ok = harmonic_pair.abs_residual() <= t_sph;
                if (!laplace || !gauss_rule || !sph_ok) c.status = CaseStatus::fail;
                c.detail += std::string("; Delta_k h = 0: ") + (laplace ? "yes" : "no") +
                            "; h(D) e^{-r^2/2} = h(-x) e^{-r^2/2}: " + (gauss_rule ? "yes" : "no") +
                            "; spherical pairing residual " + sci(harmonic_pair.abs_residual());
                rep.cases.push_back(std::move(c));
            }
        }
    }

    // Hankel transforms: Gaussian fixed point and the radial identity.
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double s = 0;
        for (double v : grid[k]) s += v * v;
        s = std::sqrt(s);
        for (unsigned m = 0; m <= 4; ++m)
            rep.cases.push_back(numeric_case("hankel/fixed-point/" + point_name(k) + "/nu=lambda+" + std::to_string(m),
                                             hankel_gauss_fixed_point(lambda + m, s), t_hankel, Measure::relative));
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(polys.size(), 4); ++i)
        for (std::size_t k = 0; k < grid.size(); k += 2)
            rep.cases.push_back(numeric_case(index_name(i) + "/" + point_name(k) + "/hankel-identity",
                                             bochner_compare(ctx, polys[i], 1, grid[k]), t_hecke, Measure::absolute,
                                             "f0 = r^2 e^{-r^2/2}"));

    if (d == 1) {
        std::vector<Poly> qs{Poly::constant(1, 1), Poly::variable(1, 0), pow(Poly::variable(1, 0), 2)};
        for (std::size_t i = 0; i < polys.size() && qs.size() < 6; ++i)
            if (degree_of(polys[i]) == 3) qs.push_back(polys[i]);
        for (std::size_t q = 0; q < qs.size(); ++q)
            for (std::size_t k = 0; k < grid.size(); ++k)
                rep.cases.push_back(numeric_case("multiplication/q" + std::to_string(q) + "/" + point_name(k),
                                                 dtmul_compare(ctx, qs[q], grid[k][0]), t_dtmul, Measure::absolute,
                                                 "q = " + format(qs[q])));
    }
}

using SuiteFn = void (*)(const DunklContext&, const SuiteOptions&, VerificationReport&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table{
        {"hobson", suite_hobson},         {"commutativity", suite_commutativity},
        {"laplacian-routes", suite_laplacian_routes}, {"com00", suite_com00},
        {"ad-formula", suite_ad_formula}, {"projection", suite_projection},
        {"pizzetti", suite_pizzetti},     {"hermite", suite_hermite},
        {"transforms", suite_transforms},
    };
    return table;
}

nlohmann::ordered_json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

} // namespace

std::string to_string(CaseStatus s) {
    switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    default: return "skipped";
    }
}

bool VerificationReport::passed() const { return count(CaseStatus::fail) == 0; }

std::size_t VerificationReport::count(CaseStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

nlohmann::ordered_json VerificationReport::to_json() const {
    std::vector<const CaseResult*> sorted;
    for (const auto& c : cases) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->name < b->name; });
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["system"] = system;
    j["seed"] = seed;
    j["tolerance"] = tolerance ? nlohmann::ordered_json(*tolerance) : nlohmann::ordered_json(nullptr);
    j["passed"] = passed();
    j["cases"] = nlohmann::ordered_json::array();
    for (const CaseResult* c : sorted) {
        nlohmann::ordered_json e;
        e["name"] = c->name;
        e["status"] = to_string(c->status);
        e["residual"] = c->residual;
        e["detail"] = c->detail;
        if (c->numeric) {
            e["lhs"] = complex_json(c->numeric->lhs);
            e["rhs"] = complex_json(c->numeric->rhs);
            e["abs_residual"] = c->numeric->abs_residual;
            e["rel_residual"] = c->numeric->rel_residual;
        }
        j["cases"].push_back(std::move(e));
    }
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hobson",     "commutativity", "laplacian-routes",
                                                "com00",      "ad-formula",    "projection",
                                                "pizzetti",   "hermite",       "transforms"};
    return names;
}

VerificationReport run_suite(const std::string& name, const DunklContext& ctx, const SuiteOptions& opts) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw InputError("unknown suite '" + name + "'");
    VerificationReport rep;
    rep.suite = name;
    rep.system = opts.system_label;
    rep.seed = opts.seed;
    if (name == "transforms") rep.tolerance = opts.tolerance;
    it->second(ctx, opts, rep);
    std::stable_sort(rep.cases.begin(), rep.cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
    return rep;
}

std::vector<RadialProfile> standard_profiles(const DunklContext& ctx) {
    const Rational& lambda = ctx.constants().lambda;
    return {
        RadialProfile::power(2),
        RadialProfile::power(4),
        RadialProfile::power(Rational(7, 2)),
        RadialProfile::power(-2 * lambda),
        RadialProfile::gaussian(Rational(-1, 2)),
        RadialProfile::gaussian(-1),
        RadialProfile::gaussian(-1, 3),
    };
}

} // namespace dunkl
