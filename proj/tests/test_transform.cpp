#include "dunkl/harmonic.hpp"
#include "dunkl/integrate.hpp"
#include "dunkl/transform.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t dim) { return parse_poly(text, dim); }
DunklContext ctx_of(const char* spec, RationalVector kappa) { return DunklContext(build_root_system(spec, kappa)); }
double norm(std::span<const double> y) {
    double s = 0;
    for (double v : y) s += v * v;
    return std::sqrt(s);
}
} // namespace

TEST_CASE("bessel values") {
    double x = 1.0;
    CHECK(bessel_j(0.5, x) == doctest::Approx(std::sqrt(2 / (M_PI * x)) * std::sin(x)).epsilon(1e-12));
    for (double nu : {-0.5, 0.0, 1.5, 3.0})
        CHECK(normalized_bessel(nu, 0) ==
              doctest::Approx(1 / (std::pow(2.0, nu) * std::tgamma(nu + 1))).epsilon(1e-14));
    for (double nu : {0.0, 0.5, 2.25, 6.0})
        for (double r : {0.3, 4.0, 12.0, 25.0})
            CHECK(bessel_j(nu, r) == doctest::Approx(std::cyl_bessel_j(nu, r)).epsilon(1e-10).scale(1e-3));
    CHECK(bessel_j(-0.5, 2.0) == doctest::Approx(std::sqrt(2 / (M_PI * 2.0)) * std::cos(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_j(1.0, 31.0), InputError);

    // (1/r d/dr)(r^-nu J_nu) = -r^(-nu-1) J_(nu+1)
    double nu = 1.25, r = 2.0, h = 1e-5;
    double fd = (normalized_bessel(nu, r + h) - normalized_bessel(nu, r - h)) / (2 * h) / r;
    CHECK(fd == doctest::Approx(-normalized_bessel(nu + 1, r)).epsilon(1e-6));

    double lam = 1.5;
    CHECK(scaled_bessel(lam, 2, 3.0) ==
          doctest::Approx(std::pow(2.0, lam) * std::tgamma(lam + 1) * std::cyl_bessel_j(lam + 2, 3.0) /
                          std::pow(3.0, lam + 2))
              .epsilon(1e-12));
}

TEST_CASE("kernel series") {
    KernelSeries1D s(Rational(1, 2), 6);
    CHECK(s.order() == 6);
    CHECK(static_cast<double>(s.a[1]) == doctest::Approx(0.5));
    CHECK(static_cast<double>(s.a[2]) == doctest::Approx(0.25));
    CHECK(s.recursion_defect() < 1e-15);
    CHECK(truncation_order(0) <= 1);
    CHECK(truncation_order(1) >= 18);
    CHECK_THROWS_AS(truncation_order(200), InputError);
}

TEST_CASE("kernel values") {
    std::array<double, 1> x{1.0};
    std::array<Complex, 1> y{Complex(1.0, 0)};
    CHECK(dunkl_kernel_z2d({0}, x, y).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    std::array<double, 2> origin{0, 0};
    std::array<Complex, 2> y2{Complex(0.3, 1.2), Complex(-2, 0.5)};
    CHECK(std::abs(dunkl_kernel_z2d({1, Rational(1, 2)}, origin, y2) - Complex(1, 0)) < 1e-15);

    for (double kappa : {0.0, 0.5, 1.0, 2.5})
        for (double xv : {-1.5, 0.4, 2.0})
            for (double yv : {-3.0, 0.7, 4.5}) {
                std::array<double, 1> px{xv};
                std::array<Complex, 1> py{Complex(0, -yv)};
                Complex value = dunkl_kernel_z2d({from_double(kappa)}, px, py);
                Complex expect = oracle::rank_one_kernel(kappa, xv, yv);
                CHECK(std::abs(value - expect) < 1e-12);
                CHECK(kernel_eigen_defect(from_double(kappa), xv, Complex(0, -yv)) < 1e-12);
            }
}

TEST_CASE("sphere pairing") {
    auto ctx = ctx_of("z2:d=2", {1, Rational(1, 2)});
    double lambda = ctx.constants().lambda.get_d();
    std::array<double, 2> zero{0, 0};
    Poly p = P("x1^2*x2^2 - 3*x2^2 + x1", 2);
    CHECK(sphere_pairing_numeric(ctx, p, zero).value.real() ==
          doctest::Approx(pizzetti_mean(ctx, p).get_d()).epsilon(1e-14));

    std::array<double, 2> y{1.1, -2.3};
    double r = norm(y);
    Complex one = sphere_pairing_numeric(ctx, Poly::constant(2, 1), y).value;
    CHECK(std::abs(one - Complex(oracle::normalized_j(lambda, r), 0)) < 1e-9);

    Poly h = clebsch_project_series(ctx, P("x1^2*x2", 2));
    Complex value = sphere_pairing_numeric(ctx, h, y).value;
    // h(-iy) = (-i)^3 h(y) for the cubic h
    double scaled = oracle::normalized_j(lambda + 3, r) * std::exp(std::lgamma(lambda + 1) - std::lgamma(lambda + 4)) /
                    8;
    Complex expect = Complex(0, 1) * h.evaluate(std::span<const double>(y)) * scaled;
    CHECK(std::abs(value - expect) < 1e-9);
    CHECK(sph1_compare(ctx, p, y).abs_residual() < 1e-9);
    CHECK_THROWS_AS(sph1_compare(ctx_of("b:d=2", {1, 1}), P("x1", 2), y), InputError);
}

TEST_CASE("gaussian transforms") {
    for (Rational k : {Rational(0), Rational(1, 2), Rational(3, 2)}) {
        auto ctx = ctx_of("z2:d=1", {k});
        for (double yv : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            std::array<double, 1> y{yv};
            Complex g = dunkl_transform_gauss_poly(ctx, Poly::constant(1, 1), y).value;
            CHECK(std::abs(g - Complex(std::exp(-yv * yv / 2), 0)) < 1e-10 * std::max(1.0, std::exp(-yv * yv / 2)));
        }
    }
    auto ctx = ctx_of("z2:d=1", {Rational(1, 2)});
    for (double yv : {0.5, 1.0, 2.0}) {
        std::array<double, 1> y{yv};
        Complex v = dunkl_transform_gauss_poly(ctx, P("x1", 1), y).value;
        CHECK(std::abs(v - Complex(0, -yv * std::exp(-yv * yv / 2))) < 1e-9);
        CHECK(hecke_compare(ctx, P("x1", 1), y).abs_residual() < 1e-9);
        CHECK(hermite_eigen_compare(ctx, P("x1^2", 1), y).abs_residual() < 1e-8);
    }
    auto two = ctx_of("z2:d=2", {Rational(3, 2), 1});
    std::array<double, 2> y{0.8, -1.9};
    CHECK(hecke_compare(two, P("x1^3*x2 - 2*x2^2 + 1/2", 2), y).abs_residual() < 1e-8);
    CHECK(hermite_eigen_compare(two, P("x1*x2^2", 2), y).abs_residual() < 1e-8);
}

TEST_CASE("truncation doubling") {
    auto ctx = ctx_of("z2:d=2", {Rational(1, 2), 1});
    std::array<double, 2> y{2.5, -3.5};
    Poly p = P("x1^2*x2 - x1", 2);
    auto base = dunkl_transform_gauss_poly(ctx, p, y);
    auto twice = dunkl_transform_gauss_poly(ctx, p, y, 2 * base.order);
    CHECK(std::abs(base.value - twice.value) <= 1e-12 * std::abs(twice.value));
    auto sb = sphere_pairing_numeric(ctx, p, y);
    auto st = sphere_pairing_numeric(ctx, p, y, 2 * sb.order);
    CHECK(std::abs(sb.value - st.value) <= 1e-12 * std::abs(st.value));
}

TEST_CASE("hankel transforms") {
    auto gauss = [](double r) { return std::exp(-r * r / 2); };
    for (double nu : {-0.5, 0.0, 1.5, 4.0}) {
        CHECK(hankel_numeric(gauss, nu, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
        for (double s : {0.5, 2.0, 5.0}) {
            CHECK(hankel_numeric(gauss, nu, s) == doctest::Approx(std::exp(-s * s / 2)).epsilon(1e-10));
            CHECK(hankel_gauss_fixed_point(nu, s).rel_residual() < 1e-10);
        }
    }
    auto ctx = ctx_of("z2:d=1", {Rational(3, 2)});
    std::array<double, 1> y{1.0};
    CHECK(bochner_compare(ctx, P("x1", 1), 1, y).abs_residual() < 1e-8);
}

TEST_CASE("multiplication rule") {
    CHECK(dtmul_compare(ctx_of("z2:d=1", {0}), Poly::constant(1, 1), 1.3).abs_residual() < 1e-10);
    CHECK(dtmul_compare(ctx_of("z2:d=1", {Rational(1, 2)}), Poly::constant(1, 1), 0.9).abs_residual() < 1e-8);
    CHECK(dtmul_compare(ctx_of("z2:d=1", {1}), P("x1^2", 1), 2.0).abs_residual() < 1e-8);
    CHECK_THROWS_AS(dtmul_compare(ctx_of("z2:d=2", {1, 1}), Poly::constant(2, 1), 1.0), InputError);
}
