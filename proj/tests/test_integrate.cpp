#include "dunkl/harmonic.hpp"
#include "dunkl/integrate.hpp"
#include "dunkl/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t dim) { return parse_poly(text, dim); }
DunklContext ctx_of(const char* spec, RationalVector kappa) { return DunklContext(build_root_system(spec, kappa)); }

Poly even_monomial(const std::vector<unsigned>& half) {
    Exponent e;
    for (std::size_t i = 0; i < half.size(); ++i) e[i] = static_cast<std::uint8_t>(2 * half[i]);
    return Poly::monomial(half.size(), e);
}
} // namespace

TEST_CASE("pizzetti examples") {
    auto flat = ctx_of("z2:d=2", {});
    CHECK(pizzetti_mean(flat, Poly::constant(2, 1)) == 1);
    CHECK(pizzetti_mean(flat, P("x1^2", 2)) == Rational(1, 2));
    CHECK(pizzetti_mean(flat, P("x1^3*x2^2 + x1", 2)) == 0);
    CHECK(pizzetti_mean(ctx_of("z2:d=2", {1, 0}), P("x1^2", 2)) == Rational(3, 4));
    // the mean of ||x||^2 over the unit sphere is 1; the alternating series gives -1
    auto ctx = ctx_of("b:d=3", {1, 2});
    CHECK(pizzetti_mean(ctx, Poly::norm_squared(3)) == 1);
    CHECK(pizzetti_mean_alternating(ctx, Poly::norm_squared(3)) == -1);
}

TEST_CASE("sphere oracle examples") {
    CHECK(sphere_oracle_z2d({1, 2}, {0, 0}) == 1);
    CHECK(sphere_oracle_z2d({0, 0}, {1, 0}) == Rational(1, 2));
    CHECK(sphere_oracle_z2d({0, 0, 0}, {1, 0, 0}) == Rational(1, 3));
    CHECK_THROWS_AS(sphere_oracle_z2d({0, 0}, {1}), InputError);
}

TEST_CASE("pizzetti against the Dirichlet integral") {
    std::vector<RationalVector> kappas = {{Rational(1, 2), 2, 0}, {1, 1, Rational(3, 2)}, {0, 0, 0}};
    for (const auto& kappa : kappas) {
        auto ctx = ctx_of("z2:d=3", kappa);
        std::vector<double> kd;
        for (const auto& k : kappa) kd.push_back(k.get_d());
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned b = 0; a + b <= 4; ++b)
                for (unsigned c = 0; a + b + c <= 4; ++c) {
                    Rational mean = pizzetti_mean(ctx, even_monomial({a, b, c}));
                    CHECK(mean == sphere_oracle_z2d(kappa, {a, b, c}));
                    CHECK(mean.get_d() == doctest::Approx(oracle::sphere_mean_gamma(kd, {a, b, c})).epsilon(1e-13));
                }
    }
}

TEST_CASE("classical pizzetti means") {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto ctx = DunklContext(build_root_system("z2:d=" + std::to_string(d), {}));
        for (unsigned a = 0; a <= 4; ++a) {
            std::vector<unsigned> half(d, 0);
            half[0] = a;
            Rational expect = oracle::rising(Rational(1, 2), a) / oracle::rising(Rational(long(d)) / 2, a);
            CHECK(pizzetti_mean(ctx, even_monomial(half)) == expect);
        }
    }
}

TEST_CASE("invariance under the group") {
    Sampler s(113);
    auto ctx = ctx_of("b:d=3", {Rational(1, 2), 2});
    for (int t = 0; t < 10; ++t) {
        Poly p = s.general(3, 6);
        Rational mean = pizzetti_mean(ctx, p);
        for (std::size_t i = 0; i < ctx.root_count(); ++i) CHECK(pizzetti_mean(ctx, ctx.reflect(i, p)) == mean);
    }
}

TEST_CASE("gaussian moments") {
    auto ctx = ctx_of("a:d=3", {Rational(1, 3)});
    CHECK(gaussian_moment(ctx, Poly::constant(3, 1)) == 1);
    CHECK(gaussian_moment(ctx, P("x1^3 - x2", 3)) == 0);
    CHECK(gaussian_moment(ctx, Poly::norm_squared(3)) == 3 + 2 * ctx.constants().gamma);
    RationalVector kappa{Rational(1, 2), 2};
    auto z = ctx_of("z2:d=2", kappa);
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b)
            CHECK(gaussian_moment(z, even_monomial({a, b})) == oracle::gaussian_moment_z2(kappa, {a, b}));
}

TEST_CASE("mean value property") {
    CHECK(mean_value_check(ctx_of("z2:d=2", {}), Poly::constant(2, Rational(-7, 3))) == Rational(-7, 3));
    CHECK(mean_value_check(ctx_of("z2:d=2", {}), P("x1^2-x2^2", 2)) == 0);
    CHECK_THROWS_AS(mean_value_check(ctx_of("z2:d=2", {}), P("x1^2", 2)), InputError);
    Sampler s(127);
    for (auto [spec, kappa] : {std::pair<const char*, RationalVector>{"a:d=3", {1}},
                               {"b:d=2", {Rational(1, 2), 2}},
                               {"d:d=4", {Rational(3, 2)}}}) {
        auto ctx = ctx_of(spec, kappa);
        for (unsigned m = 0; m <= 4; ++m) {
            Poly h = clebsch_project_series(ctx, s.homogeneous(ctx.dim(), m));
            CHECK(mean_value_check(ctx, h) == h.constant_term());
        }
    }
}
