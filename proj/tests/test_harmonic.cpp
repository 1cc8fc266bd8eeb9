#include "dunkl/harmonic.hpp"
#include "dunkl/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t dim) { return parse_poly(text, dim); }
DunklContext ctx_of(const char* spec, RationalVector kappa) { return DunklContext(build_root_system(spec, kappa)); }

const std::vector<std::pair<const char*, RationalVector>> kSystems = {
    {"z2:d=1", {Rational(1, 2)}}, {"z2:d=3", {1, Rational(1, 2), 0}}, {"a:d=3", {Rational(3, 2)}},
    {"b:d=2", {1, 2}},           {"b:d=3", {0, 1}},                   {"d:d=4", {Rational(1, 2)}}};
} // namespace

TEST_CASE("harmonic predicate") {
    CHECK(is_k_harmonic(ctx_of("z2:d=2", {}), P("x1^2-x2^2", 2)));
    CHECK_FALSE(is_k_harmonic(ctx_of("b:d=2", {1, 1}), Poly::norm_squared(2)));
    Rational k(3, 2);
    CHECK_FALSE(is_k_harmonic(ctx_of("z2:d=1", {k}), P("x1^2", 1) - Poly::constant(1, (1 + 2 * k) / 2)));
    CHECK(is_k_harmonic(ctx_of("z2:d=1", {k}), P("x1", 1)));
}

TEST_CASE("series projection examples") {
    CHECK(clebsch_project_series(ctx_of("z2:d=2", {}), P("x1^2", 2)) == P("1/2*x1^2 - 1/2*x2^2", 2));
    for (Rational k : {Rational(0), Rational(1, 2), Rational(3)})
        CHECK(clebsch_project_series(ctx_of("z2:d=1", {k}), P("x1^2", 1)).is_zero());
    auto ctx = ctx_of("b:d=2", {1, 2});
    Poly h = clebsch_project_series(ctx, P("x1^3*x2", 2));
    CHECK(clebsch_project_series(ctx, h) == h);
    CHECK_THROWS_AS(clebsch_project_series(ctx, P("x1 + x2^2", 2)), InputError);
}

TEST_CASE("projection is harmonic and idempotent") {
    Sampler s(97);
    for (const auto& [spec, kappa] : kSystems) {
        auto ctx = ctx_of(spec, kappa);
        for (unsigned m = 0; m <= 5; ++m) {
            Poly p = s.homogeneous(ctx.dim(), m);
            Poly h = clebsch_project_series(ctx, p);
            CHECK(is_k_harmonic(ctx, h));
            CHECK(clebsch_project_series(ctx, h) == h);
        }
    }
}

TEST_CASE("maxwell route") {
    Sampler s(101);
    for (const auto& [spec, kappa] : kSystems) {
        auto ctx = ctx_of(spec, kappa);
        for (unsigned m = 0; m <= 4; ++m) {
            Poly p = s.homogeneous(ctx.dim(), m);
            auto mx = clebsch_project_maxwell(ctx, p);
            if (ctx.constants().lambda == 0 && m >= 1) {
                CHECK_FALSE(mx.value.has_value());
                CHECK_FALSE(mx.note.empty());
            } else {
                REQUIRE(mx.value.has_value());
                CHECK(*mx.value == clebsch_project_series(ctx, p));
            }
        }
    }
    auto ctx = ctx_of("b:d=3", {1, 1});
    CHECK(*clebsch_project_maxwell(ctx, Poly::constant(3, 5)).value == Poly::constant(3, 5));
    // the rank-one lambda = 0 case has no Maxwell form
    CHECK_FALSE(clebsch_project_maxwell(ctx_of("z2:d=1", {Rational(1, 2)}), P("x1", 1)).value.has_value());
}

TEST_CASE("decomposition") {
    auto flat = ctx_of("z2:d=2", {});
    auto dec = harmonic_decompose(flat, P("x1^2", 2));
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].j == 0);
    CHECK(dec.components[0].h == P("1/2*x1^2 - 1/2*x2^2", 2));
    CHECK(dec.components[1].j == 1);
    CHECK(dec.components[1].h == Poly::constant(2, Rational(1, 2)));

    auto r2 = harmonic_decompose(flat, Poly::norm_squared(2));
    REQUIRE(r2.components.size() == 1);
    CHECK(r2.components[0].j == 1);
    CHECK(r2.components[0].h == Poly::constant(2, 1));

    auto h = harmonic_decompose(flat, P("x1*x2", 2));
    REQUIRE(h.components.size() == 1);
    CHECK(h.components[0].j == 0);

    Sampler s(103);
    for (const auto& [spec, kappa] : kSystems) {
        auto ctx = ctx_of(spec, kappa);
        for (unsigned m = 0; m <= 6; ++m) {
            Poly p = s.homogeneous(ctx.dim(), m);
            auto d = harmonic_decompose(ctx, p);
            CHECK(recompose(d, ctx.dim()) == p);
            for (const auto& c : d.components) CHECK(is_k_harmonic(ctx, c.h));
        }
    }
}

TEST_CASE("harmonic dimensions") {
    CHECK(harmonic_dimension(2, 0) == 1);
    CHECK(harmonic_dimension(2, 3) == 2);
    CHECK(harmonic_dimension(3, 2) == 5);
    CHECK(harmonic_dimension(1, 2) == 0);
    CHECK(harmonic_dimension(4, 2) == 9);
    auto ctx = ctx_of("b:d=3", {1, Rational(1, 2)});
    for (unsigned m = 0; m <= 3; ++m) {
        std::vector<Poly> images;
        for (const auto& e : monomials_of_degree(3, m))
            images.push_back(clebsch_project_series(ctx, Poly::monomial(3, e)));
        CHECK(rational_rank(images) == harmonic_dimension(3, m));
    }
    CHECK(rational_rank({P("x1", 2), P("2*x1", 2), P("x2", 2)}) == 2);
}

TEST_CASE("hermite polynomials") {
    Rational k(5, 2);
    auto one = ctx_of("z2:d=1", {k});
    CHECK(hermite_poly(one, P("x1^2", 1)) == P("x1^2", 1) - Poly::constant(1, (1 + 2 * k) / 2));
    CHECK(hermite_poly(one, Poly::constant(1, 1)) == Poly::constant(1, 1));
    for (Rational kk : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
        auto ctx = ctx_of("z2:d=1", {kk});
        for (unsigned m = 0; m <= 8; ++m) {
            Exponent e;
            e[0] = static_cast<std::uint8_t>(m);
            CHECK(hermite_poly(ctx, Poly::monomial(1, e)) == oracle::rank_one_hermite(m, kk));
        }
    }
    auto ctx = ctx_of("d:d=4", {1});
    Sampler s(107);
    Poly h = clebsch_project_series(ctx, s.homogeneous(4, 3));
    CHECK(hermite_poly(ctx, h) == h);
}

TEST_CASE("rodrigues and gaussian derivatives") {
    Sampler s(109);
    for (const auto& [spec, kappa] : kSystems) {
        auto ctx = ctx_of(spec, kappa);
        CHECK(rodrigues_residual(ctx, Poly::constant(ctx.dim(), 1)).is_zero());
        for (unsigned m = 0; m <= 4; ++m) {
            Poly p = s.homogeneous(ctx.dim(), m);
            CHECK(rodrigues_residual(ctx, p).is_zero());
            CHECK(diffgauss_residual(ctx, p).is_zero());
        }
    }
}
