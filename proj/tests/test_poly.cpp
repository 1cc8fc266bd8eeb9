#include "dunkl/poly.hpp"
#include "dunkl/random.hpp"
#include "dunkl/rootsys.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t dim) { return parse_poly(text, dim); }
} // namespace

TEST_CASE("ring arithmetic") {
    CHECK((P("x1+x2", 2) * P("x1-x2", 2)) == P("x1^2-x2^2", 2));
    CHECK(P("x1-3", 2) + Poly(2) == P("x1-3", 2));
    CHECK(P("1/2*x1", 1) * P("2/3*x1", 1) == P("1/3*x1^2", 1));
    CHECK((P("x1", 2) - P("x1", 2)).is_zero());
    CHECK_THROWS(P("x1", 2) + P("x1", 3));

    Sampler s(3);
    for (int t = 0; t < 30; ++t) {
        Poly a = s.general(3, 3), b = s.general(3, 3), c = s.general(3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == Poly(3));
    }
}

TEST_CASE("derivatives") {
    CHECK(partial(P("x1^3", 1), 0) == P("3*x1^2", 1));
    CHECK(partial_derivative(P("x1*x2", 2), {1, 1}) == P("x1+x2", 2));
    CHECK(partial_derivative(Poly::constant(2, 7), {2, 5}).is_zero());
    CHECK(classical_laplacian(P("x1^2+x2^2", 2)) == Poly::constant(2, 4));
    CHECK(classical_laplacian(P("x1^2-x2^2", 2)).is_zero());
    CHECK(classical_laplacian(P("x1*x2", 2)).is_zero());
}

TEST_CASE("reflection substitution") {
    CHECK(compose_reflection(P("x1^2", 1), {1}) == P("x1^2", 1));
    CHECK(compose_reflection(P("x1", 2), {1, -1}) == P("x2", 2));
    CHECK(compose_reflection(P("x1*x2^2", 2), {0, 1}) == P("x1*x2^2", 2));
    // a non-permutation reflection goes through the dense path
    CHECK(compose_reflection(P("x1", 2), {1, 2}) == P("3/5*x1-4/5*x2", 2));

    Sampler s(5);
    for (int t = 0; t < 20; ++t) {
        Poly p = s.general(3, 4);
        for (RationalVector alpha : {RationalVector{1, -1, 0}, RationalVector{1, 2, Rational(1, 3)}})
            CHECK(compose_reflection(compose_reflection(p, alpha), alpha) == p);
    }
}

TEST_CASE("division by a linear form") {
    CHECK(divide_exact_by_linear(P("x1^2-x2^2", 2), {1, -1}) == P("x1+x2", 2));
    CHECK(divide_exact_by_linear(pow(P("x1-x2", 2), 3), {1, -1}) == pow(P("x1-x2", 2), 2));
    CHECK_THROWS_AS(divide_exact_by_linear(P("x1", 2), {1, -1}), InvariantViolation);

    Sampler s(9);
    for (int t = 0; t < 30; ++t) {
        Poly qq = s.general(3, 3);
        RationalVector alpha = s.vector(3);
        alpha[2] = s.small_rational();
        CHECK(divide_exact_by_linear(qq * Poly::linear_form(alpha), alpha) == qq);
    }
}

TEST_CASE("reflection differences divide") {
    Sampler s(17);
    for (auto [fam, d] : {std::pair{"z2", 3}, {"a", 3}, {"b", 2}, {"b", 3}, {"d", 4}}) {
        auto roots = catalog_roots(fam, static_cast<std::size_t>(d));
        for (int t = 0; t < 5; ++t) {
            Poly p = s.general(static_cast<std::size_t>(d), 4);
            for (const auto& alpha : roots) {
                Poly q = divide_exact_by_linear(p - compose_reflection(p, alpha), alpha);
                CHECK(q * Poly::linear_form(alpha) == p - compose_reflection(p, alpha));
            }
        }
    }
}

TEST_CASE("division by the norm") {
    Poly r2 = Poly::norm_squared(3);
    Sampler s(23);
    for (int t = 0; t < 20; ++t) {
        Poly q = s.homogeneous(3, 3);
        CHECK(divide_exact_by_norm_squared(q * r2) == q);
    }
    CHECK_FALSE(try_divide_by_norm_squared(P("x1^2", 3)).has_value());
    CHECK_THROWS_AS(divide_exact_by_norm_squared(P("x1*x2", 2)), InvariantViolation);
}

TEST_CASE("homogeneous components and Euler") {
    auto comps = homogeneous_components(P("x1^2+x2", 2));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 1);
    CHECK(comps[0].second == P("x2", 2));
    CHECK(comps[1].second == P("x1^2", 2));
    CHECK(homogeneous_components(Poly(2)).empty());
    Sampler s(29);
    for (int t = 0; t < 20; ++t) {
        Poly p = s.general(3, 5);
        Poly sum(3);
        for (const auto& [m, pm] : homogeneous_components(p)) {
            CHECK(pm.is_homogeneous());
            CHECK(euler(pm) == pm * Rational(m));
            sum += pm;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("text form") {
    Poly p = P("3/2*x1^2*x2 - x3", 3);
    CHECK(p.size() == 2);
    CHECK(format(p) == "3/2*x1^2*x2 - x3");
    CHECK(format(P("x1 + x1", 1)) == "2*x1");
    CHECK(format(Poly(2)) == "0");
    CHECK(format(P("-x2 + 1 - 1/3*x1*x2^0", 2)) == "-1/3*x1 - x2 + 1");
    CHECK_THROWS_AS(P("x0", 2), InputError);
    CHECK_THROWS_AS(P("x3", 2), InputError);
    CHECK_THROWS_AS(P("2*", 2), InputError);
    CHECK_THROWS_AS(P("x1^", 2), InputError);
    CHECK_THROWS_AS(P("1/0*x1", 2), InputError);

    Sampler s(31);
    for (int t = 0; t < 30; ++t) {
        Poly q = s.general(4, 5);
        CHECK(parse_poly(format(q), 4) == q);
    }
}

TEST_CASE("evaluation") {
    Poly p = P("x1^2*x2 - 1/2", 2);
    CHECK(p.evaluate(RationalVector{2, 3}) == Rational(23, 2));
    std::array<double, 2> x{2.0, 3.0};
    CHECK(p.evaluate(std::span<const double>(x)) == doctest::Approx(11.5));
    CHECK(monomials_of_degree(3, 2).size() == 6);
}
