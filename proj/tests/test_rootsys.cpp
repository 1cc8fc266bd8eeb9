#include "dunkl/random.hpp"
#include "dunkl/rootsys.hpp"

#include <doctest.h>

#include <array>
#include <string>

using namespace dunkl;

namespace {
RationalVector q(std::initializer_list<Rational> v) { return RationalVector(v); }

bool contains_up_to_sign(const std::vector<RationalVector>& roots, const RationalVector& v) {
    for (const auto& r : roots) {
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < r.size(); ++i) {
            plus = plus && r[i] == v[i];
            minus = minus && r[i] == -v[i];
        }
        if (plus || minus) return true;
    }
    return false;
}
} // namespace

TEST_CASE("rank one constants") {
    auto rs = build_root_system("z2:d=1", q({Rational(1, 2)}));
    CHECK(rs.root_count() == 1);
    CHECK(rs.constants().gamma == Rational(1, 2));
    CHECK(rs.constants().lambda == 0);
}

TEST_CASE("b2 with two orbits") {
    auto rs = build_root_system("b:d=2", q({1, 2}));
    CHECK(rs.orbit_count() == 2);
    CHECK(rs.constants().gamma == 6);
    CHECK(rs.constants().lambda == 6);
}

TEST_CASE("catalog constants") {
    CHECK(build_root_system("z2:d=3", {}).constants().lambda == Rational(1, 2));
    auto z = build_root_system("z2:d=2", q({1, Rational(3, 2)}));
    CHECK(z.constants().gamma == Rational(5, 2));
    CHECK(z.constants().lambda == Rational(5, 2));
    auto a = build_root_system("a:d=3", q({1}));
    CHECK(a.root_count() == 3);
    CHECK(a.orbit_count() == 1);
    CHECK(a.constants().lambda == Rational(7, 2));
    auto b3 = build_root_system("b:d=3", q({1, 1}));
    CHECK(b3.root_count() == 9);
    auto d4 = build_root_system("d:d=4", q({1}));
    CHECK(d4.root_count() == 12);
    CHECK(d4.orbit_count() == 1);
    CHECK(d4.constants().lambda == 13);
}

TEST_CASE("rejected systems") {
    std::vector<RationalVector> open = {q({1, 0}), q({0, 1}), q({1, 1})};
    CHECK_THROWS_AS(RootSystem(2, open, q({1})), InputError);
    std::vector<RationalVector> doubled = {q({1}), q({2})};
    CHECK_THROWS_AS(RootSystem(1, doubled, q({1})), InputError);
    CHECK_THROWS_AS(build_root_system("z2:d=1", q({-1})), InputError);
    CHECK_THROWS_AS(build_root_system("b:d=2", q({1, 2, 3})), InputError);
    CHECK_THROWS_AS(build_root_system("e:d=8", {}), InputError);
    CHECK_THROWS_AS(build_root_system("z2:d=0", {}), InputError);
    auto b2 = catalog_roots("b", 2);
    CHECK_THROWS_AS(RootSystem::with_root_multiplicities(2, b2, q({1, 2, 1, 1})), InputError);
}

TEST_CASE("custom files") {
    auto rs = build_root_system("custom:" + std::string(TEST_DATA_DIR) + "/b2_custom.json", {});
    CHECK(rs.constants().gamma == 6);
    CHECK_THROWS_AS(build_root_system("custom:" + std::string(TEST_DATA_DIR) + "/not_closed.json", {}),
                    InputError);
    CHECK_THROWS_AS(build_root_system("custom:/nonexistent.json", {}), InputError);
}

TEST_CASE("reflect") {
    CHECK(reflect(q({1}), q({3})) == q({-3}));
    CHECK(reflect(q({1, -1}), q({Rational(2, 7), 5})) == q({5, Rational(2, 7)}));
    CHECK_THROWS_AS(reflect(q({0, 0}), q({1, 1})), InputError);

    Sampler s(11);
    for (int t = 0; t < 50; ++t) {
        RationalVector alpha = s.vector(3);
        alpha[0] = s.small_rational();
        auto x = s.vector(3), y = s.vector(3);
        CHECK(reflect(alpha, reflect(alpha, x)) == x);
        CHECK(dot(reflect(alpha, x), reflect(alpha, y)) == dot(x, y));
        Rational c = s.small_rational();
        c = c < 0 ? -c : c;
        RationalVector scaled = alpha;
        for (auto& v : scaled) v *= c;
        CHECK(reflect(scaled, x) == reflect(alpha, x));
    }
}

TEST_CASE("catalog closure is exhaustive") {
    const std::array<std::pair<const char*, std::size_t>, 6> fams = {
        {{"z2", 3}, {"a", 3}, {"a", 4}, {"b", 2}, {"b", 3}, {"d", 4}}};
    for (auto [fam, d] : fams) {
        auto roots = catalog_roots(fam, d);
        for (const auto& alpha : roots)
            for (const auto& beta : roots) CHECK(contains_up_to_sign(roots, reflect(alpha, beta)));
    }
}

TEST_CASE("orbits and multiplicities") {
    auto rs = build_root_system("b:d=3", q({Rational(1, 2), 2}));
    for (std::size_t i = 0; i < rs.root_count(); ++i) {
        const auto& r = rs.positive_roots()[i];
        int nonzero = 0;
        for (const auto& c : r) nonzero += c != 0;
        CHECK(rs.multiplicity(i) == (nonzero == 1 ? Rational(1, 2) : Rational(2)));
    }
    CHECK(constants(rs).lambda == rs.constants().lambda);
    CHECK(rs.constants().lambda >= Rational(-1, 2));
    CHECK(build_root_system("z2:d=1", {}).constants().lambda == Rational(-1, 2));
}

TEST_CASE("coordinate systems") {
    auto z = build_root_system("z2:d=2", q({1, Rational(3, 2)}));
    CHECK(z.is_coordinate_system());
    CHECK(z.coordinate_multiplicity(1) == Rational(3, 2));
    CHECK_FALSE(build_root_system("b:d=2", q({1})).is_coordinate_system());
}

TEST_CASE("weight") {
    auto zero = build_root_system("b:d=2", {});
    std::array<double, 2> x{0.3, -1.7};
    CHECK(weight_eval(zero, x) == doctest::Approx(1.0));
    auto z = build_root_system("z2:d=1", q({2}));
    std::array<double, 1> three{3.0};
    CHECK(weight_eval(z, three) == doctest::Approx(9.0));
    auto a = build_root_system("a:d=3", q({1}));
    std::array<double, 3> wall{1.0, 1.0, 2.0};
    CHECK(weight_eval(a, wall) == 0.0);
}
