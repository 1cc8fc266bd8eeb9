#include "dunkl/rootsys.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>

namespace dunkl {

namespace {

// Returns c with v = c * w, or nothing if v is not a multiple of w.
std::optional<Rational> multiple_of(const RationalVector& v, const RationalVector& w) {
    std::size_t k = 0;
    while (k < w.size() && w[k] == 0) ++k;
    if (k == w.size()) return std::nullopt;
    Rational c = v[k] / w[k];
    for (std::size_t i = 0; i < w.size(); ++i)
        if (v[i] != c * w[i]) return std::nullopt;
    return c;
}

std::string describe(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

RationalVector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
    RationalVector v(dim);
    v[i] = c;
    return v;
}

} // namespace

RationalVector reflect(const RationalVector& alpha, const RationalVector& x) {
    Rational n = dot(alpha, alpha);
    if (n == 0) throw InputError("cannot reflect in a zero root");
    Rational c = 2 * dot(alpha, x) / n;
    RationalVector out = x;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] -= c * alpha[i];
    return out;
}

RootSystem::RootSystem(std::size_t dim, std::vector<RationalVector> positive_roots,
                       const RationalVector& orbit_multiplicities, std::string name)
    : dim_(dim), name_(std::move(name)), roots_(std::move(positive_roots)) {
    if (dim_ == 0) throw InputError("root system dimension must be positive");
    for (const auto& r : roots_) {
        if (r.size() != dim_) throw InputError("root " + describe(r) + " has wrong dimension");
        if (dot(r, r) == 0) throw InputError("zero vector is not a root");
    }
    const std::size_t n = roots_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (multiple_of(roots_[i], roots_[j]))
                throw InputError("not reduced: " + describe(roots_[i]) + " and " + describe(roots_[j]) +
                                 " are proportional");

    // Closure is checked on root lines: r_alpha(beta) must lie on the line of
    // some positive root. Orbits are the components of the graph linking beta
    // to that root.
    DisjointSets sets(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            RationalVector image = reflect(roots_[a], roots_[b]);
            bool found = false;
            for (std::size_t g = 0; g < n && !found; ++g) {
                if (multiple_of(image, roots_[g])) {
                    sets.unite(b, g);
                    found = true;
                }
            }
            if (!found)
                throw InputError("not closed under reflections: r_" + describe(roots_[a]) + " maps " +
                                 describe(roots_[b]) + " to " + describe(image));
        }
    }
    std::vector<std::size_t> label(n, n);
    orbit_of_.assign(n, 0);
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = sets.find(i);
        if (label[r] == n) label[r] = orbits++;
        orbit_of_[i] = label[r];
    }
    orbit_mult_.assign(orbits, 0);
    set_multiplicities(orbit_multiplicities);
}

void RootSystem::set_multiplicities(const RationalVector& kappa) {
    RationalVector k = kappa;
    if (orbit_count() == 0 && k.size() <= 1) k.clear();
    if (k.size() == 1 && orbit_count() > 1) k.assign(orbit_count(), kappa.front());
    if (k.size() != orbit_count())
        throw InputError("expected " + std::to_string(orbit_count()) + " multiplicities (one per orbit), got " +
                         std::to_string(kappa.size()));
    for (const auto& v : k)
        if (v < 0) throw InputError("negative multiplicity " + v.get_str());
    orbit_mult_ = std::move(k);
    constants_ = dunkl::constants(*this);
}

RootSystem RootSystem::with_root_multiplicities(std::size_t dim, std::vector<RationalVector> positive_roots,
                                                const RationalVector& root_multiplicities, std::string name) {
    const std::size_t n = positive_roots.size();
    // Orbit structure does not depend on kappa; build with zeros first.
    RootSystem rs(dim, std::move(positive_roots), RationalVector{0}, std::move(name));
    if (root_multiplicities.size() != n)
        throw InputError("expected one multiplicity per root");
    RationalVector per_orbit(rs.orbit_count());
    std::vector<bool> seen(rs.orbit_count(), false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t o = rs.orbit_of_[i];
        if (!seen[o]) {
            per_orbit[o] = root_multiplicities[i];
            seen[o] = true;
        } else if (per_orbit[o] != root_multiplicities[i]) {
            throw InputError("multiplicity is not constant on the orbit of root " + describe(rs.roots_[i]));
        }
    }
    rs.set_multiplicities(per_orbit);
    return rs;
}

RootSystem RootSystem::with_multiplicities(const RationalVector& orbit_multiplicities) const {
    RootSystem copy = *this;
    copy.set_multiplicities(orbit_multiplicities);
    return copy;
}

bool RootSystem::is_coordinate_system() const {
    if (roots_.size() != dim_) return false;
    std::vector<bool> axis(dim_, false);
    for (const auto& r : roots_) {
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            if (r[i] != 0) {
                ++nonzero;
                where = i;
            }
        if (nonzero != 1 || axis[where]) return false;
        axis[where] = true;
    }
    return true;
}

Rational RootSystem::coordinate_multiplicity(std::size_t j) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i][j] != 0) return multiplicity(i);
    throw InputError("no root along axis " + std::to_string(j + 1));
}

DunklConstants constants(const RootSystem& rs) {
    Rational gamma = 0;
    for (std::size_t i = 0; i < rs.root_count(); ++i) gamma += rs.multiplicity(i);
    Rational lambda = gamma + Rational(static_cast<long>(rs.dim()) - 2) / 2;
    return {gamma, lambda};
}

std::vector<RationalVector> catalog_roots(std::string_view family, std::size_t dim) {
    std::vector<RationalVector> roots;
    if (dim == 0 || dim > 12) throw InputError("catalog dimension must be in 1..12");
    if (family == "z2") {
        for (std::size_t i = 0; i < dim; ++i) roots.push_back(unit(dim, i));
    } else if (family == "a") {
        if (dim < 2) throw InputError("a:d=n needs n >= 2");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                RationalVector v = unit(dim, i);
                v[j] = -1;
                roots.push_back(v);
            }
    } else if (family == "b" || family == "d") {
        if (dim < 2) throw InputError(std::string(family) + ":d=n needs n >= 2");
        if (family == "b")
            for (std::size_t i = 0; i < dim; ++i) roots.push_back(unit(dim, i));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                RationalVector minus = unit(dim, i), plus = unit(dim, i);
                minus[j] = -1;
                plus[j] = 1;
                roots.push_back(minus);
                roots.push_back(plus);
            }
    } else {
        throw InputError("unknown root system family '" + std::string(family) + "'");
    }
    return roots;
}

RootSystem build_root_system(std::string_view spec, const RationalVector& kappa) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw InputError("system must look like 'b:d=2' or 'custom:<file>'");
    std::string_view family = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    if (family == "custom") return load_custom_root_system(std::string(rest), kappa);
    if (!rest.starts_with("d=")) throw InputError("expected 'd=<n>' after '" + std::string(family) + ":'");
    std::size_t dim = 0;
    try {
        std::size_t used = 0;
        dim = std::stoul(std::string(rest.substr(2)), &used);
        if (used != rest.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InputError("bad dimension in '" + std::string(spec) + "'");
    }
    RationalVector k = kappa.empty() ? RationalVector{0} : kappa;
    return RootSystem(dim, catalog_roots(family, dim), k, std::string(spec));
}

RootSystem load_custom_root_system(const std::string& path, const RationalVector& kappa) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open root system file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    auto as_rational = [](const nlohmann::json& v) -> Rational {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw InputError("root coordinates and multiplicities must be integers or \"p/q\" strings");
    };
    try {
        std::size_t dim = j.at("dim").get<std::size_t>();
        std::vector<RationalVector> roots;
        for (const auto& r : j.at("roots")) {
            RationalVector v;
            for (const auto& c : r) v.push_back(as_rational(c));
            roots.push_back(std::move(v));
        }
        std::string name = "custom:" + path;
        if (!kappa.empty()) return RootSystem(dim, std::move(roots), kappa, name);
        RationalVector mult;
        if (j.contains("multiplicities"))
            for (const auto& m : j.at("multiplicities")) mult.push_back(as_rational(m));
        if (mult.empty()) mult.push_back(0);
        if (mult.size() == roots.size() && roots.size() > 1)
            return RootSystem::with_root_multiplicities(dim, std::move(roots), mult, name);
        return RootSystem(dim, std::move(roots), mult, name);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed root system file '" + path + "': " + e.what());
    }
}

double weight_eval(const RootSystem& rs, std::span<const double> x) {
    if (x.size() != rs.dim()) throw InputError("point has wrong dimension");
    double w = 1.0;
    for (std::size_t i = 0; i < rs.root_count(); ++i) {
        const Rational& k = rs.multiplicity(i);
        if (k == 0) continue;
        double s = 0.0;
        for (std::size_t c = 0; c < x.size(); ++c) s += rs.positive_roots()[i][c].get_d() * x[c];
        w *= std::pow(std::abs(s), k.get_d());
    }
    return w;
}

} // namespace dunkl
