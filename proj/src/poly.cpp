#include "dunkl/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

namespace dunkl {

namespace {

void check_exponent_room(unsigned current, unsigned add) {
    if (current + add > std::numeric_limits<std::uint8_t>::max())
        throw InputError("variable exponent exceeds 255");
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
    Exponent out;
    for (std::size_t i = 0; i < kMaxDim; ++i) {
        check_exponent_room(a[i], b[i]);
        out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    }
    return out;
}

} // namespace

Poly::Poly(std::size_t dim) : dim_(dim) {
    if (dim == 0 || dim > kMaxDim)
        throw InputError("polynomial dimension must be in 1.." + std::to_string(kMaxDim));
}

Poly Poly::constant(std::size_t dim, const Rational& c) {
    Poly p(dim);
    p.add_term(Exponent{}, c);
    return p;
}

Poly Poly::variable(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InputError("variable index out of range");
    Exponent e;
    e[index] = 1;
    return monomial(dim, e);
}

Poly Poly::monomial(std::size_t dim, const Exponent& exp, const Rational& c) {
    Poly p(dim);
    for (std::size_t i = dim; i < kMaxDim; ++i)
        if (exp[i] != 0) throw InputError("exponent vector longer than dimension");
    p.add_term(exp, c);
    return p;
}

Poly Poly::linear_form(const RationalVector& alpha) {
    Poly p(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Exponent e;
        e[i] = 1;
        p.add_term(e, alpha[i]);
    }
    return p;
}

Poly Poly::norm_squared(std::size_t dim) {
    Poly p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Exponent e;
        e[i] = 2;
        p.add_term(e, 1);
    }
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Rational Poly::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_dim(const Poly& o) const {
    if (dim_ != o.dim_)
        throw InputError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
}

Poly& Poly::operator+=(const Poly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_dim(b);
    Poly out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Rational Poly::evaluate(const RationalVector& x) const {
    if (x.size() != dim_) throw InputError("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < dim_; ++i)
            if (e[i] != 0) t *= power(x[i], e[i]);
        sum += t;
    }
    return sum;
}

double Poly::evaluate(std::span<const double> x) const {
    if (x.size() != dim_) throw InputError("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < dim_; ++i)
            if (e[i] != 0) t *= std::pow(x[i], static_cast<int>(e[i]));
        sum += t;
    }
    return sum;
}

Poly pow(const Poly& p, unsigned n) {
    Poly out = Poly::constant(p.dim(), 1);
    for (unsigned i = 0; i < n; ++i) out = out * p;
    return out;
}

Poly partial(const Poly& p, std::size_t j) {
    if (j >= p.dim()) throw InputError("partial derivative index out of range");
    Poly out(p.dim());
    for (const auto& [e, c] : p.terms()) {
        if (e[j] == 0) continue;
        Exponent d = e;
        d[j] -= 1;
        out.add_term(d, c * e[j]);
    }
    return out;
}

Poly partial_derivative(const Poly& p, const RationalVector& xi) {
    if (xi.size() != p.dim()) throw InputError("direction has wrong dimension");
    Poly out(p.dim());
    for (std::size_t j = 0; j < xi.size(); ++j)
        if (xi[j] != 0) out += partial(p, j) * xi[j];
    return out;
}

Poly classical_laplacian(const Poly& p) {
    Poly out(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) out += partial(partial(p, j), j);
    return out;
}

Poly euler(const Poly& p) {
    Poly out(p.dim());
    for (const auto& [e, c] : p.terms()) out.add_term(e, c * e.degree());
    return out;
}

std::vector<std::pair<unsigned, Poly>> homogeneous_components(const Poly& p) {
    std::map<unsigned, Poly> parts;
    for (const auto& [e, c] : p.terms()) {
        auto [it, _] = parts.try_emplace(e.degree(), p.dim());
        it->second.add_term(e, c);
    }
    std::vector<std::pair<unsigned, Poly>> out;
    for (auto& [d, q] : parts) out.emplace_back(d, std::move(q));
    return out;
}

Poly homogeneous_part(const Poly& p, unsigned m) {
    Poly out(p.dim());
    for (const auto& [e, c] : p.terms())
        if (e.degree() == m) out.add_term(e, c);
    return out;
}

// ---------------------------------------------------------------------------
// Reflections

ReflectionMap::ReflectionMap(RationalVector alpha) : alpha_(std::move(alpha)) {
    const std::size_t d = alpha_.size();
    if (d == 0 || d > kMaxDim) throw InputError("root has unsupported dimension");
    Rational norm2 = dot(alpha_, alpha_);
    if (norm2 == 0) throw InputError("zero root");
    // Row i of the matrix gives (r_alpha x)_i = x_i - 2 alpha_i <alpha,x> / |alpha|^2.
    matrix_.assign(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            matrix_[i][k] = (i == k ? Rational(1) : Rational(0)) - 2 * alpha_[i] * alpha_[k] / norm2;

    signed_perm_ = true;
    perm_.assign(d, 0);
    sign_.assign(d, 1);
    for (std::size_t i = 0; i < d && signed_perm_; ++i) {
        int nonzero = 0;
        for (std::size_t k = 0; k < d; ++k) {
            const Rational& v = matrix_[i][k];
            if (v == 0) continue;
            ++nonzero;
            if (v == 1 || v == -1) {
                perm_[i] = k;
                sign_[i] = v > 0 ? 1 : -1;
            } else {
                signed_perm_ = false;
            }
        }
        if (nonzero != 1) signed_perm_ = false;
    }
}

Poly ReflectionMap::apply(const Poly& p) const {
    const std::size_t d = alpha_.size();
    if (p.dim() != d) throw InputError("root and polynomial dimensions differ");
    Poly out(d);
    if (signed_perm_) {
        for (const auto& [e, c] : p.terms()) {
            Exponent image;
            int sign = 1;
            for (std::size_t i = 0; i < d; ++i) {
                image[perm_[i]] = e[i];
                if (sign_[i] < 0 && (e[i] & 1)) sign = -sign;
            }
            out.add_term(image, sign > 0 ? c : Rational(-c));
        }
        return out;
    }
    // General case: expand products of the substituted linear forms, caching
    // their powers per variable.
    std::vector<Poly> rows;
    rows.reserve(d);
    for (std::size_t i = 0; i < d; ++i) rows.push_back(Poly::linear_form(matrix_[i]));
    std::vector<std::vector<Poly>> powers(d);
    auto row_power = [&](std::size_t i, unsigned n) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(d, 1));
        while (cache.size() <= n) cache.push_back(cache.back() * rows[i]);
        return cache[n];
    };
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(d, c);
        for (std::size_t i = 0; i < d; ++i)
            if (e[i] != 0) term = term * row_power(i, e[i]);
        out += term;
    }
    return out;
}

Poly compose_reflection(const Poly& p, const RationalVector& alpha) {
    return ReflectionMap(alpha).apply(p);
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

// Divides p by a divisor of the form lead * x_pivot^k + (terms of lower
// x_pivot-degree). Under a lex order led by x_pivot this is the normal form
// computation against a one-element Groebner basis, so the remainder is zero
// exactly when the divisor divides p.
std::optional<Poly> divide_with_pivot(const Poly& p, const Poly& divisor, std::size_t pivot) {
    unsigned lead_deg = 0;
    Rational lead;
    for (const auto& [e, c] : divisor.terms()) {
        if (e[pivot] > lead_deg) {
            lead_deg = e[pivot];
            lead = c;
        }
    }
    struct PivotFirst {
        std::size_t pivot;
        bool operator()(const Exponent& a, const Exponent& b) const {
            if (a[pivot] != b[pivot]) return a[pivot] > b[pivot];
            return a.e > b.e;
        }
    };
    std::map<Exponent, Rational, PivotFirst> work(PivotFirst{pivot});
    for (const auto& [e, c] : p.terms()) work.emplace(e, c);

    Poly quotient(p.dim());
    while (!work.empty()) {
        auto it = work.begin();
        if (it->first[pivot] < lead_deg) return std::nullopt;
        Exponent qe = it->first;
        qe[pivot] = static_cast<std::uint8_t>(qe[pivot] - lead_deg);
        Rational qc = it->second / lead;
        quotient.add_term(qe, qc);
        for (const auto& [de, dc] : divisor.terms()) {
            Exponent target = add_exponents(qe, de);
            Rational delta = -qc * dc;
            auto [wit, inserted] = work.try_emplace(target, delta);
            if (!inserted) {
                wit->second += delta;
                if (wit->second == 0) work.erase(wit);
            }
        }
    }
    return quotient;
}

} // namespace

Poly divide_exact_by_linear(const Poly& p, const RationalVector& alpha) {
    if (alpha.size() != p.dim()) throw InputError("root and polynomial dimensions differ");
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (abs(alpha[i]) > abs(alpha[pivot])) pivot = i;
    if (alpha[pivot] == 0) throw InputError("zero root");
    auto q = divide_with_pivot(p, Poly::linear_form(alpha), pivot);
    if (!q) throw InvariantViolation("nonzero remainder dividing by a linear form");
    return std::move(*q);
}

std::optional<Poly> try_divide_by_norm_squared(const Poly& p) {
    return divide_with_pivot(p, Poly::norm_squared(p.dim()), 0);
}

Poly divide_exact_by_norm_squared(const Poly& p) {
    auto q = try_divide_by_norm_squared(p);
    if (!q) throw InvariantViolation("nonzero remainder dividing by |x|^2");
    return std::move(*q);
}

std::vector<Exponent> monomials_of_degree(std::size_t dim, unsigned m) {
    std::vector<Exponent> out;
    Exponent cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == dim) {
            cur[i] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            cur[i] = static_cast<std::uint8_t>(k);
            rec(i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(0, m);
    return out;
}

} // namespace dunkl
