#pragma once

#include "dunkl/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dunkl {

inline constexpr std::size_t kMaxDim = 12;

/// Exponent vector of a monomial. Entries past the polynomial's dimension
/// stay zero, so comparisons never need the dimension.
struct Exponent {
    std::array<std::uint8_t, kMaxDim> e{};

    std::uint8_t& operator[](std::size_t i) { return e[i]; }
    std::uint8_t operator[](std::size_t i) const { return e[i]; }

    unsigned degree() const {
        unsigned s = 0;
        for (auto v : e) s += v;
        return s;
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order, largest first.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

/// Sparse multivariate polynomial over the rationals. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class Poly {
public:
    using Terms = std::map<Exponent, Rational, GrlexDescending>;

    explicit Poly(std::size_t dim);

    static Poly constant(std::size_t dim, const Rational& c);
    /// x_{index+1}; index is zero based.
    static Poly variable(std::size_t dim, std::size_t index);
    static Poly monomial(std::size_t dim, const Exponent& exp, const Rational& c = 1);
    /// <alpha, x>
    static Poly linear_form(const RationalVector& alpha);
    /// ||x||^2
    static Poly norm_squared(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& exp) const;
    Rational constant_term() const { return coefficient(Exponent{}); }

    /// Adds c * x^exp, dropping the term if it cancels.
    void add_term(const Exponent& exp, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const RationalVector& x) const;
    double evaluate(std::span<const double> x) const;

private:
    void check_dim(const Poly& o) const;

    std::size_t dim_;
    Terms terms_;
};

Poly pow(const Poly& p, unsigned n);

/// Directional derivative <xi, grad> p.
Poly partial_derivative(const Poly& p, const RationalVector& xi);
/// d/dx_{j+1}; j is zero based.
Poly partial(const Poly& p, std::size_t j);

Poly classical_laplacian(const Poly& p);

/// Euler operator sum_l x_l d_l.
Poly euler(const Poly& p);

/// Nonzero homogeneous components ordered by increasing degree.
std::vector<std::pair<unsigned, Poly>> homogeneous_components(const Poly& p);

/// Homogeneous component of degree m (possibly zero).
Poly homogeneous_part(const Poly& p, unsigned m);

/// The substitution p -> p o r_alpha for the orthogonal reflection in
/// alpha^perp. Signed permutation matrices (every catalog system) take a
/// monomial to a monomial and are applied without expansion.
class ReflectionMap {
public:
    explicit ReflectionMap(RationalVector alpha);

    const RationalVector& root() const { return alpha_; }
    Poly apply(const Poly& p) const;
    bool is_signed_permutation() const { return signed_perm_; }

private:
    RationalVector alpha_;
    std::vector<RationalVector> matrix_;
    bool signed_perm_ = false;
    std::vector<std::size_t> perm_;
    std::vector<int> sign_;
};

Poly compose_reflection(const Poly& p, const RationalVector& alpha);

/// q with q * <alpha, x> = p. Throws InvariantViolation on a nonzero remainder.
Poly divide_exact_by_linear(const Poly& p, const RationalVector& alpha);

/// q with q * ||x||^2 = p. Throws InvariantViolation on a nonzero remainder.
Poly divide_exact_by_norm_squared(const Poly& p);

/// Quotient by ||x||^2, or nothing when ||x||^2 does not divide p.
std::optional<Poly> try_divide_by_norm_squared(const Poly& p);

/// Reads the text form, e.g. "3/2*x1^2*x2 - x3". Variables are x1..x{dim}.
/// Throws InputError with the failing column.
Poly parse_poly(std::string_view text, std::size_t dim);

/// Canonical text form, graded-lex descending; "0" for the zero polynomial.
std::string format(const Poly& p);

/// Every monomial x^e with |e| = m, in graded-lex descending order.
std::vector<Exponent> monomials_of_degree(std::size_t dim, unsigned m);

} // namespace dunkl
