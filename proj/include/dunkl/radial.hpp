#pragma once

#include "dunkl/dunkl.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// sum_j c_j r^(s + 2j) exp(a r^2), j in Z. Canonical: no zero c_j, and the
/// smallest stored offset is 0 so s is the lowest exponent present.
class RadialProfile {
public:
    RadialProfile() = default;
    RadialProfile(Rational base_exponent, Rational gauss_coeff, std::map<int, Rational> coeffs);

    /// c r^s
    static RadialProfile power(const Rational& s, const Rational& c = 1);
    /// c r^s exp(a r^2)
    static RadialProfile gaussian(const Rational& a, const Rational& s = 0, const Rational& c = 1);

    const Rational& base_exponent() const { return s_; }
    const Rational& gauss_coeff() const { return a_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Same Gaussian coefficient and exponents differing by an even integer.
    bool mergeable(const RadialProfile& o) const;

    /// Throws InputError when the profiles are not mergeable.
    RadialProfile& operator+=(const RadialProfile& o);
    RadialProfile& operator*=(const Rational& c);
    friend RadialProfile operator+(RadialProfile a, const RadialProfile& b) { return a += b; }
    friend RadialProfile operator*(RadialProfile a, const Rational& c) { return a *= c; }
    friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

    /// Multiplies by r^t.
    RadialProfile shifted(const Rational& t) const;

    double evaluate(double r) const;

private:
    void canonicalize();

    Rational s_ = 0;
    Rational a_ = 0;
    std::map<int, Rational> coeffs_;
};

/// (1/r d/dr)^n applied to the profile.
RadialProfile inv_r_ddr(const RadialProfile& phi, unsigned n = 1);

/// f'' + (d - 1 + 2 gamma_k)/r f', the radial form of the Dunkl Laplacian.
RadialProfile radial_laplacian(const DunklContext& ctx, const RadialProfile& phi);

/// Text form: sums of rational multiples of products of r^(s) and
/// exp(a*r^2), e.g. "r^(-3)*exp(-1/2*r^2)" or "2*r^2 - r^4". All terms must
/// share one mergeable class.
RadialProfile parse_profile(std::string_view text);
std::string format(const RadialProfile& phi);

/// One summand poly(x) * profile(||x||).
struct WeightedTerm {
    Poly poly;
    RadialProfile profile;
};

/// Finite sum of polynomial times radial profile. Canonical form keeps one
/// term per class (a, s mod 2) whose profile is exactly r^s exp(a r^2); the
/// polynomial absorbs the rest. s is the largest exponent for which the
/// polynomial factor stays a polynomial, so equal functions have equal forms.
class WeightedFunction {
public:
    explicit WeightedFunction(std::size_t dim);
    WeightedFunction(Poly p, const RadialProfile& phi);
    /// Sum of arbitrary terms, brought to canonical form.
    static WeightedFunction from_terms(std::size_t dim, std::vector<WeightedTerm> terms);

    std::size_t dim() const { return dim_; }
    const std::vector<WeightedTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WeightedFunction& operator+=(const WeightedFunction& o);
    WeightedFunction& operator-=(const WeightedFunction& o);
    WeightedFunction& operator*=(const Rational& c);
    friend WeightedFunction operator+(WeightedFunction a, const WeightedFunction& b) { return a += b; }
    friend WeightedFunction operator-(WeightedFunction a, const WeightedFunction& b) { return a -= b; }
    friend WeightedFunction operator*(WeightedFunction a, const Rational& c) { return a *= c; }
    friend WeightedFunction operator*(const WeightedFunction& a, const Poly& p);
    friend bool operator==(const WeightedFunction& a, const WeightedFunction& b);

    /// Multiplies by r^t.
    WeightedFunction shifted(const Rational& t) const;

    /// The polynomial q with this = q(x) exp(a ||x||^2); throws
    /// InvariantViolation when the function is not of that form.
    Poly extract_poly(const Rational& gauss_coeff = 0) const;

    double evaluate(std::span<const double> x) const;

private:
    void canonicalize(std::vector<WeightedTerm> raw);

    std::size_t dim_;
    std::vector<WeightedTerm> terms_;
};

std::string format(const WeightedFunction& w);

/// D_xi (p phi) = (D_xi p) phi + <xi,x> p (1/r d/dr) phi, extended linearly.
WeightedFunction weighted_dunkl_apply(const DunklContext& ctx, const RationalVector& xi,
                                      const WeightedFunction& w);
WeightedFunction weighted_dunkl_apply(const DunklContext& ctx, std::size_t j, const WeightedFunction& w);

/// p(D) applied to phi(||x||) in the weighted calculus.
WeightedFunction hobson_lhs(const DunklContext& ctx, const Poly& p, const RadialProfile& phi);

/// sum_j 1/(2^j j!) [(1/r d/dr)^(m-j) phi] Delta_k^j p for homogeneous p of degree m.
WeightedFunction hobson_rhs(const DunklContext& ctx, const Poly& p, const RadialProfile& phi);

/// hobson_lhs - hobson_rhs; identically zero.
WeightedFunction hobson_residual(const DunklContext& ctx, const Poly& p, const RadialProfile& phi);

} // namespace dunkl
