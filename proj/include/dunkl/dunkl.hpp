#pragma once

#include "dunkl/poly.hpp"
#include "dunkl/rootsys.hpp"

#include <vector>

namespace dunkl {

/// A root system together with everything the operators need per root:
/// the reflection substitution, |alpha|^2 and kappa_alpha.
class DunklContext {
public:
    explicit DunklContext(RootSystem rs);

    const RootSystem& system() const { return rs_; }
    const DunklConstants& constants() const { return constants_; }
    std::size_t dim() const { return rs_.dim(); }
    std::size_t root_count() const { return rs_.root_count(); }
    const RationalVector& root(std::size_t i) const { return rs_.positive_roots()[i]; }
    const Rational& kappa(std::size_t i) const { return rs_.multiplicity(i); }
    const Rational& root_norm2(std::size_t i) const { return norm2_[i]; }

    Poly reflect(std::size_t root, const Poly& p) const { return reflections_[root].apply(p); }

    /// (p - p o r_alpha) / <alpha, x> for positive root number `root`.
    Poly difference_quotient(std::size_t root, const Poly& p) const;

private:
    RootSystem rs_;
    DunklConstants constants_;
    std::vector<ReflectionMap> reflections_;
    RationalVector norm2_;
};

/// D_xi p = d_xi p + sum_alpha kappa_alpha <alpha,xi> (p - p o r_alpha)/<alpha,x>.
Poly dunkl_apply(const DunklContext& ctx, const RationalVector& xi, const Poly& p);
/// D_j for the coordinate direction e_{j+1}.
Poly dunkl_apply(const DunklContext& ctx, std::size_t j, const Poly& p);

/// Sum_j D_j^2 p.
Poly dunkl_laplacian_sq(const DunklContext& ctx, const Poly& p);

/// Laplacian through the explicit second-order-plus-reflection expression,
/// combining the two alpha-terms into one exact division per root.
Poly dunkl_laplacian_expr(const DunklContext& ctx, const Poly& p);

/// Delta_k^j p (route sq).
Poly dunkl_laplacian_power(const DunklContext& ctx, const Poly& p, unsigned j);

/// Delta p + sum_alpha 2 kappa_alpha d_alpha p / <alpha,x>; agrees with the
/// Dunkl Laplacian on G-invariant polynomials.
Poly invariant_laplacian(const DunklContext& ctx, const Poly& p);

/// p(D) applied to target, monomial by monomial. Within x^e = x_1^{e_1}...x_d^{e_d}
/// the factor D_d is applied first and D_1 last.
Poly poly_of_dunkl(const DunklContext& ctx, const Poly& p, const Poly& target);

/// p(D) target with the D factors of every monomial applied in the given
/// coordinate order (first entry applied first). Used to exercise commutativity.
Poly poly_of_dunkl_ordered(const DunklContext& ctx, const Poly& p, const Poly& target,
                           const std::vector<std::size_t>& order);

/// D_xi D_eta p - D_eta D_xi p.
Poly commutator_residual(const DunklContext& ctx, const RationalVector& xi, const RationalVector& eta,
                         const Poly& p);

/// [Delta_k^j, M_{x_l}] p - 2 j D_l Delta_k^{j-1} p, with l zero based. Requires j >= 1.
Poly com00_residual(const DunklContext& ctx, unsigned j, std::size_t l, const Poly& p);

/// p(D) target - (1/m!) (ad Delta_k/2)^m M_p target for homogeneous p of degree m.
Poly ad_formula_residual(const DunklContext& ctx, const Poly& p, const Poly& target);

} // namespace dunkl
