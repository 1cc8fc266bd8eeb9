#pragma once

#include "dunkl/dunkl.hpp"

#include <vector>

namespace dunkl {

/// Normalized mean of p h_k^2 over the unit sphere:
/// sum_l Delta_k^l p_{2l}(0) / (4^l l! (lambda_k+1)_l).
Rational pizzetti_mean(const DunklContext& ctx, const Poly& p);

/// The same series with the factor (-1)^l; kept for comparison in reports.
Rational pizzetti_mean_alternating(const DunklContext& ctx, const Poly& p);

/// Mean of prod x_i^(2 beta_i) against prod |x_i|^(2 kappa_i) on the sphere:
/// prod (kappa_i+1/2)_{beta_i} / (sum kappa + d/2)_{|beta|}.
Rational sphere_oracle_z2d(const RationalVector& kappa, const std::vector<unsigned>& half_exponents);

/// b_k int p e^{-||x||^2/2} h_k^2 dx = sum_l Delta_k^l p_{2l}(0) / (2^l l!).
Rational gaussian_moment(const DunklContext& ctx, const Poly& p);

/// pizzetti_mean of a k-harmonic p (which equals p(0)); throws InputError
/// when p is not k-harmonic.
Rational mean_value_check(const DunklContext& ctx, const Poly& p);

} // namespace dunkl
