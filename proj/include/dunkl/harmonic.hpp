#pragma once

#include "dunkl/radial.hpp"

#include <optional>
#include <vector>

namespace dunkl {

bool is_k_harmonic(const DunklContext& ctx, const Poly& p);

/// sum_j ||x||^(2j) Delta_k^j p / (4^j j! (-lambda_k-m+1)_j) for homogeneous p
/// of degree m. Throws InputError for non-homogeneous p and
/// InvariantViolation when a Pochhammer denominator vanishes.
Poly clebsch_project_series(const DunklContext& ctx, const Poly& p);

struct MaxwellProjection {
    /// Nothing when lambda_k = 0 and m >= 1, where r^(-2 lambda) is constant.
    std::optional<Poly> value;
    std::string note;
};

/// ||x||^(2 lambda + 2m) p(D) ||x||^(-2 lambda) in the weighted calculus,
/// divided by (-2)^m (lambda)_m so that it is comparable with the series.
MaxwellProjection clebsch_project_maxwell(const DunklContext& ctx, const Poly& p);

struct HarmonicComponent {
    unsigned j;
    Poly h;
};

/// p = sum ||x||^(2j) h_j with h_j k-harmonic of degree m - 2j. Zero
/// components are omitted.
struct HarmonicDecomposition {
    std::vector<HarmonicComponent> components;
};

HarmonicDecomposition harmonic_decompose(const DunklContext& ctx, const Poly& p);
Poly recompose(const HarmonicDecomposition& dec, std::size_t dim);

/// H_{p,k} = sum_j (-1)^j Delta_k^j p / (4^j j!).
Poly hermite_poly(const DunklContext& ctx, const Poly& p);

/// (-1/2)^m e^{||x||^2} p(D) e^{-||x||^2} - H_{p,k}, as a weighted function.
WeightedFunction rodrigues_residual(const DunklContext& ctx, const Poly& p);

/// p(D) e^{-||x||^2/2} - sum_j (-1)^(m-j)/(2^j j!) e^{-||x||^2/2} Delta_k^j p.
WeightedFunction diffgauss_residual(const DunklContext& ctx, const Poly& p);

/// dim H_{m,k} for the Dunkl setting: C(m+d-1, d-1) - C(m+d-3, d-1).
std::size_t harmonic_dimension(std::size_t dim, unsigned m);

/// Rank over the rationals of the coefficient vectors of the given polynomials.
std::size_t rational_rank(const std::vector<Poly>& polys);

} // namespace dunkl
