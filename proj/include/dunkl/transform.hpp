#pragma once

#include "dunkl/radial.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

using Complex = std::complex<double>;

/// Coefficients of E_kappa(x, y) = sum_n a_n (x y)^n for the rank-one group:
/// a_0 = 1, a_n = a_{n-1} / (n + 2 kappa [n odd]).
struct KernelSeries1D {
    double kappa = 0;
    std::vector<long double> a;

    KernelSeries1D(const Rational& kappa, unsigned order);
    unsigned order() const { return static_cast<unsigned>(a.size()) - 1; }
    /// Largest relative violation of the recursion over the stored coefficients.
    double recursion_defect() const;
};

/// Smallest N with t^N / N! < 1e-16, where t bounds |x_j y_j|; throws
/// InputError when the cap is exceeded.
unsigned truncation_order(double t, unsigned cap = 120);

/// Ascending series of J_nu(x) for 0 <= x <= 30, nu >= -1/2.
double bessel_j(double nu, double x);
/// J_nu(x) / x^nu, continuous at 0 with value 1 / (2^nu Gamma(nu+1)).
double normalized_bessel(double nu, double x);
/// 2^lambda Gamma(lambda+1) J_{lambda+n}(r) / r^(lambda+n), free of Gamma values.
double scaled_bessel(double lambda, unsigned n, double r);

/// Product kernel for Z2^d: prod_j sum_{n <= N} a_n(kappa_j) (x_j y_j)^n.
/// order = 0 picks truncation_order(max |x_j y_j|).
Complex dunkl_kernel_z2d(const RationalVector& kappa, std::span<const double> x, std::span<const Complex> y,
                         unsigned order = 0);

/// Relative defect of D_x E(., y) = y E(., y) for the truncated rank-one series.
double kernel_eigen_defect(const Rational& kappa, double x, Complex y, unsigned order = 0);

/// Per-coordinate multiplicities of a Z2^d context; throws InputError otherwise.
RationalVector coordinate_kappa(const DunklContext& ctx);

struct SeriesValue {
    Complex value;
    unsigned order;
};

struct Comparison {
    Complex lhs;
    Complex rhs;
    double abs_residual() const { return std::abs(lhs - rhs); }
    double rel_residual() const;
};

/// 2^lambda Gamma(lambda+1) b_k int_S p(x) E(x,-iy) h_k^2 dw, i.e. the
/// normalized spherical mean of p E(., -iy).
SeriesValue sphere_pairing_numeric(const DunklContext& ctx, const Poly& p, std::span<const double> y,
                                   unsigned order = 0);
/// Bessel side of the spherical pairing with the same scaling.
Complex sphere_pairing_rhs(const DunklContext& ctx, const Poly& p, std::span<const double> y);
Comparison sph1_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y);

/// Dunkl transform of p(x) e^{-||x||^2/2} at y, from the kernel expansion and
/// exact one-dimensional Gaussian moments.
SeriesValue dunkl_transform_gauss_poly(const DunklContext& ctx, const Poly& p, std::span<const double> y,
                                       unsigned order = 0);
/// (-i)^m e^{-||y||^2/2} sum_j (-1)^j/(2^j j!) Delta_k^j p(y), summed over components.
Complex hecke_rhs(const DunklContext& ctx, const Poly& p, std::span<const double> y);
Comparison hecke_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y);
/// Transform of e^{-||x||^2/2} H_{p,k} against (-i)^m e^{-||y||^2/2} H_{p,k}(y).
Comparison hermite_eigen_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y);

/// int_0^inf f0(r) J_nu(rs)/(rs)^nu r^(2nu+1) dr for Gaussian-decaying f0
/// with f0(r) = O(r^k e^{-r^2/2}) and k <= envelope_degree.
double hankel_numeric(const std::function<double(double)>& f0, double nu, double s, unsigned envelope_degree = 0);
double hankel_numeric(const RadialProfile& f0, double nu, double s);
/// Hankel transform of e^{-r^2/2} against e^{-s^2/2}.
Comparison hankel_gauss_fixed_point(double nu, double s);
/// Transform of p ||x||^(2N) e^{-||x||^2/2} by kernel expansion against the
/// Hankel-transform expression for f0 = r^(2N) e^{-r^2/2}; p homogeneous.
Comparison bochner_compare(const DunklContext& ctx, const Poly& p, unsigned n, std::span<const double> y);

/// F(x q e^{-x^2/2})(y) against i D_y applied to the exact Gaussian-polynomial
/// form of F(q e^{-x^2/2}); rank one only.
Comparison dtmul_compare(const DunklContext& ctx, const Poly& q, double y);

} // namespace dunkl
