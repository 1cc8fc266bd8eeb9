#include "dunkl/transform.hpp"

#include "dunkl/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace dunkl {

namespace {

using LComplex = std::complex<long double>;

constexpr double kSeriesLimit = 30.0;
// Past this argument the ascending series cancels too much even in long double.
constexpr long double kSeriesAccurate = 8.0L;

long double lpow_i(long double base, unsigned n) {
    long double out = 1;
    for (unsigned i = 0; i < n; ++i) out *= base;
    return out;
}

// (-i)^m
Complex minus_i_power(unsigned m) {
    switch (m % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
    }
}

long double normalized_bessel_series(long double nu, long double x) {
    long double q = -x * x / 4;
    long double term = std::exp(-nu * std::log(2.0L) - std::lgamma(nu + 1));
    long double sum = term;
    for (int j = 1; j < 400; ++j) {
        term *= q / (j * (nu + j));
        sum += term;
        if (j > x && std::fabs(term) <= 1e-22L * std::fabs(sum)) break;
    }
    return sum;
}

long double normalized_bessel_any(long double nu, long double x) {
    if (x <= kSeriesAccurate) return normalized_bessel_series(nu, x);
    long double j = nu >= 0 ? std::cyl_bessel_jl(nu, x)
                            : 2 * (nu + 1) / x * std::cyl_bessel_jl(nu + 1, x) - std::cyl_bessel_jl(nu + 2, x);
    return j / std::pow(x, nu);
}

void check_y(const DunklContext& ctx, std::span<const double> y) {
    if (y.size() != ctx.dim()) throw InputError("point dimension does not match the root system");
}

double max_abs(std::span<const double> y) {
    double t = 0;
    for (double v : y) t = std::max(t, std::fabs(v));
    return t;
}

/// Coefficient of each Z2^d kernel factor as powers of (-i y_j):
/// entry n is a_n (-i y_j)^n.
std::vector<LComplex> kernel_factor(const KernelSeries1D& series, double yj) {
    std::vector<LComplex> out(series.a.size());
    LComplex w(0, -static_cast<long double>(yj));
    LComplex pw = 1;
    for (std::size_t n = 0; n < series.a.size(); ++n) {
        out[n] = static_cast<long double>(series.a[n]) * pw;
        pw *= w;
    }
    return out;
}

/// Order for the Gaussian expansion: the first n past the peak of
/// a_n |y|^n g(n + shift) whose bound falls below 1e-24, plus a margin.
unsigned gaussian_order(const Rational& kappa, double y, unsigned shift) {
    long double k = kappa.get_d();
    long double a = 1, prev = 0;
    for (unsigned n = 1; n <= 600; ++n) {
        a /= n + (n % 2 ? 2 * k : 0.0L);
        long double half = (n + shift + 1) / 2.0L;
        long double bound = a * lpow_i(std::fabs(y), n) *
                            std::exp(half * std::log(2.0L) + std::lgamma(k + 0.5L + half) - std::lgamma(k + 0.5L));
        if (bound < 1e-24L && (bound < prev || bound == 0)) return n + 8;
        prev = bound;
    }
    throw InputError("Gaussian transform truncation bound unreachable");
}

/// b_k int x^e e^{-x^2/2} |x|^{2 kappa} dx for the rank-one group.
long double gaussian_moment_1d(long double kappa, unsigned e) {
    if (e % 2) return 0;
    long double out = 1;
    for (unsigned h = 0; h < e / 2; ++h) out *= 2 * (kappa + 0.5L + h);
    return out;
}

/// Hankel transform with Gaussian envelope e^{a r^2}, a < 0.
double hankel_impl(const std::function<long double(long double)>& f0, double nu, double s, double envelope_degree,
                   double a) {
    long double R = std::max(10.0, s + 10 * std::sqrt(2 * nu + 2));
    long double K = envelope_degree + 2 * nu + 1;
    auto tail = [&](long double r) {
        long double denom = 2 * -a * (1 - (K - 1) / (2 * -a * r * r));
        return std::pow(r, K - 1) * std::exp(a * r * r) / denom;
    };
    while (2 * -a * R * R <= 2 * (K - 1) || tail(R) > 1e-13L) R += 2;

    auto integrand = [&](long double r) -> long double {
        if (r == 0) return nu == -0.5 ? f0(0) * normalized_bessel_series(nu, 0) : 0.0L;
        return f0(r) * normalized_bessel_any(nu, r * s) * std::pow(r, 2 * nu + 1);
    };

    struct Simpson {
        const decltype(integrand)& f;
        long double unresolved = 0;
        long double run(long double a0, long double b0, long double fa, long double fm, long double fb,
                        long double whole, long double eps, int depth) {
            long double m = (a0 + b0) / 2;
            long double lm = (a0 + m) / 2, rm = (m + b0) / 2;
            long double flm = f(lm), frm = f(rm);
            long double left = (m - a0) / 6 * (fa + 4 * flm + fm);
            long double right = (b0 - m) / 6 * (fm + 4 * frm + fb);
            long double diff = left + right - whole;
            if (std::fabs(diff) <= 15 * eps) return left + right + diff / 15;
            if (depth <= 0) {
                unresolved += std::fabs(diff);
                return left + right + diff / 15;
            }
            return run(a0, m, fa, flm, fm, left, eps / 2, depth - 1) +
                   run(m, b0, fm, frm, fb, right, eps / 2, depth - 1);
        }
    } simpson{integrand};

    // Panels shorter than the oscillation period keep the first Simpson
    // estimates meaningful.
    long double width = std::min(0.25L, 1.0L / (1.0L + s));
    auto panels = static_cast<int>(std::ceil(R / width));
    long double eps = 1e-14L / panels;
    long double total = 0;
    for (int i = 0; i < panels; ++i) {
        long double lo = R * i / panels, hi = R * (i + 1) / panels;
        long double fa = integrand(lo), fb = integrand(hi), fm = integrand((lo + hi) / 2);
        long double whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
        total += simpson.run(lo, hi, fa, fm, fb, whole, eps, 16);
    }
    if (simpson.unresolved > 1e-12L) throw InputError("Hankel quadrature did not reach its tolerance");
    return static_cast<double>(total);
}

} // namespace

KernelSeries1D::KernelSeries1D(const Rational& k, unsigned order) : kappa(k.get_d()), a(order + 1) {
    if (k < 0) throw InputError("negative multiplicity");
    a[0] = 1;
    long double k2 = 2 * static_cast<long double>(kappa);
    for (unsigned n = 1; n <= order; ++n) a[n] = a[n - 1] / (n + (n % 2 ? k2 : 0.0L));
}

double KernelSeries1D::recursion_defect() const {
    double worst = 0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        long double lhs = a[n] * (n + (n % 2 ? 2 * static_cast<long double>(kappa) : 0.0L));
        worst = std::max(worst, static_cast<double>(std::fabs(lhs - a[n - 1]) / std::fabs(a[n - 1])));
    }
    return worst;
}

unsigned truncation_order(double t, unsigned cap) {
    t = std::fabs(t);
    double bound = 1;
    for (unsigned n = 1; n <= cap; ++n) {
        bound *= t / n;
        if (bound < 1e-16) return n;
    }
    throw InputError("kernel truncation bound unreachable for argument " + std::to_string(t));
}

double bessel_j(double nu, double x) {
    if (nu < -0.5) throw InputError("Bessel order below -1/2");
    if (x < 0 || x > kSeriesLimit) throw InputError("Bessel argument outside [0, 30]");
    if (x == 0) return nu == 0 ? 1.0 : (nu == -0.5 ? INFINITY : 0.0);
    return static_cast<double>(normalized_bessel_any(nu, x) * std::pow(static_cast<long double>(x), nu));
}

double normalized_bessel(double nu, double x) {
    if (nu < -0.5) throw InputError("Bessel order below -1/2");
    if (x < 0 || x > kSeriesLimit) throw InputError("Bessel argument outside [0, 30]");
    return static_cast<double>(normalized_bessel_any(nu, x));
}

double scaled_bessel(double lambda, unsigned n, double r) {
    long double lam = lambda;
    long double term = 1;
    for (unsigned i = 0; i < n; ++i) term /= 2 * (lam + 1 + i);
    long double q = -static_cast<long double>(r) * r / 4;
    long double sum = term;
    for (int k = 1; k < 600; ++k) {
        term *= q / (k * (lam + n + k));
        sum += term;
        if (std::fabs(term) < 1e-30L || (std::fabs(term) < 1e-24L * std::fabs(sum) && k > r)) break;
    }
    return static_cast<double>(sum);
}

Complex dunkl_kernel_z2d(const RationalVector& kappa, std::span<const double> x, std::span<const Complex> y,
                         unsigned order) {
    if (kappa.size() != x.size() || x.size() != y.size()) throw InputError("kernel: dimension mismatch");
    double t = 0;
    for (std::size_t j = 0; j < x.size(); ++j) t = std::max(t, std::abs(x[j] * y[j]));
    if (order == 0) order = truncation_order(t);
    LComplex prod = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
        KernelSeries1D series(kappa[j], order);
        LComplex z = LComplex(x[j]) * LComplex(y[j].real(), y[j].imag());
        LComplex sum = 0, pw = 1;
        for (unsigned n = 0; n <= order; ++n) {
            sum += static_cast<long double>(series.a[n]) * pw;
            pw *= z;
        }
        prod *= sum;
    }
    return Complex(static_cast<double>(prod.real()), static_cast<double>(prod.imag()));
}

double kernel_eigen_defect(const Rational& kappa, double x, Complex y, unsigned order) {
    if (order == 0) order = truncation_order(std::abs(x * y)) + 1;
    KernelSeries1D series(kappa, order);
    LComplex yl(y.real(), y.imag());
    // D_x sum a_n x^n y^n = sum a_n (n + 2 kappa [n odd]) x^(n-1) y^n
    LComplex lhs = 0, rhs = 0;
    for (unsigned n = 1; n <= order; ++n) {
        long double factor = n + (n % 2 ? 2 * series.kappa : 0.0);
        lhs += static_cast<long double>(series.a[n]) * factor * std::pow(LComplex(x), static_cast<int>(n - 1)) *
               std::pow(yl, static_cast<int>(n));
    }
    for (unsigned n = 0; n < order; ++n)
        rhs += static_cast<long double>(series.a[n]) * std::pow(LComplex(x) * yl, static_cast<int>(n));
    rhs *= yl;
    long double scale = std::max(std::abs(rhs), 1e-300L);
    return static_cast<double>(std::abs(lhs - rhs) / scale);
}

RationalVector coordinate_kappa(const DunklContext& ctx) {
    const RootSystem& rs = ctx.system();
    if (!rs.is_coordinate_system()) throw InputError("transform checks need a Z2^d system");
    RationalVector kappa(rs.dim());
    for (std::size_t j = 0; j < rs.dim(); ++j) kappa[j] = rs.coordinate_multiplicity(j);
    return kappa;
}

double Comparison::rel_residual() const {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0 ? 0.0 : abs_residual() / scale;
}

SeriesValue sphere_pairing_numeric(const DunklContext& ctx, const Poly& p, std::span<const double> y,
                                   unsigned order) {
    check_y(ctx, y);
    RationalVector kappa = coordinate_kappa(ctx);
    if (order == 0) order = truncation_order(max_abs(y));
    std::size_t d = ctx.dim();
    long double total_kappa = ctx.constants().gamma.get_d();
    std::vector<KernelSeries1D> series;
    std::vector<std::vector<LComplex>> factors;
    for (std::size_t j = 0; j < d; ++j) {
        series.emplace_back(kappa[j], order);
        factors.push_back(kernel_factor(series.back(), y[j]));
    }
    LComplex total = 0;
    for (const auto& [e, c] : p.terms()) {
        // v_j[h] = sum over n with e_j + n = 2h of a_n (-i y_j)^n (kappa_j + 1/2)_h
        std::vector<LComplex> conv{1};
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<LComplex> v((e[j] + order) / 2 + 1, 0);
            long double poch = 1;
            for (unsigned h = 0; h < v.size(); ++h) {
                if (h > 0) poch *= static_cast<long double>(series[j].kappa) + 0.5L + (h - 1);
                long n = 2L * h - e[j];
                if (n >= 0 && n <= static_cast<long>(order)) v[h] = factors[j][static_cast<std::size_t>(n)] * poch;
            }
            std::vector<LComplex> next(conv.size() + v.size() - 1, 0);
            for (std::size_t i = 0; i < conv.size(); ++i)
                for (std::size_t k = 0; k < v.size(); ++k) next[i + k] += conv[i] * v[k];
            conv = std::move(next);
        }
        LComplex sum = 0;
        long double denom = 1;
        long double base = total_kappa + static_cast<long double>(d) / 2;
        for (std::size_t t = 0; t < conv.size(); ++t) {
            if (t > 0) denom *= base + (t - 1);
            sum += conv[t] / denom;
        }
        total += static_cast<long double>(c.get_d()) * sum;
    }
    return {Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())), order};
}

Complex sphere_pairing_rhs(const DunklContext& ctx, const Poly& p, std::span<const double> y) {
    check_y(ctx, y);
    double lambda = ctx.constants().lambda.get_d();
    double r = 0;
    for (double v : y) r += v * v;
    r = std::sqrt(r);
    Complex total = 0;
    for (const auto& [m, part] : homogeneous_components(p)) {
        double sum = 0;
        Poly lap = part;
        for (unsigned j = 0; 2 * j <= m; ++j) {
            if (j > 0) lap = dunkl_laplacian_sq(ctx, lap);
            double c = (j % 2 ? -1.0 : 1.0) / (std::ldexp(1.0, static_cast<int>(j)) * std::tgamma(j + 1.0));
            sum += c * scaled_bessel(lambda, m - j, r) * lap.evaluate(y);
        }
        total += minus_i_power(m) * sum;
    }
    return total;
}

Comparison sph1_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y) {
    return {sphere_pairing_numeric(ctx, p, y).value, sphere_pairing_rhs(ctx, p, y)};
}

SeriesValue dunkl_transform_gauss_poly(const DunklContext& ctx, const Poly& p, std::span<const double> y,
                                       unsigned order) {
    check_y(ctx, y);
    RationalVector kappa = coordinate_kappa(ctx);
    std::size_t d = ctx.dim();
    unsigned max_exp = 0;
    for (const auto& [e, c] : p.terms())
        for (std::size_t j = 0; j < d; ++j) max_exp = std::max<unsigned>(max_exp, e[j]);
    if (order == 0)
        for (std::size_t j = 0; j < d; ++j) order = std::max(order, gaussian_order(kappa[j], y[j], max_exp));
    // S_j(e) = sum_n a_n (-i y_j)^n g_j(e + n)
    std::vector<std::vector<LComplex>> s(d, std::vector<LComplex>(max_exp + 1));
    for (std::size_t j = 0; j < d; ++j) {
        KernelSeries1D series(kappa[j], order);
        auto f = kernel_factor(series, y[j]);
        long double k = series.kappa;
        for (unsigned e = 0; e <= max_exp; ++e) {
            LComplex sum = 0;
            for (unsigned n = 0; n <= order; ++n)
                if ((e + n) % 2 == 0) sum += f[n] * gaussian_moment_1d(k, e + n);
            s[j][e] = sum;
        }
    }
    LComplex total = 0;
    for (const auto& [e, c] : p.terms()) {
        LComplex prod = static_cast<long double>(c.get_d());
        for (std::size_t j = 0; j < d; ++j) prod *= s[j][e[j]];
        total += prod;
    }
    return {Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())), order};
}

Complex hecke_rhs(const DunklContext& ctx, const Poly& p, std::span<const double> y) {
    check_y(ctx, y);
    double r2 = 0;
    for (double v : y) r2 += v * v;
    Complex total = 0;
    for (const auto& [m, part] : homogeneous_components(p)) {
        double sum = 0;
        Poly lap = part;
        for (unsigned j = 0; 2 * j <= m; ++j) {
            if (j > 0) lap = dunkl_laplacian_sq(ctx, lap);
            double c = (j % 2 ? -1.0 : 1.0) / (std::ldexp(1.0, static_cast<int>(j)) * std::tgamma(j + 1.0));
            sum += c * lap.evaluate(y);
        }
        total += minus_i_power(m) * sum;
    }
    return total * std::exp(-r2 / 2);
}

Comparison hecke_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y) {
    return {dunkl_transform_gauss_poly(ctx, p, y).value, hecke_rhs(ctx, p, y)};
}

Comparison hermite_eigen_compare(const DunklContext& ctx, const Poly& p, std::span<const double> y) {
    if (!p.is_homogeneous()) throw InputError("Hermite function needs a homogeneous polynomial");
    unsigned m = p.is_zero() ? 0u : static_cast<unsigned>(p.degree());
    Poly h = hermite_poly(ctx, p);
    double r2 = 0;
    for (double v : y) r2 += v * v;
    Complex rhs = minus_i_power(m) * std::exp(-r2 / 2) * h.evaluate(y);
    return {dunkl_transform_gauss_poly(ctx, h, y).value, rhs};
}

double hankel_numeric(const std::function<double(double)>& f0, double nu, double s, unsigned envelope_degree) {
    if (nu < -0.5) throw InputError("Hankel order below -1/2");
    if (s < 0) throw InputError("Hankel transform needs s >= 0");
    return hankel_impl([&](long double r) { return static_cast<long double>(f0(static_cast<double>(r))); }, nu, s,
                       envelope_degree, -0.5);
}

double hankel_numeric(const RadialProfile& f0, double nu, double s) {
    if (nu < -0.5) throw InputError("Hankel order below -1/2");
    if (s < 0) throw InputError("Hankel transform needs s >= 0");
    if (f0.gauss_coeff() >= 0) throw InputError("Hankel transform needs a decaying Gaussian profile");
    // The quadrature dominates the transform suites and the same (profile,
    // order, point) triples recur across multiplicities.
    static std::mutex mutex;
    static std::map<std::tuple<std::string, double, double>, double> cache;
    auto key = std::make_tuple(format(f0), nu, s);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    double top = 0;
    for (const auto& [j, c] : f0.coeffs()) top = std::max(top, Rational(f0.base_exponent() + 2 * j).get_d());
    std::vector<std::pair<long double, long double>> terms;
    for (const auto& [j, c] : f0.coeffs())
        terms.emplace_back(c.get_d(), Rational(f0.base_exponent() + 2 * j).get_d());
    long double a = f0.gauss_coeff().get_d();
    auto eval = [&](long double r) {
        long double sum = 0;
        for (const auto& [c, t] : terms) sum += c * std::pow(r, t);
        return sum * std::exp(a * r * r);
    };
    double value = hankel_impl(eval, nu, s, std::max(top, 0.0), f0.gauss_coeff().get_d());
    std::lock_guard lock(mutex);
    cache.emplace(std::move(key), value);
    return value;
}

Comparison hankel_gauss_fixed_point(double nu, double s) {
    double value = hankel_numeric(RadialProfile::gaussian(Rational(-1, 2)), nu, s);
    return {Complex(value), Complex(std::exp(-s * s / 2))};
}

Comparison bochner_compare(const DunklContext& ctx, const Poly& p, unsigned n, std::span<const double> y) {
    check_y(ctx, y);
    if (!p.is_homogeneous()) throw InputError("Hankel identity needs a homogeneous polynomial");
    unsigned m = p.is_zero() ? 0u : static_cast<unsigned>(p.degree());
    Poly weighted = pow(Poly::norm_squared(ctx.dim()), n) * p;
    Complex lhs = dunkl_transform_gauss_poly(ctx, weighted, y).value;

    double lambda = ctx.constants().lambda.get_d();
    double r2 = 0;
    for (double v : y) r2 += v * v;
    RadialProfile f0 = RadialProfile::gaussian(Rational(-1, 2), 2 * n);
    double sum = 0;
    Poly lap = p;
    for (unsigned j = 0; 2 * j <= m; ++j) {
        if (j > 0) lap = dunkl_laplacian_sq(ctx, lap);
        double c = (j % 2 ? -1.0 : 1.0) / (std::ldexp(1.0, static_cast<int>(j)) * std::tgamma(j + 1.0));
        sum += c * hankel_numeric(f0, lambda + m - j, std::sqrt(r2)) * lap.evaluate(y);
    }
    return {lhs, minus_i_power(m) * sum};
}

Comparison dtmul_compare(const DunklContext& ctx, const Poly& q, double y) {
    if (ctx.dim() != 1) throw InputError("multiplication rule check is rank one");
    std::array<double, 1> pt{y};
    Poly xq = Poly::variable(1, 0) * q;
    Complex lhs = dunkl_transform_gauss_poly(ctx, xq, pt).value;

    // F(q e^{-x^2/2}) = e^{-y^2/2} (P_re + i P_im), exact.
    Poly re(1), im(1);
    for (const auto& [m, part] : homogeneous_components(q)) {
        Poly sum(1);
        Poly lap = part;
        for (unsigned j = 0; 2 * j <= m; ++j) {
            if (j > 0) lap = dunkl_laplacian_sq(ctx, lap);
            sum += lap * (Rational(j % 2 ? -1 : 1) / (power(2, static_cast<int>(j)) * factorial(j)));
        }
        Complex phase = minus_i_power(m);
        if (phase.imag() == 0) re += sum * Rational(static_cast<long>(phase.real()));
        else im += sum * Rational(static_cast<long>(phase.imag()));
    }
    RadialProfile gauss = RadialProfile::gaussian(Rational(-1, 2));
    double d_re = weighted_dunkl_apply(ctx, 0, WeightedFunction(re, gauss)).evaluate(pt);
    double d_im = weighted_dunkl_apply(ctx, 0, WeightedFunction(im, gauss)).evaluate(pt);
    // i (d_re + i d_im)
    return {lhs, Complex(-d_im, d_re)};
}

} // namespace dunkl
