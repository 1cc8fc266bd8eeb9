#include "dunkl/harmonic.hpp"

namespace dunkl {

namespace {

unsigned homogeneous_degree(const Poly& p, const char* what) {
    if (!p.is_homogeneous()) throw InputError(std::string(what) + " needs a homogeneous polynomial");
    return p.is_zero() ? 0u : static_cast<unsigned>(p.degree());
}

std::size_t binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::size_t out = 1;
    for (long i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return out;
}

} // namespace

bool is_k_harmonic(const DunklContext& ctx, const Poly& p) { return dunkl_laplacian_sq(ctx, p).is_zero(); }

Poly clebsch_project_series(const DunklContext& ctx, const Poly& p) {
    unsigned m = homogeneous_degree(p, "Clebsch projection");
    const Rational& lambda = ctx.constants().lambda;
    Poly r2 = Poly::norm_squared(ctx.dim());
    Poly out = p;
    Poly lap = p;
    Poly r2j = Poly::constant(ctx.dim(), 1);
    for (unsigned j = 1; 2 * j <= m; ++j) {
        lap = dunkl_laplacian_sq(ctx, lap);
        r2j = r2j * r2;
        Rational poch = pochhammer(-lambda - m + 1, j);
        if (poch == 0) throw InvariantViolation("vanishing Pochhammer denominator in Clebsch projection");
        Rational c = 1 / (power(4, static_cast<int>(j)) * factorial(j) * poch);
        out += (r2j * lap) * c;
    }
    return out;
}

MaxwellProjection clebsch_project_maxwell(const DunklContext& ctx, const Poly& p) {
    unsigned m = homogeneous_degree(p, "Clebsch projection");
    const Rational& lambda = ctx.constants().lambda;
    Rational norm = power(-2, static_cast<int>(m)) * pochhammer(lambda, m);
    if (norm == 0)
        return {std::nullopt, "lambda_k = 0: ||x||^(-2 lambda) is constant and the Maxwell form vanishes for m >= 1"};
    WeightedFunction w = hobson_lhs(ctx, p, RadialProfile::power(-2 * lambda));
    Poly q = w.shifted(2 * lambda + 2 * m).extract_poly();
    return {q * (1 / norm), ""};
}

HarmonicDecomposition harmonic_decompose(const DunklContext& ctx, const Poly& p) {
    homogeneous_degree(p, "harmonic decomposition");
    HarmonicDecomposition out;
    Poly rest = p;
    for (unsigned j = 0; !rest.is_zero(); ++j) {
        Poly h = clebsch_project_series(ctx, rest);
        if (!h.is_zero()) out.components.push_back({j, h});
        rest = divide_exact_by_norm_squared(rest - h);
    }
    return out;
}

Poly recompose(const HarmonicDecomposition& dec, std::size_t dim) {
    Poly out(dim);
    Poly r2 = Poly::norm_squared(dim);
    for (const auto& c : dec.components) out += pow(r2, c.j) * c.h;
    return out;
}

Poly hermite_poly(const DunklContext& ctx, const Poly& p) {
    unsigned m = homogeneous_degree(p, "Hermite polynomial");
    Poly out = p;
    Poly lap = p;
    for (unsigned j = 1; 2 * j <= m; ++j) {
        lap = dunkl_laplacian_sq(ctx, lap);
        Rational c = Rational(j % 2 ? -1 : 1) / (power(4, static_cast<int>(j)) * factorial(j));
        out += lap * c;
    }
    return out;
}

WeightedFunction rodrigues_residual(const DunklContext& ctx, const Poly& p) {
    unsigned m = homogeneous_degree(p, "Rodrigues formula");
    RadialProfile gauss = RadialProfile::gaussian(-1);
    WeightedFunction lhs = hobson_lhs(ctx, p, gauss) * power(Rational(-1, 2), static_cast<int>(m));
    return lhs - WeightedFunction(hermite_poly(ctx, p), gauss);
}

WeightedFunction diffgauss_residual(const DunklContext& ctx, const Poly& p) {
    unsigned m = homogeneous_degree(p, "Gaussian derivative formula");
    RadialProfile gauss = RadialProfile::gaussian(Rational(-1, 2));
    Poly rhs(ctx.dim());
    Poly lap = p;
    for (unsigned j = 0; 2 * j <= m; ++j) {
        if (j > 0) lap = dunkl_laplacian_sq(ctx, lap);
        Rational c = Rational((m - j) % 2 ? -1 : 1) / (power(2, static_cast<int>(j)) * factorial(j));
        rhs += lap * c;
    }
    return hobson_lhs(ctx, p, gauss) - WeightedFunction(rhs, gauss);
}

std::size_t harmonic_dimension(std::size_t dim, unsigned m) {
    long d = static_cast<long>(dim);
    return binomial(m + d - 1, d - 1) - binomial(static_cast<long>(m) + d - 3, d - 1);
}

std::size_t rational_rank(const std::vector<Poly>& polys) {
    // Row echelon form keyed by pivot monomial.
    std::map<Exponent, Poly, GrlexDescending> pivots;
    for (Poly row : polys) {
        while (!row.is_zero()) {
            const auto& [lead, c] = *row.terms().begin();
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Exponent key = lead;
                pivots.emplace(key, row * (1 / c));
                break;
            }
            row -= it->second * Rational(c);
        }
    }
    return pivots.size();
}

} // namespace dunkl
