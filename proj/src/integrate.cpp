#include "dunkl/integrate.hpp"

namespace dunkl {

namespace {

/// sum over even components p_{2l} of weight(l) * Delta_k^l p_{2l}.
template <class Weight>
Rational laplacian_series(const DunklContext& ctx, const Poly& p, Weight weight) {
    if (p.dim() != ctx.dim()) throw InputError("polynomial dimension does not match the root system");
    Rational out = 0;
    for (const auto& [deg, part] : homogeneous_components(p)) {
        if (deg % 2) continue;
        unsigned l = deg / 2;
        Poly c = dunkl_laplacian_power(ctx, part, l);
        out += weight(l) * c.constant_term();
    }
    return out;
}

} // namespace

Rational pizzetti_mean(const DunklContext& ctx, const Poly& p) {
    Rational lambda = ctx.constants().lambda;
    return laplacian_series(ctx, p, [&](unsigned l) {
        return Rational(1 / (power(4, static_cast<int>(l)) * factorial(l) * pochhammer(lambda + 1, l)));
    });
}

Rational pizzetti_mean_alternating(const DunklContext& ctx, const Poly& p) {
    Rational lambda = ctx.constants().lambda;
    return laplacian_series(ctx, p, [&](unsigned l) {
        Rational sign = l % 2 ? -1 : 1;
        return Rational(sign / (power(4, static_cast<int>(l)) * factorial(l) * pochhammer(lambda + 1, l)));
    });
}

Rational sphere_oracle_z2d(const RationalVector& kappa, const std::vector<unsigned>& half_exponents) {
    if (kappa.size() != half_exponents.size()) throw InputError("sphere oracle: dimension mismatch");
    Rational num = 1, total = 0;
    unsigned order = 0;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        num *= pochhammer(kappa[i] + Rational(1, 2), half_exponents[i]);
        total += kappa[i];
        order += half_exponents[i];
    }
    return num / pochhammer(total + Rational(static_cast<long>(kappa.size())) / 2, order);
}

Rational gaussian_moment(const DunklContext& ctx, const Poly& p) {
    return laplacian_series(ctx, p, [](unsigned l) {
        return Rational(1 / (power(2, static_cast<int>(l)) * factorial(l)));
    });
}

Rational mean_value_check(const DunklContext& ctx, const Poly& p) {
    if (!dunkl_laplacian_sq(ctx, p).is_zero()) throw InputError("mean value check needs a k-harmonic polynomial");
    return pizzetti_mean(ctx, p);
}

} // namespace dunkl
