#include "dunkl/dunkl.hpp"

#include "dunkl/detail/monomial_apply.hpp"

#include <functional>
#include <numeric>

namespace dunkl {

DunklContext::DunklContext(RootSystem rs) : rs_(std::move(rs)), constants_(dunkl::constants(rs_)) {
    if (rs_.dim() > kMaxDim) throw InputError("dimension exceeds " + std::to_string(kMaxDim));
    reflections_.reserve(rs_.root_count());
    for (const auto& a : rs_.positive_roots()) {
        reflections_.emplace_back(a);
        norm2_.push_back(dot(a, a));
    }
}

Poly DunklContext::difference_quotient(std::size_t root, const Poly& p) const {
    return divide_exact_by_linear(p - reflections_[root].apply(p), rs_.positive_roots()[root]);
}

namespace {

RationalVector unit_vector(std::size_t dim, std::size_t j) {
    RationalVector v(dim);
    v[j] = 1;
    return v;
}

// Sum_alpha kappa_alpha alpha_j Q_alpha for precomputed quotients.
Poly reflection_part(const DunklContext& ctx, const std::vector<Poly>& quotients, const RationalVector& xi) {
    Poly out(ctx.dim());
    for (std::size_t a = 0; a < ctx.root_count(); ++a) {
        if (ctx.kappa(a) == 0) continue;
        Rational w = ctx.kappa(a) * dot(ctx.root(a), xi);
        if (w != 0) out += quotients[a] * w;
    }
    return out;
}

std::vector<Poly> all_quotients(const DunklContext& ctx, const Poly& p) {
    std::vector<Poly> q;
    q.reserve(ctx.root_count());
    for (std::size_t a = 0; a < ctx.root_count(); ++a)
        q.push_back(ctx.kappa(a) == 0 ? Poly(ctx.dim()) : ctx.difference_quotient(a, p));
    return q;
}

void check_dim(const DunklContext& ctx, const Poly& p) {
    if (p.dim() != ctx.dim()) throw InputError("polynomial dimension does not match the root system");
}

} // namespace

Poly dunkl_apply(const DunklContext& ctx, const RationalVector& xi, const Poly& p) {
    check_dim(ctx, p);
    if (xi.size() != ctx.dim()) throw InputError("direction has wrong dimension");
    Poly out = partial_derivative(p, xi);
    for (std::size_t a = 0; a < ctx.root_count(); ++a) {
        if (ctx.kappa(a) == 0) continue;
        Rational w = ctx.kappa(a) * dot(ctx.root(a), xi);
        if (w != 0) out += ctx.difference_quotient(a, p) * w;
    }
    return out;
}

Poly dunkl_apply(const DunklContext& ctx, std::size_t j, const Poly& p) {
    if (j >= ctx.dim()) throw InputError("coordinate index out of range");
    return dunkl_apply(ctx, unit_vector(ctx.dim(), j), p);
}

Poly dunkl_laplacian_sq(const DunklContext& ctx, const Poly& p) {
    check_dim(ctx, p);
    std::vector<Poly> q = all_quotients(ctx, p);
    Poly out(ctx.dim());
    for (std::size_t j = 0; j < ctx.dim(); ++j) {
        RationalVector e = unit_vector(ctx.dim(), j);
        Poly dj = partial(p, j) + reflection_part(ctx, q, e);
        out += partial(dj, j) + reflection_part(ctx, all_quotients(ctx, dj), e);
    }
    return out;
}

Poly dunkl_laplacian_expr(const DunklContext& ctx, const Poly& p) {
    check_dim(ctx, p);
    Poly out = classical_laplacian(p);
    for (std::size_t a = 0; a < ctx.root_count(); ++a) {
        if (ctx.kappa(a) == 0) continue;
        Poly numerator = partial_derivative(p, ctx.root(a)) * Rational(2) -
                         ctx.difference_quotient(a, p) * ctx.root_norm2(a);
        out += divide_exact_by_linear(numerator, ctx.root(a)) * ctx.kappa(a);
    }
    return out;
}

Poly dunkl_laplacian_power(const DunklContext& ctx, const Poly& p, unsigned j) {
    Poly out = p;
    for (unsigned i = 0; i < j && !out.is_zero(); ++i) out = dunkl_laplacian_sq(ctx, out);
    return out;
}

Poly invariant_laplacian(const DunklContext& ctx, const Poly& p) {
    check_dim(ctx, p);
    Poly out = classical_laplacian(p);
    for (std::size_t a = 0; a < ctx.root_count(); ++a) {
        if (ctx.kappa(a) == 0) continue;
        out += divide_exact_by_linear(partial_derivative(p, ctx.root(a)), ctx.root(a)) * (2 * ctx.kappa(a));
    }
    return out;
}

Poly poly_of_dunkl_ordered(const DunklContext& ctx, const Poly& p, const Poly& target,
                           const std::vector<std::size_t>& order) {
    check_dim(ctx, p);
    check_dim(ctx, target);
    if (order.size() != ctx.dim()) throw InputError("order must list every coordinate once");
    std::function<Poly(std::size_t, const Poly&)> step = [&](std::size_t j, const Poly& f) {
        return dunkl_apply(ctx, j, f);
    };
    return detail::apply_monomials(p, target, order, step, Poly(ctx.dim()));
}

Poly poly_of_dunkl(const DunklContext& ctx, const Poly& p, const Poly& target) {
    std::vector<std::size_t> order(ctx.dim());
    std::iota(order.rbegin(), order.rend(), 0);
    return poly_of_dunkl_ordered(ctx, p, target, order);
}

Poly commutator_residual(const DunklContext& ctx, const RationalVector& xi, const RationalVector& eta,
                         const Poly& p) {
    return dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, p)) - dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, p));
}

Poly com00_residual(const DunklContext& ctx, unsigned j, std::size_t l, const Poly& p) {
    if (j == 0) throw InputError("com00 requires j >= 1");
    if (l >= ctx.dim()) throw InputError("coordinate index out of range");
    Poly xl = Poly::variable(ctx.dim(), l);
    Poly commutator = dunkl_laplacian_power(ctx, xl * p, j) - xl * dunkl_laplacian_power(ctx, p, j);
    Poly rhs = dunkl_apply(ctx, l, dunkl_laplacian_power(ctx, p, j - 1)) * Rational(2 * j);
    return commutator - rhs;
}

Poly ad_formula_residual(const DunklContext& ctx, const Poly& p, const Poly& target) {
    if (!p.is_homogeneous()) throw InputError("ad formula needs a homogeneous polynomial");
    check_dim(ctx, target);
    if (p.is_zero()) return Poly(ctx.dim());
    const unsigned m = static_cast<unsigned>(p.degree());
    // (ad A)^m B = sum_i C(m,i) (-1)^(m-i) A^i B A^(m-i), A = Delta_k / 2, B = M_p.
    Poly ad(ctx.dim());
    Rational half(1, 2);
    std::vector<Poly> a_powers{target};
    for (unsigned i = 1; i <= m; ++i) a_powers.push_back(dunkl_laplacian_sq(ctx, a_powers.back()) * half);
    mpz_class binom;
    for (unsigned i = 0; i <= m; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), m, i);
        Poly term = p * a_powers[m - i];
        for (unsigned k = 0; k < i; ++k) term = dunkl_laplacian_sq(ctx, term) * half;
        Rational c(binom);
        if ((m - i) % 2 == 1) c = -c;
        ad += term * c;
    }
    return poly_of_dunkl(ctx, p, target) - ad * (1 / factorial(m));
}

} // namespace dunkl
