#include "dunkl/radial.hpp"

#include "dunkl/detail/monomial_apply.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <tuple>

namespace dunkl {

namespace {

// Representative of t modulo 2, in [0, 2).
Rational residue_mod2(const Rational& t) {
    mpz_class q;
    mpz_class twice_den = 2 * t.get_den();
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), twice_den.get_mpz_t());
    return t - 2 * Rational(q);
}

int half_difference(const Rational& hi, const Rational& lo) {
    Rational h = (hi - lo) / 2;
    if (!is_integer(h)) throw InvariantViolation("radial exponents differ by a non-even amount");
    return static_cast<int>(h.get_num().get_si());
}

std::string format_exponent_factor(const Rational& t) {
    if (t == 0) return "";
    if (is_integer(t) && t > 0) return t == 1 ? "r" : "r^" + t.get_str();
    return "r^(" + t.get_str() + ")";
}

std::string format_gauss_factor(const Rational& a) {
    if (a == 0) return "";
    return "exp(" + a.get_str() + "*r^2)";
}

std::string join_factors(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += '*';
        out += p;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// RadialProfile

RadialProfile::RadialProfile(Rational base_exponent, Rational gauss_coeff, std::map<int, Rational> coeffs)
    : s_(std::move(base_exponent)), a_(std::move(gauss_coeff)), coeffs_(std::move(coeffs)) {
    canonicalize();
}

RadialProfile RadialProfile::power(const Rational& s, const Rational& c) { return RadialProfile(s, 0, {{0, c}}); }

RadialProfile RadialProfile::gaussian(const Rational& a, const Rational& s, const Rational& c) {
    return RadialProfile(s, a, {{0, c}});
}

void RadialProfile::canonicalize() {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    if (coeffs_.empty()) {
        s_ = 0;
        return;
    }
    int lo = coeffs_.begin()->first;
    if (lo == 0) return;
    std::map<int, Rational> moved;
    for (auto& [j, c] : coeffs_) moved.emplace(j - lo, std::move(c));
    coeffs_ = std::move(moved);
    s_ += 2 * lo;
}

bool RadialProfile::mergeable(const RadialProfile& o) const {
    if (is_zero() || o.is_zero()) return true;
    return a_ == o.a_ && is_even_integer(s_ - o.s_);
}

RadialProfile& RadialProfile::operator+=(const RadialProfile& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!mergeable(o)) throw InputError("radial profiles " + format(*this) + " and " + format(o) + " cannot merge");
    int shift = half_difference(o.s_, s_);
    for (const auto& [j, c] : o.coeffs_) coeffs_[j + shift] += c;
    canonicalize();
    return *this;
}

RadialProfile& RadialProfile::operator*=(const Rational& c) {
    for (auto& [j, v] : coeffs_) v *= c;
    canonicalize();
    return *this;
}

RadialProfile RadialProfile::shifted(const Rational& t) const {
    RadialProfile out = *this;
    if (!out.is_zero()) out.s_ += t;
    return out;
}

double RadialProfile::evaluate(double r) const {
    double sum = 0.0;
    for (const auto& [j, c] : coeffs_) sum += c.get_d() * std::pow(r, Rational(s_ + 2 * j).get_d());
    return sum * std::exp(a_.get_d() * r * r);
}

RadialProfile inv_r_ddr(const RadialProfile& phi, unsigned n) {
    RadialProfile cur = phi;
    for (unsigned step = 0; step < n && !cur.is_zero(); ++step) {
        // c r^t e^{a r^2} -> (c t r^{t-2} + 2 a c r^t) e^{a r^2}
        std::map<int, Rational> next;
        for (const auto& [j, c] : cur.coeffs()) {
            Rational t = cur.base_exponent() + 2 * j;
            next[j - 1] += c * t;
            next[j] += 2 * cur.gauss_coeff() * c;
        }
        cur = RadialProfile(cur.base_exponent(), cur.gauss_coeff(), std::move(next));
    }
    return cur;
}

RadialProfile radial_laplacian(const DunklContext& ctx, const RadialProfile& phi) {
    // For f = r^t e^{a r^2} and K = d - 1 + 2 gamma:
    // f'' + K f'/r = [t(t-1) + K t] r^{t-2} + 2a(2t + 1 + K) r^t + 4a^2 r^{t+2}
    Rational k = Rational(static_cast<long>(ctx.dim()) - 1) + 2 * ctx.constants().gamma;
    const Rational& a = phi.gauss_coeff();
    std::map<int, Rational> out;
    for (const auto& [j, c] : phi.coeffs()) {
        Rational t = phi.base_exponent() + 2 * j;
        out[j - 1] += c * (t * (t - 1) + k * t);
        out[j] += c * 2 * a * (2 * t + 1 + k);
        out[j + 1] += c * 4 * a * a;
    }
    return RadialProfile(phi.base_exponent(), a, std::move(out));
}

// ---------------------------------------------------------------------------
// Profile text

namespace {

class ProfileParser {
public:
    explicit ProfileParser(std::string_view text) : text_(text) {}

    RadialProfile parse() {
        RadialProfile out;
        skip_ws();
        if (at_end()) fail("empty profile");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += term() * Rational(sign);
            skip_ws();
        }
        return out;
    }

private:
    RadialProfile term() {
        Rational coef = 1, exponent = 0, gauss = 0;
        while (true) {
            skip_ws();
            if (at_end()) fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= rational();
            } else if (text_.substr(pos_).starts_with("exp")) {
                pos_ += 3;
                expect('(');
                gauss += gaussian_argument();
                expect(')');
            } else if (peek() == 'r') {
                get();
                skip_ws();
                Rational t = 1;
                if (!at_end() && peek() == '^') {
                    get();
                    t = exponent_value();
                }
                exponent += t;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            if (at_end() || peek() != '*') break;
            get();
        }
        return RadialProfile::gaussian(gauss, exponent, coef);
    }

    // Accepts "a*r^2", "-r^2", "-r^2/2", "-1/2*r^2".
    Rational gaussian_argument() {
        skip_ws();
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
        skip_ws();
        Rational c = 1;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = rational();
            expect('*');
        }
        skip_ws();
        if (!text_.substr(pos_).starts_with("r^2")) fail("expected r^2 inside exp()");
        pos_ += 3;
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            c /= integer();
        }
        return c * sign;
    }

    Rational exponent_value() {
        skip_ws();
        if (!at_end() && peek() == '(') {
            get();
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
            Rational v = rational() * sign;
            expect(')');
            return v;
        }
        int sign = 1;
        if (!at_end() && peek() == '-') {
            get();
            sign = -1;
        }
        return Rational(integer() * sign);
    }

    Rational rational() {
        skip_ws();
        mpz_class num = integer();
        skip_ws();
        if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            get();
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (start == pos_) fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("profile syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RadialProfile parse_profile(std::string_view text) { return ProfileParser(text).parse(); }

std::string format(const RadialProfile& phi) {
    if (phi.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [j, c] : phi.coeffs()) {
        Rational t = phi.base_exponent() + 2 * j;
        std::string factors = join_factors({format_exponent_factor(t), format_gauss_factor(phi.gauss_coeff())});
        Rational mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (factors.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.get_str() + "*" + factors;
    }
    return out;
}

// ---------------------------------------------------------------------------
// WeightedFunction

WeightedFunction::WeightedFunction(std::size_t dim) : dim_(dim) {}

WeightedFunction::WeightedFunction(Poly p, const RadialProfile& phi) : dim_(p.dim()) {
    std::vector<WeightedTerm> raw;
    raw.push_back({std::move(p), phi});
    canonicalize(std::move(raw));
}

WeightedFunction WeightedFunction::from_terms(std::size_t dim, std::vector<WeightedTerm> terms) {
    WeightedFunction out(dim);
    out.canonicalize(std::move(terms));
    return out;
}

void WeightedFunction::canonicalize(std::vector<WeightedTerm> raw) {
    // (a, s mod 2) -> exact exponent -> polynomial
    std::map<std::pair<Rational, Rational>, std::map<Rational, Poly>> classes;
    for (auto& term : raw) {
        if (term.poly.dim() != dim_) throw InputError("weighted term has wrong dimension");
        if (term.poly.is_zero() || term.profile.is_zero()) continue;
        const RadialProfile& phi = term.profile;
        for (const auto& [j, c] : phi.coeffs()) {
            Rational t = phi.base_exponent() + 2 * j;
            auto& bucket = classes[{phi.gauss_coeff(), residue_mod2(t)}];
            auto [it, inserted] = bucket.try_emplace(t, term.poly * c);
            if (!inserted) it->second += term.poly * c;
        }
    }
    terms_.clear();
    std::vector<Poly> norm_powers{Poly::constant(dim_, 1)};
    auto norm_power = [&](int k) -> const Poly& {
        while (static_cast<int>(norm_powers.size()) <= k)
            norm_powers.push_back(norm_powers.back() * Poly::norm_squared(dim_));
        return norm_powers[k];
    };
    for (auto& [key, bucket] : classes) {
        std::erase_if(bucket, [](const auto& kv) { return kv.second.is_zero(); });
        if (bucket.empty()) continue;
        const Rational t_min = bucket.begin()->first;
        Poly total(dim_);
        for (const auto& [t, p] : bucket) total += p * norm_power(half_difference(t, t_min));
        if (total.is_zero()) continue;
        Rational s = t_min;
        while (auto q = try_divide_by_norm_squared(total)) {
            total = std::move(*q);
            s += 2;
        }
        terms_.push_back({std::move(total), RadialProfile::gaussian(key.first, s)});
    }
}

WeightedFunction& WeightedFunction::operator+=(const WeightedFunction& o) {
    if (o.dim_ != dim_) throw InputError("dimension mismatch");
    std::vector<WeightedTerm> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    canonicalize(std::move(raw));
    return *this;
}

WeightedFunction& WeightedFunction::operator-=(const WeightedFunction& o) { return *this += o * Rational(-1); }

WeightedFunction& WeightedFunction::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.poly *= c;
    return *this;
}

WeightedFunction operator*(const WeightedFunction& a, const Poly& p) {
    std::vector<WeightedTerm> raw;
    for (const auto& t : a.terms_) raw.push_back({t.poly * p, t.profile});
    WeightedFunction out(a.dim_);
    out.canonicalize(std::move(raw));
    return out;
}

bool operator==(const WeightedFunction& a, const WeightedFunction& b) {
    if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].poly == b.terms_[i].poly) || !(a.terms_[i].profile == b.terms_[i].profile)) return false;
    return true;
}

WeightedFunction WeightedFunction::shifted(const Rational& t) const {
    std::vector<WeightedTerm> raw;
    for (const auto& term : terms_) raw.push_back({term.poly, term.profile.shifted(t)});
    WeightedFunction out(dim_);
    out.canonicalize(std::move(raw));
    return out;
}

Poly WeightedFunction::extract_poly(const Rational& gauss_coeff) const {
    Poly out(dim_);
    for (const auto& term : terms_) {
        const Rational& s = term.profile.base_exponent();
        if (term.profile.gauss_coeff() != gauss_coeff || !is_even_integer(s))
            throw InvariantViolation("weighted function is not a polynomial times exp(" + gauss_coeff.get_str() +
                                     " r^2): " + format(*this));
        long k = s.get_num().get_si() / 2;
        if (k < 0) throw InvariantViolation("weighted function has a pole at the origin: " + format(*this));
        out += term.poly * pow(Poly::norm_squared(dim_), static_cast<unsigned>(k));
    }
    return out;
}

double WeightedFunction::evaluate(std::span<const double> x) const {
    double r2 = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.poly.evaluate(x) * t.profile.evaluate(std::sqrt(r2));
    return sum;
}

std::string format(const WeightedFunction& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& t : w.terms()) {
        if (!out.empty()) out += " + ";
        std::string poly = format(t.poly);
        std::string radial = format(t.profile);
        if (radial == "1") {
            out += t.poly.size() > 1 ? "(" + poly + ")" : poly;
        } else {
            out += (t.poly.size() > 1 ? "(" + poly + ")" : poly) + "*" + radial;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dunkl operators on weighted functions

WeightedFunction weighted_dunkl_apply(const DunklContext& ctx, const RationalVector& xi,
                                      const WeightedFunction& w) {
    if (w.dim() != ctx.dim()) throw InputError("weighted function dimension does not match the root system");
    Poly xi_x = Poly::linear_form(xi);
    std::vector<WeightedTerm> raw;
    for (const auto& t : w.terms()) {
        // The radial factor is G-invariant, so the reflection part acts on t.poly only.
        raw.push_back({dunkl_apply(ctx, xi, t.poly), t.profile});
        raw.push_back({xi_x * t.poly, inv_r_ddr(t.profile)});
    }
    return WeightedFunction::from_terms(ctx.dim(), std::move(raw));
}

WeightedFunction weighted_dunkl_apply(const DunklContext& ctx, std::size_t j, const WeightedFunction& w) {
    if (j >= ctx.dim()) throw InputError("coordinate index out of range");
    RationalVector e(ctx.dim());
    e[j] = 1;
    return weighted_dunkl_apply(ctx, e, w);
}

WeightedFunction hobson_lhs(const DunklContext& ctx, const Poly& p, const RadialProfile& phi) {
    if (p.dim() != ctx.dim()) throw InputError("polynomial dimension does not match the root system");
    std::vector<std::size_t> order(ctx.dim());
    std::iota(order.rbegin(), order.rend(), 0);
    std::function<WeightedFunction(std::size_t, const WeightedFunction&)> step =
        [&](std::size_t j, const WeightedFunction& f) { return weighted_dunkl_apply(ctx, j, f); };
    return detail::apply_monomials(p, WeightedFunction(Poly::constant(ctx.dim(), 1), phi), order, step,
                                   WeightedFunction(ctx.dim()));
}

WeightedFunction hobson_rhs(const DunklContext& ctx, const Poly& p, const RadialProfile& phi) {
    if (!p.is_homogeneous()) throw InputError("Hobson expansion needs a homogeneous polynomial");
    if (p.dim() != ctx.dim()) throw InputError("polynomial dimension does not match the root system");
    WeightedFunction out(ctx.dim());
    if (p.is_zero()) return out;
    const unsigned m = static_cast<unsigned>(p.degree());
    Poly lap = p;
    Rational weight = 1;
    for (unsigned j = 0; 2 * j <= m; ++j) {
        if (j > 0) {
            lap = dunkl_laplacian_sq(ctx, lap);
            weight /= 2 * j;
        }
        if (lap.is_zero()) break;
        out += WeightedFunction(lap * weight, inv_r_ddr(phi, m - j));
    }
    return out;
}

WeightedFunction hobson_residual(const DunklContext& ctx, const Poly& p, const RadialProfile& phi) {
    return hobson_lhs(ctx, p, phi) - hobson_rhs(ctx, p, phi);
}

} // namespace dunkl
