#include "dunkl/rational.hpp"

#include <cctype>
#include <cmath>

namespace dunkl {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw InputError("malformed rational '" + std::string(text) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class zn(n);
    mpz_class zd{std::string(den)};
    if (zd == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pochhammer(const Rational& a, unsigned n) {
    Rational out = 1;
    for (unsigned i = 0; i < n; ++i) out *= a + i;
    return out;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational power(const Rational& base, int n) {
    if (n < 0) {
        if (base == 0) throw InputError("zero raised to a negative power");
        return 1 / power(base, -n);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InputError("dimension mismatch in inner product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_even_integer(const Rational& q) {
    return is_integer(q) && mpz_even_p(q.get_num_mpz_t()) != 0;
}

Rational from_double(double v) {
    if (!std::isfinite(v)) throw InputError("non-finite value cannot be made rational");
    Rational q;
    mpq_set_d(q.get_mpq_t(), v);
    return q;
}

} // namespace dunkl
