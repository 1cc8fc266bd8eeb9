#include "dunkl/poly.hpp"

#include <cctype>

namespace dunkl {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

    Poly parse() {
        Poly out(dim_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
                pos_ += kUnicodeMinus.size();
                sign = -1;
                skip_ws();
            } else if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(out, sign);
            skip_ws();
        }
        return out;
    }

private:
    void parse_term(Poly& out, int sign) {
        Rational coef = sign;
        Exponent exp;
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) fail("expected a coefficient or variable");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= parse_coefficient();
            } else if (peek() == 'x') {
                get();
                unsigned index = parse_unsigned("variable index");
                if (index == 0 || index > dim_)
                    fail("variable x" + std::to_string(index) + " out of range 1.." + std::to_string(dim_));
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_ws();
                    e = parse_unsigned("exponent");
                }
                if (exp[index - 1] + e > 255) fail("exponent too large");
                exp[index - 1] = static_cast<std::uint8_t>(exp[index - 1] + e);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) get();
        }
        out.add_term(exp, coef);
    }

    Rational parse_coefficient() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
        std::string num(text_.substr(start, pos_ - start));
        std::string den = "1";
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            std::size_t ds = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
            if (ds == pos_) fail("expected denominator");
            den = std::string(text_.substr(ds, pos_ - ds));
        }
        mpz_class zd(den);
        if (zd == 0) fail("zero denominator");
        Rational q(mpz_class(num), zd);
        q.canonicalize();
        return q;
    }

    unsigned parse_unsigned(const char* what) {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (start == pos_) fail(std::string("expected ") + what);
        if (pos_ - start > 4) fail(std::string(what) + " too large");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("polynomial syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

std::string format_monomial(const Exponent& e, std::size_t dim) {
    std::string out;
    for (std::size_t i = 0; i < dim; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

} // namespace

Poly parse_poly(std::string_view text, std::size_t dim) { return PolyParser(text, dim).parse(); }

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool negative = c < 0;
        Rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = format_monomial(e, p.dim());
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + '*' + mono;
    }
    return out;
}

} // namespace dunkl
