#include "bsk/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace bsk {

namespace {

class Cursor {
public:
    Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool at_end() { skip_ws(); return pos_ >= text_.size(); }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }
    void seek(std::size_t p) { pos_ = p; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

long parse_uint(Cursor& c, const char* what) {
    c.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(c.raw_peek()))) c.fail(std::string("expected ") + what);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.raw_peek()))) {
        v = v * 10 + (c.raw_peek() - '0');
        if (v > 1000000000L) c.fail("integer too large");
        c.advance();
    }
    return v;
}

// snum := digits ['/' digits]; the sign is supplied by the caller.
Rational parse_snum(Cursor& c) {
    const long num = parse_uint(c, "number");
    if (c.raw_peek() == '/') {
        c.advance();
        const std::size_t den_pos = c.pos();
        const long den = parse_uint(c, "denominator");
        if (den == 0) throw ParseError(den_pos, "zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

// coeff := snum [('+'|'-') snum 'i']
RationalComplex parse_coeff(Cursor& c, int sign) {
    Rational re = parse_snum(c) * Rational(sign);
    c.skip_ws();
    const std::size_t mark = c.pos();
    if (c.raw_peek() == '+' || c.raw_peek() == '-') {
        const int im_sign = c.raw_peek() == '-' ? -1 : 1;
        c.advance();
        c.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(c.raw_peek()))) {
            Rational im = parse_snum(c) * Rational(im_sign * sign);
            c.skip_ws();
            if (c.raw_peek() == 'i') {
                c.advance();
                return RationalComplex(std::move(re), std::move(im));
            }
        }
        c.seek(mark);  // it was the start of the next term
    }
    return RationalComplex(std::move(re));
}

// factor := ('z'|'zb')[axis]['^' nat]
void parse_factor(Cursor& c, int dim, MultiIndex& holo, MultiIndex& anti) {
    const std::size_t name_pos = c.pos();
    c.advance();  // consume 'z'
    bool conjugated = false;
    if (c.raw_peek() == 'b') {
        conjugated = true;
        c.advance();
    }
    int axis = 0;
    if (c.raw_peek() == '1' || c.raw_peek() == '2') {
        axis = c.raw_peek() - '0';
        c.advance();
    }
    if (dim == 1) {
        if (axis != 0) throw ParseError(name_pos, "dimension mismatch: subscripted variable with n=1");
        axis = 1;
    } else {
        if (axis == 0)
            throw ParseError(name_pos, "dimension mismatch: unsubscripted variable with n=2");
    }
    int expo = 1;
    if (c.raw_peek() == '^') {
        c.advance();
        if (c.raw_peek() == '-') c.fail("negative exponent");
        expo = static_cast<int>(parse_uint(c, "exponent"));
    }
    MultiIndex& target = conjugated ? anti : holo;
    target.set(axis, target.at(axis) + expo);
}

MonomialTerm parse_term(Cursor& c, int dim, int sign) {
    RationalComplex coeff{Rational(sign)};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_coeff(c, sign);
        have_coeff = true;
    }
    MultiIndex holo(dim), anti(dim);
    bool have_factors = false;
    if (have_coeff) {
        if (c.peek() == '*') {
            c.advance();
            if (c.peek() != 'z') c.fail("expected factor after '*'");
        } else if (c.peek() == 'z') {
            c.fail("expected '*' between coefficient and factors");
        }
    }
    while (c.peek() == 'z') {
        parse_factor(c, dim, holo, anti);
        have_factors = true;
    }
    if (!have_coeff && !have_factors) c.fail("expected term");
    return MonomialTerm(std::move(coeff), std::move(holo), std::move(anti));
}

std::string format_rational_complex(const RationalComplex& c) {
    std::string s = c.re.to_string();
    if (!c.im.is_zero()) {
        s += c.im.sign() < 0 ? "-" : "+";
        s += c.im.abs().to_string() + " i";
    }
    return s;
}

std::string format_factors(const MonomialTerm& t, int dim) {
    std::string s;
    auto emit = [&](const char* base, int axis, int e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += base;
        if (dim == 2) s += static_cast<char>('0' + axis);
        s += '^' + std::to_string(e);
    };
    for (int ax = 1; ax <= dim; ++ax) emit("z", ax, t.holo.at(ax));
    for (int ax = 1; ax <= dim; ++ax) emit("zb", ax, t.anti.at(ax));
    return s;
}

}  // namespace

PolyObservable parse_poly(std::string_view text, int dim) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("parse_poly: dimension must be 1 or 2");
    Cursor c(text);
    std::vector<MonomialTerm> terms;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        c.advance();
    }
    if (c.at_end()) c.fail("empty polynomial");
    terms.push_back(parse_term(c, dim, sign));
    while (!c.at_end()) {
        const char op = c.peek();
        if (op != '+' && op != '-') c.fail("expected '+' or '-'");
        c.advance();
        terms.push_back(parse_term(c, dim, op == '-' ? -1 : 1));
    }
    return PolyObservable(dim, std::move(terms));
}

std::string format_poly(const PolyObservable& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        // pull a leading minus out of the coefficient so terms join with +/-
        const bool negative = t.coeff.re.sign() < 0 || (t.coeff.re.is_zero() && t.coeff.im.sign() < 0);
        const RationalComplex c = negative ? -t.coeff : t.coeff;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string factors = format_factors(t, f.dim());
        if (factors.empty())
            out += format_rational_complex(c);
        else if (c.is_one())
            out += factors;
        else
            out += format_rational_complex(c) + " * " + factors;
    }
    return out;
}

std::complex<double> parse_complex(std::string_view text) {
    std::size_t pos = 0;
    auto read_number = [&]() -> double {
        const std::string rest(text.substr(pos));
        const char* begin = rest.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError(pos, "expected number");
        pos += static_cast<std::size_t>(end - begin);
        return v;
    };
    auto at = [&](std::size_t p) { return p < text.size() ? text[p] : '\0'; };

    double re = 0.0, im = 0.0;
    // "i" or "-i" with no digits
    if (at(pos) == 'i' || ((at(pos) == '+' || at(pos) == '-') && at(pos + 1) == 'i')) {
        im = at(pos) == '-' ? -1.0 : 1.0;
        pos += at(pos) == 'i' ? 1 : 2;
    } else {
        const double first = read_number();
        if (at(pos) == 'i') {
            ++pos;
            im = first;
        } else {
            re = first;
            if (at(pos) == '+' || at(pos) == '-') {
                if (at(pos + 1) == 'i') {
                    im = at(pos) == '-' ? -1.0 : 1.0;
                    pos += 2;
                } else {
                    im = read_number();
                    if (at(pos) != 'i') throw ParseError(pos, "expected 'i'");
                    ++pos;
                }
            }
        }
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters in complex literal");
    return {re, im};
}

EvalPoint parse_point(std::string_view text, int dim) {
    if (dim == 1) return EvalPoint::disc(parse_complex(text));
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError(0, "expected '(c1,c2)'");
    const std::string_view inner = text.substr(1, text.size() - 2);
    const std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError(text.size(), "expected ',' in point");
    return EvalPoint::ball(parse_complex(inner.substr(0, comma)),
                           parse_complex(inner.substr(comma + 1)));
}

}  // namespace bsk
