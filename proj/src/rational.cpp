#include "bsk/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace bsk {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                        ((c == '-' || c == '+') && (i == 0 || text[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("Rational: bad character in '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

std::complex<double> ExactValue::to_complex() const {
    return coeff_.to_complex() * std::pow(std::numbers::pi, pi_power_);
}

std::string ExactValue::to_string() const {
    std::string s = coeff_.re.to_string();
    if (!coeff_.im.is_zero()) {
        s += coeff_.im.sign() < 0 ? "-" : "+";
        s += coeff_.im.abs().to_string() + " i";
    }
    if (pi_power_ != 0) s += " * pi^" + std::to_string(pi_power_);
    return s;
}

}  // namespace bsk
