#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bsk/poly.hpp"

namespace bsk {

/// Syntax error with the byte offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};

/// Parse the poly-spec grammar:
///   poly   := term (('+'|'-') term)*
///   term   := coeff ['*' factors] | factors
///   coeff  := snum [('+'|'-') snum 'i']        e.g. 1/2, 3, 1/2+1/3 i
///   factor := z^a | zb^a  (n=1)   z1^a | z2^a | zb1^a | zb2^a  (n=2)
/// Whitespace is insignificant; exponents default to 1 when '^' is absent.
/// The result is canonical (like terms merged).
PolyObservable parse_poly(std::string_view text, int dim);

/// Inverse of parse_poly on canonical polynomials; emits the same grammar.
std::string format_poly(const PolyObservable& f);

/// Complex literal "a", "bi", or "a+bi" with no internal spaces.
std::complex<double> parse_complex(std::string_view text);

/// Point literal: a complex for n=1, "(c1,c2)" for n=2.
EvalPoint parse_point(std::string_view text, int dim);

}  // namespace bsk
