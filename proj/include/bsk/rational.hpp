#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsk {

/// Exact rational scalar. Wraps a GMP rational that is always kept canonical
/// (reduced fraction, positive denominator), so operator== is decidable.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p" or "p/q" in base 10.
    static Rational from_string(const std::string& text);

    static Rational factorial(unsigned n) {
        mpz_class z;
        mpz_fac_ui(z.get_mpz_t(), n);
        return Rational(mpq_class(z));
    }
    static Rational binomial(unsigned n, unsigned k) {
        mpz_class z;
        mpz_bin_uiui(z.get_mpz_t(), n, k);
        return Rational(mpq_class(z));
    }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    double to_double() const { return q_.get_d(); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const { return q_.get_str(); }

private:
    mpq_class q_;
};

/// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(r) {}
    static RationalComplex one() { return RationalComplex(Rational(1)); }

    RationalComplex operator+(const RationalComplex& o) const { return {re + o.re, im + o.im}; }
    RationalComplex operator-(const RationalComplex& o) const { return {re - o.re, im - o.im}; }
    RationalComplex operator*(const RationalComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RationalComplex operator-() const { return {-re, -im}; }
    RationalComplex conj() const { return {re, -im}; }
    RationalComplex scaled(const Rational& s) const { return {re * s, im * s}; }

    bool operator==(const RationalComplex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const RationalComplex& o) const { return !(*this == o); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Exact value of the form coeff * pi^piPower. Sums of boundary/interior
/// monomial moments and kernel constants all live in this shape, so the
/// cancellation checks stay decidable.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(RationalComplex coeff, int pi_power) : coeff_(std::move(coeff)), pi_power_(pi_power) {
        normalize();
    }
    static ExactValue zero() { return ExactValue(); }
    static ExactValue rational(Rational r) { return ExactValue(RationalComplex(std::move(r)), 0); }

    const RationalComplex& coeff() const { return coeff_; }
    int pi_power() const { return pi_power_; }
    bool is_zero() const { return coeff_.is_zero(); }

    ExactValue operator*(const ExactValue& o) const {
        return ExactValue(coeff_ * o.coeff_, pi_power_ + o.pi_power_);
    }
    ExactValue scaled(const RationalComplex& s) const { return ExactValue(coeff_ * s, pi_power_); }

    /// Addition requires matching powers of pi (a zero operand is neutral).
    ExactValue operator+(const ExactValue& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_power_ != o.pi_power_)
            throw std::logic_error("ExactValue: adding values with different pi powers");
        return ExactValue(coeff_ + o.coeff_, pi_power_);
    }

    bool operator==(const ExactValue& o) const {
        return coeff_ == o.coeff_ && pi_power_ == o.pi_power_;
    }

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    void normalize() {
        if (coeff_.is_zero()) pi_power_ = 0;
    }

    RationalComplex coeff_;
    int pi_power_ = 0;
};

}  // namespace bsk
