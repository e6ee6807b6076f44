#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "bsk/point.hpp"
#include "bsk/rational.hpp"

namespace bsk {

/// Tuple of n nonnegative exponents, n in {1,2}.
class MultiIndex {
public:
    explicit MultiIndex(int dim) : dim_(dim) {
        if (dim != 1 && dim != 2) throw std::invalid_argument("MultiIndex: dimension must be 1 or 2");
    }
    static MultiIndex of(int a) { MultiIndex m(1); m.set(1, a); return m; }
    static MultiIndex of(int a1, int a2) { MultiIndex m(2); m.set(1, a1); m.set(2, a2); return m; }

    int dim() const { return dim_; }
    int at(int axis) const { check_axis(axis); return d_[axis - 1]; }
    void set(int axis, int value) {
        check_axis(axis);
        if (value < 0) throw std::invalid_argument("MultiIndex: negative exponent");
        d_[axis - 1] = value;
    }

    int order() const { return d_[0] + d_[1]; }

    bool dominates(const MultiIndex& o) const {
        return dim_ == o.dim_ && d_[0] >= o.d_[0] && d_[1] >= o.d_[1];
    }
    MultiIndex minus(const MultiIndex& o) const {
        MultiIndex r(dim_);
        for (int ax = 1; ax <= dim_; ++ax) r.set(ax, at(ax) - o.at(ax));
        return r;
    }

    Rational factorial() const {
        Rational f = Rational::factorial(static_cast<unsigned>(d_[0]));
        if (dim_ == 2) f = f * Rational::factorial(static_cast<unsigned>(d_[1]));
        return f;
    }

    bool operator==(const MultiIndex& o) const { return dim_ == o.dim_ && d_ == o.d_; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }
    bool operator<(const MultiIndex& o) const { return d_ < o.d_; }

private:
    void check_axis(int axis) const {
        if (axis < 1 || axis > dim_) throw std::invalid_argument("MultiIndex: axis out of range");
    }

    int dim_;
    std::array<int, 2> d_{0, 0};
};

/// coeff * zeta^holo * conj(zeta)^anti
struct MonomialTerm {
    RationalComplex coeff;
    MultiIndex holo;
    MultiIndex anti;

    MonomialTerm(RationalComplex c, MultiIndex h, MultiIndex a)
        : coeff(std::move(c)), holo(std::move(h)), anti(std::move(a)) {
        if (holo.dim() != anti.dim())
            throw std::invalid_argument("MonomialTerm: holo/anti dimension mismatch");
    }
};

enum class Wirtinger { Holo, Anti };

/// Polynomial in zeta and conj(zeta) with exact coefficients, kept in
/// canonical form: terms sorted by (holo, anti), like terms merged, zero
/// coefficients dropped. Structural equality is therefore value equality.
/// Immutable after construction.
class PolyObservable {
public:
    explicit PolyObservable(int dim) : dim_(dim) {
        if (dim != 1 && dim != 2) throw std::invalid_argument("PolyObservable: dimension must be 1 or 2");
    }
    PolyObservable(int dim, std::vector<MonomialTerm> terms);

    static PolyObservable constant(int dim, RationalComplex c);
    static PolyObservable monomial(RationalComplex c, MultiIndex holo, MultiIndex anti);

    int dim() const { return dim_; }
    const std::vector<MonomialTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyObservable operator+(const PolyObservable& o) const;
    PolyObservable operator-(const PolyObservable& o) const;
    PolyObservable scaled(const RationalComplex& s) const;
    /// Multiply every term by zeta^holoShift * conj(zeta)^antiShift.
    PolyObservable shifted(const MultiIndex& holo_shift, const MultiIndex& anti_shift) const;

    std::complex<double> eval(const EvalPoint& p) const;

    int max_holo_order() const;
    int max_anti_order() const;
    int max_total_order() const;
    bool is_holomorphic() const;  // no conj(zeta) factors

    bool operator==(const PolyObservable& o) const;
    bool operator!=(const PolyObservable& o) const { return !(*this == o); }

private:
    void canonicalize();

    int dim_;
    std::vector<MonomialTerm> terms_;
};

/// Exact Wirtinger derivative d/dzeta_axis or d/dconj(zeta)_axis.
PolyObservable differentiate(const PolyObservable& f, Wirtinger which, int axis);

}  // namespace bsk
