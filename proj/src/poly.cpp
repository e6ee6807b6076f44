#include "bsk/poly.hpp"

#include <algorithm>

namespace bsk {

namespace {

bool term_key_less(const MonomialTerm& a, const MonomialTerm& b) {
    if (a.holo != b.holo) return a.holo < b.holo;
    return a.anti < b.anti;
}

}  // namespace

PolyObservable::PolyObservable(int dim, std::vector<MonomialTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("PolyObservable: dimension must be 1 or 2");
    for (const auto& t : terms_)
        if (t.holo.dim() != dim_)
            throw std::invalid_argument("PolyObservable: term dimension mismatch");
    canonicalize();
}

PolyObservable PolyObservable::constant(int dim, RationalComplex c) {
    return monomial(std::move(c), MultiIndex(dim), MultiIndex(dim));
}

PolyObservable PolyObservable::monomial(RationalComplex c, MultiIndex holo, MultiIndex anti) {
    const int dim = holo.dim();
    std::vector<MonomialTerm> t;
    t.emplace_back(std::move(c), std::move(holo), std::move(anti));
    return PolyObservable(dim, std::move(t));
}

void PolyObservable::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_key_less);
    std::vector<MonomialTerm> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().holo == t.holo && merged.back().anti == t.anti)
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

PolyObservable PolyObservable::operator+(const PolyObservable& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyObservable: dimension mismatch");
    std::vector<MonomialTerm> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return PolyObservable(dim_, std::move(t));
}

PolyObservable PolyObservable::operator-(const PolyObservable& o) const {
    return *this + o.scaled(RationalComplex(Rational(-1)));
}

PolyObservable PolyObservable::scaled(const RationalComplex& s) const {
    std::vector<MonomialTerm> t;
    t.reserve(terms_.size());
    for (const auto& m : terms_) t.emplace_back(m.coeff * s, m.holo, m.anti);
    return PolyObservable(dim_, std::move(t));
}

PolyObservable PolyObservable::shifted(const MultiIndex& holo_shift,
                                       const MultiIndex& anti_shift) const {
    std::vector<MonomialTerm> t;
    t.reserve(terms_.size());
    for (const auto& m : terms_) {
        MultiIndex h(dim_), a(dim_);
        for (int ax = 1; ax <= dim_; ++ax) {
            h.set(ax, m.holo.at(ax) + holo_shift.at(ax));
            a.set(ax, m.anti.at(ax) + anti_shift.at(ax));
        }
        t.emplace_back(m.coeff, h, a);
    }
    return PolyObservable(dim_, std::move(t));
}

std::complex<double> PolyObservable::eval(const EvalPoint& p) const {
    if (p.dim != dim_) throw std::invalid_argument("PolyObservable: evaluation dimension mismatch");
    std::complex<double> sum{0.0, 0.0};
    for (const auto& t : terms_) {
        std::complex<double> v = t.coeff.to_complex();
        for (int ax = 1; ax <= dim_; ++ax) {
            const std::complex<double> zj = p.coords[ax - 1];
            if (const int a = t.holo.at(ax)) v *= cpow_int(zj, a);
            if (const int b = t.anti.at(ax)) v *= cpow_int(std::conj(zj), b);
        }
        sum += v;
    }
    return sum;
}

int PolyObservable::max_holo_order() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.holo.order());
    return m;
}

int PolyObservable::max_anti_order() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.anti.order());
    return m;
}

int PolyObservable::max_total_order() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.holo.order() + t.anti.order());
    return m;
}

bool PolyObservable::is_holomorphic() const {
    for (const auto& t : terms_)
        if (t.anti.order() > 0) return false;
    return true;
}

bool PolyObservable::operator==(const PolyObservable& o) const {
    if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].holo != o.terms_[i].holo || terms_[i].anti != o.terms_[i].anti ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

PolyObservable differentiate(const PolyObservable& f, Wirtinger which, int axis) {
    if (axis < 1 || axis > f.dim()) throw std::invalid_argument("differentiate: axis out of range");
    std::vector<MonomialTerm> out;
    for (const auto& t : f.terms()) {
        const MultiIndex& idx = which == Wirtinger::Holo ? t.holo : t.anti;
        const int e = idx.at(axis);
        if (e == 0) continue;
        MultiIndex h = t.holo, a = t.anti;
        if (which == Wirtinger::Holo)
            h.set(axis, e - 1);
        else
            a.set(axis, e - 1);
        out.emplace_back(t.coeff.scaled(Rational(e)), h, a);
    }
    return PolyObservable(f.dim(), std::move(out));
}

}  // namespace bsk
