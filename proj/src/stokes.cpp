#include "bsk/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bsk {

namespace {

Differential d(int axis) { return Differential{axis, false}; }
Differential db(int axis) { return Differential{axis, true}; }

ExactValue imag_over_pi(long num, long den) {
    return ExactValue(RationalComplex(Rational(0), Rational(num, den)), -1);
}
ExactValue over_pi2(long num, long den) {
    return ExactValue(RationalComplex(Rational(num, den)), -2);
}

}  // namespace

std::vector<ScheduleEntry> disc_schedule() {
    // 1/(2 pi i) = -i/(2 pi), 1/(4 pi i) = -i/(4 pi)
    return {
        {"A", imag_over_pi(-1, 2), 2, ExtraFactor::PlainF, 0, +1, {db(1), d(1)}},
        {"B", imag_over_pi(-1, 4), 1, ExtraFactor::HoloDirectional, 1, -1, {d(1), db(1)}},
        {"C", imag_over_pi(-1, 4), 2, ExtraFactor::PairingTimesF, 0, +1, {d(1), db(1)}},
        {"D", imag_over_pi(-1, 4), 1, ExtraFactor::AntiDirectional, 1, +1, {db(1), d(1)}},
    };
}

std::vector<ScheduleEntry> ball_schedule() {
    return {
        {"A", over_pi2(1, 8), 3, ExtraFactor::PlainF, 0, -1, {db(1), d(1), db(2), d(2)}},
        {"B", over_pi2(3, 16), 3, ExtraFactor::PairingTimesF, 0, +1, {db(1), d(1), db(2), d(2)}},
        {"C", over_pi2(1, 32), 2, ExtraFactor::HoloDirectional, 1, +1, {d(1), d(2), db(1), db(2)}},
        {"D", over_pi2(1, 32), 2, ExtraFactor::HoloDirectional, 2, -1, {d(2), d(1), db(1), db(2)}},
        {"E", over_pi2(1, 32), 2, ExtraFactor::AntiDirectional, 1, +1, {db(1), db(2), d(1), d(2)}},
        {"F", over_pi2(1, 32), 2, ExtraFactor::AntiDirectional, 2, -1, {db(2), db(1), d(1), d(2)}},
    };
}

RationalComplex wedge_to_lebesgue(const std::vector<Differential>& wedge, int dim) {
    if (static_cast<int>(wedge.size()) != 2 * dim)
        throw std::invalid_argument("wedge_to_lebesgue: wrong number of differentials");
    // canonical order: dconj(zeta_1), dzeta_1, dconj(zeta_2), dzeta_2
    std::vector<int> rank;
    rank.reserve(wedge.size());
    for (const auto& w : wedge) {
        if (w.axis < 1 || w.axis > dim)
            throw std::invalid_argument("wedge_to_lebesgue: axis out of range");
        rank.push_back((w.axis - 1) * 2 + (w.conjugated ? 0 : 1));
    }
    {
        std::vector<int> sorted = rank;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i))
                throw std::invalid_argument("wedge_to_lebesgue: wedge is not a permutation");
    }
    int inversions = 0;
    for (std::size_t i = 0; i < rank.size(); ++i)
        for (std::size_t j = i + 1; j < rank.size(); ++j)
            if (rank[i] > rank[j]) ++inversions;
    const Rational sign(inversions % 2 == 0 ? 1 : -1);
    // (2i)^1 = 2i, (2i)^2 = -4
    RationalComplex factor = dim == 1 ? RationalComplex(Rational(0), Rational(2))
                                      : RationalComplex(Rational(-4));
    return factor.scaled(sign);
}

namespace {

struct PreparedEntry {
    const ScheduleEntry* entry;
    std::complex<double> lebesgue_coeff;
    PolyObservable effective;  // the polynomial part of the extra factor
    bool multiply_pairing;
};

PreparedEntry prepare(const ScheduleEntry& e, const PolyObservable& f, int dim) {
    const ExactValue leb = ExactValue(e.stated_constant.coeff() * wedge_to_lebesgue(e.wedge, dim),
                                      e.stated_constant.pi_power());
    PolyObservable g = f;
    bool pairing = false;
    switch (e.factor) {
        case ExtraFactor::PlainF:
            break;
        case ExtraFactor::PairingTimesF:
            pairing = true;
            break;
        case ExtraFactor::HoloDirectional: {
            MultiIndex shift(dim);
            shift.set(e.axis, 1);
            g = differentiate(f, Wirtinger::Holo, e.axis).shifted(shift, MultiIndex(dim));
            break;
        }
        case ExtraFactor::AntiDirectional: {
            MultiIndex shift(dim);
            shift.set(e.axis, 1);
            g = differentiate(f, Wirtinger::Anti, e.axis).shifted(MultiIndex(dim), shift);
            break;
        }
    }
    return PreparedEntry{&e, leb.to_complex(), std::move(g), pairing};
}

std::complex<double> evaluate_entry(const PreparedEntry& pe, const QuadratureRule& rule,
                                    const EvalPoint& z, int threads) {
    const int p = pe.entry->kernel_exponent;
    const bool pairing = pe.multiply_pairing;
    const PolyObservable& g = pe.effective;
    const std::complex<double> raw = integrate(
        rule,
        [&g, &z, p, pairing](const EvalPoint& zeta) {
            const std::complex<double> w = hermitian_pairing(z, zeta);
            std::complex<double> num = g.eval(zeta);
            if (pairing) num *= w;
            return num / cpow_int(1.0 - w, p);
        },
        threads);
    return pe.lebesgue_coeff * raw;
}

DecompositionReport decompose(Domain domain, const std::vector<ScheduleEntry>& schedule,
                              const PolyObservable& f, const EvalPoint& z, Resolution r,
                              int threads, double max_abs_z) {
    const int dim = domain_dimension(domain);
    if (f.dim() != dim) throw std::invalid_argument("decompose: polynomial dimension mismatch");
    if (z.dim != dim) throw std::invalid_argument("decompose: point dimension mismatch");
    if (z.region != Region::Interior || z.norm() > max_abs_z)
        throw std::domain_error("decompose: z must be interior with |z| <= " +
                                std::to_string(max_abs_z));

    DecompositionReport rep{};
    rep.szego_side = szego_apply(domain, f, z, r, threads).value;
    rep.bergman_term = bergman_apply(domain, f, z, r, threads).value;

    const QuadratureRule& rule = shared_rule(interior_of(domain), r);
    std::complex<double> chain{0.0, 0.0};
    for (const auto& e : schedule) {
        const PreparedEntry pe = prepare(e, f, dim);
        const std::complex<double> v = evaluate_entry(pe, rule, z, threads);
        rep.terms.push_back(TermValue{e.label, v, e.chain_sign});
        chain += static_cast<double>(e.chain_sign) * v;
    }
    rep.chain_sum = chain;
    rep.stokes_defect = std::abs(rep.szego_side - chain);
    rep.residual = rep.szego_side - rep.bergman_term;
    return rep;
}

/// Exact disc entry: expand the kernel binomially; the circle of nonzero
/// disc moments picks j = k - m for a term zeta^k conj(zeta)^m, giving the
/// coefficient C(j+p-1, p-1) / (k+1) on z^{j + zpow}.
PolyObservable evaluate_entry_exact(const ScheduleEntry& e, const PolyObservable& f) {
    PolyObservable g = f;
    int zpow = 0;
    switch (e.factor) {
        case ExtraFactor::PlainF:
            break;
        case ExtraFactor::PairingTimesF:
            g = f.shifted(MultiIndex(1), MultiIndex::of(1));  // conj(zeta) * f
            zpow = 1;
            break;
        case ExtraFactor::HoloDirectional:
            g = differentiate(f, Wirtinger::Holo, 1).shifted(MultiIndex::of(1), MultiIndex(1));
            break;
        case ExtraFactor::AntiDirectional:
            g = differentiate(f, Wirtinger::Anti, 1).shifted(MultiIndex(1), MultiIndex::of(1));
            break;
    }
    const ExactValue leb = ExactValue(e.stated_constant.coeff() * wedge_to_lebesgue(e.wedge, 1),
                                      e.stated_constant.pi_power());
    const int p = e.kernel_exponent;
    std::vector<MonomialTerm> out;
    for (const auto& t : g.terms()) {
        const int k = t.holo.at(1);
        const int m = t.anti.at(1);
        const int j = k - m;
        if (j < 0) continue;
        const Rational binom = Rational::binomial(static_cast<unsigned>(j + p - 1),
                                                  static_cast<unsigned>(p - 1));
        const ExactValue total = leb * exact_moment(DomainKind::Disc, t.holo, t.holo) *
                                 ExactValue::rational(binom);
        if (total.pi_power() != 0)
            throw std::logic_error("evaluate_entry_exact: pi powers failed to cancel");
        out.emplace_back(t.coeff * total.coeff(), MultiIndex::of(j + zpow), MultiIndex(1));
    }
    return PolyObservable(1, std::move(out));
}

}  // namespace

DecompositionReport disc_terms(const PolyObservable& f, const EvalPoint& z, Resolution r,
                               int threads) {
    return decompose(Domain::Disc, disc_schedule(), f, z, r, threads, 0.95);
}

DecompositionReport ball_terms(const PolyObservable& f, const EvalPoint& z, Resolution r,
                               int threads) {
    return decompose(Domain::Ball2, ball_schedule(), f, z, r, threads, 0.9);
}

ExactDecompositionReport disc_terms_exact(const PolyObservable& f) {
    if (f.dim() != 1) throw std::invalid_argument("disc_terms_exact: expects a 1-dimensional polynomial");
    ExactDecompositionReport rep{PolyObservable(1), {}, PolyObservable(1), PolyObservable(1),
                                 PolyObservable(1), PolyObservable(1)};
    rep.szego_side = szego_oracle(Domain::Disc, f);
    rep.bergman_term = bergman_oracle(Domain::Disc, f);
    PolyObservable chain(1);
    for (const auto& e : disc_schedule()) {
        PolyObservable v = evaluate_entry_exact(e, f);
        if (e.chain_sign < 0)
            chain = chain - v;
        else
            chain = chain + v;
        rep.terms.push_back(ExactTermValue{e.label, std::move(v), e.chain_sign});
    }
    rep.chain_sum = chain;
    rep.stokes_defect = rep.szego_side - chain;
    rep.residual = rep.szego_side - rep.bergman_term;
    return rep;
}

std::vector<ResidualRow> residual_table(Domain domain, int kmax, int mmax) {
    if (kmax < 0 || mmax < 0 || kmax > 8 || mmax > 8)
        throw std::invalid_argument("residual_table: degree bounds must be in 0..8");
    std::vector<MultiIndex> holos, antis;
    if (domain == Domain::Disc) {
        for (int k = 0; k <= kmax; ++k) holos.push_back(MultiIndex::of(k));
        for (int m = 0; m <= mmax; ++m) antis.push_back(MultiIndex::of(m));
    } else {
        for (int a1 = 0; a1 <= kmax; ++a1)
            for (int a2 = 0; a1 + a2 <= kmax; ++a2) holos.push_back(MultiIndex::of(a1, a2));
        for (int b1 = 0; b1 <= mmax; ++b1)
            for (int b2 = 0; b1 + b2 <= mmax; ++b2) antis.push_back(MultiIndex::of(b1, b2));
    }
    std::vector<ResidualRow> rows;
    rows.reserve(holos.size() * antis.size());
    for (const auto& h : holos) {
        for (const auto& a : antis) {
            const PolyObservable mono = PolyObservable::monomial(RationalComplex::one(), h, a);
            PolyObservable res = szego_oracle(domain, mono) - bergman_oracle(domain, mono);
            const bool deviation = a.order() > 0 && !res.is_zero();
            rows.push_back(ResidualRow{h, a, std::move(res), deviation});
        }
    }
    return rows;
}

std::complex<double> surface_form_integral(const PolyObservable& f, Resolution r, int threads) {
    if (f.dim() != 2)
        throw std::invalid_argument("surface_form_integral: expects a 2-dimensional polynomial");
    r.validate();
    constexpr double kPi = std::numbers::pi;
    std::vector<double> u, uw;
    gauss_legendre_unit(r.n_radial, u, uw);

    using C = std::complex<double>;
    auto det3 = [](const std::array<C, 3>& r0, const std::array<C, 3>& r1,
                   const std::array<C, 3>& r2) {
        return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
               r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
               r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    };

    const double dth = 2.0 * kPi / r.n_theta;
    const std::size_t n =
        static_cast<std::size_t>(r.n_theta) * r.n_theta * static_cast<std::size_t>(r.n_radial);
    std::vector<C> vals(n);
    detail::parallel_for(n, threads <= 0 ? default_threads() : threads,
                         [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const int k = static_cast<int>(idx % r.n_radial);
            const int b = static_cast<int>((idx / r.n_radial) % r.n_theta);
            const int a = static_cast<int>(idx / (static_cast<std::size_t>(r.n_radial) * r.n_theta));
            const double s = 0.5 * kPi * u[k];
            const double c = std::cos(s), sn = std::sin(s);
            const C e1{std::cos(dth * a), std::sin(dth * a)};
            const C e2{std::cos(dth * b), std::sin(dth * b)};
            const C i{0.0, 1.0};
            const C z1 = c * e1, z2 = sn * e2;
            // chart Jacobian rows: (d/ds, d/dtheta1, d/dtheta2)
            const std::array<C, 3> dz1{-sn * e1, i * c * e1, C{0.0, 0.0}};
            const std::array<C, 3> dz2{c * e2, C{0.0, 0.0}, i * sn * e2};
            const std::array<C, 3> dz1b{-sn * std::conj(e1), -i * c * std::conj(e1), C{0.0, 0.0}};
            const std::array<C, 3> dz2b{c * std::conj(e2), C{0.0, 0.0}, -i * sn * std::conj(e2)};
            const C form = (z1 * det3(dz2, dz1b, dz2b) - z2 * det3(dz1, dz1b, dz2b) +
                            std::conj(z1) * det3(dz2b, dz1, dz2) -
                            std::conj(z2) * det3(dz1b, dz1, dz2)) /
                           16.0;
            const EvalPoint zeta = EvalPoint::ball(z1, z2, Region::Boundary);
            vals[idx] = f.eval(zeta) * form * (0.5 * kPi * uw[k]) * dth * dth;
        }
    });
    return pairwise_sum(std::span<const C>(vals));
}

}  // namespace bsk
