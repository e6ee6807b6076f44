#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bsk/poly.hpp"
#include "bsk/projections.hpp"
#include "bsk/quadrature.hpp"

namespace bsk {

/// One differential in a wedge product: d(zeta_axis) or d(conj zeta_axis).
struct Differential {
    int axis;         // 1-based
    bool conjugated;
};

/// The non-kernel factor of an integrand.
enum class ExtraFactor {
    PlainF,           // f
    PairingTimesF,    // (z . conj(zeta)) * f
    HoloDirectional,  // zeta_axis * df/dzeta_axis
    AntiDirectional,  // conj(zeta_axis) * df/dconj(zeta_axis)
};

/// One term of the boundary-to-interior calculation, kept as data:
///   chain_sign * constant * integral of extra(f) / (1 - z.conj(zeta))^p
///   against the stated wedge ordering of the differentials.
/// The constants and orderings are inputs under audit, not assumed truths;
/// the wedge ordering is converted mechanically to Lebesgue measure with the
/// fixed convention d(conj zeta_a) ^ d(zeta_a) = +2i dA_a per variable.
struct ScheduleEntry {
    std::string label;
    ExactValue stated_constant;
    int kernel_exponent;
    ExtraFactor factor;
    int axis;  // used by the directional factors
    int chain_sign;
    std::vector<Differential> wedge;
};

/// Disc chain: szego side = A - B + C + D.
std::vector<ScheduleEntry> disc_schedule();
/// Ball chain: the six grouped interior integrals, signed -A+B+C-D+E-F,
/// with the stated constants 1/8, 3/16 and 1/32 over pi^2.
std::vector<ScheduleEntry> ball_schedule();

/// sign(permutation) * (2i)^n for a wedge listing each differential of the
/// n-variable volume form exactly once.
RationalComplex wedge_to_lebesgue(const std::vector<Differential>& wedge, int dim);

struct TermValue {
    std::string label;
    std::complex<double> value;
    int chain_sign;
};

struct DecompositionReport {
    std::complex<double> szego_side;
    std::vector<TermValue> terms;
    std::complex<double> chain_sum;    // sum of chain_sign * term
    double stokes_defect;              // |szego_side - chain_sum|
    std::complex<double> bergman_term; // independent Bergman integral
    std::complex<double> residual;     // szego_side - bergman_term
};

DecompositionReport disc_terms(const PolyObservable& f, const EvalPoint& z, Resolution r,
                               int threads = 0);
DecompositionReport ball_terms(const PolyObservable& f, const EvalPoint& z, Resolution r,
                               int threads = 0);

struct ExactTermValue {
    std::string label;
    PolyObservable value;  // polynomial in z
    int chain_sign;
};

/// Exact-arithmetic disc decomposition with z treated as a formal variable;
/// every field is a holomorphic polynomial in z with rational coefficients.
struct ExactDecompositionReport {
    PolyObservable szego_side;
    std::vector<ExactTermValue> terms;
    PolyObservable chain_sum;
    PolyObservable stokes_defect;
    PolyObservable bergman_term;
    PolyObservable residual;
};

ExactDecompositionReport disc_terms_exact(const PolyObservable& f);

/// Exact residual (szego oracle minus Bergman oracle) for each monomial.
/// Rows where the residual is nonzero despite a positive conj(zeta) power
/// are flagged: they contradict the claimed vanishing for such monomials.
struct ResidualRow {
    MultiIndex holo;
    MultiIndex anti;
    PolyObservable residual;
    bool parity_deviation;
};

std::vector<ResidualRow> residual_table(Domain domain, int kmax, int mmax);

/// Integral of f against the 1/16-normalized boundary 3-form on S^3,
/// computed by pulling the form back through the Hopf parametrization
/// (numeric 3x3 determinants of the chart Jacobian). The measure-audit
/// command reports it against the geometric surface measure; nothing is
/// assumed about the form's normalization.
std::complex<double> surface_form_integral(const PolyObservable& f, Resolution r,
                                           int threads = 0);

}  // namespace bsk
