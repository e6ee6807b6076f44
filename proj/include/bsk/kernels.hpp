#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "bsk/point.hpp"
#include "bsk/rational.hpp"

namespace bsk {

enum class KernelId { SzegoDisc, BergmanDisc, SzegoBall2, BergmanBall2 };

KernelId szego_kernel_of(Domain d);
KernelId bergman_kernel_of(Domain d);

/// Each kernel is constant / (1 - z.conj(zeta))^exponent:
///   SzegoDisc    1/(2 pi),   p = 1
///   BergmanDisc  1/pi,       p = 2
///   SzegoBall2   1/(2 pi^2), p = 2
///   BergmanBall2 2/pi^2,     p = 3
struct KernelSpec {
    ExactValue constant;
    int exponent;
    int dim;
    double constant_value;  // constant.to_complex().real(), cached for the hot path
};

const KernelSpec& kernel_spec(KernelId id);

struct KernelSingularityError : std::runtime_error {
    explicit KernelSingularityError(double d)
        : std::runtime_error("kernel evaluation too close to singular set, |1 - z.conj(zeta)| = " +
                             std::to_string(d)),
          denom_abs(d) {}
    double denom_abs;
};

/// Closed-form kernel value; z must be interior and the denominator must
/// stay away from zero (|1 - z.conj(zeta)| > 1e-14).
inline std::complex<double> kernel_eval_unchecked(const KernelSpec& spec,
                                                  std::complex<double> pairing) {
    const std::complex<double> d = 1.0 - pairing;
    return spec.constant_value / cpow_int(d, spec.exponent);
}

std::complex<double> kernel_eval(KernelId id, const EvalPoint& z, const EvalPoint& zeta);

/// Partial sum of the binomial expansion
///   constant * sum_{j<=m} C(j+p-1, p-1) (z.conj(zeta))^j,
/// which converges to the kernel for |z.conj(zeta)| < 1.
std::complex<double> neumann_partial_sum(KernelId id, const EvalPoint& z, const EvalPoint& zeta,
                                         int order);

/// S(z,z)/K(z,z) on the model domain; equals (1-|z|^2)/2 on the disc and
/// (1-|z|^2)/4 on the ball.
double kernel_diag_ratio(Domain domain, const EvalPoint& z);

}  // namespace bsk
