#include "bsk/kernels.hpp"

#include <array>
#include <cmath>

namespace bsk {

KernelId szego_kernel_of(Domain d) {
    return d == Domain::Disc ? KernelId::SzegoDisc : KernelId::SzegoBall2;
}

KernelId bergman_kernel_of(Domain d) {
    return d == Domain::Disc ? KernelId::BergmanDisc : KernelId::BergmanBall2;
}

const KernelSpec& kernel_spec(KernelId id) {
    static const std::array<KernelSpec, 4> specs = [] {
        auto make = [](Rational c, int pi_pow, int p, int dim) {
            ExactValue constant(RationalComplex(std::move(c)), pi_pow);
            const double value = constant.to_complex().real();
            return KernelSpec{std::move(constant), p, dim, value};
        };
        return std::array<KernelSpec, 4>{
            make(Rational(1, 2), -1, 1, 1),  // SzegoDisc
            make(Rational(1), -1, 2, 1),     // BergmanDisc
            make(Rational(1, 2), -2, 2, 2),  // SzegoBall2
            make(Rational(2), -2, 3, 2),     // BergmanBall2
        };
    }();
    return specs[static_cast<std::size_t>(id)];
}

std::complex<double> kernel_eval(KernelId id, const EvalPoint& z, const EvalPoint& zeta) {
    const KernelSpec& spec = kernel_spec(id);
    if (z.dim != spec.dim || zeta.dim != spec.dim)
        throw std::invalid_argument("kernel_eval: point dimension does not match kernel");
    if (z.region != Region::Interior)
        throw std::domain_error("kernel_eval: z must be an interior point");
    const std::complex<double> w = hermitian_pairing(z, zeta);
    const double d = std::abs(1.0 - w);
    if (d <= 1e-14) throw KernelSingularityError(d);
    return kernel_eval_unchecked(spec, w);
}

std::complex<double> neumann_partial_sum(KernelId id, const EvalPoint& z, const EvalPoint& zeta,
                                         int order) {
    const KernelSpec& spec = kernel_spec(id);
    if (z.dim != spec.dim || zeta.dim != spec.dim)
        throw std::invalid_argument("neumann_partial_sum: point dimension does not match kernel");
    const std::complex<double> w = hermitian_pairing(z, zeta);
    if (!(std::abs(w) < 1.0))
        throw std::domain_error("neumann_partial_sum: requires |z.conj(zeta)| < 1");
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> wj{1.0, 0.0};
    double binom = 1.0;  // C(j+p-1, p-1), updated by the ratio (j+p-1)/j
    for (int j = 0; j <= order; ++j) {
        if (j > 0) {
            binom *= static_cast<double>(j + spec.exponent - 1) / static_cast<double>(j);
            wj *= w;
        }
        sum += binom * wj;
    }
    return spec.constant_value * sum;
}

double kernel_diag_ratio(Domain domain, const EvalPoint& z) {
    const std::complex<double> s = kernel_eval(szego_kernel_of(domain), z, z);
    const std::complex<double> k = kernel_eval(bergman_kernel_of(domain), z, z);
    return s.real() / k.real();
}

}  // namespace bsk
