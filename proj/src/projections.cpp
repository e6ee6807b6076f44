#include "bsk/projections.hpp"

#include <cmath>

namespace bsk {

namespace {

void check_projection_point(const EvalPoint& z, int dim) {
    if (z.dim != dim) throw std::invalid_argument("projection: point dimension mismatch");
    if (z.region != Region::Interior || !(z.norm_sq() < 1.0))
        throw std::domain_error("projection: z must be interior");
    if (z.norm() > 0.95) throw std::domain_error("projection: |z| must be <= 0.95");
}

void check_rule_mass(const QuadratureRule& rule) {
    const double measure = domain_measure(rule.kind);
    if (std::abs(rule.mass() - measure) > 1e-10 * measure)
        throw QuadratureError("rule mass check failed for " + domain_kind_name(rule.kind));
}

ProjectionResult apply(DomainKind kind, KernelId id, const PolyObservable& f, const EvalPoint& z,
                       Resolution r, int threads) {
    check_projection_point(z, domain_kind_dim(kind));
    const QuadratureRule& rule = shared_rule(kind, r);
    return ProjectionResult{project_with_rule(rule, id, f, z, threads),
                            ProjectionMethod::Quadrature, r};
}

/// Shared engine for both oracles: expand (1 - z.conj(zeta))^{-p} binomially
/// and integrate monomial by monomial with exact_moment. Every coefficient
/// comes out as a pure rational (the pi powers of the kernel constant and of
/// the moment cancel).
PolyObservable oracle(Domain domain, KernelId id, DomainKind moment_domain,
                      const PolyObservable& f) {
    const int dim = domain_dimension(domain);
    if (f.dim() != dim) throw std::invalid_argument("oracle: polynomial dimension mismatch");
    const KernelSpec& spec = kernel_spec(id);
    std::vector<MonomialTerm> out;
    for (const auto& t : f.terms()) {
        if (!t.holo.dominates(t.anti)) continue;  // no holomorphic component
        const MultiIndex gamma = t.holo.minus(t.anti);
        const int j = gamma.order();
        const Rational binom =
            Rational::binomial(static_cast<unsigned>(j + spec.exponent - 1),
                               static_cast<unsigned>(spec.exponent - 1));
        const Rational multinom =
            Rational::factorial(static_cast<unsigned>(j)) / gamma.factorial();
        const ExactValue total = spec.constant *
                                 exact_moment(moment_domain, t.holo, t.holo) *
                                 ExactValue::rational(binom * multinom);
        if (total.pi_power() != 0)
            throw std::logic_error("oracle: pi powers failed to cancel");
        out.emplace_back(t.coeff * total.coeff(), gamma, MultiIndex(dim));
    }
    return PolyObservable(dim, std::move(out));
}

}  // namespace

std::complex<double> project_with_rule(const QuadratureRule& rule, KernelId id,
                                       const PolyObservable& f, const EvalPoint& z, int threads) {
    check_rule_mass(rule);
    const KernelSpec& spec = kernel_spec(id);
    if (domain_kind_dim(rule.kind) != spec.dim)
        throw std::invalid_argument("project_with_rule: rule/kernel dimension mismatch");
    return integrate(
        rule,
        [&f, &z, &spec](const EvalPoint& zeta) {
            const std::complex<double> w = hermitian_pairing(z, zeta);
            return f.eval(zeta) * kernel_eval_unchecked(spec, w);
        },
        threads);
}

ProjectionResult szego_apply(Domain domain, const PolyObservable& f, const EvalPoint& z,
                             Resolution r, int threads) {
    return apply(boundary_of(domain), szego_kernel_of(domain), f, z, r, threads);
}

ProjectionResult bergman_apply(Domain domain, const PolyObservable& f, const EvalPoint& z,
                               Resolution r, int threads) {
    return apply(interior_of(domain), bergman_kernel_of(domain), f, z, r, threads);
}

PolyObservable szego_oracle(Domain domain, const PolyObservable& f) {
    return oracle(domain, szego_kernel_of(domain), boundary_of(domain), f);
}

PolyObservable bergman_oracle(Domain domain, const PolyObservable& f) {
    return oracle(domain, bergman_kernel_of(domain), interior_of(domain), f);
}

}  // namespace bsk
