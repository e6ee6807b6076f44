#pragma once

#include <complex>

#include "bsk/kernels.hpp"
#include "bsk/poly.hpp"
#include "bsk/quadrature.hpp"

namespace bsk {

enum class ProjectionMethod { Quadrature, Oracle };

struct ProjectionResult {
    std::complex<double> value;
    ProjectionMethod method;
    Resolution resolution_used;
};

/// Szego projection of f evaluated at z: boundary integral of f * S(z, .)
/// over the circle (disc) or S^3 (ball). Requires z interior, |z| <= 0.95.
ProjectionResult szego_apply(Domain domain, const PolyObservable& f, const EvalPoint& z,
                             Resolution r, int threads = 0);

/// Bergman projection of f at z: interior integral of f * K(z, .).
ProjectionResult bergman_apply(Domain domain, const PolyObservable& f, const EvalPoint& z,
                               Resolution r, int threads = 0);

/// Quadrature of f * kernel against a caller-supplied rule. The rule must
/// pass its mass check (sum of weights = domain measure to 1e-10 relative).
std::complex<double> project_with_rule(const QuadratureRule& rule, KernelId id,
                                       const PolyObservable& f, const EvalPoint& z,
                                       int threads = 0);

/// Exact projections, computed term by term from exact_moment and the
/// binomial expansion of the kernel; the result is a holomorphic polynomial
/// in z with exact coefficients. For a monomial zeta^a conj(zeta)^b the
/// image is nonzero only when a >= b componentwise.
PolyObservable szego_oracle(Domain domain, const PolyObservable& f);
PolyObservable bergman_oracle(Domain domain, const PolyObservable& f);

}  // namespace bsk
