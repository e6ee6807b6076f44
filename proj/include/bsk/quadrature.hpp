#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsk/point.hpp"
#include "bsk/poly.hpp"
#include "bsk/rational.hpp"

namespace bsk {

enum class DomainKind { Circle, Disc, Sphere3, Ball4 };

int domain_kind_dim(DomainKind k);
bool domain_kind_is_boundary(DomainKind k);
double domain_measure(DomainKind k);  // 2*pi, pi, 2*pi^2, pi^2/2
std::string domain_kind_name(DomainKind k);
DomainKind boundary_of(Domain d);  // Circle / Sphere3
DomainKind interior_of(Domain d);  // Disc / Ball4

/// Generating parameters for a rule: points per angular coordinate and per
/// radial/latitude coordinate.
struct Resolution {
    int n_theta = 0;
    int n_radial = 0;

    void validate() const {
        if (n_theta < 4 || n_theta % 2 != 0)
            throw std::invalid_argument("Resolution: n_theta must be even and >= 4");
        if (n_radial < 2) throw std::invalid_argument("Resolution: n_radial must be >= 2");
    }
    bool operator==(const Resolution& o) const {
        return n_theta == o.n_theta && n_radial == o.n_radial;
    }
};

struct QuadratureRule {
    DomainKind kind;
    Resolution resolution;
    std::vector<EvalPoint> nodes;
    std::vector<double> weights;

    double mass() const;  // pairwise sum of the weights
};

/// Raised when an integrand is non-finite at a node, or a rule fails its
/// mass check; carries the offending node index when there is one.
struct QuadratureError : std::runtime_error {
    QuadratureError(std::size_t node, const std::string& msg)
        : std::runtime_error(msg + " (node " + std::to_string(node) + ")"), node_index(node) {}
    explicit QuadratureError(const std::string& msg)
        : std::runtime_error(msg), node_index(static_cast<std::size_t>(-1)) {}
    std::size_t node_index;
};

/// Gauss-Legendre nodes/weights on [0,1]; n-point rule is exact through
/// degree 2n-1.
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights);

QuadratureRule circle_rule(Resolution r);
QuadratureRule disc_rule(Resolution r);
QuadratureRule sphere3_rule(Resolution r);
QuadratureRule ball4_rule(Resolution r);
QuadratureRule make_rule(DomainKind kind, Resolution r);

/// Process-wide immutable rule cache (rules are safe to share).
const QuadratureRule& shared_rule(DomainKind kind, Resolution r);

/// Default worker count for integrate(); 1 unless raised by the caller.
void set_default_threads(int n);
int default_threads();

/// Fixed-order pairwise summation; the reduction every integral uses, so
/// results are bit-identical for any thread count.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);
double pairwise_sum(std::span<const double> v);

namespace detail {
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body);
}

/// Sum of w_j * g(node_j). Node evaluations may run on several threads;
/// the weighted values land in a buffer indexed by node and are reduced
/// pairwise in fixed order.
template <class G>
std::complex<double> integrate(const QuadratureRule& rule, G&& g, int threads = 0) {
    if (threads <= 0) threads = default_threads();
    const std::size_t n = rule.nodes.size();
    std::vector<std::complex<double>> vals(n);
    detail::parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) vals[i] = rule.weights[i] * g(rule.nodes[i]);
    });
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(vals[i].real()) || !std::isfinite(vals[i].imag()))
            throw QuadratureError(i, "non-finite integrand value");
    return pairwise_sum(std::span<const std::complex<double>>(vals));
}

/// Exact value of the monomial moment over the domain:
/// zero unless alpha == beta; otherwise
///   circle  2*pi
///   disc    pi/(a+1)
///   sphere3 2*pi^2 * alpha! / (|alpha|+1)!
///   ball4   pi^2 * alpha! / (|alpha|+2)!
ExactValue exact_moment(DomainKind kind, const MultiIndex& alpha, const MultiIndex& beta);

}  // namespace bsk
