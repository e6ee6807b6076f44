#include "bsk/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

namespace bsk {

namespace {
constexpr double kPi = std::numbers::pi;
}

int domain_kind_dim(DomainKind k) {
    return (k == DomainKind::Circle || k == DomainKind::Disc) ? 1 : 2;
}

bool domain_kind_is_boundary(DomainKind k) {
    return k == DomainKind::Circle || k == DomainKind::Sphere3;
}

double domain_measure(DomainKind k) {
    switch (k) {
        case DomainKind::Circle: return 2.0 * kPi;
        case DomainKind::Disc: return kPi;
        case DomainKind::Sphere3: return 2.0 * kPi * kPi;
        case DomainKind::Ball4: return kPi * kPi / 2.0;
    }
    throw std::logic_error("domain_measure: bad kind");
}

std::string domain_kind_name(DomainKind k) {
    switch (k) {
        case DomainKind::Circle: return "circle";
        case DomainKind::Disc: return "disc";
        case DomainKind::Sphere3: return "sphere3";
        case DomainKind::Ball4: return "ball4";
    }
    throw std::logic_error("domain_kind_name: bad kind");
}

DomainKind boundary_of(Domain d) {
    return d == Domain::Disc ? DomainKind::Circle : DomainKind::Sphere3;
}

DomainKind interior_of(Domain d) {
    return d == Domain::Disc ? DomainKind::Disc : DomainKind::Ball4;
}

double QuadratureRule::mass() const { return pairwise_sum(std::span<const double>(weights)); }

void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_unit: n must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // root of P_n by Newton iteration from the Chebyshev estimate
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (x * p1 - p2) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // map [-1,1] -> [0,1]
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        const double w = 1.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

QuadratureRule circle_rule(Resolution r) {
    r.validate();
    const int n = r.n_theta;
    QuadratureRule rule{DomainKind::Circle, r, {}, {}};
    rule.nodes.reserve(n);
    rule.weights.assign(n, 2.0 * kPi / n);
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * kPi * j / n;
        rule.nodes.push_back(EvalPoint::disc({std::cos(th), std::sin(th)}, Region::Boundary));
    }
    return rule;
}

// dA = r dr dtheta; with t = r^2 this is (1/2) dt dtheta, and monomial
// integrands become polynomials in t, which Gauss-Legendre handles exactly.
QuadratureRule disc_rule(Resolution r) {
    r.validate();
    std::vector<double> t, tw;
    gauss_legendre_unit(r.n_radial, t, tw);
    QuadratureRule rule{DomainKind::Disc, r, {}, {}};
    rule.nodes.reserve(static_cast<std::size_t>(r.n_theta) * r.n_radial);
    rule.weights.reserve(rule.nodes.capacity());
    for (int j = 0; j < r.n_theta; ++j) {
        const double th = 2.0 * kPi * j / r.n_theta;
        const std::complex<double> dir{std::cos(th), std::sin(th)};
        for (int k = 0; k < r.n_radial; ++k) {
            const double radius = std::sqrt(t[k]);
            rule.nodes.push_back(EvalPoint::disc(radius * dir, Region::Interior));
            rule.weights.push_back(0.5 * tw[k] * 2.0 * kPi / r.n_theta);
        }
    }
    return rule;
}

// Hopf-style parametrization of S^3 in C^2:
//   zeta1 = cos(s) e^{i theta1},  zeta2 = sin(s) e^{i theta2},  s in [0, pi/2]
// with surface density cos(s) sin(s) ds dtheta1 dtheta2. Substituting
// u = sin(s)^2 turns the density into du/2 and monomial moduli into
// polynomials in u.
QuadratureRule sphere3_rule(Resolution r) {
    r.validate();
    std::vector<double> u, uw;
    gauss_legendre_unit(r.n_radial, u, uw);
    QuadratureRule rule{DomainKind::Sphere3, r, {}, {}};
    const std::size_t count = static_cast<std::size_t>(r.n_theta) * r.n_theta * r.n_radial;
    rule.nodes.reserve(count);
    rule.weights.reserve(count);
    const double dth = 2.0 * kPi / r.n_theta;
    for (int a = 0; a < r.n_theta; ++a) {
        const double th1 = dth * a;
        const std::complex<double> e1{std::cos(th1), std::sin(th1)};
        for (int b = 0; b < r.n_theta; ++b) {
            const double th2 = dth * b;
            const std::complex<double> e2{std::cos(th2), std::sin(th2)};
            for (int k = 0; k < r.n_radial; ++k) {
                const double c = std::sqrt(1.0 - u[k]);
                const double s = std::sqrt(u[k]);
                rule.nodes.push_back(EvalPoint::ball(c * e1, s * e2, Region::Boundary));
                rule.weights.push_back(0.5 * uw[k] * dth * dth);
            }
        }
    }
    return rule;
}

// dV = rho^3 drho dsigma; with v = rho^2 the radial part is (1/2) v dv, so
// the Gauss-Legendre weight picks up a factor v.
QuadratureRule ball4_rule(Resolution r) {
    r.validate();
    const QuadratureRule sphere = sphere3_rule(r);
    std::vector<double> v, vw;
    gauss_legendre_unit(r.n_radial, v, vw);
    QuadratureRule rule{DomainKind::Ball4, r, {}, {}};
    const std::size_t count = sphere.nodes.size() * static_cast<std::size_t>(r.n_radial);
    rule.nodes.reserve(count);
    rule.weights.reserve(count);
    for (std::size_t i = 0; i < sphere.nodes.size(); ++i) {
        for (int k = 0; k < r.n_radial; ++k) {
            const double rho = std::sqrt(v[k]);
            rule.nodes.push_back(EvalPoint::ball(rho * sphere.nodes[i].coords[0],
                                                 rho * sphere.nodes[i].coords[1],
                                                 Region::Interior));
            rule.weights.push_back(0.5 * v[k] * vw[k] * sphere.weights[i]);
        }
    }
    return rule;
}

QuadratureRule make_rule(DomainKind kind, Resolution r) {
    switch (kind) {
        case DomainKind::Circle: return circle_rule(r);
        case DomainKind::Disc: return disc_rule(r);
        case DomainKind::Sphere3: return sphere3_rule(r);
        case DomainKind::Ball4: return ball4_rule(r);
    }
    throw std::logic_error("make_rule: bad kind");
}

const QuadratureRule& shared_rule(DomainKind kind, Resolution r) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(static_cast<int>(kind), r.n_theta, r.n_radial);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<QuadratureRule>(make_rule(kind, r))).first;
    return *it->second;
}

namespace {
std::atomic<int> g_threads{1};
}

void set_default_threads(int n) { g_threads.store(n < 1 ? 1 : n); }
int default_threads() { return g_threads.load(); }

namespace {

template <class T>
T pairwise_sum_impl(const T* v, std::size_t n) {
    if (n <= 16) {
        T s{};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum_impl(v, h) + pairwise_sum_impl(v + h, n - h);
}

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
    return pairwise_sum_impl(v.data(), v.size());
}

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v.data(), v.size()); }

namespace detail {

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads <= 1 || n < 4096) {
        body(0, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            try {
                if (lo < hi) body(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace detail

ExactValue exact_moment(DomainKind kind, const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.dim() != domain_kind_dim(kind) || beta.dim() != domain_kind_dim(kind))
        throw std::invalid_argument("exact_moment: index dimension does not match domain");
    if (alpha != beta) return ExactValue::zero();  // phase integrals vanish
    switch (kind) {
        case DomainKind::Circle:
            return ExactValue(RationalComplex(Rational(2)), 1);
        case DomainKind::Disc:
            return ExactValue(RationalComplex(Rational(1, alpha.at(1) + 1)), 1);
        case DomainKind::Sphere3: {
            const Rational c = Rational(2) * alpha.factorial() /
                               Rational::factorial(static_cast<unsigned>(alpha.order() + 1));
            return ExactValue(RationalComplex(c), 2);
        }
        case DomainKind::Ball4: {
            const Rational c =
                alpha.factorial() / Rational::factorial(static_cast<unsigned>(alpha.order() + 2));
            return ExactValue(RationalComplex(c), 2);
        }
    }
    throw std::logic_error("exact_moment: bad kind");
}

}  // namespace bsk
