#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bsk/kernels.hpp"

using namespace bsk;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(55121);

EvalPoint random_disc_point(double rmax = 0.9) {
    std::uniform_real_distribution<double> u(-rmax / std::sqrt(2.0), rmax / std::sqrt(2.0));
    return EvalPoint::disc({u(rng), u(rng)});
}

EvalPoint random_ball_point(double rmax = 0.9) {
    std::uniform_real_distribution<double> u(-rmax / 2.0, rmax / 2.0);
    return EvalPoint::ball({u(rng), u(rng)}, {u(rng), u(rng)});
}

// exact geometric tail bound for the binomial series of (1-w)^{-p}:
// sum_{j>m} C(j+p-1,p-1) r^j <= C(m+p,p-1) r^{m+1} / (1-r)^p
double tail_bound(int p, int m, double r) {
    double binom = 1.0;
    for (int i = 1; i <= p - 1; ++i) binom *= static_cast<double>(m + p - i + 1) / i;
    return binom * std::pow(r, m + 1) / std::pow(1.0 - r, p);
}

}  // namespace

TEST_CASE("kernel specs hold the four closed-form constants") {
    CHECK(kernel_spec(KernelId::SzegoDisc).constant ==
          ExactValue(RationalComplex(Rational(1, 2)), -1));
    CHECK(kernel_spec(KernelId::SzegoDisc).exponent == 1);
    CHECK(kernel_spec(KernelId::BergmanDisc).constant == ExactValue(RationalComplex(Rational(1)), -1));
    CHECK(kernel_spec(KernelId::BergmanDisc).exponent == 2);
    CHECK(kernel_spec(KernelId::SzegoBall2).constant ==
          ExactValue(RationalComplex(Rational(1, 2)), -2));
    CHECK(kernel_spec(KernelId::SzegoBall2).exponent == 2);
    CHECK(kernel_spec(KernelId::BergmanBall2).constant == ExactValue(RationalComplex(Rational(2)), -2));
    CHECK(kernel_spec(KernelId::BergmanBall2).exponent == 3);
}

TEST_CASE("kernel evaluation at hand-checked points") {
    // z = 0: denominator is 1, value is the constant
    const EvalPoint origin = EvalPoint::disc({0.0, 0.0});
    const EvalPoint any = EvalPoint::disc({0.3, -0.4}, Region::Interior);
    CHECK(kernel_eval(KernelId::SzegoDisc, origin, any).real() ==
          doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));

    // Bergman disc at z = zeta = 0.5: 1/(pi (1 - 0.25)^2) = 16/(9 pi)
    const EvalPoint half = EvalPoint::disc({0.5, 0.0});
    CHECK(kernel_eval(KernelId::BergmanDisc, half, half).real() ==
          doctest::Approx(16.0 / (9.0 * kPi)).epsilon(1e-14));
    CHECK(kernel_eval(KernelId::BergmanDisc, half, half).real() ==
          doctest::Approx(0.565884).epsilon(1e-6));

    const EvalPoint borigin = EvalPoint::ball({0.0, 0.0}, {0.0, 0.0});
    const EvalPoint bany = EvalPoint::ball({0.1, 0.2}, {-0.3, 0.0});
    CHECK(kernel_eval(KernelId::BergmanBall2, borigin, bany).real() ==
          doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("hermitian symmetry and diagonal positivity") {
    for (int i = 0; i < 200; ++i) {
        const EvalPoint z = random_disc_point();
        const EvalPoint w = random_disc_point();
        for (KernelId id : {KernelId::SzegoDisc, KernelId::BergmanDisc}) {
            const cplx a = kernel_eval(id, z, w);
            const cplx b = kernel_eval(id, w, z);
            CHECK(std::abs(a - std::conj(b)) < 1e-14 * (1.0 + std::abs(a)));
            CHECK(kernel_eval(id, z, z).real() > 0.0);
            CHECK(std::abs(kernel_eval(id, z, z).imag()) < 1e-15);
        }
        const EvalPoint bz = random_ball_point();
        const EvalPoint bw = random_ball_point();
        for (KernelId id : {KernelId::SzegoBall2, KernelId::BergmanBall2}) {
            const cplx a = kernel_eval(id, bz, bw);
            const cplx b = kernel_eval(id, bw, bz);
            CHECK(std::abs(a - std::conj(b)) < 1e-14 * (1.0 + std::abs(a)));
            CHECK(kernel_eval(id, bz, bz).real() > 0.0);
        }
    }
}

TEST_CASE("near-singular evaluations are rejected with the denominator size") {
    const EvalPoint z = EvalPoint::disc({1.0 - 5e-16, 0.0});
    const EvalPoint zeta = EvalPoint::disc({1.0, 0.0}, Region::Boundary);
    CHECK_THROWS_AS(kernel_eval(KernelId::SzegoDisc, z, zeta), KernelSingularityError);
    try {
        kernel_eval(KernelId::SzegoDisc, z, zeta);
    } catch (const KernelSingularityError& e) {
        CHECK(e.denom_abs <= 1e-14);
    }
}

TEST_CASE("neumann partial sums: order zero and tail bounds") {
    const EvalPoint z = EvalPoint::disc({0.5, 0.0});
    const EvalPoint zeta = EvalPoint::disc({0.5, 0.0});
    for (KernelId id : {KernelId::SzegoDisc, KernelId::BergmanDisc}) {
        CHECK(neumann_partial_sum(id, z, zeta, 0).real() ==
              doctest::Approx(kernel_spec(id).constant_value).epsilon(1e-15));
    }

    // Szego disc at w = 0.25, order 10: tail is the pure geometric remainder
    const cplx exact = kernel_eval(KernelId::SzegoDisc, z, zeta);
    const cplx s10 = neumann_partial_sum(KernelId::SzegoDisc, z, zeta, 10);
    // the error IS the geometric tail here; allow a few ulps of slack
    const double geom_tail = std::pow(0.25, 11) / (1.0 - 0.25) / (2.0 * kPi);
    CHECK(std::abs(s10 - exact) <= geom_tail * (1.0 + 1e-9));

    // Bergman disc order 20 at w = 0.12 matches the closed form to 1e-12
    const EvalPoint z2 = EvalPoint::disc({0.3, 0.0});
    const EvalPoint zeta2 = EvalPoint::disc({0.4, 0.0});
    CHECK(std::abs(neumann_partial_sum(KernelId::BergmanDisc, z2, zeta2, 20) -
                   kernel_eval(KernelId::BergmanDisc, z2, zeta2)) < 1e-12);

    // divergent region is rejected
    const EvalPoint far{1, {std::complex<double>{1.3, 0.0}, {}}, Region::Interior};
    CHECK_THROWS_AS(neumann_partial_sum(KernelId::SzegoDisc, far, far, 5), std::domain_error);
}

TEST_CASE("series consistency: binomial tail bound at m = 5, 10, 20 up to |w| = 0.8") {
    for (double x : {0.3, 0.5, 0.8}) {
        const EvalPoint z = EvalPoint::disc({x, 0.0});
        const EvalPoint zeta = EvalPoint::disc({0.99, 0.0});  // w = 0.99 x, |w| <= 0.8 for x <= 0.8
        const double r = 0.99 * x;
        for (KernelId id : {KernelId::SzegoDisc, KernelId::BergmanDisc}) {
            const KernelSpec& spec = kernel_spec(id);
            const cplx exact = kernel_eval(id, z, zeta);
            for (int m : {5, 10, 20}) {
                const double err = std::abs(neumann_partial_sum(id, z, zeta, m) - exact);
                CHECK(err <= spec.constant_value * tail_bound(spec.exponent, m, r) * (1.0 + 1e-10));
            }
        }
        const EvalPoint bz = EvalPoint::ball({x, 0.0}, {0.0, 0.0});
        const EvalPoint bzeta = EvalPoint::ball({0.99, 0.0}, {0.0, 0.0}, Region::Interior);
        for (KernelId id : {KernelId::SzegoBall2, KernelId::BergmanBall2}) {
            const KernelSpec& spec = kernel_spec(id);
            const cplx exact = kernel_eval(id, bz, bzeta);
            for (int m : {5, 10, 20}) {
                const double err = std::abs(neumann_partial_sum(id, bz, bzeta, m) - exact);
                CHECK(err <= spec.constant_value * tail_bound(spec.exponent, m, r) * (1.0 + 1e-10));
            }
        }
    }
}

TEST_CASE("diagonal ratio equals the closed forms") {
    CHECK(kernel_diag_ratio(Domain::Disc, EvalPoint::disc({0.0, 0.0})) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(kernel_diag_ratio(Domain::Ball2, EvalPoint::ball({0.0, 0.0}, {0.0, 0.0})) ==
          doctest::Approx(0.25).epsilon(1e-15));

    for (int i = 0; i < 100; ++i) {
        const EvalPoint z = random_disc_point(0.95);
        const double expect = (1.0 - z.norm_sq()) / 2.0;
        CHECK(kernel_diag_ratio(Domain::Disc, z) == doctest::Approx(expect).epsilon(1e-13));
        const EvalPoint bz = random_ball_point(0.95);
        const double bexpect = (1.0 - bz.norm_sq()) / 4.0;
        CHECK(kernel_diag_ratio(Domain::Ball2, bz) == doctest::Approx(bexpect).epsilon(1e-13));
    }
}

TEST_CASE("ratio is bounded by the boundary distance, and ratio/delta -> 1 on the disc") {
    for (double x : {0.0, 0.3, 0.9, 0.99, 0.999}) {
        const EvalPoint z = EvalPoint::disc({x, 0.0});
        const double delta = 1.0 - x;
        const double ratio = kernel_diag_ratio(Domain::Disc, z);
        CHECK(ratio <= delta * (1.0 + 1e-14));
        // (1-x^2)/2 = delta (2 - delta)/2, so ratio/delta -> 1 as x -> 1
        CHECK(ratio / delta == doctest::Approx((2.0 - delta) / 2.0).epsilon(1e-12));

        const EvalPoint bz = EvalPoint::ball({x, 0.0}, {0.0, 0.0});
        CHECK(kernel_diag_ratio(Domain::Ball2, bz) <= delta * (1.0 + 1e-14));
    }
    CHECK(kernel_diag_ratio(Domain::Disc, EvalPoint::disc({0.999, 0.0})) / (1.0 - 0.999) ==
          doctest::Approx(1.0).epsilon(1e-3));
}
