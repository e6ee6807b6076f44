#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace bsk {

enum class Region { Interior, Boundary };

enum class Domain { Disc, Ball2 };

inline int domain_dimension(Domain d) { return d == Domain::Disc ? 1 : 2; }

/// Evaluation point in C^n, n in {1,2}, tagged interior or boundary.
struct EvalPoint {
    int dim = 1;
    std::array<std::complex<double>, 2> coords{};
    Region region = Region::Interior;

    static EvalPoint disc(std::complex<double> z, Region r = Region::Interior) {
        return EvalPoint{1, {z, {0.0, 0.0}}, r};
    }
    static EvalPoint ball(std::complex<double> z1, std::complex<double> z2,
                          Region r = Region::Interior) {
        return EvalPoint{2, {z1, z2}, r};
    }

    double norm_sq() const {
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += std::norm(coords[j]);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    /// Interior points satisfy |z| < 1, boundary points |z| = 1 to 1e-14.
    void validate() const {
        if (dim != 1 && dim != 2) throw std::invalid_argument("EvalPoint: dimension must be 1 or 2");
        const double n2 = norm_sq();
        if (region == Region::Interior && !(n2 < 1.0))
            throw std::domain_error("EvalPoint: interior point has |z| >= 1");
        if (region == Region::Boundary && std::abs(n2 - 1.0) > 1e-14)
            throw std::domain_error("EvalPoint: boundary point is off the unit sphere");
    }
};

/// Hermitian pairing z . conj(zeta); the kernel argument.
inline std::complex<double> hermitian_pairing(const EvalPoint& z, const EvalPoint& zeta) {
    std::complex<double> s = z.coords[0] * std::conj(zeta.coords[0]);
    if (z.dim == 2) s += z.coords[1] * std::conj(zeta.coords[1]);
    return s;
}

/// Integer power by repeated multiplication; exponents here are small.
inline std::complex<double> cpow_int(std::complex<double> base, int e) {
    std::complex<double> r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace bsk
