#include "hypermix/moebius.hpp"

#include <cmath>
#include <numbers>

namespace hypermix {

namespace {
constexpr double kDegenerateC = 1e-13;
}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const Complex det = a_ * d_ - b_ * c_;
    if (std::abs(det) == 0.0) throw Error("MoebiusMap: singular matrix");
    const Complex s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

ExtComplex MoebiusMap::apply(ExtComplex p) const {
    if (p.infinite) {
        if (std::abs(c_) <= kDegenerateC) return ExtComplex::infinity();
        return ExtComplex(a_ / c_);
    }
    const Complex den = c_ * p.z + d_;
    if (std::abs(den) == 0.0) return ExtComplex::infinity();
    return ExtComplex((a_ * p.z + b_) / den);
}

Complex MoebiusMap::derivative(Complex z) const {
    const Complex den = c_ * z + d_;
    return 1.0 / (den * den);
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return MoebiusMap(m1.a() * m2.a() + m1.b() * m2.c(),
                      m1.a() * m2.b() + m1.b() * m2.d(),
                      m1.c() * m2.a() + m1.d() * m2.c(),
                      m1.c() * m2.b() + m1.d() * m2.d());
}

std::pair<Complex, Complex> fixed_points(const MoebiusMap& m, double parabolic_tol) {
    if (std::abs(m.c()) <= kDegenerateC)
        throw DegenerateC("fixed_points: c = 0");
    const Complex t = m.trace();
    const Complex disc = t * t - 4.0;
    if (std::abs(disc) <= parabolic_tol)
        throw ParabolicOrElliptic("fixed_points: trace^2 - 4 within tolerance of 0");
    const Complex root = std::sqrt(disc);
    const Complex z1 = (m.a() - m.d() + root) / (2.0 * m.c());
    const Complex z2 = (m.a() - m.d() - root) / (2.0 * m.c());
    // Repelling fixed point first: |T'| = 1/|cz+d|^2 > 1 there.
    if (std::abs(m.derivative(z1)) > 1.0) return {z1, z2};
    return {z2, z1};
}

Multiplier multiplier(const MoebiusMap& m, double parabolic_tol) {
    const auto [rep, att] = fixed_points(m, parabolic_tol);
    (void)att;
    const Complex kappa = m.derivative(rep);
    if (std::abs(kappa) <= 1.0)
        throw NotLoxodromic("multiplier: no expanding fixed point");
    return Multiplier{kappa, std::log(std::abs(kappa)), wrap_angle(std::arg(kappa))};
}

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;  // fmod can land exactly on 2pi after the add
    return t;
}

}  // namespace hypermix
