#pragma once

#include <complex>

#include "hypermix/errors.hpp"

namespace hypermix {

using Complex = std::complex<double>;

// Point on the Riemann sphere. Infinity is a value, not an error.
struct ExtComplex {
    Complex z{};
    bool infinite = false;

    ExtComplex() = default;
    ExtComplex(Complex v) : z(v) {}  // NOLINT(google-explicit-constructor)
    ExtComplex(double v) : z(v) {}   // NOLINT(google-explicit-constructor)
    static ExtComplex infinity() { return ExtComplex{Complex{}, true}; }

  private:
    ExtComplex(Complex v, bool inf) : z(v), infinite(inf) {}
};

// z |-> (az + b)/(cz + d), stored with ad - bc = 1.  The constructor divides
// by a principal square root of the determinant; the leftover sign is
// irrelevant to the action.
class MoebiusMap {
  public:
    MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    Complex det() const { return a_ * d_ - b_ * c_; }
    Complex trace() const { return a_ + d_; }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    ExtComplex apply(ExtComplex p) const;
    // Derivative at a finite point, 1/(cz+d)^2.
    Complex derivative(Complex z) const;

    static MoebiusMap identity() { return MoebiusMap(); }

  private:
    Complex a_, b_, c_, d_;
};

// Matrix product, renormalized; action equals m1 o m2.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

// Both fixed points of a loxodromic map with c != 0, repelling first
// (|derivative| > 1 at the first root).
// Throws ParabolicOrElliptic when |trace^2 - 4| <= tol, DegenerateC when c = 0.
std::pair<Complex, Complex> fixed_points(const MoebiusMap& m,
                                         double parabolic_tol = 1e-10);

// Derivative at the repelling fixed point together with the geodesic
// length/holonomy it encodes: (T^n)'(z) = e^{l + i theta}.
struct Multiplier {
    Complex kappa;  // derivative at the repelling fixed point, |kappa| > 1
    double length;  // log|kappa| > 0, flow-time units
    double theta;   // arg(kappa) in [0, 2pi)
};

Multiplier multiplier(const MoebiusMap& m, double parabolic_tol = 1e-10);

// Wraps an angle into [0, 2pi).
double wrap_angle(double theta);

}  // namespace hypermix
