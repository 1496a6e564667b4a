#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace circline {

using Complex = std::complex<double>;

/// Tolerances shared by classification, verification and sampling.
struct Tolerance {
    double classify_tol = 1e-9; ///< relative band around classifier zero-sets
    double residual_tol = 1e-9; ///< relative bound on boundary residuals
    double margin = 1e-6;       ///< clearance used when sampling region interiors

    bool valid() const {
        return classify_tol > 0.0 && residual_tol > 0.0 && margin > 0.0 &&
               margin >= residual_tol;
    }
};

/// A point of the extended complex plane: a finite complex number or the
/// point at infinity. Infinity is a tag, never a large-float encoding, so
/// every map on the sphere stays total.
class ExtComplex {
public:
    ExtComplex() : value_(0.0, 0.0), infinite_(false) {}

    ExtComplex(Complex z) : value_(z), infinite_(false) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("ExtComplex: coordinates must be finite");
    }

    ExtComplex(double x, double y) : ExtComplex(Complex(x, y)) {}

    static ExtComplex infinity() {
        ExtComplex p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite value; throws when called on the point at infinity.
    Complex value() const {
        if (infinite_)
            throw std::logic_error("ExtComplex: value() called on infinity");
        return value_;
    }

private:
    Complex value_;
    bool infinite_;
};

/// z -> 1/z on the sphere, with 0 -> infinity and infinity -> 0. A finite
/// reciprocal that overflows double range collapses to the infinity tag.
inline ExtComplex invert_point(const ExtComplex& z) {
    if (z.is_infinity())
        return ExtComplex(Complex(0.0, 0.0));
    const Complex v = z.value();
    if (v.real() == 0.0 && v.imag() == 0.0)
        return ExtComplex::infinity();
    const Complex w = 1.0 / v;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        return ExtComplex::infinity();
    return ExtComplex(w);
}

/// Equality up to a relative tolerance; the scale max(1,|p|,|q|) keeps the
/// comparison meaningful both near the origin and far from it.
inline bool approx_eq(const ExtComplex& p, const ExtComplex& q, const Tolerance& tol) {
    if (p.is_infinity() || q.is_infinity())
        return p.is_infinity() && q.is_infinity();
    const double scale = std::max({1.0, std::abs(p.value()), std::abs(q.value())});
    return std::abs(p.value() - q.value()) <= tol.residual_tol * scale;
}

} // namespace circline
