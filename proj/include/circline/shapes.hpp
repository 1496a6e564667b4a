#pragma once

#include <circline/extplane.hpp>

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace circline {

/// Thrown when region sampling cannot place a point (degenerate region).
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Circle in the finite plane, center z* and radius R > 0.
struct Circle {
    Complex center;
    double radius;

    Circle(Complex center, double radius);
};

/// Extended line {p : nx*x + ny*y = d} together with the point at infinity.
/// The normal is kept unit length; the constructor normalizes raw
/// coefficients and rejects a zero normal.
class ExtLine {
public:
    ExtLine(double nx, double ny, double offset);

    /// y = a*x + b, i.e. raw coefficients (-a, 1, b).
    static ExtLine from_slope_intercept(double a, double b);
    /// x = c.
    static ExtLine vertical(double c);

    double nx() const { return nx_; }
    double ny() const { return ny_; }
    double offset() const { return d_; }

    /// Foot of the perpendicular from the origin.
    Complex point() const { return {nx_ * d_, ny_ * d_}; }
    /// Unit direction along the line (the normal rotated by +90 degrees).
    Complex direction() const { return {-ny_, nx_}; }
    Complex point_at(double t) const { return point() + t * direction(); }

private:
    double nx_, ny_, d_;
};

using GeneralizedCircle = std::variant<Circle, ExtLine>;

enum class Side { Inside, Outside, Positive, Negative };
enum class IncidenceTag { Inside, On, Outside, Positive, Negative };
enum class Membership { In, Boundary, Out };

/// Outcome of classifying a point against a boundary. `value` is the signed
/// classifier: R^2 - |p - z*|^2 for circles, n.p - d for lines; the tag
/// resolves the sign against the classify tolerance band.
struct Incidence {
    IncidenceTag tag;
    double value;
};

Incidence classify_point(const GeneralizedCircle& g, Complex p, const Tolerance& tol);
Incidence classify_origin(const GeneralizedCircle& g, const Tolerance& tol);

/// One side of a generalized circle on the Riemann sphere: open or closed,
/// with explicit infinity membership and finitely many punctured points.
///
/// Construction enforces sphere topology: only exteriors of circles have
/// infinity in their interior, and a half-plane reaches infinity only
/// through its (closed) boundary line.
struct Region {
    GeneralizedCircle boundary;
    Side side;
    bool closed = false;
    bool contains_infinity = false;
    std::vector<Complex> punctures;

    Region(GeneralizedCircle boundary, Side side, bool closed, bool contains_infinity,
           std::vector<Complex> punctures = {});
};

/// Membership of p in the carrier set (boundary, side, closed) alone,
/// ignoring punctures and the infinity flag. Points within the classify
/// band report Boundary.
Membership carrier_membership(const GeneralizedCircle& g, Side side, Complex p,
                              const Tolerance& tol);

/// Carrier membership with the boundary band resolved by the closed flag.
bool carrier_contains(const GeneralizedCircle& g, Side side, bool closed, Complex p,
                      const Tolerance& tol);

/// Three-valued membership of p in r. Punctured points and the wrong side
/// report Out; points within the classify band of the boundary report
/// Boundary; infinity is decided by the region's flag.
Membership membership(const Region& r, const ExtComplex& p, const Tolerance& tol);

/// True unless p is clearly outside r (or punctured, or an excluded
/// infinity). A point within the classify band of the boundary counts as a
/// member regardless of the open/closed flag: at that distance floating
/// point cannot tell the two apart, and an oracle must not reject it.
inline bool contains(const Region& r, const ExtComplex& p, const Tolerance& tol) {
    return membership(r, p, tol) != Membership::Out;
}

/// Exact-set membership: the boundary band is resolved by the closed flag.
inline bool contains_strict(const Region& r, const ExtComplex& p, const Tolerance& tol) {
    const Membership m = membership(r, p, tol);
    return m == Membership::In || (m == Membership::Boundary && r.closed);
}

/// Relative residual of a finite point against the boundary equation:
/// ||w - z*| - R| for circles, |n.w - d| for lines, each divided by a
/// magnitude scale so the bound is meaningful for far-away points.
double boundary_residual(const GeneralizedCircle& g, Complex w);

enum class BoundarySampling { Stratified, Grid };

/// n finite boundary points, deterministic in (seed, n). Circles are
/// sampled at stratified-random angles (Grid: exact lattice angles); lines
/// over the parameter window [-1000, 1000]. Infinity is never emitted.
std::vector<Complex> sample_boundary(const GeneralizedCircle& g, std::size_t n,
                                     std::uint64_t seed,
                                     BoundarySampling mode = BoundarySampling::Stratified);

/// n finite points interior to r with clearance >= tol.margin from the
/// boundary and from every puncture; deterministic in (seed, n) via
/// per-index substreams. Throws SamplingError when the region cannot
/// accommodate the margin.
std::vector<Complex> sample_region(const Region& r, std::size_t n, std::uint64_t seed,
                                   const Tolerance& tol);

bool approx_equal(const Circle& a, const Circle& b, double eps);
/// Line equality up to a simultaneous sign flip of normal and offset.
bool approx_equal(const ExtLine& a, const ExtLine& b, double eps);
bool approx_equal(const GeneralizedCircle& a, const GeneralizedCircle& b, double eps);

/// Structural equality of regions as point sets: boundaries compared after
/// canonicalizing half-planes to their positive side, then side, flags and
/// punctures (as an unordered set) within eps.
bool equivalent(const Region& a, const Region& b, double eps);

} // namespace circline
