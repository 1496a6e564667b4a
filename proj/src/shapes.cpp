#include <circline/shapes.hpp>
#include <circline/rng.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circline {

namespace {

constexpr double kLineWindow = 1e3;    // parameter window for line sampling
constexpr double kTailCap = 1e6;       // cap on heavy-tailed proposals
constexpr int kMaxRejections = 1000;   // per requested sample

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int side_sign(Side s) {
    return (s == Side::Inside || s == Side::Positive) ? +1 : -1;
}

bool circle_side(Side s) { return s == Side::Inside || s == Side::Outside; }

} // namespace

Circle::Circle(Complex center_, double radius_) : center(center_), radius(radius_) {
    if (!finite(center))
        throw std::invalid_argument("Circle: center must be finite");
    if (!std::isfinite(radius) || radius <= 0.0)
        throw std::invalid_argument("Circle: radius must be positive");
}

ExtLine::ExtLine(double nx, double ny, double offset) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(offset))
        throw std::invalid_argument("ExtLine: coefficients must be finite");
    const double len = std::hypot(nx, ny);
    if (len == 0.0)
        throw std::invalid_argument("ExtLine: zero normal");
    nx_ = nx / len + 0.0; // the +0.0 folds -0.0 into +0.0
    ny_ = ny / len + 0.0;
    d_ = offset / len + 0.0;
    if (!std::isfinite(nx_) || !std::isfinite(ny_) || !std::isfinite(d_))
        throw std::invalid_argument("ExtLine: degenerate normal");
}

ExtLine ExtLine::from_slope_intercept(double a, double b) { return ExtLine(-a, 1.0, b); }

ExtLine ExtLine::vertical(double c) { return ExtLine(1.0, 0.0, c); }

Incidence classify_point(const GeneralizedCircle& g, Complex p, const Tolerance& tol) {
    if (const Circle* c = std::get_if<Circle>(&g)) {
        const double r2 = c->radius * c->radius;
        const double d2 = std::norm(p - c->center);
        const double value = r2 - d2;
        const double scale = std::max({1.0, r2, d2});
        IncidenceTag tag = IncidenceTag::On;
        if (std::abs(value) > tol.classify_tol * scale)
            tag = value > 0.0 ? IncidenceTag::Inside : IncidenceTag::Outside;
        return {tag, value};
    }
    const ExtLine& l = std::get<ExtLine>(g);
    const double proj = l.nx() * p.real() + l.ny() * p.imag();
    const double value = proj - l.offset();
    const double scale = std::max({1.0, std::abs(proj), std::abs(l.offset())});
    IncidenceTag tag = IncidenceTag::On;
    if (std::abs(value) > tol.classify_tol * scale)
        tag = value > 0.0 ? IncidenceTag::Positive : IncidenceTag::Negative;
    return {tag, value};
}

Incidence classify_origin(const GeneralizedCircle& g, const Tolerance& tol) {
    return classify_point(g, Complex(0.0, 0.0), tol);
}

Region::Region(GeneralizedCircle boundary_, Side side_, bool closed_, bool contains_infinity_,
               std::vector<Complex> punctures_)
    : boundary(std::move(boundary_)),
      side(side_),
      closed(closed_),
      contains_infinity(contains_infinity_),
      punctures(std::move(punctures_)) {
    const bool on_circle = std::holds_alternative<Circle>(boundary);
    if (on_circle != circle_side(side))
        throw std::invalid_argument("Region: side tag does not match the boundary kind");
    if (contains_infinity) {
        if (on_circle && side != Side::Outside)
            throw std::invalid_argument("Region: a disk cannot contain infinity");
        if (!on_circle && !closed)
            throw std::invalid_argument(
                "Region: an open half-plane cannot contain infinity");
    }
    const Tolerance tol;
    for (const Complex& q : punctures) {
        if (!finite(q))
            throw std::invalid_argument("Region: punctures must be finite");
        if (carrier_membership(boundary, side, q, tol) == Membership::Out)
            throw std::invalid_argument("Region: puncture lies outside the region");
    }
}

Membership carrier_membership(const GeneralizedCircle& g, Side side, Complex p,
                              const Tolerance& tol) {
    const Incidence inc = classify_point(g, p, tol);
    if (inc.tag == IncidenceTag::On)
        return Membership::Boundary;
    return (inc.value > 0.0) == (side_sign(side) > 0) ? Membership::In : Membership::Out;
}

bool carrier_contains(const GeneralizedCircle& g, Side side, bool closed, Complex p,
                      const Tolerance& tol) {
    const Membership m = carrier_membership(g, side, p, tol);
    return m == Membership::In || (m == Membership::Boundary && closed);
}

Membership membership(const Region& r, const ExtComplex& p, const Tolerance& tol) {
    if (p.is_infinity())
        return r.contains_infinity ? Membership::In : Membership::Out;
    for (const Complex& q : r.punctures)
        if (approx_eq(p, ExtComplex(q), tol))
            return Membership::Out;
    return carrier_membership(r.boundary, r.side, p.value(), tol);
}

double boundary_residual(const GeneralizedCircle& g, Complex w) {
    if (const Circle* c = std::get_if<Circle>(&g)) {
        const double dist = std::abs(w - c->center);
        return std::abs(dist - c->radius) / std::max({1.0, c->radius, dist});
    }
    const ExtLine& l = std::get<ExtLine>(g);
    const double proj = l.nx() * w.real() + l.ny() * w.imag();
    return std::abs(proj - l.offset()) / std::max({1.0, std::abs(w), std::abs(l.offset())});
}

std::vector<Complex> sample_boundary(const GeneralizedCircle& g, std::size_t n,
                                     std::uint64_t seed, BoundarySampling mode) {
    if (n == 0)
        throw std::invalid_argument("sample_boundary: n must be positive");
    std::vector<Complex> out;
    out.reserve(n);
    const bool grid = mode == BoundarySampling::Grid;
    if (const Circle* c = std::get_if<Circle>(&g)) {
        for (std::size_t i = 0; i < n; ++i) {
            const double u = grid ? 0.0 : substream(seed, i, 'b').uniform01();
            const double phi =
                2.0 * std::numbers::pi * (static_cast<double>(i) + u) / static_cast<double>(n);
            out.push_back(c->center + c->radius * Complex(std::cos(phi), std::sin(phi)));
        }
        return out;
    }
    const ExtLine& l = std::get<ExtLine>(g);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = grid ? 0.5 : substream(seed, i, 'b').uniform01();
        const double t = -kLineWindow +
                         2.0 * kLineWindow * (static_cast<double>(i) + u) / static_cast<double>(n);
        out.push_back(l.point_at(t));
    }
    return out;
}

namespace {

// Proposal with clearance >= margin from the boundary zero-set. Unbounded
// regions use heavy-tailed draws capped at kTailCap so reciprocals of the
// samples stay clear of tolerance bands.
Complex propose_interior(const Region& r, SplitMix64& rng, double margin) {
    if (const Circle* c = std::get_if<Circle>(&r.boundary)) {
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Complex dir(std::cos(theta), std::sin(theta));
        if (r.side == Side::Inside) {
            if (c->radius <= margin)
                throw SamplingError("sample_region: disk is thinner than the margin");
            const double rho = (c->radius - margin) * std::sqrt(rng.uniform01());
            return c->center + rho * dir;
        }
        const double u = std::max(rng.uniform01(), 1.0 / kTailCap);
        const double rho = (c->radius + margin) / u;
        return c->center + rho * dir;
    }
    const ExtLine& l = std::get<ExtLine>(r.boundary);
    const double scale = std::max(1.0, std::abs(l.offset()));
    const double u1 = std::max(rng.uniform01(), 1.0 / kTailCap);
    const double clearance = margin + scale * (1.0 / u1 - 1.0);
    double t = 10.0 * scale * std::tan(std::numbers::pi * (rng.uniform01() - 0.5));
    t = std::clamp(t, -kTailCap * scale, kTailCap * scale);
    const double inward = side_sign(r.side);
    return l.point_at(t) + inward * clearance * Complex(l.nx(), l.ny());
}

} // namespace

std::vector<Complex> sample_region(const Region& r, std::size_t n, std::uint64_t seed,
                                   const Tolerance& tol) {
    if (n == 0)
        throw std::invalid_argument("sample_region: n must be positive");
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SplitMix64 rng = substream(seed, i, 'r');
        bool placed = false;
        for (int attempt = 0; attempt < kMaxRejections && !placed; ++attempt) {
            const Complex p = propose_interior(r, rng, tol.margin);
            if (!finite(p))
                continue;
            bool clear = true;
            for (const Complex& q : r.punctures)
                if (std::abs(p - q) < tol.margin) {
                    clear = false;
                    break;
                }
            if (clear) {
                out.push_back(p);
                placed = true;
            }
        }
        if (!placed)
            throw SamplingError("sample_region: rejection budget exhausted");
    }
    return out;
}

bool approx_equal(const Circle& a, const Circle& b, double eps) {
    const double cscale = std::max({1.0, std::abs(a.center), std::abs(b.center)});
    const double rscale = std::max({1.0, a.radius, b.radius});
    return std::abs(a.center - b.center) <= eps * cscale &&
           std::abs(a.radius - b.radius) <= eps * rscale;
}

bool approx_equal(const ExtLine& a, const ExtLine& b, double eps) {
    const double dscale = std::max({1.0, std::abs(a.offset()), std::abs(b.offset())});
    const auto matches = [&](double sign) {
        return std::abs(a.nx() - sign * b.nx()) <= eps &&
               std::abs(a.ny() - sign * b.ny()) <= eps &&
               std::abs(a.offset() - sign * b.offset()) <= eps * dscale;
    };
    return matches(1.0) || matches(-1.0);
}

bool approx_equal(const GeneralizedCircle& a, const GeneralizedCircle& b, double eps) {
    if (a.index() != b.index())
        return false;
    if (const Circle* ca = std::get_if<Circle>(&a))
        return approx_equal(*ca, std::get<Circle>(b), eps);
    return approx_equal(std::get<ExtLine>(a), std::get<ExtLine>(b), eps);
}

namespace {

// Half-planes have two equivalent encodings; pin the positive side.
Region canonical(const Region& r) {
    if (const ExtLine* l = std::get_if<ExtLine>(&r.boundary)) {
        if (r.side == Side::Negative)
            return Region(ExtLine(-l->nx(), -l->ny(), -l->offset()), Side::Positive, r.closed,
                          r.contains_infinity, r.punctures);
    }
    return r;
}

bool line_equal_oriented(const ExtLine& a, const ExtLine& b, double eps) {
    const double dscale = std::max({1.0, std::abs(a.offset()), std::abs(b.offset())});
    return std::abs(a.nx() - b.nx()) <= eps && std::abs(a.ny() - b.ny()) <= eps &&
           std::abs(a.offset() - b.offset()) <= eps * dscale;
}

} // namespace

bool equivalent(const Region& a, const Region& b, double eps) {
    const Region x = canonical(a);
    const Region y = canonical(b);
    if (x.side != y.side || x.closed != y.closed ||
        x.contains_infinity != y.contains_infinity)
        return false;
    if (x.boundary.index() != y.boundary.index())
        return false;
    if (const Circle* cx = std::get_if<Circle>(&x.boundary)) {
        if (!approx_equal(*cx, std::get<Circle>(y.boundary), eps))
            return false;
    } else if (!line_equal_oriented(std::get<ExtLine>(x.boundary),
                                    std::get<ExtLine>(y.boundary), eps)) {
        return false;
    }
    if (x.punctures.size() != y.punctures.size())
        return false;
    std::vector<bool> used(y.punctures.size(), false);
    for (const Complex& p : x.punctures) {
        bool found = false;
        for (std::size_t j = 0; j < y.punctures.size(); ++j) {
            if (used[j])
                continue;
            const double scale = std::max({1.0, std::abs(p), std::abs(y.punctures[j])});
            if (std::abs(p - y.punctures[j]) <= eps * scale) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace circline
