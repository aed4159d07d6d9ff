#include "qglue/geom2.hpp"

#include <algorithm>
#include <cmath>

namespace qg {

H2Point mobius_apply(const Mobius& g, const H2Point& z) {
    H2Point num = g.m[0] * z + g.m[1];
    H2Point den = g.m[2] * z + g.m[3];
    return num / den;
}

double h2_distance(const H2Point& z, const H2Point& w) {
    double n = std::norm(z - w);
    double c = 1.0 + n / (2.0 * z.imag() * w.imag());
    return std::acosh(std::max(1.0, c));
}

GeodesicH2::GeodesicH2(CirclePoint a, CirclePoint b) : u(a), v(b) {
    if (same_point(a, b)) fail("DegenerateGeodesic", "geodesic endpoints coincide");
}

GeodRelation classify(const GeodesicH2& l, const GeodesicH2& m, double tol) {
    bool uu = same_point(l.u, m.u, tol), uv = same_point(l.u, m.v, tol);
    bool vu = same_point(l.v, m.u, tol), vv = same_point(l.v, m.v, tol);
    if ((uu && vv) || (uv && vu)) return GeodRelation::Equal;
    if (uu || uv || vu || vv) return GeodRelation::Asymptotic;
    bool a = in_open_arc(l.u, l.v, m.u);
    bool b = in_open_arc(l.u, l.v, m.v);
    return (a != b) ? GeodRelation::Crossing : GeodRelation::Ultraparallel;
}

Mobius to_zero_inf(const GeodesicH2& l) {
    Mobius M{{l.u.b, -l.u.a, l.v.b, -l.v.a}};
    if (M.det() < 0) {
        M.m[0] = -M.m[0];
        M.m[1] = -M.m[1];
    }
    return M.normalized();
}

namespace {
// Image endpoints of m under to_zero_inf(l), as finite reals c <= d on one side of 0.
// Throws CrossingInput if they straddle 0 (or one is at infinity on the other side).
std::pair<double, double> standardized_other(const GeodesicH2& l, const GeodesicH2& m,
                                             const Mobius& g) {
    CirclePoint cu = g(m.u), cv = g(m.v);
    if (cu.is_inf() || cv.is_inf())
        fail("CrossingInput", "geodesics share the direction to infinity after standardization");
    double c = cu.value(), d = cv.value();
    if (c > d) std::swap(c, d);
    if (c < 0.0 && d > 0.0) fail("CrossingInput", "geodesics cross");
    return {c, d};
}
} // namespace

double geodesic_distance(const GeodesicH2& l, const GeodesicH2& m) {
    GeodRelation rel = classify(l, m);
    if (rel == GeodRelation::Equal || rel == GeodRelation::Asymptotic) return 0.0;
    if (rel == GeodRelation::Crossing) fail("CrossingInput", "geodesics cross");
    Mobius g = to_zero_inf(l);
    auto [c, d] = standardized_other(l, m, g);
    // dist((0,inf),(c,d)) = arccosh((c+d)/(d-c)) for 0 < c < d, symmetric in sign
    double num = std::abs(c + d), den = d - c;
    return std::acosh(std::max(1.0, num / den));
}

std::pair<H2Point, H2Point> common_perpendicular(const GeodesicH2& l, const GeodesicH2& m) {
    if (classify(l, m) != GeodRelation::Ultraparallel)
        fail("CrossingInput", "common perpendicular requires ultraparallel geodesics");
    Mobius g = to_zero_inf(l);
    auto [c, d] = standardized_other(l, m, g);
    double r = std::sqrt(c * d); // both same sign; r > 0
    double s = (c + d > 0) ? 1.0 : -1.0;
    H2Point foot_l{0.0, r};
    double cosphi = s * 2.0 * r / std::abs(c + d);
    double sinphi = std::sqrt(std::max(0.0, 1.0 - cosphi * cosphi));
    H2Point foot_m{r * cosphi, r * sinphi};
    Mobius gi = g.inverse();
    return {mobius_apply(gi, foot_l), mobius_apply(gi, foot_m)};
}

int side_of(const GeodesicH2& l, const H2Point& z, double tol) {
    Mobius g = to_zero_inf(l);
    double x = mobius_apply(g, z).real();
    if (std::abs(x) <= tol) return 0;
    return x > 0 ? 1 : -1;
}

int side_of(const GeodesicH2& l, const CirclePoint& x, double tol) {
    if (same_point(l.u, x, tol) || same_point(l.v, x, tol)) return 0;
    return in_open_arc(l.u, l.v, x) ? 1 : -1;
}

double dist_to_geodesic(const GeodesicH2& l, const H2Point& z) {
    Mobius g = to_zero_inf(l);
    H2Point w = mobius_apply(g, z);
    return std::acosh(std::max(1.0, std::abs(w) / w.imag()));
}

H2Point foot_on(const GeodesicH2& l, const H2Point& z) {
    Mobius g = to_zero_inf(l);
    H2Point w = mobius_apply(g, z);
    H2Point f{0.0, std::abs(w)};
    return mobius_apply(g.inverse(), f);
}

GeodesicH2 perpendicular_at(const GeodesicH2& l, const H2Point& p) {
    Mobius g = to_zero_inf(l);
    double r = std::abs(mobius_apply(g, p));
    Mobius gi = g.inverse();
    return GeodesicH2(gi(CirclePoint::of(-r)), gi(CirclePoint::of(r)));
}

H2Point point_on(const GeodesicH2& l, const H2Point& ref, double s) {
    Mobius g = to_zero_inf(l);
    double r = std::abs(mobius_apply(g, ref));
    H2Point p{0.0, r * std::exp(s)};
    return mobius_apply(g.inverse(), p);
}

double geodesic_space_distance(const GeodesicH2& l, const GeodesicH2& m) {
    double d1 = std::max(angular_distance(l.u, m.u), angular_distance(l.v, m.v));
    double d2 = std::max(angular_distance(l.u, m.v), angular_distance(l.v, m.u));
    return std::min(d1, d2);
}

double angle_between_at(const GeodesicH2& l, const GeodesicH2& m, const H2Point& z) {
    // tangent direction of a geodesic at z: standardize the geodesic to (0,inf), the
    // tangent there is i*y at the point; pull back through the derivative of the chart.
    auto tangent = [&](const GeodesicH2& geo) {
        Mobius g = to_zero_inf(geo);
        H2Point w = mobius_apply(g, z);
        // direction of (0,inf) at w is i; derivative of g^{-1} at w scales directions by
        // 1/(c w + d)^2 for g^{-1} = [[a,b],[c,d]]
        Mobius gi = g.inverse();
        H2Point den = gi.m[2] * w + gi.m[3];
        H2Point dir = H2Point{0.0, 1.0} / (den * den);
        return dir / std::abs(dir);
    };
    H2Point t1 = tangent(l), t2 = tangent(m);
    double c = std::clamp(t1.real() * t2.real() + t1.imag() * t2.imag(), -1.0, 1.0);
    double ang = std::acos(std::abs(c)); // fold to (0, pi/2] (geodesics are unoriented)
    return ang;
}

H2Isometry H2Isometry::reflection(const GeodesicH2& l) {
    Mobius g = to_zero_inf(l);
    // reflection across (0,inf): z -> -conj(z), matrix [[-1,0],[0,1]] (det -1)
    Mobius gi = g.inverse();
    std::array<double, 4> r{-1.0, 0.0, 0.0, 1.0};
    auto mul = [](const std::array<double, 4>& A, const std::array<double, 4>& B) {
        return std::array<double, 4>{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
                                     A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    };
    return H2Isometry{mul(gi.m, mul(r, g.m)), true}.normalized();
}

H2Point H2Isometry::operator()(const H2Point& z) const {
    H2Point w = reflects ? std::conj(z) : z;
    return (m[0] * w + m[1]) / (m[2] * w + m[3]);
}

CirclePoint H2Isometry::operator()(const CirclePoint& x) const {
    return CirclePoint::canonical(m[0] * x.a + m[1] * x.b, m[2] * x.a + m[3] * x.b);
}

H2Isometry H2Isometry::operator*(const H2Isometry& o) const {
    // matrices are real, so conjugation commutes past them
    std::array<double, 4> p{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                            m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
    return H2Isometry{p, reflects != o.reflects}.normalized();
}

H2Isometry H2Isometry::inverse() const {
    double d = m[0] * m[3] - m[1] * m[2];
    std::array<double, 4> inv{m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
    return H2Isometry{inv, reflects}.normalized();
}

H2Isometry H2Isometry::normalized() const {
    double d = m[0] * m[3] - m[1] * m[2];
    double s = std::sqrt(std::abs(d));
    if (!(s > 0.0)) fail("InvalidMobius", "singular isometry");
    H2Isometry out{{m[0] / s, m[1] / s, m[2] / s, m[3] / s}, reflects};
    // consistency: reflections have det -1, rotations det +1
    double dn = out.m[0] * out.m[3] - out.m[1] * out.m[2];
    if ((dn < 0) != reflects) fail("InvalidMobius", "isometry parity/determinant mismatch");
    return out;
}

} // namespace qg
