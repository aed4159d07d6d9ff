#include "qglue/rp1.hpp"

#include <algorithm>

namespace qg {

CirclePoint CirclePoint::canonical(double a, double b) {
    double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n)) fail("InvalidPoint", "zero or non-finite homogeneous pair");
    a /= n;
    b /= n;
    double lead = (std::abs(a) > 1e-15) ? a : b;
    if (lead < 0.0) {
        a = -a;
        b = -b;
    }
    return CirclePoint{a, b};
}

double angular_distance(const CirclePoint& p, const CirclePoint& q) {
    double d = std::abs(p.angle() - q.angle());
    return std::min(d, kPi - d);
}

bool same_point(const CirclePoint& p, const CirclePoint& q, double tol) {
    return std::abs(p.a * q.b - p.b * q.a) <= tol;
}

namespace {
// Offset of c past a in the clockwise angle coordinate, in [0, pi).
double arc_offset(const CirclePoint& a, const CirclePoint& c) {
    double d = std::fmod(c.angle() - a.angle(), kPi);
    if (d < 0) d += kPi;
    return d;
}
} // namespace

bool positively_ordered(const CirclePoint& p, const CirclePoint& q, const CirclePoint& r) {
    // theta decreases ccw, so q precedes r ccw from p iff q's offset is larger.
    double dq = arc_offset(p, q), dr = arc_offset(p, r);
    return dq > dr && dr > 0.0;
}

bool in_open_arc(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
    double db = arc_offset(a, b), dc = arc_offset(a, c);
    return dc > db && dc > 0.0;
}

namespace {
inline double det2(const CirclePoint& p, const CirclePoint& q) { return p.a * q.b - p.b * q.a; }
} // namespace

double cross_ratio(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c,
                   const CirclePoint& d) {
    const CirclePoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (same_point(*pts[i], *pts[j]))
                fail("DegenerateQuadruple", "coincident points in cross-ratio");
    return (det2(c, a) * det2(d, b)) / (det2(b, a) * det2(d, c));
}

Mobius Mobius::normalized() const {
    double d = det();
    if (!(d > 0.0)) fail("InvalidMobius", "determinant must be positive");
    double s = std::sqrt(d);
    return Mobius{{m[0] / s, m[1] / s, m[2] / s, m[3] / s}};
}

Mobius Mobius::operator*(const Mobius& o) const {
    return Mobius{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                   m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

namespace {
// Columns-scaled basis: N maps (0,1,inf) to (p0,p1,pinf).
Mobius map_from_std(const std::array<CirclePoint, 3>& t) {
    const CirclePoint &p0 = t[0], &p1 = t[1], &pinf = t[2];
    // solve lam*v0 + mu*vinf = v1
    double D = det2(p0, pinf);
    if (std::abs(D) < 1e-14) fail("DegenerateTriple", "repeated point in triple");
    double lam = det2(p1, pinf) / D;
    double mu = -det2(p1, p0) / D;
    if (std::abs(lam) < 1e-14 || std::abs(mu) < 1e-14)
        fail("DegenerateTriple", "repeated point in triple");
    // columns: (1,0) -> mu*vinf, (0,1) -> lam*v0
    return Mobius{{mu * pinf.a, lam * p0.a, mu * pinf.b, lam * p0.b}};
}
} // namespace

Mobius Mobius::from_triples(const std::array<CirclePoint, 3>& src,
                            const std::array<CirclePoint, 3>& dst) {
    Mobius A = map_from_std(src);
    Mobius B = map_from_std(dst);
    Mobius M = B * A.inverse();
    if (!(M.det() > 0.0))
        fail("NonMonotone", "triples have opposite cyclic orientations");
    return M.normalized();
}

Mobius Mobius::translation(const CirclePoint& rep, const CirclePoint& att, double len) {
    if (same_point(rep, att)) fail("DegenerateTriple", "translation axis endpoints coincide");
    double e = std::exp(len / 2.0), ei = std::exp(-len / 2.0);
    // P = [v_att | v_rep], M = P diag(e, 1/e) P^{-1}
    double p00 = att.a, p01 = rep.a, p10 = att.b, p11 = rep.b;
    double d = p00 * p11 - p01 * p10;
    Mobius M{{(p00 * e * p11 - p01 * ei * p10) / d, (-p00 * e * p01 + p01 * ei * p00) / d,
              (p10 * e * p11 - p11 * ei * p10) / d, (-p10 * e * p01 + p11 * ei * p00) / d}};
    return M.normalized();
}

CP1 CP1::normalized() const {
    double n = std::sqrt(std::norm(a) + std::norm(b));
    if (!(n > 0.0) || !std::isfinite(n)) fail("InvalidPoint", "zero or non-finite CP1 pair");
    return CP1{a / n, b / n};
}

bool CP1::is_real(double tol) const {
    // z = a/b real (or inf)  <=>  Im(a * conj(b)) = 0
    return std::abs(std::imag(a * std::conj(b))) <= tol;
}

CirclePoint CP1::real_point() const {
    if (is_inf()) return CirclePoint::infinity();
    // rotate the pair so both entries are (nearly) real
    std::complex<double> phase = (std::abs(b) >= std::abs(a)) ? b / std::abs(b) : a / std::abs(a);
    std::complex<double> ar = a / phase, br = b / phase;
    return CirclePoint::canonical(ar.real(), br.real());
}

bool same_point(const CP1& p, const CP1& q, double tol) {
    return std::abs(p.a * q.b - p.b * q.a) <= tol;
}

MobiusC MobiusC::from_std_triple(const CP1& p0, const CP1& p1, const CP1& pinf) {
    std::complex<double> D = p0.a * pinf.b - p0.b * pinf.a;
    if (std::abs(D) < 1e-14) fail("DegenerateTriple", "repeated point in triple");
    std::complex<double> lam = (p1.a * pinf.b - p1.b * pinf.a) / D;
    std::complex<double> mu = -(p1.a * p0.b - p1.b * p0.a) / D;
    if (std::abs(lam) < 1e-14 || std::abs(mu) < 1e-14)
        fail("DegenerateTriple", "repeated point in triple");
    return MobiusC{{mu * pinf.a, lam * p0.a, mu * pinf.b, lam * p0.b}}.normalized();
}

MobiusC MobiusC::operator*(const MobiusC& o) const {
    return MobiusC{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                    m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

MobiusC MobiusC::normalized() const {
    std::complex<double> d = m[0] * m[3] - m[1] * m[2];
    if (std::abs(d) < 1e-300) fail("InvalidMobius", "singular complex Moebius map");
    std::complex<double> s = std::sqrt(d);
    return MobiusC{{m[0] / s, m[1] / s, m[2] / s, m[3] / s}};
}

Mobius random_mobius(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Mobius g{{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
        double d = g.det();
        if (std::abs(d) < 0.1) continue;
        if (d < 0) std::swap(g.m[0], g.m[1]), std::swap(g.m[2], g.m[3]); // swap columns
        return g.normalized();
    }
}

} // namespace qg
