#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>

#include "qglue/error.hpp"

namespace qg {

inline constexpr double kPi = 3.14159265358979323846;

// Point of RP^1 in homogeneous coordinates (a : b), representing a/b; inf = (1 : 0).
// Canonical representative: unit euclidean norm, first nonzero coordinate positive.
struct CirclePoint {
    double a = 0.0;
    double b = 1.0;

    static CirclePoint of(double x) {
        if (std::isinf(x)) return infinity();
        return canonical(x, 1.0);
    }
    static CirclePoint infinity() { return CirclePoint{1.0, 0.0}; }
    static CirclePoint canonical(double a, double b);
    static CirclePoint from_angle(double theta) {
        return canonical(std::cos(theta), std::sin(theta));
    }

    bool is_inf() const { return std::abs(b) <= 1e-15 * std::abs(a); }
    double value() const { return a / b; } // +-inf for the point at infinity

    // Angle coordinate in [0, pi). Note: decreases along the positive (ccw) orientation.
    double angle() const {
        double t = std::atan2(b, a);
        if (t < 0) t += kPi;
        if (t >= kPi) t -= kPi;
        return t;
    }
};

double angular_distance(const CirclePoint& p, const CirclePoint& q);
bool same_point(const CirclePoint& p, const CirclePoint& q, double tol = 1e-12);

// (p, q, r) in strictly positive cyclic order on RP^1 (ccw, i.e. 0 -> 1 -> inf -> -1 -> 0).
bool positively_ordered(const CirclePoint& p, const CirclePoint& q, const CirclePoint& r);
// c strictly inside the positive arc from a to b.
bool in_open_arc(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

// cr(a,b,c,d) = (c-a)(d-b) / ((b-a)(d-c)), evaluated projectively; cr(0,1,y,inf) = y.
// Throws DegenerateQuadruple if two arguments coincide.
double cross_ratio(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c,
                   const CirclePoint& d);

// Real Moebius map, det > 0, stored with det = 1.
struct Mobius {
    // row-major coefficients [[m00, m01], [m10, m11]]
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};

    static Mobius identity() { return {}; }

    // The unique orientation-preserving map with src[i] -> dst[i].
    // Throws DegenerateTriple if either triple has a repeated point, and
    // NonMonotone if the triples have opposite cyclic orientations.
    static Mobius from_triples(const std::array<CirclePoint, 3>& src,
                               const std::array<CirclePoint, 3>& dst);

    // Hyperbolic translation with repelling fixed point rep, attracting att,
    // translation length len >= 0.
    static Mobius translation(const CirclePoint& rep, const CirclePoint& att, double len);

    CirclePoint operator()(const CirclePoint& p) const {
        return CirclePoint::canonical(m[0] * p.a + m[1] * p.b, m[2] * p.a + m[3] * p.b);
    }
    Mobius operator*(const Mobius& o) const;
    Mobius inverse() const { return Mobius{{m[3], -m[1], -m[2], m[0]}}; }
    double det() const { return m[0] * m[3] - m[1] * m[2]; }
    Mobius normalized() const;
};

// Point of CP^1 in complex homogeneous coordinates.
struct CP1 {
    std::complex<double> a{0.0, 0.0};
    std::complex<double> b{1.0, 0.0};

    static CP1 of(std::complex<double> z) { return CP1{z, {1.0, 0.0}}.normalized(); }
    static CP1 infinity() { return CP1{{1.0, 0.0}, {0.0, 0.0}}; }
    CP1 normalized() const;
    bool is_inf() const { return std::abs(b) <= 1e-15 * std::abs(a); }
    std::complex<double> value() const { return a / b; }
    bool is_real(double tol = 1e-9) const;
    CirclePoint real_point() const; // assumes is_real()
};

bool same_point(const CP1& p, const CP1& q, double tol = 1e-12);

// Complex Moebius map acting on CP^1, det normalized to 1.
struct MobiusC {
    std::array<std::complex<double>, 4> m{{{1, 0}, {0, 0}, {0, 0}, {1, 0}}};

    static MobiusC identity() { return {}; }
    static MobiusC lift(const Mobius& g) {
        return MobiusC{{g.m[0], g.m[1], g.m[2], g.m[3]}};
    }
    // Maps (0, 1, inf) to the given triple of distinct points.
    static MobiusC from_std_triple(const CP1& p0, const CP1& p1, const CP1& pinf);

    CP1 operator()(const CP1& p) const {
        return CP1{m[0] * p.a + m[1] * p.b, m[2] * p.a + m[3] * p.b}.normalized();
    }
    MobiusC operator*(const MobiusC& o) const;
    MobiusC inverse() const { return MobiusC{{m[3], -m[1], -m[2], m[0]}}; }
    MobiusC normalized() const;
};

// Random element of PSL(2,R): entries iid N(0,1), resampled until |det| >= 0.1,
// transposed if det < 0, then normalized. Deterministic for a given engine state.
Mobius random_mobius(std::mt19937_64& rng);

} // namespace qg
