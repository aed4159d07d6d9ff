#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "qglue/rp1.hpp"

namespace qg {

// Upper half-plane point.
using H2Point = std::complex<double>;

H2Point mobius_apply(const Mobius& g, const H2Point& z);

double h2_distance(const H2Point& z, const H2Point& w);

// Complete geodesic of H^2, an unordered pair of distinct ideal endpoints.
struct GeodesicH2 {
    CirclePoint u, v;

    GeodesicH2() = default;
    GeodesicH2(CirclePoint a, CirclePoint b);

    static GeodesicH2 of(double x, double y) {
        return GeodesicH2(CirclePoint::of(x), CirclePoint::of(y));
    }
};

enum class GeodRelation { Equal, Crossing, Asymptotic, Ultraparallel };

GeodRelation classify(const GeodesicH2& l, const GeodesicH2& m, double tol = 1e-12);

// Orientation-preserving map with l.u -> 0, l.v -> inf.
Mobius to_zero_inf(const GeodesicH2& l);

// Hyperbolic distance between disjoint geodesics (0 if asymptotic or equal).
// Throws CrossingInput when the geodesics cross.
double geodesic_distance(const GeodesicH2& l, const GeodesicH2& m);

// Feet of the common perpendicular of two ultraparallel geodesics (first on l, second on m).
std::pair<H2Point, H2Point> common_perpendicular(const GeodesicH2& l, const GeodesicH2& m);

// Signed side of an interior point: +1 / -1 / 0 (on the geodesic, within tol).
int side_of(const GeodesicH2& l, const H2Point& z, double tol = 1e-12);
// Side of a boundary point; endpoints of l report 0.
int side_of(const GeodesicH2& l, const CirclePoint& x, double tol = 1e-12);

double dist_to_geodesic(const GeodesicH2& l, const H2Point& z);

// Foot of the perpendicular from z onto l.
H2Point foot_on(const GeodesicH2& l, const H2Point& z);

// The geodesic through p orthogonal to l (p need not lie on l; uses the foot of p).
GeodesicH2 perpendicular_at(const GeodesicH2& l, const H2Point& p);

// Point of l at signed arclength s from the foot of the reference point
// (positive direction: towards l's second endpoint v).
H2Point point_on(const GeodesicH2& l, const H2Point& ref, double s);

// Reference metric on the space of geodesics: best endpoint matching, max angular distance.
double geodesic_space_distance(const GeodesicH2& l, const GeodesicH2& m);

// Angle in (0, pi) between two geodesics through a common point z.
double angle_between_at(const GeodesicH2& l, const GeodesicH2& m, const H2Point& z);

// Isometry of H^2 that may reverse orientation: z -> M z (det +1) or z -> M conj(z) (det -1).
struct H2Isometry {
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};
    bool reflects = false;

    static H2Isometry identity() { return {}; }
    static H2Isometry of(const Mobius& g) { return H2Isometry{g.m, false}; }
    static H2Isometry reflection(const GeodesicH2& l);

    H2Point operator()(const H2Point& z) const;
    CirclePoint operator()(const CirclePoint& x) const;
    GeodesicH2 operator()(const GeodesicH2& l) const {
        return GeodesicH2((*this)(l.u), (*this)(l.v));
    }
    H2Isometry operator*(const H2Isometry& o) const;
    H2Isometry inverse() const;
    H2Isometry normalized() const;
};

} // namespace qg
