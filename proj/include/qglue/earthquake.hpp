#pragma once

#include <optional>
#include <vector>

#include "qglue/geom2.hpp"

namespace qg {

struct WeightedLeaf {
    GeodesicH2 geo;
    double weight = 0.0;
};

// Finitely many pairwise non-crossing weighted geodesics.
struct FiniteLamination {
    std::vector<WeightedLeaf> leaves;

    static FiniteLamination make(std::vector<WeightedLeaf> leaves); // validates
    bool empty() const { return leaves.empty(); }
    FiniteLamination scaled(double factor) const;
};

enum class Handedness { Left, Right };

// A finite earthquake: lamination, handedness, and the base stratum given by a point
// off the leaves. Anchor convention: leaf (0,inf), base in {Re z < 0}, left earthquake
// of weight t maps z -> e^t z on {Re z > 0}.
struct EarthquakeSpec {
    FiniteLamination lam;
    Handedness side = Handedness::Left;
    H2Point base{0.0, 1.0};

    static EarthquakeSpec make(FiniteLamination lam, Handedness side, H2Point base);
};

// Comparison isometry A(F) for the stratum containing an interior point.
// Throws OnWeightedLeaf if z lies on a leaf (within tol).
Mobius stratum_isometry(const EarthquakeSpec& eq, const H2Point& z, double tol = 1e-12);

// Interior evaluation E(z) = A(F_z)(z).
H2Point earthquake_eval(const EarthquakeSpec& eq, const H2Point& z);

// Boundary extension; continuous at leaf endpoints (one-sided limits agree).
CirclePoint earthquake_boundary(const EarthquakeSpec& eq, const CirclePoint& x);

// Both one-sided boundary values at x (coincide except for reporting purposes).
std::pair<CirclePoint, CirclePoint> earthquake_boundary_sides(const EarthquakeSpec& eq,
                                                              const CirclePoint& x);

// All leaf endpoints in positive cyclic order together with the per-arc isometries:
// arc k runs from breakpoint k to breakpoint k+1 and carries matrix arc_map[k].
struct EarthquakeArcs {
    std::vector<CirclePoint> breakpoints; // cyclic, positive order
    std::vector<Mobius> arc_map;          // arc_map[k] on arc (breakpoints[k], breakpoints[k+1])
};
EarthquakeArcs earthquake_arcs(const EarthquakeSpec& eq);

// Thurston norm interval [lower, upper].
// lower: best weight sum over a constructed family of unit segments;
// upper: maximum weight over cliques of leaves at pairwise distance < 1.
struct NormInterval {
    double lower = 0.0;
    double upper = 0.0;
};
NormInterval thurston_norm_estimate(const FiniteLamination& lam);

// Lemma-9.2 style perturbation: returns pairwise ultraparallel leaves, each displaced
// by less than 1/n in the reference metric, with no pairwise distance decreased.
// Input order is preserved. Throws CrossingInput on crossing leaves.
std::vector<GeodesicH2> perturb_ultraparallel(const std::vector<GeodesicH2>& leaves, int n);

// Closed right-angled polygon: vertices in cyclic order; edge k joins vertex k to k+1.
struct RightAngledPolygon {
    std::vector<H2Point> vertices;
    std::vector<GeodesicH2> edge_geodesics; // full geodesic carrying edge k

    std::size_t size() const { return vertices.size(); }
    bool contains(const H2Point& z) const;
    double dist_to_boundary(const H2Point& z) const; // 0 when outside or on boundary
};

// Lemma-9.4 polygon: contains B(x0, k+n); right angles; meets every leaf orthogonally
// in exactly two points; vertices at distance > 1 from the leaf crossings.
// Throws ConstructionFailure naming the violated claim.
RightAngledPolygon build_right_angled_polygon(const FiniteLamination& lam, const H2Point& x0,
                                              double k, double n);

// Verifies the four claims; returns the name of the first violated claim, or empty.
std::string check_polygon_claims(const RightAngledPolygon& poly, const FiniteLamination& lam,
                                 const H2Point& x0, double contain_radius);

struct OrbitLamination {
    FiniteLamination lam;                  // orbit leaves truncated to B(x0, R)
    std::vector<H2Isometry> generators;    // edge reflections
    std::size_t group_elements = 0;        // elements enumerated (translate meets ball)
};

// Reflection-group orbit of the lamination, truncated to B(x0, R).
// Throws OrbitBudgetExceeded when the element budget is exhausted.
OrbitLamination reflection_orbit_lamination(const FiniteLamination& lam,
                                            const RightAngledPolygon& poly, const H2Point& x0,
                                            double R, std::size_t budget = 200000);

} // namespace qg
