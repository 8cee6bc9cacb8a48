#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bellpoly/correlation.hpp"

namespace bellpoly {

// Convex hull of finitely many points.
struct VRep {
    std::size_t dimension = 0;
    std::vector<RationalVector> points;

    static VRep from_points(const std::vector<ReducedPoint>& points);
    // Throws std::invalid_argument if a point has the wrong length.
    void validate() const;
};

struct HRep {
    std::size_t dimension = 0;
    std::vector<LinearInequality> inequalities;
    std::vector<LinearEquation> equations;
};

// Affine hull of a point set. `free_coords` are the pivot columns of the
// reduced row-echelon form of the difference vectors; each equation pins one
// dependent coordinate as an affine function of the free ones, and has a
// zero coefficient on every other dependent coordinate.
struct AffineHull {
    std::size_t dimension = 0;
    std::vector<std::size_t> free_coords;
    std::vector<std::size_t> dependent_coords;
    std::vector<LinearEquation> equations;  // one per dependent coordinate, same order
};

AffineHull affine_hull(const VRep& v);
std::size_t affine_dimension(const VRep& v);

struct HullOptions {
    // Called after each processed vertex with (processed, total, current ray count).
    std::function<void(std::size_t, std::size_t, std::size_t)> progress;
    // Insert points in the given order (later duplicates dropped) instead of
    // lexicographic order. The result does not depend on it, the running time does.
    bool keep_order = false;
};

// Facet description of conv(v). Inequalities are facet-defining, expressed
// with zero coefficients on the dependent coordinates of the affine hull,
// and sorted; equations describe the affine hull.
HRep facets_from_vertices(const VRep& v, const HullOptions& options = {});

// Eliminates dependent coordinates from q using equations in the form
// produced by affine_hull, then renormalizes.
LinearInequality reduce_modulo(const LinearInequality& q, const std::vector<LinearEquation>& equations);

bool satisfies(const HRep& h, const RationalVector& x);

struct Inside {
    std::vector<std::pair<std::size_t, Rational>> weights;  // (point index, weight > 0)
};

struct Outside {
    LinearInequality separator;  // valid on every point, violated by the query
};

using MembershipResult = std::variant<Inside, Outside>;

inline bool is_inside(const MembershipResult& r) { return std::holds_alternative<Inside>(r); }

// Exact phase-one simplex (Bland's rule). Throws std::invalid_argument on a
// dimension mismatch or an empty point set.
MembershipResult membership(const RationalVector& x, const VRep& v);

// Re-checks a certificate by direct arithmetic.
bool verify_certificate(const RationalVector& x, const VRep& v, const MembershipResult& r);

struct ContainmentResult {
    bool contained = false;
    std::vector<MembershipResult> witnesses;  // one per inner point
};

ContainmentResult contains_polytope(const VRep& inner, const VRep& outer);

}  // namespace bellpoly
