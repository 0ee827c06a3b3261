#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goodpoly/numeric.hpp"
#include "goodpoly/partition.hpp"

namespace goodpoly {

using RatVec = std::vector<Rat>;

// Lattice polytope given by a finite generating set of integer points.
// The hull itself stays implicit: all queries go through exact rational
// membership tests, no facet enumeration anywhere.
struct LatticePolytope {
    std::size_t m = 0;
    std::vector<Vec> generators; // deduplicated, sorted

    LatticePolytope(std::size_t m_, std::vector<Vec> gens);
};

// True iff q is a convex combination of the generators, decided by exact
// rational linear feasibility.
bool contains_point(const LatticePolytope& p, const RatVec& q);
bool contains_point(const LatticePolytope& p, const Vec& q);

// Generators v with v not in Conv(generators \ {v}); the vertex set of the
// hull.
std::vector<Vec> vertices(const LatticePolytope& p);

// All integer points of the hull: a bounding-box scan, pre-filtered by the
// coordinate-sum range, with exact membership on the survivors. Honors the
// GOODPOLY_THREADS environment variable.
std::vector<Vec> lattice_points(const LatticePolytope& p);

LatticePolytope dilate(const LatticePolytope& p, std::int64_t t);

// All sums of t elements (with repetition) of the input set, via iterated
// pairwise sum-sets.
std::vector<Vec> minkowski_power_points(const std::vector<Vec>& points,
                                        std::int64_t t);

struct IdpWitness {
    std::int64_t t = 0;
    Vec point;
};

struct IdpReport {
    bool holds = false;
    std::int64_t checked_t_max = 0;
    std::optional<IdpWitness> witness; // present iff holds is false
};

// For each t in 2..t_max checks that every integer point of tP is a sum of
// t integer points of P; stops at the first failure.
IdpReport idp_check(const LatticePolytope& p, std::int64_t t_max);

// Affine dimension of the generator set (exact rank computation).
std::size_t dimension(const LatticePolytope& p);

// max(2, dimension(p) - 1): the default dilation range for idp_check.
std::int64_t default_t_max(const LatticePolytope& p);

namespace detail {

// Membership oracle over a reduced generating set. Generators that are the
// average of two others are dropped first (the hull is unchanged), which
// keeps the simplex tableau narrow during scans.
struct HullOracle {
    std::size_t m = 0;
    std::vector<Vec> gens;
    Vec lo, hi;
    std::int64_t sum_lo = 0, sum_hi = 0;

    explicit HullOracle(const LatticePolytope& p);
    bool contains(const RatVec& q) const;
    bool contains(const Vec& q) const;
};

// Phase-1 simplex deciding sum c_i v_i = q, sum c_i = 1, c_i >= 0.
bool convex_feasible(const std::vector<Vec>& gens, const RatVec& q);

} // namespace detail

} // namespace goodpoly
