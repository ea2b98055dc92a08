#pragma once
// Closed-form counts for paths in the plane with unit steps: unrestricted,
// reflection-principle, cycle-lemma, piecewise-linear and Kreweras formulas.
//
// Unless noted, "paths" are simple: steps (1,0) and (0,1).

#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

Integer count_simple(long a, long b, long c, long d);
// n steps from {(+-1,0),(0,+-1)}.
Integer count_pm(long n, long a, long b, long c, long d);
// Steps (1,0), (0,1), (1,1).
Integer delannoy(long a, long b, long c, long d);
// Sum over paths of q^(sum of heights of the horizontal steps).
IPoly area_gf(long a, long b, long c, long d);

// Weakly below y = x.  Requires a >= b, c >= d.
Integer below_diagonal(long a, long b, long c, long d);
Integer catalan(long n);
Integer ballot(long c, long d);  // (0,0) -> (c,d) below y = x, c >= d >= 0

// x + t >= y >= x + s, by the alternating reflection sum.
Integer between_diagonals(long a, long b, long c, long d, long s, long t);
// Same count from the cosine/sine formula, evaluated in floating point and
// rounded.  Throws NumericGuardError if the rounding residual exceeds 1e-6.
Integer between_diagonals_trig(long a, long b, long c, long d, long s, long t);

// (0,0) -> (r,s) weakly below ry = sx; gcd(r,s) = 1.
Integer rational_catalan(long r, long s);
// (0,0) -> (c,d) weakly below x = mu*y.
Integer below_slope_mu(long c, long d, long mu);

enum class SlopeVariant { LastTouch, InclusionExclusion };
// (a,b) -> (c,d) weakly below x = mu*y.
Integer below_slope_mu_general(long a, long b, long c, long d, long mu, SlopeVariant v);

// Boundary x >= mu_i*y + nu_i for y_{i-1} < y <= y_i (the first segment
// also covers y = 0).  The y_i are the segment tops; the last must be d.
struct BoundarySegment {
  long mu, nu, y_top;
};
void validate_segments(const std::vector<BoundarySegment>& segs, long d);
// Point test for the same region, used to build oracle restrictions.
bool piecewise_admits(const std::vector<BoundarySegment>& segs, long x, long y);
// Count of paths (0,0) -> (c,d), computed from the counts for the lower
// segments as polynomials in the horizontal coordinate.
Integer piecewise_boundary(const std::vector<BoundarySegment>& segs, long c, long d);
// The same count as a polynomial in c (valid for c >= mu_m d + nu_m).
QPoly piecewise_boundary_poly(const std::vector<BoundarySegment>& segs, long d);

// Paths (0,0) -> (3n/2, n) below 2x >= 3y for even n, and
// (0,0) -> ((3n-1)/2, n) below 2x >= 3y - 1 for odd n.
Integer sato_example_23(long n);

// Paths in Z^3 from the origin with x1 >= max(x2, x3).
Integer kreweras(long e1, long e2, long e3);
// The product form, valid for e1 = e2 >= e3 >= 0.
Integer kreweras_diagonal(long e1, long e3);

}  // namespace latpath
