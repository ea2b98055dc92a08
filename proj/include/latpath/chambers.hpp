#pragma once
// Lattice paths in higher dimensions: unrestricted multinomial counts, a
// hyperplane bound, and walks confined to Weyl chambers and alcoves of
// types A and C (counted by reflection).

#include <vector>

#include "latpath/algebra.hpp"
#include "latpath/path_core.hpp"

namespace latpath {

enum class ChamberGroup { A, AffineA, C, AffineC };

enum class StepFamily {
  Unit,    // positive unit steps e_i
  UnitPm,  // +-e_i
  DiagPm,  // (+-1, ..., +-1)
};

// The open chambers
//   A:        x_1 > ... > x_d
//   AffineA:  x_1 > ... > x_d > x_1 - N
//   C:        x_1 > ... > x_d > 0
//   AffineC:  N > x_1 > ... > x_d > 0
struct ChamberSpec {
  ChamberGroup group = ChamberGroup::A;
  std::size_t d = 1;
  StepFamily steps = StepFamily::Unit;
  long N = 0;  // affine groups only

  void validate() const;
  bool contains(const Point& x) const;  // strictly inside
  Restriction restriction() const;
  StepSet step_set() const;
};

// (sum (e_i - a_i))! / prod (e_i - a_i)!, zero unless e >= a.
Integer multinomial_count(const Point& a, const Point& e);

// Paths 0 -> (c_0, ..., c_d) with unit steps staying in x_0 >= sum mu_i x_i;
// mu holds mu_1..mu_d.
Integer hyperplane_bound(const std::vector<long>& mu, const std::vector<long>& c);

// Unrestricted m-step walks from a to e.  For Unit steps m must equal the
// coordinate sum of e - a, otherwise the count is zero.
Integer free_walks(StepFamily s, const Point& a, const Point& e, long m);

// Sum over the finite reflection group of sgn(w) times the unrestricted
// walks w(A) -> E.  Checks that A and E lie inside the chamber and that the
// step family is admissible for the group.
Integer signed_reflection_sum(const ChamberSpec& spec, const Point& A, const Point& E, long m);

// Unit-step paths in the weak region x_1 >= ... >= x_d.
Integer typeA_det(const Point& a, const Point& e);
// Standard Young tableaux of shape lambda.
Integer hook_formula(const std::vector<long>& lambda);

// Diagonal +-1 steps in x_1 > ... > x_d.
Integer lock_step_det(const Point& a, const Point& e, long m);
// Diagonal +-1 steps in x_1 > ... > x_d > 0.
Integer typeC_det(const Point& a, const Point& e, long m);

// Unit steps in the alcove x_1 > ... > x_d > x_1 - N.
Integer affineA_count(const Point& a, const Point& e, long N);
// m steps +-e_i in the same alcove, via modified Bessel series.
Integer affineA_pm_egf(const Point& a, const Point& e, long N, long m);
// m diagonal +-1 steps in the same alcove.
Integer affineA_lockstep(const Point& a, const Point& e, long N, long m);

// m steps +-e_i, resp. diagonal +-1 steps, in N > x_1 > ... > x_d > 0.  The
// trigonometric sums are evaluated in floating point and rounded; a
// rounding residual above 1e-6 raises NumericGuardError.
Integer affineC_pm(const Point& a, const Point& e, long N, long m);
Integer affineC_lockstep(const Point& a, const Point& e, long N, long m);

// Walks of m steps +-1 from a to e staying in 0 < x < N, exactly.
Integer strip_walks(long a, long e, long N, long m);

}  // namespace latpath
