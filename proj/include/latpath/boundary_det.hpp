#pragma once
// Determinant formulas for paths between general (ladder-shaped) boundaries
// and for paths avoiding a finite set of points.

#include <vector>

#include "latpath/algebra.hpp"
#include "latpath/path_core.hpp"

namespace latpath {

// Paths (0, b_1) -> (n, a_n) whose i-th horizontal step has height in
// [b_i, a_i].
Integer ladder_count(const LadderBounds& L);

// Simple paths A -> E avoiding every point of C (distinct points), via the
// dummy-path determinant of size |C| + 1.
Integer avoid_points_count(const Point& A, const Point& E, const std::vector<Point>& C);

// Nondecreasing integer functions a >= b on the box [0, n] in Z^d, stored as
// values at the box points in lexicographic order.
struct BoxBoundary {
  std::vector<long> n;
  std::vector<long> a, b;

  std::vector<Point> points() const;  // lexicographic order
  std::size_t index_of(const Point& u) const;
  long a_at(const Point& u) const { return a[index_of(u)]; }
  long b_at(const Point& u) const { return b[index_of(u)]; }
  void validate() const;
  // Points (u, y) of Z^{d+1} with u in the box and b(u) <= y <= a(u).
  bool contains(const Point& p) const;
};

// The d = 1 box equivalent to a ladder: a(x) = a_{min(x+1,n)}, b(x) = b_{max(x,1)}.
BoxBoundary box_from_ladder(const LadderBounds& L);

// Paths in Z^{d+1} with unit steps from (0, b(0)) to (n, a(n)) inside the
// region between b and a.  Determinant over all but the last box point.
Integer box_boundary_count(const BoxBoundary& B);

}  // namespace latpath
