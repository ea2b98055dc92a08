#include "latpath/boundary_det.hpp"

#include "latpath/plane_closed.hpp"

namespace latpath {

Integer ladder_count(const LadderBounds& L) {
  L.validate();
  const std::size_t n = L.a.size();
  auto m = zero_matrix<Integer>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = binom(L.a[i] - L.b[j] + 1, long(j) - long(i) + 1);
  return det(m);
}

Integer avoid_points_count(const Point& A, const Point& E, const std::vector<Point>& C) {
  if (A.size() != 2 || E.size() != 2) fail_pre("avoid_points_count: points must be 2-dimensional");
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (C[i].size() != 2) fail_pre("avoid_points_count: points must be 2-dimensional");
    for (std::size_t j = 0; j < i; ++j)
      if (C[i] == C[j]) fail_pre("avoid_points_count: forbidden points must be distinct");
  }
  std::vector<Point> starts{A}, ends{E};
  starts.insert(starts.end(), C.begin(), C.end());
  ends.insert(ends.end(), C.begin(), C.end());
  const std::size_t n = starts.size();
  auto m = zero_matrix<Integer>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = count_simple(starts[j][0], starts[j][1], ends[i][0], ends[i][1]);
  return det(m);
}

std::vector<Point> BoxBoundary::points() const {
  std::vector<Point> out;
  Point u(n.size(), 0);
  while (true) {
    out.push_back(u);
    std::size_t k = n.size();
    while (k > 0 && u[k - 1] == n[k - 1]) u[--k] = 0;
    if (k == 0) break;
    ++u[k - 1];
  }
  return out;
}

std::size_t BoxBoundary::index_of(const Point& u) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (u[k] < 0 || u[k] > n[k]) fail_pre("box point outside [0, n]");
    idx = idx * std::size_t(n[k] + 1) + std::size_t(u[k]);
  }
  return idx;
}

void BoxBoundary::validate() const {
  if (n.empty()) fail_pre("box boundary: dimension d >= 1 required");
  std::size_t count = 1;
  for (long x : n) {
    if (x < 0) fail_pre("box boundary: n_i >= 0 violated");
    count *= std::size_t(x + 1);
  }
  if (a.size() != count || b.size() != count) fail_pre("box boundary: a and b need one value per box point");
  const auto pts = points();
  for (std::size_t i = 0; i < count; ++i) {
    if (a[i] < b[i]) fail_pre("box boundary: a >= b violated");
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (pts[i][k] == n[k]) continue;
      Point v = pts[i];
      ++v[k];
      std::size_t j = index_of(v);
      if (a[j] < a[i] || b[j] < b[i]) fail_pre("box boundary: a and b must be increasing in the product order");
    }
  }
}

bool BoxBoundary::contains(const Point& p) const {
  const std::size_t d = n.size();
  Point u(p.begin(), p.begin() + long(d));
  for (std::size_t k = 0; k < d; ++k)
    if (u[k] < 0 || u[k] > n[k]) return false;
  const std::size_t i = index_of(u);
  return b[i] <= p[d] && p[d] <= a[i];
}

BoxBoundary box_from_ladder(const LadderBounds& L) {
  L.validate();
  const long n = long(L.a.size());
  BoxBoundary B;
  B.n = {n};
  for (long x = 0; x <= n; ++x) {
    B.a.push_back(L.a[std::size_t(std::min(x + 1, n) - 1)]);
    B.b.push_back(L.b[std::size_t(std::max(x, 1L) - 1)]);
  }
  return B;
}

Integer box_boundary_count(const BoxBoundary& B) {
  B.validate();
  const auto u = B.points();
  const std::size_t p = u.size() - 1;
  // Entry N! / (prod v_k! (N - |v|)!) with N = a(u_i) - b(u_{j+1}) + 1 and
  // v = u_{j+1} - u_i, zero when any part is negative.  For d = 1 this is
  // the ladder binomial.
  auto m = zero_matrix<Integer>(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const long N = B.a[i] - B.b[j + 1] + 1;
      std::vector<long> parts;
      long used = 0;
      for (std::size_t k = 0; k < B.n.size(); ++k) {
        long v = u[j + 1][k] - u[i][k];
        parts.push_back(v);
        used += v;
      }
      parts.push_back(N - used);
      m[i][j] = multinomial(parts);
    }
  // The non-intersecting family sits on a permutation of sign (-1)^(P + |n|).
  long sum_n = 0;
  for (long x : B.n) sum_n += x;
  Integer v = det(m);
  return ((long(p) + sum_n) % 2) ? Integer(-v) : v;
}

}  // namespace latpath
