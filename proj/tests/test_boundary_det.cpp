#include <random>

#include "doctest.h"
#include "latpath/boundary_det.hpp"
#include "latpath/plane_closed.hpp"

using namespace latpath;

namespace {

Integer oracle_ladder(const LadderBounds& L) {
  Restriction r;
  r.ladder = L;
  return oracle_count({{0, L.b.front()}, {long(L.a.size()), L.a.back()}, StepSet::simple(2), r, {}});
}

Integer oracle_box(const BoxBoundary& B) {
  const std::size_t d = B.n.size();
  Restriction r;
  r.region = [&B](const Point& p) { return B.contains(p); };
  Point from(d + 1, 0), to(B.n.begin(), B.n.end());
  from[d] = B.b.front();
  to.push_back(B.a.back());
  return oracle_count({from, to, StepSet::simple(d + 1), r, {}});
}

// All nondecreasing sequences of length n with entries in [lo, hi].
void monotone_seqs(long n, long lo, long hi, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (long(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (long v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
    cur.push_back(v);
    monotone_seqs(n, lo, hi, cur, out);
    cur.pop_back();
  }
}

// All functions on the box points that are increasing in the product order.
std::vector<std::vector<long>> monotone_box_functions(const BoxBoundary& shape, long hi) {
  const auto pts = shape.points();
  std::vector<std::vector<long>> out;
  std::vector<long> f(pts.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == pts.size()) {
      out.push_back(f);
      return;
    }
    long lo = 0;
    for (std::size_t k = 0; k < shape.n.size(); ++k) {
      if (pts[i][k] == 0) continue;
      Point v = pts[i];
      --v[k];
      lo = std::max(lo, f[shape.index_of(v)]);
    }
    for (long x = lo; x <= hi; ++x) {
      f[i] = x;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("ladder determinant") {
  CHECK(ladder_count({{1, 1}, {0, 0}}) == 3);
  CHECK(ladder_count({{4}, {0}}) == 5);
  LadderBounds fig{{3, 5, 7, 8, 8, 8}, {0, 1, 1, 2, 5, 5}};
  CHECK(ladder_count(fig) == oracle_ladder(fig));
  CHECK_THROWS_AS(ladder_count({{1, 0}, {0, 0}}), PreconditionError);
  for (long n = 1; n <= 3; ++n) {
    std::vector<std::vector<long>> seqs;
    std::vector<long> cur;
    monotone_seqs(n, 0, 3, cur, seqs);
    for (const auto& a : seqs)
      for (const auto& b : seqs) {
        bool ok = true;
        for (long i = 0; i < n; ++i) ok = ok && a[std::size_t(i)] >= b[std::size_t(i)];
        if (!ok) continue;
        LadderBounds L{a, b};
        CHECK(ladder_count(L) == oracle_ladder(L));
        CHECK(box_boundary_count(box_from_ladder(L)) == ladder_count(L));
      }
  }
}

TEST_CASE("avoiding points") {
  CHECK(avoid_points_count({0, 0}, {2, 2}, {}) == 6);
  CHECK(avoid_points_count({0, 0}, {2, 2}, {{1, 1}}) == 2);
  CHECK(avoid_points_count({0, 0}, {2, 2}, {{5, 0}}) == 6);
  for (long x1 = 0; x1 <= 3; ++x1)
    for (long y1 = 0; y1 <= 3; ++y1)
      for (long x2 = 0; x2 <= 3; ++x2)
        for (long y2 = 0; y2 <= 3; ++y2) {
          std::vector<Point> C{{x1, y1}};
          if (Point{x2, y2} != C[0]) C.push_back({x2, y2});
          Restriction r;
          for (const auto& p : C) r.forbidden.insert(p);
          Integer o = oracle_count({{0, 0}, {3, 3}, StepSet::simple(2), r, {}});
          CHECK(avoid_points_count({0, 0}, {3, 3}, C) == o);
        }
}

TEST_CASE("box boundary") {
  BoxBoundary unit{{1, 1}, {1, 1, 1, 1}, {0, 0, 0, 0}};
  CHECK(oracle_box(unit) == 6);
  CHECK(box_boundary_count(unit) == 6);
  BoxBoundary flat{{1, 2}, std::vector<long>(6, 2), std::vector<long>(6, 2)};
  CHECK(box_boundary_count(flat) == oracle_box(flat));

  for (const std::vector<long>& n : {std::vector<long>{1, 1}, {1, 2}, {2, 1}, {0, 2}, {2, 2}, {1, 1, 1}}) {
    BoxBoundary shape{n, {}, {}};
    auto fs = monotone_box_functions(shape, 2);
    for (const auto& a : fs)
      for (const auto& b : fs) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) ok = ok && a[i] >= b[i];
        if (!ok) continue;
        BoxBoundary B{n, a, b};
        CHECK(box_boundary_count(B) == oracle_box(B));
      }
  }
}
