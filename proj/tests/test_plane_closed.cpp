#include <numeric>

#include "doctest.h"
#include "latpath/path_core.hpp"
#include "latpath/plane_closed.hpp"

using namespace latpath;

namespace {

PathQuery simple2(Point a, Point e, Restriction r = {}) { return {a, e, StepSet::simple(2), std::move(r), {}}; }

Integer oracle_band(long a, long b, long c, long d, long s, long t) {
  // x + t >= y >= x + s  <=>  y - x >= s and x - y >= -t
  Restriction r = Restriction::halfspace({-1, 1}, s).and_halfspace({1, -1}, -t);
  return oracle_count(simple2({a, b}, {c, d}, r));
}

Integer oracle_slope(long a, long b, long c, long d, long mu) {
  return oracle_count(simple2({a, b}, {c, d}, Restriction::halfspace({1, -mu}, 0)));
}

}  // namespace

TEST_CASE("unrestricted counts") {
  CHECK(count_simple(0, 0, 3, 2) == 10);
  CHECK(count_simple(4, 1, 4, 1) == 1);
  CHECK(count_simple(0, 0, -1, 0) == 0);
  CHECK(count_pm(2, 0, 0, 0, 0) == 4);
  CHECK(count_pm(1, 0, 0, 1, 0) == 1);
  CHECK(count_pm(1, 0, 0, 2, 0) == 0);
  CHECK(delannoy(0, 0, 3, 3) == 63);
  CHECK(delannoy(0, 0, 5, 0) == 1);
  CHECK(delannoy(0, 0, 1, 1) == 3);
  CHECK(area_gf(0, 0, 2, 1) == IPoly(std::vector<Integer>{1, 1, 1}));
  CHECK(area_gf(0, 1, 2, 1) == IPoly::monomial(Integer(1), 2));
  CHECK(area_gf(3, 0, 3, 4) == IPoly(1));

  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 4; ++c)
        for (long d = 0; d <= 4; ++d) {
          auto q = simple2({a, b}, {c, d});
          CHECK(count_simple(a, b, c, d) == oracle_count(q));
          CHECK(area_gf(a, b, c, d) == oracle_gf(q, Statistic::Area));
          CHECK(area_gf(a, b, c, d).eval(Integer(1)) == count_simple(a, b, c, d));
          PathQuery dq{{a, b}, {c, d}, StepSet::delannoy(), {}, {}};
          CHECK(delannoy(a, b, c, d) == oracle_count(dq));
        }
  for (long n = 0; n <= 4; ++n)
    for (long c = -2; c <= 2; ++c)
      for (long d = -2; d <= 2; ++d) {
        PathQuery q{{0, 0}, {c, d}, StepSet::pm_unit(2), {}, n};
        CHECK(count_pm(n, 0, 0, c, d) == oracle_count(q));
      }
}

TEST_CASE("reflection formulas") {
  CHECK(below_diagonal(0, 0, 3, 3) == 5);
  CHECK(below_diagonal(0, 0, 3, 2) == 5);
  CHECK(below_diagonal(2, 1, 2, 1) == 1);
  CHECK_THROWS_AS(below_diagonal(0, 1, 3, 3), PreconditionError);
  CHECK(catalan(3) == 5);
  CHECK(catalan(0) == 1);
  CHECK(ballot(3, 2) == 5);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= 5; ++c)
        for (long d = 0; d <= c; ++d)
          CHECK(below_diagonal(a, b, c, d) ==
                oracle_count(simple2({a, b}, {c, d}, Restriction::halfspace({1, -1}, 0))));

  CHECK(between_diagonals(0, 0, 1, 1, -1, 1) == 2);
  // A zero-width band admits no step at all.
  CHECK(between_diagonals(0, 0, 2, 2, 0, 0) == 0);
  CHECK(between_diagonals(0, 0, 2, 2, 0, 0) == oracle_band(0, 0, 2, 2, 0, 0));
  CHECK_THROWS_AS(between_diagonals(0, 0, 3, 0, -1, 1), PreconditionError);
  CHECK(between_diagonals_trig(0, 0, 1, 1, -1, 1) == 2);
  CHECK(between_diagonals_trig(0, 0, 3, 3, -2, 2) == between_diagonals(0, 0, 3, 3, -2, 2));
  CHECK(between_diagonals_trig(0, 0, 0, 0, 0, 0) == 1);
  CHECK(between_diagonals_trig(0, 0, 0, 0, -1, 2) == 1);
  for (long s = -2; s <= 0; ++s)
    for (long t = 0; t <= 2; ++t)
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
          for (long c = 0; c <= 4; ++c)
            for (long d = 0; d <= 4; ++d) {
              if (!(a + t >= b && b >= a + s && c + t >= d && d >= c + s)) continue;
              Integer o = oracle_band(a, b, c, d, s, t);
              CHECK(between_diagonals(a, b, c, d, s, t) == o);
              CHECK(between_diagonals_trig(a, b, c, d, s, t) == o);
            }
}

TEST_CASE("cycle lemma formulas") {
  CHECK(rational_catalan(3, 2) == 2);
  CHECK(rational_catalan(2, 1) == 1);
  CHECK(rational_catalan(4, 3) == 5);
  CHECK_THROWS_AS(rational_catalan(4, 2), PreconditionError);
  for (long r = 1; r <= 6; ++r)
    for (long s = 1; s <= 6; ++s) {
      if (std::gcd(r, s) != 1) continue;
      CHECK(rational_catalan(r, s) == oracle_count(simple2({0, 0}, {r, s}, Restriction::halfspace({s, -r}, 0))));
    }

  CHECK(below_slope_mu(4, 2, 2) == 3);
  CHECK(below_slope_mu(4, 4, 1) == catalan(4));
  for (long c = 0; c <= 5; ++c)
    for (long d = 0; d <= 5; ++d) CHECK(below_slope_mu(c, d, 0) == count_simple(0, 0, c, d));

  for (auto v : {SlopeVariant::LastTouch, SlopeVariant::InclusionExclusion}) {
    CHECK(below_slope_mu_general(2, 0, 4, 2, 2, v) == 3);
    CHECK(below_slope_mu_general(0, 0, 6, 2, 3, v) == below_slope_mu(6, 2, 3));
  }
  for (long mu = 0; mu <= 3; ++mu)
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 2; ++b)
        for (long c = 0; c <= 6; ++c)
          for (long d = 0; d <= 3; ++d) {
            if (a < mu * b || c < mu * d) continue;
            Integer o = oracle_slope(a, b, c, d, mu);
            CHECK(below_slope_mu_general(a, b, c, d, mu, SlopeVariant::LastTouch) == o);
            CHECK(below_slope_mu_general(a, b, c, d, mu, SlopeVariant::InclusionExclusion) == o);
          }
}

TEST_CASE("piecewise boundary") {
  auto oracle = [](const std::vector<BoundarySegment>& segs, long c, long d) {
    Restriction r;
    r.region = [segs](const Point& p) { return piecewise_admits(segs, p[0], p[1]); };
    return oracle_count(simple2({0, 0}, {c, d}, r));
  };
  // One segment is the slope formula.
  CHECK(piecewise_boundary({{2, 0, 3}}, 7, 3) == below_slope_mu(7, 3, 2));
  // A start to the right of the first line is not malformed once shifted.
  CHECK(piecewise_boundary({{2, -2, 3}}, 7, 3) == below_slope_mu_general(2, 0, 9, 3, 2, SlopeVariant::LastTouch));
  // The origin lies left of x = 2 on the first segment.
  CHECK_THROWS_AS(piecewise_boundary({{0, 2, 1}, {1, 0, 2}}, 3, 2), PreconditionError);
  CHECK_THROWS_AS(piecewise_boundary({{1, 0, 2}, {1, 0, 2}}, 5, 2), PreconditionError);

  // Convex (slopes increasing) and non-convex boundaries.
  std::vector<std::vector<BoundarySegment>> cases = {
      {{0, 0, 1}, {1, 0, 3}},  {{1, 0, 1}, {2, -1, 3}}, {{2, 0, 2}, {0, 3, 4}},
      {{1, 0, 2}, {0, 1, 3}, {2, -3, 4}}, {{0, -1, 1}, {3, -2, 2}, {1, 1, 4}},
  };
  for (const auto& segs : cases) {
    const long d = segs.back().y_top;
    for (long c = segs.back().mu * d + segs.back().nu; c <= 9; ++c) {
      if (c < 0) continue;
      CHECK(piecewise_boundary(segs, c, d) == oracle(segs, c, d));
    }
  }
}

TEST_CASE("rational slope example") {
  CHECK(sato_example_23(0) == 1);
  for (long n = 1; n <= 7; ++n) {
    Integer o = (n % 2 == 0)
                    ? oracle_count(simple2({0, 0}, {3 * n / 2, n}, Restriction::halfspace({2, -3}, 0)))
                    : oracle_count(simple2({0, 0}, {(3 * n - 1) / 2, n}, Restriction::halfspace({2, -3}, -1)));
    CHECK(sato_example_23(n) == o);
  }
}

TEST_CASE("Kreweras walks") {
  auto oracle = [](long e1, long e2, long e3) {
    Restriction r = Restriction::halfspace({1, -1, 0}, 0).and_halfspace({1, 0, -1}, 0);
    return oracle_count({{0, 0, 0}, {e1, e2, e3}, StepSet::simple(3), r, {}});
  };
  CHECK(kreweras(1, 1, 1) == 2);
  CHECK(kreweras(4, 0, 0) == 1);
  CHECK(kreweras(2, 2, 1) == oracle(2, 2, 1));
  CHECK(kreweras_diagonal(1, 1) == 2);
  CHECK_THROWS_AS(kreweras(1, 2, 0), PreconditionError);
  for (long e1 = 0; e1 <= 3; ++e1)
    for (long e2 = 0; e2 <= e1; ++e2)
      for (long e3 = 0; e3 <= e1; ++e3) {
        CHECK(kreweras(e1, e2, e3) == oracle(e1, e2, e3));
        if (e1 == e2) CHECK(kreweras(e1, e1, e3) == kreweras_diagonal(e1, e3));
      }
}
