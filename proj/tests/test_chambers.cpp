#include <algorithm>
#include <functional>

#include "doctest.h"
#include "latpath/chambers.hpp"
#include "latpath/motzkin.hpp"
#include "latpath/path_core.hpp"
#include "latpath/plane_closed.hpp"

using namespace latpath;

namespace {

Integer chamber_oracle(const ChamberSpec& spec, const Point& A, const Point& E, long m) {
  std::optional<long> len;
  if (spec.steps != StepFamily::Unit) len = m;
  else {
    long total = 0;
    for (std::size_t i = 0; i < A.size(); ++i) total += E[i] - A[i];
    if (total != m) return 0;
  }
  return oracle_count({A, E, spec.step_set(), spec.restriction(), len});
}

// Strictly decreasing points of dimension d with coordinates in [lo, hi].
std::vector<Point> decreasing_points(std::size_t d, long lo, long hi) {
  std::vector<Point> out;
  Point cur;
  std::function<void(long)> go = [&](long top) {
    if (cur.size() == d) {
      out.push_back(cur);
      return;
    }
    for (long v = lo; v <= top; ++v) {
      cur.push_back(v);
      go(v - 1);
      cur.pop_back();
    }
  };
  go(hi);
  return out;
}

bool uniform_parity(const Point& p) {
  return std::all_of(p.begin(), p.end(), [&](long v) { return (v - p[0]) % 2 == 0; });
}

Point shift_weak(const Point& p) {
  Point q(p);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += long(q.size() - 1 - i);
  return q;
}

}  // namespace

TEST_CASE("multinomial and hyperplane counts") {
  CHECK(multinomial_count({0, 0, 0}, {1, 1, 1}) == 6);
  CHECK(multinomial_count({0, 0, 0}, {2, 1, 1}) == 12);
  CHECK(multinomial_count({1, 0}, {0, 3}) == 0);
  for (long c = 0; c <= 4; ++c)
    for (long d = 0; d <= 4; ++d) CHECK(multinomial_count({0, 0}, {c, d}) == count_simple(0, 0, c, d));
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y)
      for (long z = 0; z <= 2; ++z)
        CHECK(multinomial_count({0, 0, 0}, {x, y, z}) ==
              oracle_count({{0, 0, 0}, {x, y, z}, StepSet::simple(3), {}, {}}));

  CHECK(hyperplane_bound({1}, {1, 1}) == 1);
  for (long n = 0; n <= 6; ++n) CHECK(hyperplane_bound({1}, {n, n}) == catalan(n));
  CHECK(hyperplane_bound({0, 0}, {2, 1, 1}) == multinomial_count({0, 0, 0}, {2, 1, 1}));
  CHECK_THROWS_AS(hyperplane_bound({1, 1}, {1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(hyperplane_bound({1}, {1, 1, 1}), PreconditionError);

  for (long m1 = 0; m1 <= 2; ++m1)
    for (long m2 = 0; m2 <= 2; ++m2)
      for (long c1 = 0; c1 <= 2; ++c1)
        for (long c2 = 0; c2 <= 2; ++c2)
          for (long c0 = m1 * c1 + m2 * c2; c0 <= m1 * c1 + m2 * c2 + 3; ++c0) {
            Integer o = oracle_count({{0, 0, 0}, {c0, c1, c2}, StepSet::simple(3),
                                      Restriction::halfspace({1, -m1, -m2}, 0), {}});
            CHECK(hyperplane_bound({m1, m2}, {c0, c1, c2}) == o);
          }
  for (long mu = 0; mu <= 3; ++mu)
    for (long c1 = 0; c1 <= 3; ++c1)
      for (long c0 = mu * c1; c0 <= mu * c1 + 3; ++c0)
        CHECK(hyperplane_bound({mu}, {c0, c1}) == below_slope_mu(c0, c1, mu));
}

TEST_CASE("signed reflection sums over finite groups") {
  ChamberSpec a2{ChamberGroup::A, 2, StepFamily::Unit, 0};
  CHECK(signed_reflection_sum(a2, {1, 0}, {3, 1}, 3) == 2);
  ChamberSpec c1{ChamberGroup::C, 1, StepFamily::UnitPm, 0};
  CHECK(signed_reflection_sum(c1, {1}, {1}, 2) == 1);
  ChamberSpec a3{ChamberGroup::A, 3, StepFamily::UnitPm, 0};
  CHECK(signed_reflection_sum(a3, {5, 3, 1}, {5, 3, 1}, 0) == 1);
  CHECK_THROWS_AS(signed_reflection_sum(a2, {0, 0}, {3, 1}, 4), PreconditionError);
  CHECK_THROWS_AS(signed_reflection_sum({ChamberGroup::C, 2, StepFamily::Unit, 0}, {2, 1}, {3, 1}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(signed_reflection_sum({ChamberGroup::A, 2, StepFamily::DiagPm, 0}, {2, 1}, {3, 1}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(signed_reflection_sum({ChamberGroup::AffineA, 2, StepFamily::Unit, 3}, {1, 0}, {2, 1}, 2),
                  PreconditionError);

  long compared = 0;
  for (auto group : {ChamberGroup::A, ChamberGroup::C})
    for (auto steps : {StepFamily::Unit, StepFamily::UnitPm, StepFamily::DiagPm})
      for (std::size_t d = 1; d <= 3; ++d) {
        if (group == ChamberGroup::C && steps == StepFamily::Unit) continue;
        ChamberSpec spec{group, d, steps, 0};
        const long lo = group == ChamberGroup::C ? 1 : 0;
        const long hi = d == 3 ? 4 : 5;
        const long max_m = d == 3 ? 6 : 8;
        const auto pts = decreasing_points(d, lo, hi);
        for (const auto& A : pts)
          for (const auto& E : pts) {
            if (steps == StepFamily::DiagPm && (!uniform_parity(A) || !uniform_parity(E))) continue;
            if (d == 3 && A[0] + E[0] > 6) continue;
            for (long m = 0; m <= max_m; ++m) {
              Integer s = signed_reflection_sum(spec, A, E, m);
              CHECK(s == chamber_oracle(spec, A, E, m));
              ++compared;
              if (group == ChamberGroup::A && steps == StepFamily::DiagPm) CHECK(s == lock_step_det(A, E, m));
              if (group == ChamberGroup::C && steps == StepFamily::DiagPm) CHECK(s == typeC_det(A, E, m));
            }
          }
      }
  CHECK(compared > 1000);
}

TEST_CASE("type A determinant and the hook formula") {
  CHECK(typeA_det({0, 0}, {2, 1}) == 2);
  CHECK(typeA_det({0, 0}, {3, 2}) == 5);
  CHECK(typeA_det({3, 1, 1}, {3, 1, 1}) == 1);
  CHECK_THROWS_AS(typeA_det({0, 1}, {2, 2}), PreconditionError);
  CHECK(hook_formula({2, 1}) == 2);
  CHECK(hook_formula({5}) == 1);
  CHECK(hook_formula({2, 2}) == 2);
  CHECK(hook_formula({}) == 1);
  CHECK_THROWS_AS(hook_formula({1, 2}), PreconditionError);

  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<Point> pts;
    Point cur;
    std::function<void(long)> go = [&](long top) {
      if (cur.size() == d) {
        pts.push_back(cur);
        return;
      }
      for (long v = 0; v <= top; ++v) {
        cur.push_back(v);
        go(v);
        cur.pop_back();
      }
    };
    go(d == 3 ? 3 : 4);
    Restriction weak;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      Point h(d, 0);
      h[i] = 1;
      h[i + 1] = -1;
      weak.and_halfspace(h, 0);
    }
    ChamberSpec spec{ChamberGroup::A, d, StepFamily::Unit, 0};
    for (const auto& A : pts)
      for (const auto& E : pts) {
        Integer v = typeA_det(A, E);
        CHECK(v == oracle_count({A, E, StepSet::simple(d), weak, {}}));
        long m = 0;
        for (std::size_t i = 0; i < d; ++i) m += E[i] - A[i];
        if (m >= 0) CHECK(v == signed_reflection_sum(spec, shift_weak(A), shift_weak(E), m));
      }
  }
  // Every partition with at most 8 cells.
  std::function<void(std::vector<long>&, long, long)> parts = [&](std::vector<long>& lam, long left, long maxpart) {
    if (!lam.empty()) CHECK(hook_formula(lam) == typeA_det(Point(lam.size(), 0), lam));
    for (long p = std::min(left, maxpart); p >= 1; --p) {
      lam.push_back(p);
      parts(lam, left - p, p);
      lam.pop_back();
    }
  };
  std::vector<long> lam;
  for (long n = 1; n <= 8; ++n) parts(lam, n, n);
}

TEST_CASE("lock step and type C determinants") {
  CHECK(lock_step_det({2, 0}, {2, 0}, 2) == 3);
  CHECK(lock_step_det({4, 2, 0}, {4, 2, 0}, 0) == 1);
  CHECK(lock_step_det({2, 0}, {2, 0}, 1) == 0);
  CHECK_THROWS_AS(lock_step_det({2, 1}, {2, 0}, 2), PreconditionError);
  CHECK(typeC_det({1}, {1}, 2) == 1);
  CHECK(typeC_det({1}, {3}, 2) == 1);
  CHECK(typeC_det({5, 3}, {5, 3}, 0) == 1);
  CHECK_THROWS_AS(typeC_det({2, 0}, {2, 0}, 2), PreconditionError);
  CHECK_THROWS_AS(typeC_det({3, 2}, {3, 1}, 2), PreconditionError);
}

TEST_CASE("type A alcoves") {
  CHECK(affineA_count({1, 0}, {2, 1}, 3) == 1);
  CHECK(affineA_count({3, 2, 1}, {3, 2, 1}, 4) == 1);
  CHECK_THROWS_AS(affineA_count({3, 0}, {3, 1}, 3), PreconditionError);
  CHECK(affineA_pm_egf({1, 0}, {1, 0}, 3, 0) == 1);
  CHECK(affineA_pm_egf({1, 0}, {1, 0}, 3, 1) == 0);
  CHECK(affineA_lockstep({2, 0}, {2, 0}, 4, 0) == 1);
  CHECK(affineA_lockstep({2, 0}, {2, 0}, 4, 1) == 0);
  CHECK_THROWS_AS(affineA_lockstep({2, 1}, {2, 0}, 4, 2), PreconditionError);

  // Two walkers: the band 1 <= x_1 - x_2 <= N - 1.
  for (long N = 2; N <= 5; ++N)
    for (long a1 = 0; a1 <= 3; ++a1)
      for (long a2 = a1 - N + 1; a2 < a1; ++a2)
        for (long e1 = a1; e1 <= 6; ++e1)
          for (long e2 = e1 - N + 1; e2 < e1; ++e2)
            CHECK(affineA_count({a1, a2}, {e1, e2}, N) == between_diagonals(a1, a2, e1, e2, 1 - N, -1));

  for (std::size_t d = 2; d <= 3; ++d)
    for (long N = 2; N <= 6; ++N) {
      std::vector<Point> pts;
      for (const auto& p : decreasing_points(d, -2, 4))
        if (p.back() > p.front() - N) pts.push_back(p);
      ChamberSpec unit{ChamberGroup::AffineA, d, StepFamily::Unit, N};
      ChamberSpec pm{ChamberGroup::AffineA, d, StepFamily::UnitPm, N};
      ChamberSpec diag{ChamberGroup::AffineA, d, StepFamily::DiagPm, N};
      for (const auto& A : pts)
        for (const auto& E : pts) {
          if (A[0] > 1 || (d == 3 && A[0] < 0)) continue;
          long total = 0;
          for (std::size_t i = 0; i < d; ++i) total += E[i] - A[i];
          if (total >= 0 && total <= 7) CHECK(affineA_count(A, E, N) == chamber_oracle(unit, A, E, total));
          const long max_m = d == 2 ? 6 : 4;
          for (long m = 0; m <= max_m; ++m) {
            if (d == 2 || N <= 4) CHECK(affineA_pm_egf(A, E, N, m) == chamber_oracle(pm, A, E, m));
            if (uniform_parity(A) && uniform_parity(E))
              CHECK(affineA_lockstep(A, E, N, m) == chamber_oracle(diag, A, E, m));
          }
        }
    }
}

TEST_CASE("type C alcoves") {
  CHECK(affineC_pm({1}, {1}, 3, 0) == 1);
  CHECK(affineC_lockstep({2}, {2}, 4, 0) == 1);
  CHECK(affineC_lockstep({3, 1}, {3, 1}, 4, 0) == 1);
  CHECK_THROWS_AS(affineC_pm({3}, {1}, 3, 2), PreconditionError);
  CHECK_THROWS_AS(affineC_lockstep({3, 2}, {3, 1}, 5, 2), PreconditionError);
  CHECK_THROWS_AS(affineC_pm({1}, {1}, 3, 120), NumericGuardError);

  // One walker in 0 < x < N is a +-1 walk in the strip 0 <= y <= N - 2.
  for (long N = 2; N <= 6; ++N)
    for (long a = 1; a < N; ++a)
      for (long e = 1; e < N; ++e)
        for (long m = 0; m <= 10; ++m) {
          auto w = MotzkinWeighting<Integer>::constant(Integer(0), Integer(1), int(N - 2));
          Integer s = strip_count_transfer<Integer>(int(a - 1), int(e - 1), int(N - 2), int(m), w);
          CHECK(strip_walks(a, e, N, m) == s);
          CHECK(affineC_pm({a}, {e}, N, m) == s);
          CHECK(affineC_lockstep({a}, {e}, N, m) == s);
        }

  for (std::size_t d = 2; d <= 3; ++d)
    for (long N = d + 1; N <= 6; ++N) {
      const auto pts = decreasing_points(d, 1, N - 1);
      ChamberSpec pm{ChamberGroup::AffineC, d, StepFamily::UnitPm, N};
      ChamberSpec diag{ChamberGroup::AffineC, d, StepFamily::DiagPm, N};
      for (const auto& A : pts)
        for (const auto& E : pts)
          for (long m = 0; m <= (d == 2 ? 8 : 5); ++m) {
            CHECK(affineC_pm(A, E, N, m) == chamber_oracle(pm, A, E, m));
            if (uniform_parity(A) && uniform_parity(E))
              CHECK(affineC_lockstep(A, E, N, m) == chamber_oracle(diag, A, E, m));
          }
    }
}
