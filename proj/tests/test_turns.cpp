#include <random>

#include "doctest.h"
#include "latpath/path_core.hpp"
#include "latpath/plane_closed.hpp"
#include "latpath/turns.hpp"

using namespace latpath;

namespace {

PathQuery simple2(Point a, Point e, Restriction r = {}) { return {a, e, StepSet::simple(2), std::move(r), {}}; }

Restriction below() { return Restriction::halfspace({1, -1}, 0); }

Statistic stat_of(TurnKind k) { return k == TurnKind::NE ? Statistic::NETurns : Statistic::ENTurns; }

Integer coeff_of(const IPoly& p, long l) { return p.coeff(std::size_t(l)); }

// Families of pairwise vertex-disjoint paths A_i -> E_i with l turns in total.
Integer family_oracle(const std::vector<Point>& A, const std::vector<Point>& E, long l, const Restriction& r,
                      TurnKind kind) {
  const std::size_t n = A.size();
  std::vector<std::vector<std::pair<std::set<Point>, long>>> options(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& p : oracle_paths(simple2(A[i], E[i], r))) {
      std::set<Point> pts{p.start};
      Point at = p.start;
      for (const auto& s : p.steps) pts.insert(at = at + s);
      options[i].push_back({pts, long(turns(p, kind).size())});
    }
  Integer total = 0;
  std::vector<const std::set<Point>*> chosen;
  std::function<void(std::size_t, long)> go = [&](std::size_t i, long used) {
    if (used > l) return;
    if (i == n) {
      if (used == l) ++total;
      return;
    }
    for (const auto& [pts, t] : options[i]) {
      bool clash = false;
      for (auto* other : chosen)
        for (const auto& x : pts)
          if (other->count(x)) {
            clash = true;
            break;
          }
      if (clash) continue;
      chosen.push_back(&pts);
      go(i + 1, used + t);
      chosen.pop_back();
    }
  };
  go(0, 0);
  return total;
}

bool ne_order(const std::vector<Point>& A, const std::vector<Point>& E) {
  for (std::size_t i = 1; i < A.size(); ++i)
    if (!(A[i - 1][0] <= A[i][0] && A[i - 1][1] > A[i][1] && E[i - 1][0] < E[i][0] && E[i - 1][1] >= E[i][1]))
      return false;
  return true;
}

bool en_order(const std::vector<Point>& A, const std::vector<Point>& E) {
  for (std::size_t i = 1; i < A.size(); ++i)
    if (!(A[i - 1][0] < A[i][0] && A[i - 1][1] >= A[i][1] && E[i - 1][0] <= E[i][0] && E[i - 1][1] > E[i][1]))
      return false;
  return true;
}

void all_increasing(long lo, long hi, std::size_t len, std::vector<long>& cur,
                    const std::function<void(const std::vector<long>&)>& f) {
  if (cur.size() == len) {
    f(cur);
    return;
  }
  for (long v = cur.empty() ? lo : cur.back() + 1; v <= hi; ++v) {
    cur.push_back(v);
    all_increasing(lo, hi, len, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("turn statistics on the worked example path") {
  // Runs of lengths 2, 1, 2, 3, 1, 1, 2 from (1,-1) to (6,6).
  Path p0 = path_from_word({1, -1}, "NNENNEEENENN");
  CHECK(p0.end() == Point{6, 6});
  CHECK(ne_turns(p0) == TurnArray{{1, 2, 5}, {1, 3, 4}});
  CHECK(en_turns(p0) == TurnArray{{2, 5, 6}, {1, 3, 4}});
  auto one = oracle_gf(simple2({0, 0}, {0, 0}), Statistic::Runs);
  CHECK(one == IPoly(1));
  // Each path counted by runs: the single path with these runs has run 7.
  IPoly runs_p0 = oracle_weighted<IPoly>(simple2({1, -1}, {6, 6}), [&](long pos, const Point&, int prev, int step) {
    const bool on_path = path_word(p0)[std::size_t(pos)] == (step == 0 ? 'E' : 'N');
    if (!on_path) return IPoly();
    return prev != step ? IPoly::var() : IPoly(1);
  });
  CHECK(runs_p0 == IPoly::monomial(Integer(1), 7));
}

TEST_CASE("unrestricted and below-diagonal turn counts") {
  CHECK(turns_unrestricted(0, 0, 2, 2, 1, TurnKind::NE) == 4);
  CHECK(turns_below_diagonal(0, 0, 3, 3, 1, TurnKind::NE) == 3);
  CHECK(turns_unrestricted(0, 0, 3, 1, 0, TurnKind::EN) == 1);
  CHECK(turns_below_diagonal(0, 0, 3, 3, 4, TurnKind::NE) == 0);
  CHECK_THROWS_AS(turns_below_diagonal(0, 1, 3, 3, 1, TurnKind::NE), PreconditionError);
  CHECK_THROWS_AS(turns_unrestricted(0, 0, 3, 3, -1, TurnKind::NE), PreconditionError);

  for (auto kind : {TurnKind::NE, TurnKind::EN})
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= 2; ++b)
        for (long c = 0; c <= 5; ++c)
          for (long d = 0; d <= 5; ++d) {
            IPoly g = oracle_gf(simple2({a, b}, {c, d}), stat_of(kind));
            Integer sum = 0;
            for (long l = 0; l <= 5; ++l) {
              CHECK(turns_unrestricted(a, b, c, d, l, kind) == coeff_of(g, l));
              sum += turns_unrestricted(a, b, c, d, l, kind);
            }
            CHECK(sum == count_simple(a, b, c, d));
            if (a < b || c < d) continue;
            IPoly gb = oracle_gf(simple2({a, b}, {c, d}, below()), stat_of(kind));
            Integer sumb = 0;
            for (long l = 0; l <= 5; ++l) {
              Integer v = turns_below_diagonal(a, b, c, d, l, kind);
              CHECK(v == coeff_of(gb, l));
              sumb += v;
            }
            CHECK(sumb == below_diagonal(a, b, c, d));
          }
  for (long n = 0; n <= 6; ++n) {
    Integer s = 0;
    for (long l = 0; l <= n; ++l) s += turns_below_diagonal(0, 0, n, n, l, TurnKind::EN);
    CHECK(s == catalan(n));
  }
}

TEST_CASE("turns between two diagonals") {
  Restriction band = Restriction::halfspace({-1, 1}, -1).and_halfspace({1, -1}, -1);
  IPoly g = oracle_gf(simple2({0, 0}, {2, 2}, band), Statistic::NETurns);
  for (long l = 0; l <= 2; ++l) CHECK(turns_two_boundaries(0, 0, 2, 2, -1, 1, l) == coeff_of(g, l));
  CHECK_THROWS_AS(turns_two_boundaries(0, 3, 2, 2, -1, 1, 1), PreconditionError);
  // A far upper line leaves only the diagonal.
  for (long l = 0; l <= 3; ++l)
    CHECK(turns_two_boundaries(1, 0, 5, 3, -40, 0, l) == turns_below_diagonal(1, 0, 5, 3, l, TurnKind::NE));

  for (long s = -3; s <= 0; ++s)
    for (long t = s; t <= 2; ++t)
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
          for (long c = 0; c <= 5; ++c)
            for (long d = 0; d <= 5; ++d) {
              if (!(a + t >= b && b >= a + s && c + t >= d && d >= c + s)) continue;
              Restriction r = Restriction::halfspace({-1, 1}, s).and_halfspace({1, -1}, -t);
              IPoly o = oracle_gf(simple2({a, b}, {c, d}, r), Statistic::NETurns);
              for (long l = 0; l <= 4; ++l) CHECK(turns_two_boundaries(a, b, c, d, s, t, l) == coeff_of(o, l));
            }
}

TEST_CASE("turns below x = mu y") {
  CHECK(turns_slope_mu(3, 3, 1, 1, TurnKind::NE) == 3);
  CHECK(turns_slope_mu(3, 3, 1, 1, TurnKind::NE) == turns_below_diagonal(0, 0, 3, 3, 1, TurnKind::NE));
  CHECK(turns_slope_mu(6, 2, 3, 0, TurnKind::NE) == 1);
  CHECK_THROWS_AS(turns_slope_mu(3, 2, 2, 1, TurnKind::NE), PreconditionError);
  CHECK_THROWS_AS(turns_slope_mu(3, 2, 0, 1, TurnKind::NE), PreconditionError);
  for (long mu = 1; mu <= 3; ++mu)
    for (long d = 0; d <= 3; ++d)
      for (long c = mu * d; c <= mu * d + 4 && c <= 9; ++c) {
        auto q = simple2({0, 0}, {c, d}, Restriction::halfspace({1, -mu}, 0));
        IPoly ne = oracle_gf(q, Statistic::NETurns), en = oracle_gf(q, Statistic::ENTurns);
        for (long l = 0; l <= 4; ++l) {
          CHECK(turns_slope_mu(c, d, mu, l, TurnKind::NE) == coeff_of(ne, l));
          CHECK(turns_slope_mu(c, d, mu, l, TurnKind::EN) == coeff_of(en, l));
          CHECK(turns_slope_mu_en_quotient(c, d, mu, l) == turns_slope_mu(c, d, mu, l, TurnKind::EN));
        }
      }
}

TEST_CASE("run generating functions") {
  CHECK(run_gf(0, 0, 1, 1, TurnBoundary::None) == IPoly::monomial(Integer(2), 2));
  CHECK(run_gf(0, 0, 4, 0, TurnBoundary::None) == IPoly::var());
  CHECK(run_gf(2, 2, 2, 2, TurnBoundary::None) == IPoly(1));
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 5; ++c)
        for (long d = 0; d <= 5; ++d) {
          CHECK(run_gf(a, b, c, d, TurnBoundary::None) == oracle_gf(simple2({a, b}, {c, d}), Statistic::Runs));
          if (a >= b && c >= d)
            CHECK(run_gf(a, b, c, d, TurnBoundary::BelowDiagonal) ==
                  oracle_gf(simple2({a, b}, {c, d}, below()), Statistic::Runs));
        }
  // Any NE-turn source works, here the band formula.
  for (long s = -2; s <= 0; ++s)
    for (long t = s; t <= 2; ++t)
      for (long c = 0; c <= 5; ++c)
        for (long d = 0; d <= 5; ++d) {
          if (!(t >= 0 && 0 >= s && c + t >= d && d >= c + s)) continue;
          Restriction r = Restriction::halfspace({-1, 1}, s).and_halfspace({1, -1}, -t);
          CHECK(run_gf({0, 0}, {c, d}, ne_turn_gf_band(s, t)) ==
                oracle_gf(simple2({0, 0}, {c, d}, r), Statistic::Runs));
        }
}

TEST_CASE("two-rowed array reflection") {
  // Arrays (p | q) with p in [a, c-1], q in [b+1, d]; all bounds in [0, 4].
  long checked = 0;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = a; c <= 4; ++c)
        for (long d = b; d <= c; ++d) {
          const TurnArrayBounds bd{a, b, c, d};
          for (std::size_t l = 1; l <= 3; ++l) {
            long violating = 0, reflected = 0;
            std::vector<long> cp, cq;
            all_increasing(a, c - 1, l, cp, [&](const std::vector<long>& p) {
              all_increasing(b + 1, d, l, cq, [&](const std::vector<long>& q) {
                TurnArray t{p, q};
                REQUIRE(is_ne_array(t, bd));
                if (!violates_diagonal(t)) return;
                ++violating;
                TurnArray r = reflect_turn_array(t);
                CHECK(is_reflected_array(r, bd));
                CHECK(unreflect_turn_array(r) == t);
              });
            });
            all_increasing(b + 1, c - 1, l - 1, cp, [&](const std::vector<long>& p) {
              all_increasing(a, d, l + 1, cq, [&](const std::vector<long>& q) {
                TurnArray r{p, q};
                ++reflected;
                TurnArray t = unreflect_turn_array(r);
                CHECK(is_ne_array(t, bd));
                CHECK(violates_diagonal(t));
                CHECK(reflect_turn_array(t) == r);
              });
            });
            CHECK(violating == reflected);
            CHECK(Integer(reflected) == binom(c - b - 1, long(l) - 1) * binom(d - a + 1, long(l) + 1));
            checked += violating;
          }
        }
  CHECK(checked > 100);
  CHECK_THROWS_AS(reflect_turn_array({{2, 3}, {1, 2}}), PreconditionError);
}

TEST_CASE("non-intersecting families by turns") {
  // n = 1 specialises to the single-path formulas.
  for (long l = 0; l <= 3; ++l) {
    CHECK(nonint_turns({{0, 1}}, {{4, 3}}, l, TurnBoundary::None, TurnKind::NE) ==
          turns_unrestricted(0, 1, 4, 3, l, TurnKind::NE));
    CHECK(nonint_turns({{0, 1}}, {{4, 3}}, l, TurnBoundary::None, TurnKind::EN) ==
          turns_unrestricted(0, 1, 4, 3, l, TurnKind::EN));
    CHECK(nonint_turns({{1, 0}}, {{4, 3}}, l, TurnBoundary::BelowDiagonal, TurnKind::NE) ==
          turns_below_diagonal(1, 0, 4, 3, l, TurnKind::NE));
    CHECK(nonint_turns({{1, 0}}, {{4, 3}}, l, TurnBoundary::BelowDiagonal, TurnKind::EN) ==
          turns_below_diagonal(1, 0, 4, 3, l, TurnKind::EN));
  }
  // Two paths in a 3 x 3 box and two paths below the diagonal.
  {
    std::vector<Point> A{{0, 1}, {1, 0}}, E{{2, 3}, {3, 2}};
    Integer o = family_oracle(A, E, 2, {}, TurnKind::NE);
    CHECK(o > 0);
    CHECK(nonint_turns(A, E, 2, TurnBoundary::None, TurnKind::NE) == o);
    std::vector<Point> Ab{{1, 1}, {2, 0}}, Eb{{3, 3}, {4, 2}};
    Integer ob = family_oracle(Ab, Eb, 1, below(), TurnKind::NE);
    CHECK(nonint_turns(Ab, Eb, 1, TurnBoundary::BelowDiagonal, TurnKind::NE) == ob);
  }
  CHECK_THROWS_AS(nonint_turns({{1, 0}, {0, 1}}, {{2, 3}, {3, 2}}, 1, TurnBoundary::None, TurnKind::NE),
                  PreconditionError);
  CHECK_THROWS_AS(nonint_turns({{0, 1}}, {{3, 3}}, 1, TurnBoundary::BelowDiagonal, TurnKind::NE),
                  PreconditionError);

  std::mt19937 rng(20261016);
  for (auto kind : {TurnKind::NE, TurnKind::EN})
    for (auto boundary : {TurnBoundary::None, TurnBoundary::BelowDiagonal}) {
      int done = 0, tries = 0;
      while (done < 60 && tries < 200000) {
        ++tries;
        const std::size_t n = 2 + (rng() % 3 == 0);
        std::uniform_int_distribution<long> sa(0, 3), se(1, 5);
        std::vector<Point> A(n), E(n);
        for (auto& p : A) p = {sa(rng), sa(rng)};
        for (auto& p : E) p = {se(rng), se(rng)};
        if (!(kind == TurnKind::NE ? ne_order(A, E) : en_order(A, E))) continue;
        bool ok = true;
        if (boundary == TurnBoundary::BelowDiagonal)
          for (std::size_t i = 0; i < n; ++i) ok = ok && A[i][0] >= A[i][1] && E[i][0] >= E[i][1];
        if (!ok) continue;
        ++done;
        Restriction r = boundary == TurnBoundary::BelowDiagonal ? below() : Restriction{};
        for (long l = 0; l <= 4; ++l)
          CHECK(nonint_turns(A, E, l, boundary, kind) == family_oracle(A, E, l, r, kind));
      }
      CHECK(done == 60);
    }
}
