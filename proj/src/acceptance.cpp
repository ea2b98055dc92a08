#include "latpath/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "latpath/boundary_det.hpp"
#include "latpath/chambers.hpp"
#include "latpath/kernel.hpp"
#include "latpath/lgv.hpp"
#include "latpath/motzkin.hpp"
#include "latpath/orthopoly.hpp"
#include "latpath/path_core.hpp"
#include "latpath/plane_closed.hpp"
#include "latpath/qcount.hpp"
#include "latpath/turns.hpp"

namespace latpath {

namespace detail {
std::string show(const Integer& v) { return v.get_str(); }
std::string show(const Rational& v) { return v.get_str(); }
std::string show(const MPoly& v) { return v.str(); }
}  // namespace detail

void Sweep::record(const std::string& what) {
  if (r_.mismatches++ == 0) r_.first_mismatch = what;
}

void Sweep::expect_true(bool ok, const std::function<std::string()>& params) {
  ++r_.cases;
  if (!ok) record(params());
}

void Sweep::fail(const std::string& what) {
  ++r_.cases;
  record(what);
}

void Sweep::guarded(const std::function<std::string()>& params, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    fail(params() + ": threw " + e.what());
  }
}

void Sweep::merge(const SweepResult& r) {
  r_.cases += r.cases;
  if (r.mismatches && r_.mismatches == 0) r_.first_mismatch = r.first_mismatch;
  r_.mismatches += r.mismatches;
}

namespace {

using Params = std::function<std::string()>;

std::string kv(std::initializer_list<std::pair<const char*, long>> xs) {
  std::string s;
  for (const auto& [k, v] : xs) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

std::string pt(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

PathQuery simple2(Point a, Point e, Restriction r = {}) { return {a, e, StepSet::simple(2), std::move(r), {}}; }

Restriction below_diag() { return Restriction::halfspace({1, -1}, 0); }

Restriction band(long s, long t) { return Restriction::halfspace({-1, 1}, s).and_halfspace({1, -1}, -t); }

Integer nonneg_oracle(const StepSet& st, long a, long b, long c, long d) {
  return oracle_count({{a, b}, {c, d}, st, Restriction::halfspace({0, 1}, 0), {}});
}

PathQuery dyck_paths(long n) {
  return {{0, 0}, {2 * n, 0}, StepSet::dyck(), Restriction::halfspace({0, 1}, 0), {}};
}

// ---------------------------------------------------------------------------
// Sweeps by family.  `max` bounds the coordinates.

SweepResult sweep_below_diagonal(long max) {
  Sweep sw;
  for (long a = 0; a <= max; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = a; c <= max; ++c)
        for (long d = b; d <= c; ++d)
          sw.guarded([=] { return "below-diagonal " + kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}}); }, [&] {
            sw.expect(below_diagonal(a, b, c, d), oracle_count(simple2({a, b}, {c, d}, below_diag())),
                      [=] { return "below-diagonal " + kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}}); });
          });
  return sw.result();
}

SweepResult sweep_ballot(long max) {
  Sweep sw;
  for (long c = 0; c <= max; ++c)
    for (long d = 0; d <= c; ++d)
      sw.guarded([=] { return "ballot " + kv({{"c", c}, {"d", d}}); }, [&] {
        sw.expect(ballot(c, d), oracle_count(simple2({0, 0}, {c, d}, below_diag())),
                  [=] { return "ballot " + kv({{"c", c}, {"d", d}}); });
      });
  return sw.result();
}

SweepResult sweep_catalan(long max) {
  Sweep sw;
  for (long n = 0; n <= max; ++n)
    sw.guarded([=] { return "catalan " + kv({{"n", n}}); }, [&] {
      sw.expect(catalan(n), oracle_count(simple2({0, 0}, {n, n}, below_diag())),
                [=] { return "catalan " + kv({{"n", n}}); });
      sw.expect(catalan(n), oracle_count(dyck_paths(n)), [=] { return "catalan (Dyck) " + kv({{"n", n}}); });
    });
  return sw.result();
}

// Band widths t - s <= width.
SweepResult sweep_between_diagonals(long max, long width, bool trig) {
  Sweep sw;
  for (long s = -width; s <= width; ++s)
    for (long t = s; t <= s + width; ++t)
      for (long a = 0; a <= max; ++a)
        for (long b = 0; b <= max; ++b) {
          if (!(a + t >= b && b >= a + s)) continue;
          for (long c = a; c <= max; ++c)
            for (long d = b; d <= max; ++d) {
              if (!(c + t >= d && d >= c + s)) continue;
              auto params = [=] {
                return std::string(trig ? "between-diagonals-trig " : "between-diagonals ") +
                       kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"s", s}, {"t", t}});
              };
              sw.guarded(params, [&] {
                Integer o = oracle_count(simple2({a, b}, {c, d}, band(s, t)));
                sw.expect(trig ? between_diagonals_trig(a, b, c, d, s, t) : between_diagonals(a, b, c, d, s, t), o,
                          params);
              });
            }
        }
  return sw.result();
}

SweepResult sweep_rational_catalan(long max_sum) {
  Sweep sw;
  for (long r = 1; r < max_sum; ++r)
    for (long s = 1; r + s <= max_sum; ++s) {
      if (std::gcd(r, s) != 1) continue;
      auto params = [=] { return "rational-catalan " + kv({{"r", r}, {"s", s}}); };
      sw.guarded(params, [&] {
        sw.expect(rational_catalan(r, s), oracle_count(simple2({0, 0}, {r, s}, Restriction::halfspace({s, -r}, 0))),
                  params);
      });
    }
  return sw.result();
}

SweepResult sweep_slope_mu(long max, long max_mu) {
  Sweep sw;
  for (long mu = 0; mu <= max_mu; ++mu) {
    for (long d = 0; d <= max; ++d)
      for (long c = mu * d; c <= max; ++c) {
        auto params = [=] { return "slope-mu " + kv({{"c", c}, {"d", d}, {"mu", mu}}); };
        sw.guarded(params, [&] {
          sw.expect(below_slope_mu(c, d, mu),
                    oracle_count(simple2({0, 0}, {c, d}, Restriction::halfspace({1, -mu}, 0))), params);
        });
      }
    for (long b = 0; b <= max; ++b)
      for (long a = mu * b; a <= max; ++a)
        for (long d = b; d <= max; ++d)
          for (long c = std::max(a, mu * d); c <= max; ++c) {
            auto params = [=] {
              return "slope-mu-general " + kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"mu", mu}});
            };
            sw.guarded(params, [&] {
              Integer o = oracle_count(simple2({a, b}, {c, d}, Restriction::halfspace({1, -mu}, 0)));
              Integer v1 = below_slope_mu_general(a, b, c, d, mu, SlopeVariant::LastTouch);
              Integer v2 = below_slope_mu_general(a, b, c, d, mu, SlopeVariant::InclusionExclusion);
              sw.expect(v1, o, params);
              sw.expect(v2, v1, [=] { return params() + " (variants)"; });
            });
          }
  }
  return sw.result();
}

SweepResult sweep_motzkin_schroeder(long max) {
  Sweep sw;
  for (long a = 0; a <= max; ++a)
    for (long c = a; c <= max; ++c)
      for (long b = 0; b <= max; ++b)
        for (long d = 0; d <= max; ++d) {
          auto params = [=] { return kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}}); };
          sw.guarded(params, [&] {
            sw.expect(motzkin_count(a, b, c, d), nonneg_oracle(StepSet::motzkin(), a, b, c, d),
                      [=] { return "motzkin " + params(); });
            sw.expect(schroeder_count(a, b, c, d), nonneg_oracle(StepSet::schroeder(), a, b, c, d),
                      [=] { return "schroeder " + params(); });
          });
        }
  return sw.result();
}

SweepResult sweep_kreweras(long max) {
  Sweep sw;
  Restriction r = Restriction::halfspace({1, -1, 0}, 0).and_halfspace({1, 0, -1}, 0);
  sw.guarded([] { return std::string("kreweras anchor"); },
             [&] { sw.expect(kreweras(1, 1, 1), Integer(2), [] { return std::string("kreweras e=(1,1,1)"); }); });
  for (long e1 = 0; e1 <= max; ++e1)
    for (long e2 = 0; e2 <= e1; ++e2)
      for (long e3 = 0; e3 <= e1; ++e3) {
        auto params = [=] { return "kreweras " + kv({{"e1", e1}, {"e2", e2}, {"e3", e3}}); };
        sw.guarded(params, [&] {
          Integer k = kreweras(e1, e2, e3);
          sw.expect(k, oracle_count({{0, 0, 0}, {e1, e2, e3}, StepSet::simple(3), r, {}}), params);
          if (e1 == e2) sw.expect(kreweras_diagonal(e1, e3), k, [=] { return params() + " (diagonal form)"; });
        });
      }
  return sw.result();
}

SweepResult sweep_turns(long max, long max_l) {
  Sweep sw;
  for (long a = 0; a <= max; ++a)
    for (long b = 0; b <= max; ++b)
      for (long c = a; c <= max; ++c)
        for (long d = b; d <= max; ++d) {
          auto params = [=] { return kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}}); };
          sw.guarded(params, [&] {
            auto q = simple2({a, b}, {c, d});
            IPoly ne = oracle_gf(q, Statistic::NETurns), en = oracle_gf(q, Statistic::ENTurns);
            for (long l = 0; l <= max_l; ++l) {
              sw.expect(turns_unrestricted(a, b, c, d, l, TurnKind::NE), ne.coeff(std::size_t(l)),
                        [=] { return "turns-unrestricted NE " + params() + " l=" + std::to_string(l); });
              sw.expect(turns_unrestricted(a, b, c, d, l, TurnKind::EN), en.coeff(std::size_t(l)),
                        [=] { return "turns-unrestricted EN " + params() + " l=" + std::to_string(l); });
            }
            sw.expect(run_gf(a, b, c, d, TurnBoundary::None), oracle_gf(q, Statistic::Runs),
                      [=] { return "run-gf " + params(); });
            if (a >= b && c >= d) {
              auto qb = simple2({a, b}, {c, d}, below_diag());
              IPoly bne = oracle_gf(qb, Statistic::NETurns), ben = oracle_gf(qb, Statistic::ENTurns);
              for (long l = 0; l <= max_l; ++l) {
                sw.expect(turns_below_diagonal(a, b, c, d, l, TurnKind::NE), bne.coeff(std::size_t(l)),
                          [=] { return "turns-below-diagonal NE " + params() + " l=" + std::to_string(l); });
                sw.expect(turns_below_diagonal(a, b, c, d, l, TurnKind::EN), ben.coeff(std::size_t(l)),
                          [=] { return "turns-below-diagonal EN " + params() + " l=" + std::to_string(l); });
              }
              sw.expect(run_gf(a, b, c, d, TurnBoundary::BelowDiagonal), oracle_gf(qb, Statistic::Runs),
                        [=] { return "run-gf below-diagonal " + params(); });
            }
          });
        }
  // Two boundaries, band widths up to 4.
  for (long s = -4; s <= 0; ++s)
    for (long t = s; t <= s + 4; ++t)
      for (long a = 0; a <= max; ++a)
        for (long b = 0; b <= max; ++b) {
          if (!(a + t >= b && b >= a + s)) continue;
          for (long c = a; c <= max; ++c)
            for (long d = b; d <= max; ++d) {
              if (!(c + t >= d && d >= c + s)) continue;
              auto params = [=] { return kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"s", s}, {"t", t}}); };
              sw.guarded(params, [&] {
                IPoly o = oracle_gf(simple2({a, b}, {c, d}, band(s, t)), Statistic::NETurns);
                for (long l = 0; l <= max_l; ++l)
                  sw.expect(turns_two_boundaries(a, b, c, d, s, t, l), o.coeff(std::size_t(l)),
                            [=] { return "turns-two-boundaries " + params() + " l=" + std::to_string(l); });
              });
            }
        }
  for (long mu = 1; mu <= 3; ++mu)
    for (long d = 0; mu * d <= max; ++d)
      for (long c = mu * d; c <= max; ++c) {
        auto params = [=] { return kv({{"c", c}, {"d", d}, {"mu", mu}}); };
        sw.guarded(params, [&] {
          auto q = simple2({0, 0}, {c, d}, Restriction::halfspace({1, -mu}, 0));
          IPoly ne = oracle_gf(q, Statistic::NETurns), en = oracle_gf(q, Statistic::ENTurns);
          for (long l = 0; l <= max_l; ++l) {
            sw.expect(turns_slope_mu(c, d, mu, l, TurnKind::NE), ne.coeff(std::size_t(l)),
                      [=] { return "turns-slope-mu NE " + params() + " l=" + std::to_string(l); });
            sw.expect(turns_slope_mu(c, d, mu, l, TurnKind::EN), en.coeff(std::size_t(l)),
                      [=] { return "turns-slope-mu EN " + params() + " l=" + std::to_string(l); });
          }
        });
      }
  return sw.result();
}

void increasing_seqs(long lo, long hi, std::size_t len, std::vector<long>& cur,
                     const std::function<void(const std::vector<long>&)>& f) {
  if (cur.size() == len) {
    f(cur);
    return;
  }
  for (long v = cur.empty() ? lo : cur.back() + 1; v <= hi; ++v) {
    cur.push_back(v);
    increasing_seqs(lo, hi, len, cur, f);
    cur.pop_back();
  }
}

// The reflection of two-rowed arrays is a bijection between diagonal
// violating NE arrays and reflected arrays; both directions are inverse.
SweepResult sweep_turn_arrays(long max) {
  Sweep sw;
  for (long a = 0; a <= max; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = a; c <= max; ++c)
        for (long d = b; d <= c; ++d) {
          const TurnArrayBounds bd{a, b, c, d};
          for (std::size_t l = 1; l <= 3; ++l) {
            auto params = [=] { return "turn-arrays " + kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"l", long(l)}}); };
            sw.guarded(params, [&] {
              long violating = 0, reflected = 0;
              std::vector<long> cp, cq;
              increasing_seqs(a, c - 1, l, cp, [&](const std::vector<long>& p) {
                increasing_seqs(b + 1, d, l, cq, [&](const std::vector<long>& q) {
                  TurnArray t{p, q};
                  if (!violates_diagonal(t)) return;
                  ++violating;
                  TurnArray r = reflect_turn_array(t);
                  sw.expect_true(is_reflected_array(r, bd) && unreflect_turn_array(r) == t, params);
                });
              });
              increasing_seqs(b + 1, c - 1, l - 1, cp, [&](const std::vector<long>& p) {
                increasing_seqs(a, d, l + 1, cq, [&](const std::vector<long>& q) {
                  TurnArray r{p, q};
                  ++reflected;
                  TurnArray t = unreflect_turn_array(r);
                  sw.expect_true(is_ne_array(t, bd) && violates_diagonal(t) && reflect_turn_array(t) == r, params);
                });
              });
              sw.expect(Integer(violating), Integer(reflected), params);
            });
          }
        }
  return sw.result();
}

// Lattice path enumeration of nonnegative walks against the kernel method.
SweepResult sweep_kernel(long order) {
  Sweep sw;
  for (int mask = 1; mask < 32; ++mask) {
    std::vector<long> jumps;
    for (int b = 0; b < 5; ++b)
      if (mask >> b & 1) jumps.push_back(b - 2);
    if (jumps.front() >= 0) continue;
    std::string name = "jumps {";
    for (std::size_t i = 0; i < jumps.size(); ++i) name += (i ? "," : "") + std::to_string(jumps[i]);
    name += "}";
    auto params = [=] { return "nonneg-walks " + name + " order=" + std::to_string(order); };
    sw.guarded(params, [&] {
      auto s = WeightedStepSet1D::unit(jumps);
      const QSeries f = nonneg_walk_gf(s, int(order));
      sw.expect(f, nonneg_end_height_dp(s, 0, int(order)), params);
      // Independent count by path enumeration for the first terms.
      for (long n = 0; n <= std::min(order, 6L); ++n) {
        Integer o = oracle_count({{0, 0}, {n, 0}, StepSet::jumps(jumps), Restriction::halfspace({0, 1}, 0), n});
        sw.expect(f[std::size_t(n)], Rational(o),
                  [=] { return params() + " n=" + std::to_string(n) + " (oracle)"; });
      }
    });
  }
  return sw.result();
}

SweepResult sweep_lukasiewicz(long max) {
  Sweep sw;
  for (long n = 0; n <= max; ++n) {
    auto params = [=] { return "lukasiewicz " + kv({{"n", n}}); };
    sw.guarded(params, [&] {
      Integer v = lukasiewicz_count(n);
      sw.expect(v, catalan(n), params);
      Integer o =
          oracle_count({{0, 0}, {n, 0}, StepSet::lukasiewicz(std::max(n, 1L)), Restriction::halfspace({0, 1}, 0), n});
      sw.expect(v, o, [=] { return params() + " (oracle)"; });
    });
  }
  return sw.result();
}

SweepResult sweep_simple(long max) {
  Sweep sw;
  for (long c = 0; c <= max; ++c)
    for (long d = 0; d <= max; ++d) {
      auto params = [=] { return kv({{"c", c}, {"d", d}}); };
      sw.guarded(params, [&] {
        auto q = simple2({0, 0}, {c, d});
        sw.expect(count_simple(0, 0, c, d), oracle_count(q), [=] { return "simple " + params(); });
        sw.expect(area_gf(0, 0, c, d), oracle_gf(q, Statistic::Area), [=] { return "area " + params(); });
        sw.expect(delannoy(0, 0, c, d), oracle_count({{0, 0}, {c, d}, StepSet::delannoy(), {}, {}}),
                  [=] { return "delannoy " + params(); });
      });
    }
  return sw.result();
}

SweepResult sweep_q_catalan(long max) {
  Sweep sw;
  for (long n = 0; n <= max; ++n) {
    auto params = [=] { return "q-catalan " + kv({{"n", n}}); };
    sw.guarded(params, [&] {
      sw.expect(q_catalan_cr(n), oracle_gf(dyck_paths(n), Statistic::DyckArea), params);
      sw.expect(q_catalan_maj(n), oracle_gf(dyck_paths(n), Statistic::Maj), [=] { return params() + " (maj)"; });
    });
  }
  return sw.result();
}

// ---------------------------------------------------------------------------
// Helpers for the criteria.

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
  for (long v : p)
    if ((v - p[0]) % 2 != 0) return false;
  return true;
}

Integer chamber_oracle(const ChamberSpec& spec, const Point& A, const Point& E, long m) {
  std::optional<long> len;
  if (spec.steps != StepFamily::Unit) {
    len = m;
  } else {
    long total = 0;
    for (std::size_t i = 0; i < A.size(); ++i) total += E[i] - A[i];
    if (total != m) return 0;
  }
  return oracle_count({A, E, spec.step_set(), spec.restriction(), len});
}

void partitions_upto(long cells, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> lam;
  std::function<void(long, long)> go = [&](long left, long maxpart) {
    f(lam);
    for (long p = std::min(left, maxpart); p >= 1; --p) {
      lam.push_back(p);
      go(left - p, p);
      lam.pop_back();
    }
  };
  go(cells, cells);
}

// ---------------------------------------------------------------------------
// Criteria.

SweepResult criterion_reflection() {
  Sweep sw;
  sw.merge(sweep_below_diagonal(6));
  sw.merge(sweep_ballot(6));
  sw.merge(sweep_catalan(6));
  sw.merge(sweep_between_diagonals(6, 5, false));
  return sw.result();
}

SweepResult criterion_trig() {
  Sweep sw;
  sw.merge(sweep_between_diagonals(6, 5, true));
  for (int k = 0; k <= 5; ++k)
    for (int r = 0; r <= k; ++r)
      for (int s = 0; s <= k; ++s)
        for (int n = 0; n <= 12; ++n) {
          auto params = [=] { return "strip-trig " + kv({{"r", r}, {"s", s}, {"k", k}, {"n", n}}); };
          sw.guarded(params, [&] {
            sw.expect(strip_count_trig(r, s, k, n),
                      strip_count_transfer(r, s, k, n, MotzkinWeighting<Integer>::constant(1, 1, k)), params);
          });
        }
  for (std::size_t d = 1; d <= 3; ++d)
    for (long N = long(d) + 1; N <= 6; ++N) {
      const auto pts = decreasing_points(d, 1, N - 1);
      ChamberSpec pm{ChamberGroup::AffineC, d, StepFamily::UnitPm, N};
      ChamberSpec diag{ChamberGroup::AffineC, d, StepFamily::DiagPm, N};
      const long max_m = 8;
      for (const auto& A : pts)
        for (const auto& E : pts)
          for (long m = 0; m <= max_m; ++m) {
            auto params = [=] { return "affineC A=" + pt(A) + " E=" + pt(E) + " " + kv({{"N", N}, {"m", m}}); };
            sw.guarded(params, [&] {
              sw.expect(affineC_pm(A, E, N, m), chamber_oracle(pm, A, E, m), [=] { return params() + " (+-e_i)"; });
              if (uniform_parity(A) && uniform_parity(E))
                sw.expect(affineC_lockstep(A, E, N, m), chamber_oracle(diag, A, E, m),
                          [=] { return params() + " (diagonal)"; });
            });
          }
    }
  return sw.result();
}

SweepResult criterion_cycle_lemma() {
  Sweep sw;
  sw.merge(sweep_rational_catalan(10));
  sw.merge(sweep_slope_mu(8, 3));
  return sw.result();
}

SweepResult criterion_determinants() {
  Sweep sw;
  for (long n = 1; n <= 4; ++n) {
    std::vector<std::vector<long>> seqs;
    std::vector<long> cur;
    monotone_seqs(n, 0, 4, cur, seqs);
    for (const auto& a : seqs)
      for (const auto& b : seqs) {
        bool ok = true;
        for (long i = 0; i < n; ++i) ok = ok && a[std::size_t(i)] >= b[std::size_t(i)];
        if (!ok) continue;
        LadderBounds L{a, b};
        auto params = [=] { return "ladder a=" + detail::show(std::vector<Integer>(a.begin(), a.end())) +
                                   " b=" + detail::show(std::vector<Integer>(b.begin(), b.end())); };
        sw.guarded(params, [&] {
          Restriction r;
          r.ladder = L;
          sw.expect(ladder_count(L), oracle_count({{0, L.b.front()}, {n, L.a.back()}, StepSet::simple(2), r, {}}),
                    params);
        });
      }
  }
  std::vector<Point> box;
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y) box.push_back({x, y});
  std::vector<std::vector<Point>> sets{{}};
  for (std::size_t i = 0; i < box.size(); ++i) {
    sets.push_back({box[i]});
    for (std::size_t j = i + 1; j < box.size(); ++j) sets.push_back({box[i], box[j]});
  }
  for (const auto& C : sets) {
    auto params = [=] {
      std::string s = "avoid-points C={";
      for (const auto& p : C) s += pt(p);
      return s + "}";
    };
    sw.guarded(params, [&] {
      Restriction r;
      for (const auto& p : C) r.forbidden.insert(p);
      sw.expect(avoid_points_count({0, 0}, {4, 4}, C), oracle_count({{0, 0}, {4, 4}, StepSet::simple(2), r, {}}),
                params);
    });
  }
  for (long n1 = 0; n1 <= 2; ++n1)
    for (long n2 = 0; n2 <= 2; ++n2) {
      BoxBoundary shape{{n1, n2}, {}, {}};
      auto fs = monotone_box_functions(shape, 2);
      for (const auto& a : fs)
        for (const auto& b : fs) {
          bool ok = true;
          for (std::size_t i = 0; i < a.size(); ++i) ok = ok && a[i] >= b[i];
          if (!ok) continue;
          BoxBoundary B{{n1, n2}, a, b};
          auto params = [=] {
            return "box-boundary n=(" + std::to_string(n1) + "," + std::to_string(n2) +
                   ") a=" + detail::show(std::vector<Integer>(a.begin(), a.end())) +
                   " b=" + detail::show(std::vector<Integer>(b.begin(), b.end()));
          };
          sw.guarded(params, [&] {
            Restriction r;
            r.region = [&B](const Point& p) { return B.contains(p); };
            sw.expect(box_boundary_count(B),
                      oracle_count({{0, 0, B.b.front()}, {n1, n2, B.a.back()}, StepSet::simple(3), r, {}}), params);
          });
        }
    }
  return sw.result();
}

SweepResult criterion_motzkin() {
  Sweep sw;
  sw.merge(sweep_motzkin_schroeder(6));
  const int N = 10;
  sw.guarded([] { return std::string("motzkin/schroeder series"); }, [&] {
    auto mg = motzkin_gf(N);
    auto sg = schroeder_gf(N);
    auto z = IPoly::var();
    auto mcf = cf_series<Integer>(MotzkinWeighting<IPoly>::constant(z, z * z, N), std::nullopt, N);
    auto scf = cf_series<Integer>(MotzkinWeighting<IPoly>::constant(z * z, z * z, 2 * N), std::nullopt, 2 * N);
    const std::vector<long> m_expected{1, 1, 2, 4, 9, 21, 51};
    const std::vector<long> s_expected{1, 2, 6, 22, 90};
    for (int n = 0; n <= N; ++n) {
      auto params = [=] { return "series " + kv({{"n", n}}); };
      Integer m = motzkin_number(n), s = schroeder_number(n);
      if (n < int(m_expected.size())) sw.expect(m, Integer(m_expected[std::size_t(n)]), [=] { return params() + " M_n"; });
      if (n < int(s_expected.size())) sw.expect(s, Integer(s_expected[std::size_t(n)]), [=] { return params() + " S_n"; });
      sw.expect(mg[std::size_t(n)], m, [=] { return params() + " Motzkin functional equation"; });
      sw.expect(mcf[std::size_t(n)], m, [=] { return params() + " Motzkin continued fraction"; });
      sw.expect(nonneg_oracle(StepSet::motzkin(), 0, 0, n, 0), m, [=] { return params() + " Motzkin oracle"; });
      sw.expect(sg[std::size_t(n)], s, [=] { return params() + " Schroeder functional equation"; });
      sw.expect(scf[std::size_t(2 * n)], s, [=] { return params() + " Schroeder continued fraction"; });
      sw.expect(nonneg_oracle(StepSet::schroeder(), 0, 0, 2 * n, 0), s, [=] { return params() + " Schroeder oracle"; });
    }
  });
  return sw.result();
}

SweepResult criterion_orthopoly(unsigned seed) {
  Sweep sw;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> e(1, 3);
  for (int it = 0; it < 25; ++it) {
    const int k = 6;
    ThreeTermSpec<Rational> s;
    for (int h = 0; h <= k; ++h) s.b.push_back(e(rng));
    for (int h = 1; h <= k; ++h) s.lambda.push_back(e(rng));
    auto params = [=] {
      return "spec b=" + detail::show(s.b) + " lambda=" + detail::show(s.lambda) + " seed=" + std::to_string(seed);
    };
    sw.guarded(params, [&] {
      auto mu = moments(s, 2 * k + 2);
      auto r = recover_recurrence(mu, k);
      sw.expect(r.b, s.b, [=] { return params() + " (b recovered)"; });
      sw.expect(r.lambda, s.lambda, [=] { return params() + " (lambda recovered)"; });
      for (int n = 0; n <= k; ++n) {
        Rational expected = 1;
        for (int i = 1; i <= n; ++i)
          for (int j = 0; j <= n - i; ++j) expected *= s.lambda_at(i);
        sw.expect(hankel_det(mu, n), expected, [=] { return params() + " Hankel n=" + std::to_string(n); });
      }
    });
  }
  // Symbolic weights: b_h = x_{2h}, lambda_h = x_{2h-1}.
  sw.guarded([] { return std::string("symbolic Hankel"); }, [&] {
    ThreeTermSpec<MPoly> sym;
    for (int h = 0; h <= 5; ++h) sym.b.push_back(MPoly::var(std::size_t(2 * h)));
    for (int h = 1; h <= 5; ++h) sym.lambda.push_back(MPoly::var(std::size_t(2 * h - 1)));
    auto mu = moments(sym, 11);
    for (int n = 0; n <= 5; ++n) {
      MPoly expected(1);
      for (int i = 1; i <= n; ++i) expected *= MPoly::var(std::size_t(2 * i - 1), unsigned(n + 1 - i));
      sw.expect(hankel_det(mu, n), expected, [=] { return "symbolic Hankel n=" + std::to_string(n); });
    }
  });
  return sw.result();
}

SweepResult criterion_strip() {
  Sweep sw;
  for (int k = 0; k <= 4; ++k) {
    MotzkinWeighting<MPoly> w;
    for (int h = 0; h <= k; ++h) w.b.push_back(MPoly::var(std::size_t(2 * h)));
    for (int h = 1; h <= k; ++h) w.lambda.push_back(MPoly::var(std::size_t(2 * h - 1)));
    for (int r = 0; r <= k; ++r)
      for (int s = 0; s <= k; ++s) {
        auto params = [=] { return "strip " + kv({{"r", r}, {"s", s}, {"k", k}}); };
        sw.guarded(params, [&] {
          const int N = 10;
          auto g = strip_gf(r, s, k, w, N);
          for (int n = 0; n <= N; ++n)
            sw.expect(g[std::size_t(n)], strip_count_transfer(r, s, k, n, w),
                      [=] { return params() + " n=" + std::to_string(n); });
        });
      }
  }
  return sw.result();
}

SweepResult criterion_lgv(unsigned seed) {
  Sweep sw;
  auto g = unit_grid<Integer>(4, 4);
  std::vector<std::size_t> all;
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y) all.push_back(grid_vertex(4, x, y));
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t count) {
    auto v = all;
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(count);
    return v;
  };
  auto ids = [](const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  for (int it = 0; it < 150; ++it) {
    auto pts = pick(10);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::size_t> a(pts.begin(), pts.begin() + long(n));
      std::vector<std::size_t> e(pts.begin() + 3, pts.begin() + 3 + long(n));
      std::vector<std::size_t> eh(pts.begin() + 6, pts.end());
      auto params = [=] { return "grid 5x5 A=" + ids(a) + " E=" + ids(e) + " Ehat=" + ids(eh); };
      sw.guarded(params, [&] {
        sw.expect(lgv_det(g, a, e), lgv_signed_enumeration(g, a, e), [=] { return "lgv_det " + params(); });
        sw.expect(pf_free_endpoints(g, a, eh), free_end_signed_enumeration(g, a, eh),
                  [=] { return "pf_free_endpoints " + params(); });
        for (std::size_t m = n % 2; m <= n; m += 2) {
          std::vector<std::size_t> em(e.begin(), e.begin() + long(m));
          sw.expect(pf_mixed(g, a, em, eh), mixed_signed_enumeration(g, a, em, eh),
                    [=] { return "pf_mixed m=" + std::to_string(m) + " " + params(); });
        }
        if (n % 2) {
          sw.expect(pf_both_free(g, a, eh, BothFreeCase::OddAll), both_free_enumeration(g, a, eh, BothFreeCase::OddAll),
                    [=] { return "pf_both_free odd " + params(); });
        } else {
          sw.expect(pf_both_free(g, a, eh, BothFreeCase::EvenPairs),
                    both_free_enumeration(g, a, eh, BothFreeCase::EvenPairs),
                    [=] { return "pf_both_free pairs " + params(); });
          sw.expect(pf_both_free(g, a, eh, BothFreeCase::EvenAll),
                    both_free_enumeration(g, a, eh, BothFreeCase::EvenAll),
                    [=] { return "pf_both_free all " + params(); });
        }
      });
    }
  }
  std::uniform_int_distribution<int> d(-3, 3);
  auto rand_matrix = [&](std::size_t r, std::size_t c) {
    auto m = zero_matrix<Rational>(r, c);
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    return m;
  };
  for (auto [n, m, p] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {2, 0, 2}, {2, 0, 3}, {3, 1, 4}, {4, 2, 4}, {3, 3, 2}, {4, 0, 5}}) {
    for (int it = 0; it < 50; ++it) {
      auto M = rand_matrix(n, p);
      auto H = rand_matrix(n, m);
      auto A = zero_matrix<Rational>(p, p);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
          A[i][j] = d(rng);
          A[j][i] = -A[i][j];
        }
      auto params = [=] {
        return "minor summation " + kv({{"n", long(n)}, {"m", long(m)}, {"p", long(p)}, {"instance", it}}) +
               " seed=" + std::to_string(seed);
      };
      sw.guarded(params, [&] { sw.expect_true(minor_summation_check(M, H, A), params); });
    }
  }
  partitions_upto(6, [&](const std::vector<long>& lam) {
    if (lam.empty()) return;
    for (long a = 1; a <= 4; ++a) {
      if (long(lam.size()) > a) continue;
      auto params = [=] {
        return "hook-content lambda=" + detail::show(std::vector<Integer>(lam.begin(), lam.end())) +
               " a=" + std::to_string(a);
      };
      sw.guarded(params, [&] {
        Shape sh{lam, std::vector<long>(lam.size(), 0), std::vector<long>(lam.size(), a),
                 std::vector<long>(lam.size(), 1)};
        Integer hc = hook_content(lam, a);
        sw.expect(hc, ssyt_count(sh), params);
        sw.expect(hc, Integer(long(ssyt_enumerate(sh).size())), [=] { return params() + " (enumeration)"; });
      });
    }
  });
  return sw.result();
}

SweepResult criterion_turns() {
  Sweep sw;
  sw.merge(sweep_turns(5, 4));
  sw.merge(sweep_turn_arrays(4));
  return sw.result();
}

SweepResult criterion_chambers() {
  Sweep sw;
  sw.guarded([] { return std::string("chamber anchors"); }, [&] {
    sw.expect(lock_step_det({2, 0}, {2, 0}, 2), Integer(3), [] { return std::string("lock-step a=(2,0) e=(2,0) m=2"); });
    sw.expect(affineA_count({1, 0}, {2, 1}, 3), Integer(1), [] { return std::string("affine-A d=2 N=3 (1,0)->(2,1)"); });
  });
  // Finite groups.
  for (auto group : {ChamberGroup::A, ChamberGroup::C})
    for (auto steps : {StepFamily::Unit, StepFamily::UnitPm, StepFamily::DiagPm})
      for (std::size_t d = 1; d <= 3; ++d) {
        if (group == ChamberGroup::C && steps == StepFamily::Unit) continue;
        ChamberSpec spec{group, d, steps, 0};
        const long lo = group == ChamberGroup::C ? 1 : 0;
        const long max_m = 8;
        for (const auto& A : decreasing_points(d, lo, 5))
          for (const auto& E : decreasing_points(d, lo, 5)) {
            if (steps == StepFamily::DiagPm && (!uniform_parity(A) || !uniform_parity(E))) continue;
            if (steps == StepFamily::Unit) {
              auto params = [=] { return "typeA_det A=" + pt(A) + " E=" + pt(E); };
              long m = 0;
              for (std::size_t i = 0; i < d; ++i) m += E[i] - A[i];
              if (m < 0) continue;
              sw.guarded(params, [&] {
                Integer o = chamber_oracle(spec, A, E, m);
                sw.expect(signed_reflection_sum(spec, A, E, m), o, [=] { return params() + " (signed sum)"; });
                Point sa(A), se(E);
                for (std::size_t i = 0; i < d; ++i) {
                  sa[i] -= long(d - 1 - i);
                  se[i] -= long(d - 1 - i);
                }
                sw.expect(typeA_det(sa, se), o, params);
              });
              continue;
            }
            for (long m = 0; m <= max_m; ++m) {
              auto params = [=] {
                return std::string(group == ChamberGroup::A ? "A" : "C") + " chamber d=" + std::to_string(d) +
                       " A=" + pt(A) + " E=" + pt(E) + " m=" + std::to_string(m);
              };
              sw.guarded(params, [&] {
                Integer o = chamber_oracle(spec, A, E, m);
                sw.expect(signed_reflection_sum(spec, A, E, m), o, params);
                if (steps == StepFamily::DiagPm)
                  sw.expect(group == ChamberGroup::A ? lock_step_det(A, E, m) : typeC_det(A, E, m), o,
                            [=] { return params() + " (determinant)"; });
              });
            }
          }
      }
  partitions_upto(8, [&](const std::vector<long>& lam) {
    if (lam.empty()) return;
    auto params = [=] { return "hook formula lambda=" + detail::show(std::vector<Integer>(lam.begin(), lam.end())); };
    sw.guarded(params, [&] {
      Integer h = hook_formula(lam);
      sw.expect(h, typeA_det(Point(lam.size(), 0), lam), params);
      if (lam.size() <= 3 && (lam.empty() || lam[0] <= 4)) {
        Restriction weak;
        for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
          Point hs(lam.size(), 0);
          hs[i] = 1;
          hs[i + 1] = -1;
          weak.and_halfspace(hs, 0);
        }
        sw.expect(h, oracle_count({Point(lam.size(), 0), lam, StepSet::simple(lam.size()), weak, {}}),
                    [=] { return params() + " (oracle)"; });
      }
    });
  });
  // Affine A.
  for (std::size_t d = 2; d <= 3; ++d)
    for (long N = 2; N <= 5; ++N) {
      std::vector<Point> pts;
      for (const auto& p : decreasing_points(d, 0, 5))
        if (p.back() > p.front() - N) pts.push_back(p);
      ChamberSpec unit{ChamberGroup::AffineA, d, StepFamily::Unit, N};
      ChamberSpec pm{ChamberGroup::AffineA, d, StepFamily::UnitPm, N};
      ChamberSpec diag{ChamberGroup::AffineA, d, StepFamily::DiagPm, N};
      const long max_m = 8;
      for (const auto& A : pts)
        for (const auto& E : pts) {
          auto base = [=] { return "affine-A d=" + std::to_string(d) + " N=" + std::to_string(N) + " A=" + pt(A) +
                                   " E=" + pt(E); };
          long total = 0;
          for (std::size_t i = 0; i < d; ++i) total += E[i] - A[i];
          if (total >= 0 && total <= 8)
            sw.guarded(base, [&] { sw.expect(affineA_count(A, E, N), chamber_oracle(unit, A, E, total), base); });
          for (long m = 0; m <= max_m; ++m) {
            auto params = [=] { return base() + " m=" + std::to_string(m); };
            sw.guarded(params, [&] {
              sw.expect(affineA_pm_egf(A, E, N, m), chamber_oracle(pm, A, E, m), [=] { return params() + " (+-e_i)"; });
              if (uniform_parity(A) && uniform_parity(E))
                sw.expect(affineA_lockstep(A, E, N, m), chamber_oracle(diag, A, E, m),
                          [=] { return params() + " (diagonal)"; });
            });
          }
        }
    }
  // Affine C (the rounding side of these is also part of the trigonometric criterion).
  for (std::size_t d = 1; d <= 3; ++d)
    for (long N = long(d) + 1; N <= 6; ++N) {
      ChamberSpec pm{ChamberGroup::AffineC, d, StepFamily::UnitPm, N};
      ChamberSpec diag{ChamberGroup::AffineC, d, StepFamily::DiagPm, N};
      const long max_m = 8;
      const auto pts = decreasing_points(d, 1, std::min(N - 1, 5L));
      for (const auto& A : pts)
        for (const auto& E : pts)
          for (long m = 0; m <= max_m; ++m) {
            auto params = [=] { return "affine-C A=" + pt(A) + " E=" + pt(E) + " " + kv({{"N", N}, {"m", m}}); };
            sw.guarded(params, [&] {
              sw.expect(affineC_pm(A, E, N, m), chamber_oracle(pm, A, E, m), [=] { return params() + " (+-e_i)"; });
              if (uniform_parity(A) && uniform_parity(E))
                sw.expect(affineC_lockstep(A, E, N, m), chamber_oracle(diag, A, E, m),
                          [=] { return params() + " (diagonal)"; });
            });
          }
    }
  return sw.result();
}

SweepResult criterion_kernel() {
  Sweep sw;
  sw.merge(sweep_kernel(12));
  for (int mask = 1; mask < 32; ++mask) {
    std::vector<long> jumps;
    for (int b = 0; b < 5; ++b)
      if (mask >> b & 1) jumps.push_back(b - 2);
    if (jumps.front() != -1) continue;
    auto params = [=] {
      std::string s = "small-branch residual jumps {";
      for (std::size_t i = 0; i < jumps.size(); ++i) s += (i ? "," : "") + std::to_string(jumps[i]);
      return s + "}";
    };
    sw.guarded(params, [&] {
      auto s = WeightedStepSet1D::unit(jumps);
      const int N = 12;
      auto u = small_branch(s, N);
      QSeries res = u;
      for (const auto& st : s.steps) {
        QSeries pw = QSeries::constant(Rational(1), N);
        for (long e = 0; e < st.b + 1; ++e) pw = pw * u;
        res = res - (st.w * pw).shifted(1);
      }
      sw.expect(res, QSeries(N), params);
    });
  }
  sw.merge(sweep_lukasiewicz(8));
  return sw.result();
}

SweepResult criterion_q() {
  Sweep sw;
  for (long n = 0; n <= 8; ++n) {
    auto params = [=] { return "q_catalan_cr " + kv({{"n", n}}); };
    sw.guarded(params, [&] { sw.expect(q_catalan_cr(n), oracle_gf(dyck_paths(n), Statistic::DyckArea), params); });
  }
  for (long n = 0; n <= 12; ++n) {
    auto params = [=] { return "q_catalan_maj " + kv({{"n", n}}); };
    sw.guarded(params, [&] {
      IPoly c = q_catalan_maj(n);
      sw.expect(c * (IPoly(1) - IPoly::monomial(Integer(1), std::size_t(n + 1))),
                IPoly(std::vector<Integer>{1, -1}) * qbinom(2 * n, n), params);
      if (n <= 6) sw.expect(c, oracle_gf(dyck_paths(n), Statistic::Maj), [=] { return params() + " (oracle maj)"; });
    });
  }
  sw.guarded([] { return std::string("Rogers-Ramanujan N=30"); }, [&] {
    auto r = rr_truncation_check(30);
    sw.expect_true(r.first, [] { return std::string("Rogers-Ramanujan first identity to q^30"); });
    sw.expect_true(r.second, [] { return std::string("Rogers-Ramanujan second identity to q^30"); });
  });
  sw.guarded([] { return std::string("Ramanujan continued fraction N=20"); },
             [&] { sw.expect_true(ramanujan_cf_check(20), [] { return std::string("Ramanujan CF to q^20"); }); });
  return sw.result();
}

SweepResult criterion_kreweras() { return sweep_kreweras(4); }

struct CriterionDef {
  CriterionInfo info;
  std::function<SweepResult(unsigned)> run;
};

const std::vector<CriterionDef>& criteria() {
  static const std::vector<CriterionDef> defs = {
      {{1, "reflection and ballot formulas match the oracle"}, [](unsigned) { return criterion_reflection(); }},
      {{2, "trigonometric forms round to exact counts"}, [](unsigned) { return criterion_trig(); }},
      {{3, "cycle lemma formulas match the oracle"}, [](unsigned) { return criterion_cycle_lemma(); }},
      {{4, "ladder, avoiding-points and box determinants match the oracle"},
       [](unsigned) { return criterion_determinants(); }},
      {{5, "Motzkin and Schroeder counts agree four ways"}, [](unsigned) { return criterion_motzkin(); }},
      {{6, "orthogonal polynomial round trip and Hankel products"},
       [](unsigned s) { return criterion_orthopoly(s); }},
      {{7, "strip formula with symbolic weights"}, [](unsigned) { return criterion_strip(); }},
      {{8, "LGV, Pfaffian, minor summation and tableaux counts"}, [](unsigned s) { return criterion_lgv(s); }},
      {{9, "turn counts, array reflection and run generating functions"},
       [](unsigned) { return criterion_turns(); }},
      {{10, "Weyl chamber and alcove counts match the oracle"}, [](unsigned) { return criterion_chambers(); }},
      {{11, "kernel method for directed walks"}, [](unsigned) { return criterion_kernel(); }},
      {{12, "q-Catalan numbers and Rogers-Ramanujan checks"}, [](unsigned) { return criterion_q(); }},
      {{13, "Kreweras walks"}, [](unsigned) { return criterion_kreweras(); }},
  };
  return defs;
}

struct FamilyDef {
  std::string name;
  std::function<SweepResult(long, unsigned)> run;
};

const std::vector<FamilyDef>& families() {
  static const std::vector<FamilyDef> defs = {
      {"simple", [](long m, unsigned) { return sweep_simple(m); }},
      {"below-diagonal", [](long m, unsigned) { return sweep_below_diagonal(m); }},
      {"ballot", [](long m, unsigned) { return sweep_ballot(m); }},
      {"catalan", [](long m, unsigned) { return sweep_catalan(m); }},
      {"between-diagonals", [](long m, unsigned) { return sweep_between_diagonals(m, 5, false); }},
      {"between-diagonals-trig", [](long m, unsigned) { return sweep_between_diagonals(m, 5, true); }},
      {"rational-catalan", [](long m, unsigned) { return sweep_rational_catalan(m); }},
      {"slope-mu", [](long m, unsigned) { return sweep_slope_mu(m, 3); }},
      {"motzkin", [](long m, unsigned) { return sweep_motzkin_schroeder(m); }},
      {"turns", [](long m, unsigned) { return sweep_turns(m, 4); }},
      {"turn-arrays", [](long m, unsigned) { return sweep_turn_arrays(m); }},
      {"kreweras", [](long m, unsigned) { return sweep_kreweras(m); }},
      {"nonneg-walks", [](long m, unsigned) { return sweep_kernel(m); }},
      {"lukasiewicz", [](long m, unsigned) { return sweep_lukasiewicz(m); }},
      {"q-catalan", [](long m, unsigned) { return sweep_q_catalan(m); }},
  };
  return defs;
}

}  // namespace

std::vector<CriterionInfo> acceptance_criteria() {
  std::vector<CriterionInfo> out;
  for (const auto& d : criteria()) out.push_back(d.info);
  return out;
}

CriterionResult run_criterion(int id, unsigned seed) {
  for (const auto& d : criteria()) {
    if (d.info.id != id) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r{d.info, {}, 0};
    try {
      r.sweep = d.run(seed);
    } catch (const std::exception& e) {
      r.sweep.cases += 1;
      r.sweep.mismatches += 1;
      r.sweep.first_mismatch = std::string("threw ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  fail_pre("no acceptance criterion with id " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(unsigned seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& d : criteria()) {
    out.push_back(run_criterion(d.info.id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
  std::string s = std::string(r.sweep.ok() ? "PASS" : "FAIL") + "  " + std::to_string(r.info.id) + "  " +
                  r.info.title + ": " + std::to_string(r.sweep.cases) + " cases, " +
                  std::to_string(r.sweep.mismatches) + " mismatches (" + buf + " s)";
  if (!r.sweep.ok() && !r.sweep.first_mismatch.empty()) s += "\n      first mismatch: " + r.sweep.first_mismatch;
  return s;
}

std::vector<std::string> verify_families() {
  std::vector<std::string> out;
  for (const auto& f : families()) out.push_back(f.name);
  return out;
}

SweepResult run_verify(const std::string& family, long max, unsigned seed) {
  if (max < 0) fail_pre("verify: --max must be >= 0");
  for (const auto& f : families())
    if (f.name == family) return f.run(max, seed);
  std::string known;
  for (const auto& f : families()) known += (known.empty() ? "" : ", ") + f.name;
  fail_pre("verify: unknown family '" + family + "' (known: " + known + ")");
}

}  // namespace latpath
