#include "latpath/turns.hpp"

#include <algorithm>

namespace latpath {

namespace {

bool reachable(long a, long b, long c, long d) { return c >= a && d >= b; }

void check_kind_l(long l) {
  if (l < 0) fail_pre("turn count l must be nonnegative");
}

IPoly poly_from_counts(long max_l, const std::function<Integer(long)>& count) {
  std::vector<Integer> co;
  for (long l = 0; l <= max_l; ++l) co.push_back(count(l));
  return IPoly(co);
}

}  // namespace

Integer turns_unrestricted(long a, long b, long c, long d, long l, TurnKind) {
  check_kind_l(l);
  if (!reachable(a, b, c, d)) return 0;
  return binom(c - a, l) * binom(d - b, l);
}

Integer turns_below_diagonal(long a, long b, long c, long d, long l, TurnKind kind) {
  check_kind_l(l);
  if (a < b || c < d) fail_pre("turns_below_diagonal: need a >= b and c >= d");
  if (!reachable(a, b, c, d)) return 0;
  const Integer all = binom(c - a, l) * binom(d - b, l);
  if (kind == TurnKind::NE) return all - binom(c - b - 1, l - 1) * binom(d - a + 1, l + 1);
  return all - binom(c - b + 1, l) * binom(d - a - 1, l);
}

Integer turns_two_boundaries(long a, long b, long c, long d, long s, long t, long l) {
  check_kind_l(l);
  if (s > t) fail_pre("turns_two_boundaries: need s <= t");
  if (!(a + t >= b && b >= a + s && c + t >= d && d >= c + s))
    fail_pre("turns_two_boundaries: endpoints must lie in the band x + t >= y >= x + s");
  if (!reachable(a, b, c, d)) return 0;
  const long w = t - s;
  Integer total = 0;
  for (long k = -l; k <= l; ++k) {
    total += binom(c - a - k * w, l + k) * binom(d - b + k * w, l - k);
    total -= binom(c - b - k * w + s - 1, l + k) * binom(d - a + k * w - s + 1, l - k);
  }
  return total;
}

Integer turns_slope_mu(long c, long d, long mu, long l, TurnKind kind) {
  check_kind_l(l);
  if (mu < 1) fail_pre("turns_slope_mu: need mu >= 1");
  if (d < 0 || c < mu * d) fail_pre("turns_slope_mu: need d >= 0 and c >= mu d");
  if (kind == TurnKind::NE) return binom(c, l) * binom(d, l) - mu * binom(c - 1, l - 1) * binom(d + 1, l + 1);
  // The horizontal path has no turn; the formula reads binom(-1, -1) there.
  if (d == 0) return l == 0 ? 1 : 0;
  return binom(c + 1, l) * binom(d - 1, l - 1) - mu * binom(c, l - 1) * binom(d, l);
}

Integer turns_slope_mu_en_quotient(long c, long d, long mu, long l) {
  check_kind_l(l);
  if (mu < 1) fail_pre("turns_slope_mu: need mu >= 1");
  if (d < 0 || c < mu * d) fail_pre("turns_slope_mu: need d >= 0 and c >= mu d");
  if (d == 0) return l == 0 ? 1 : 0;
  Integer num = Integer(c - mu * d + 1) * binom(c + 1, l) * binom(d - 1, l - 1);
  Integer q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(c + 1));
  if (r != 0) throw NumericGuardError("turns_slope_mu_en_quotient: quotient is not integral");
  return q;
}

// ---------------------------------------------------------------------------

TurnGf ne_turn_gf_unrestricted() {
  return [](const Point& A, const Point& E) {
    const long a = A.at(0), b = A.at(1), c = E.at(0), d = E.at(1);
    if (!reachable(a, b, c, d)) return IPoly();
    return poly_from_counts(std::min(c - a, d - b),
                            [&](long l) { return turns_unrestricted(a, b, c, d, l, TurnKind::NE); });
  };
}

TurnGf ne_turn_gf_below_diagonal() {
  return [](const Point& A, const Point& E) {
    const long a = A.at(0), b = A.at(1), c = E.at(0), d = E.at(1);
    if (a < b || c < d || !reachable(a, b, c, d)) return IPoly();
    return poly_from_counts(std::min(c - a, d - b),
                            [&](long l) { return turns_below_diagonal(a, b, c, d, l, TurnKind::NE); });
  };
}

TurnGf ne_turn_gf_band(long s, long t) {
  if (s > t) fail_pre("ne_turn_gf_band: need s <= t");
  return [s, t](const Point& A, const Point& E) {
    const long a = A.at(0), b = A.at(1), c = E.at(0), d = E.at(1);
    auto inside = [&](long x, long y) { return x + t >= y && y >= x + s; };
    if (!inside(a, b) || !inside(c, d) || !reachable(a, b, c, d)) return IPoly();
    return poly_from_counts(std::min(c - a, d - b),
                            [&](long l) { return turns_two_boundaries(a, b, c, d, s, t, l); });
  };
}

IPoly run_gf(const Point& A, const Point& E, const TurnGf& ne_gf) {
  if (A.size() != 2 || E.size() != 2) fail_pre("run_gf: points must be 2-dimensional");
  const Point e1{1, 0}, e2{0, 1};
  const IPoly f = ne_gf(A, E);
  const IPoly f_h = ne_gf(A + e1, E);        // first step east
  const IPoly f_v = ne_gf(A, E - e2);        // last step north
  const IPoly f_hv = ne_gf(A + e1, E - e2);  // both
  const IPoly hh = f_h - f_hv;
  const IPoly vh = f + f_hv - f_h - f_v;
  const IPoly vv = f_v - f_hv;
  auto squared = [](const IPoly& p) {
    std::vector<Integer> co(std::size_t(2 * std::max(p.degree(), 0) + 1), Integer(0));
    for (int i = 0; i <= p.degree(); ++i) co[std::size_t(2 * i)] = p.coeff(i);
    return IPoly(co);
  };
  return IPoly::var() * squared(hh) + IPoly::monomial(Integer(1), 2) * squared(f_hv) + squared(vh) +
         IPoly::var() * squared(vv);
}

IPoly run_gf(long a, long b, long c, long d, TurnBoundary boundary) {
  const TurnGf f = boundary == TurnBoundary::None ? ne_turn_gf_unrestricted() : ne_turn_gf_below_diagonal();
  if (boundary == TurnBoundary::BelowDiagonal && (a < b || c < d))
    fail_pre("run_gf: endpoints must satisfy x >= y");
  return run_gf(Point{a, b}, Point{c, d}, f);
}

// ---------------------------------------------------------------------------

namespace {

bool increasing_in(const std::vector<long>& v, long lo, long hi) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) return false;
    if (i > 0 && v[i - 1] >= v[i]) return false;
  }
  return true;
}

}  // namespace

bool is_ne_array(const TurnArray& t, const TurnArrayBounds& bd) {
  return t.p.size() == t.q.size() && increasing_in(t.p, bd.a, bd.c - 1) && increasing_in(t.q, bd.b + 1, bd.d);
}

bool violates_diagonal(const TurnArray& t) {
  for (std::size_t i = 0; i < t.p.size(); ++i)
    if (t.p[i] < t.q[i]) return true;
  return false;
}

bool is_reflected_array(const TurnArray& t, const TurnArrayBounds& bd) {
  return t.q.size() == t.p.size() + 2 && increasing_in(t.p, bd.b + 1, bd.c - 1) && increasing_in(t.q, bd.a, bd.d);
}

TurnArray reflect_turn_array(const TurnArray& t) {
  if (t.p.size() != t.q.size()) fail_pre("reflect_turn_array: rows of different length");
  // I is 1-based: the last position with p_I < q_I.
  std::size_t I = 0;
  for (std::size_t i = 0; i < t.p.size(); ++i)
    if (t.p[i] < t.q[i]) I = i + 1;
  if (I == 0) fail_pre("reflect_turn_array: array satisfies p_i >= q_i everywhere");
  TurnArray out;
  out.p.assign(t.q.begin(), t.q.begin() + long(I) - 1);
  out.p.insert(out.p.end(), t.p.begin() + long(I), t.p.end());
  out.q.assign(t.p.begin(), t.p.begin() + long(I));
  out.q.insert(out.q.end(), t.q.begin() + long(I) - 1, t.q.end());
  return out;
}

TurnArray unreflect_turn_array(const TurnArray& t) {
  // Top row holds pbar_2..pbar_l, bottom row qbar_0..qbar_l.
  if (t.q.size() != t.p.size() + 2) fail_pre("unreflect_turn_array: bottom row must be two longer than the top");
  const std::size_t l = t.p.size() + 1;
  auto pbar = [&](std::size_t k) { return t.p[k - 2]; };
  auto qbar = [&](std::size_t k) { return t.q[k]; };
  std::size_t I = 1;  // with no position pbar_k < qbar_k the split is after qbar_0
  for (std::size_t k = 2; k <= l; ++k)
    if (pbar(k) < qbar(k)) I = k;
  TurnArray out;
  for (std::size_t k = 0; k < I; ++k) out.p.push_back(qbar(k));
  for (std::size_t k = I + 1; k <= l; ++k) out.p.push_back(pbar(k));
  for (std::size_t k = 2; k <= I; ++k) out.q.push_back(pbar(k));
  for (std::size_t k = I; k <= l; ++k) out.q.push_back(qbar(k));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_orders(const std::vector<Point>& A, const std::vector<Point>& E, bool strict_a1, bool strict_e1) {
  for (std::size_t i = 1; i < A.size(); ++i) {
    const bool a1 = strict_a1 ? A[i - 1][0] < A[i][0] : A[i - 1][0] <= A[i][0];
    const bool a2 = strict_a1 ? A[i - 1][1] >= A[i][1] : A[i - 1][1] > A[i][1];
    const bool e1 = strict_e1 ? E[i - 1][0] < E[i][0] : E[i - 1][0] <= E[i][0];
    const bool e2 = strict_e1 ? E[i - 1][1] >= E[i][1] : E[i - 1][1] > E[i][1];
    if (!(a1 && a2 && e1 && e2)) fail_pre("nonint_turns: starting or end points are not in the required order");
  }
}

// Sum over l_1 + ... + l_n = l (l_i >= 0) of det(entry(i, j, l_i)), 1-based.
Integer composition_det_sum(std::size_t n, long l, const std::function<Integer(long, long, long)>& entry) {
  Integer total = 0;
  std::vector<long> parts(n, 0);
  std::function<void(std::size_t, long)> go = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      parts[i] = left;
      auto m = zero_matrix<Integer>(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = entry(long(r) + 1, long(c) + 1, parts[r]);
      total += det(m);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      parts[i] = v;
      go(i + 1, left - v);
    }
  };
  go(0, l);
  return total;
}

}  // namespace

Integer nonint_turns(const std::vector<Point>& A, const std::vector<Point>& E, long l, TurnBoundary boundary,
                     TurnKind kind) {
  check_kind_l(l);
  if (A.empty() || A.size() != E.size()) fail_pre("nonint_turns: need n >= 1 starting and end points");
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i].size() != 2 || E[i].size() != 2) fail_pre("nonint_turns: points must be 2-dimensional");
  const std::size_t n = A.size();
  if (kind == TurnKind::NE) check_orders(A, E, false, true);
  else check_orders(A, E, true, false);

  if (boundary == TurnBoundary::None && kind == TurnKind::EN) {
    // Rotating by 180 degrees and reversing turns EN into NE; the new
    // family runs -E_i -> -A_i, listed in reverse to restore the order.
    std::vector<Point> A2, E2;
    for (std::size_t i = n; i-- > 0;) {
      A2.push_back({-E[i][0], -E[i][1]});
      E2.push_back({-A[i][0], -A[i][1]});
    }
    return nonint_turns(A2, E2, l, TurnBoundary::None, TurnKind::NE);
  }
  if (boundary == TurnBoundary::BelowDiagonal)
    for (std::size_t i = 0; i < n; ++i)
      if (A[i][0] < A[i][1] || E[i][0] < E[i][1])
        fail_pre("nonint_turns: endpoints must satisfy x >= y below the diagonal");

  auto a1 = [&](long i) { return A[std::size_t(i - 1)][0]; };
  auto a2 = [&](long i) { return A[std::size_t(i - 1)][1]; };
  auto e1 = [&](long j) { return E[std::size_t(j - 1)][0]; };
  auto e2 = [&](long j) { return E[std::size_t(j - 1)][1]; };
  const bool below = boundary == TurnBoundary::BelowDiagonal;
  return composition_det_sum(n, l, [&](long i, long j, long li) -> Integer {
    Integer v = binom(e1(j) - a1(i) + i - j, li + i - j) * binom(e2(j) - a2(i) - i + j, li);
    if (!below) return v;
    if (kind == TurnKind::NE)
      return v - binom(e1(j) - a2(i) - i - j + 1, li - j) * binom(e2(j) - a1(i) + i + j - 1, li + i);
    return v - binom(e1(j) - a2(i) - i - j + 3, li - j + 1) * binom(e2(j) - a1(i) + i + j - 3, li + i - 1);
  });
}

}  // namespace latpath
