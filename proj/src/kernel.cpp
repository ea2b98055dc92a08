#include "latpath/kernel.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace latpath {

WeightedStepSet1D WeightedStepSet1D::unit(const std::vector<long>& jumps) {
  WeightedStepSet1D s;
  for (long b : jumps) s.steps.push_back({b, Rational(1)});
  return s;
}

long WeightedStepSet1D::c() const {
  long m = 0;
  for (const auto& st : steps) m = std::max(m, -st.b);
  return m;
}

long WeightedStepSet1D::d() const {
  long m = 0;
  for (const auto& st : steps) m = std::max(m, st.b);
  return m;
}

Rational WeightedStepSet1D::p(long j) const {
  Rational r = 0;
  for (const auto& st : steps)
    if (st.b == j) r += st.w;
  return r;
}

void WeightedStepSet1D::validate(bool kernel) const {
  if (steps.empty()) fail_pre("step set must be nonempty");
  if (!kernel) return;
  if (c() < 1) fail_pre("kernel method needs a step with negative jump (c >= 1)");
  if (p(-c()) == 0) fail_pre("the lowest jump must carry nonzero total weight");
}

WeightedStepSet1D WeightedStepSet1D::reflected() const {
  WeightedStepSet1D r;
  for (const auto& st : steps) r.steps.push_back({-st.b, st.w});
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  const long lo = std::min(a.low, b.low);
  const long hi = std::max(a.low + a.body.degree(), b.low + b.body.degree());
  for (long j = lo; j <= hi; ++j)
    if (a.coeff(j) != b.coeff(j)) return false;
  return true;
}

LaurentPoly char_poly(const WeightedStepSet1D& s) {
  s.validate(false);
  long lo = s.steps[0].b;
  for (const auto& st : s.steps) lo = std::min(lo, st.b);
  LaurentPoly lp;
  lp.low = lo;
  for (const auto& st : s.steps) lp.body += QPoly::monomial(st.w, std::size_t(st.b - lo));
  return lp;
}

namespace {

// Height distribution after each step; `floor` bounds heights from below.
QSeries height_dp(const WeightedStepSet1D& s, long k, int order, std::optional<long> floor) {
  s.validate(false);
  if (order < 0) fail_pre("series order must be nonnegative");
  QSeries out(order);
  std::map<long, Rational> cur{{0, Rational(1)}};
  for (int n = 0; n <= order; ++n) {
    auto it = cur.find(k);
    if (it != cur.end()) out[std::size_t(n)] = it->second;
    if (n == order) break;
    std::map<long, Rational> nxt;
    for (const auto& [h, v] : cur)
      for (const auto& st : s.steps) {
        const long h2 = h + st.b;
        if (floor && h2 < *floor) continue;
        nxt[h2] += v * st.w;
      }
    for (auto it2 = nxt.begin(); it2 != nxt.end();)
      it2 = it2->second == 0 ? nxt.erase(it2) : std::next(it2);
    cur.swap(nxt);
  }
  return out;
}

QPoly low_part(const QPoly& p, long c) {
  std::vector<Rational> co;
  for (long i = 0; i < c && i <= p.degree(); ++i) co.push_back(p.coeff(std::size_t(i)));
  return QPoly(co);
}

QPoly high_part_divided(const QPoly& p, long c) {
  std::vector<Rational> co;
  for (long i = c; i <= p.degree(); ++i) co.push_back(p.coeff(std::size_t(i)));
  return QPoly(co);
}

// Newton's identities: power sums p_1..p_m of the roots of a monic
// polynomial from its elementary symmetric functions e_1..e_c.
std::vector<QSeries> power_sums(const std::vector<QSeries>& e, long m, int order) {
  const long c = long(e.size()) - 1;
  std::vector<QSeries> p(std::size_t(m) + 1, QSeries(order));
  for (long j = 1; j <= m; ++j) {
    QSeries acc(order);
    for (long i = 1; i < j && i <= c; ++i) {
      QSeries t = e[std::size_t(i)] * p[std::size_t(j - i)];
      acc = (i % 2 == 1) ? acc + t : acc - t;
    }
    if (j <= c) {
      QSeries t = Rational(j) * e[std::size_t(j)];
      acc = (j % 2 == 1) ? acc + t : acc - t;
    }
    p[std::size_t(j)] = acc;
  }
  return p;
}

}  // namespace

QSeries walk_gf_by_height(const WeightedStepSet1D& s, long k, int order) { return height_dp(s, k, order, {}); }

QSeries nonneg_end_height_dp(const WeightedStepSet1D& s, long k, int order) {
  if (k < 0) return QSeries(order);
  return height_dp(s, k, order, 0L);
}

QSeries small_branch(const WeightedStepSet1D& s, int order) {
  s.validate(true);
  if (s.c() != 1) fail_pre("small_branch: only c = 1 is supported; use the kernel factorization for c > 1");
  // u = z Q(u) with Q(u) = sum_j p_{j-1} u^j.
  const long d = s.d();
  std::vector<Rational> q, dq;
  for (long j = 0; j <= 1 + d; ++j) q.push_back(s.p(j - 1));
  for (long j = 1; j <= 1 + d; ++j) dq.push_back(Rational(j) * s.p(j - 1));
  const QPoly Q(q), dQ(dq);
  QSeries u(order);
  const QSeries one = QSeries::constant(Rational(1), order);
  for (int prec = 1; prec <= 2 * (order + 1); prec *= 2) {
    QSeries g = u - QSeries::compose_poly(Q, u).shifted(1);
    QSeries dg = one - QSeries::compose_poly(dQ, u).shifted(1);
    u = u - g * dg.inverse();
  }
  return u;
}

KernelFactorization kernel_factorization(const WeightedStepSet1D& s, int order) {
  s.validate(true);
  if (order < 0) fail_pre("series order must be nonnegative");
  const long c = s.c(), d = s.d();
  // Q = u^c - z Q1(u) with Q1 = sum_{j=0}^{c+d} p_{j-c} u^j.
  std::vector<Rational> q1;
  for (long j = 0; j <= c + d; ++j) q1.push_back(-s.p(j - c));
  const QPoly Q1(q1);
  std::vector<QPoly> K(std::size_t(order) + 1), L(std::size_t(order) + 1);
  K[0] = QPoly::monomial(Rational(1), std::size_t(c));
  L[0] = QPoly(1);
  for (int n = 1; n <= order; ++n) {
    QPoly T = n == 1 ? Q1 : QPoly();
    for (int i = 1; i < n; ++i) T -= K[std::size_t(i)] * L[std::size_t(n - i)];
    K[std::size_t(n)] = low_part(T, c);
    L[std::size_t(n)] = high_part_divided(T, c);
  }
  KernelFactorization f;
  f.c = c;
  f.order = order;
  f.small.assign(std::size_t(c) + 1, QSeries(order));
  for (int n = 0; n <= order; ++n)
    for (long i = 0; i <= c; ++i) f.small[std::size_t(i)][std::size_t(n)] = K[std::size_t(n)].coeff(std::size_t(i));
  f.large = std::move(L);
  return f;
}

std::vector<QSeries> kernel_polynomial_from_counts(const WeightedStepSet1D& s, int order) {
  s.validate(true);
  const long c = s.c();
  std::vector<QSeries> out(std::size_t(c) + 1, QSeries(order));
  out[std::size_t(c)][0] = 1;
  // u^c r_k(u) = sum_{j=-c}^{-k-1} p_j u^{j+k+c}.
  for (long k = 0; k < c; ++k) {
    const QSeries Fk = nonneg_end_height_dp(s, k, order);
    for (long j = -c; j <= -k - 1; ++j) {
      const Rational pj = s.p(j);
      if (pj == 0) continue;
      auto& slot = out[std::size_t(j + k + c)];
      slot = slot - (pj * Fk).shifted(1);
    }
  }
  return out;
}

QSeries nonneg_walk_gf(const WeightedStepSet1D& s, int order) {
  auto f = kernel_factorization(s, order + 1);
  // K(0) = (-1)^c prod u_j, so the product formula reads -K(0) / (p_{-c} z).
  QSeries k0 = f.small[0];
  return (Rational(-1) / s.p(-s.c()) * k0.unshifted(1)).truncated(order);
}

QSeries nonneg_end_height_gf(const WeightedStepSet1D& s, long k, int order) {
  if (k < 0) return QSeries(order);
  auto f = kernel_factorization(s, order);
  std::vector<QPoly> G(std::size_t(order) + 1);
  G[0] = QPoly(1);
  for (int n = 1; n <= order; ++n) {
    QPoly acc;
    for (int i = 1; i <= n; ++i) acc -= f.large[std::size_t(i)] * G[std::size_t(n - i)];
    G[std::size_t(n)] = acc;
  }
  QSeries out(order);
  for (int n = 0; n <= order; ++n) out[std::size_t(n)] = G[std::size_t(n)].coeff(std::size_t(k));
  return out;
}

QSeries height_gf_from_branches(const WeightedStepSet1D& s, long k, int order) {
  s.validate(true);
  const long c = s.c();
  if (k >= c) {
    if (s.d() < 1) fail_pre("height_gf_from_branches: heights k >= c need a positive jump (d >= 1)");
    return height_gf_from_branches(s.reflected(), -k, order);
  }
  const int M = order + int(std::labs(k)) + 2;
  auto f = kernel_factorization(s, M);
  // e_i = (-1)^i [u^{c-i}] K.
  std::vector<QSeries> e(std::size_t(c) + 1, QSeries(M));
  for (long i = 0; i <= c; ++i) {
    e[std::size_t(i)] = f.small[std::size_t(c - i)];
    if (i % 2) e[std::size_t(i)] = -e[std::size_t(i)];
  }
  const QSeries g = e[std::size_t(c)].unshifted(1);  // prod u_j = z g, g(0) != 0
  if (k == 0) {
    // z (prod u_j)' / prod u_j = 1 + z g'/g
    QSeries r = QSeries::constant(Rational(1), g.order() - 1) + (g.derivative() / g.truncated(g.order() - 1)).shifted(1);
    return r.truncated(order);
  }
  if (k < 0) {
    const long m = -k;
    auto p = power_sums(e, m, M);
    return (Rational(1, m) * p[std::size_t(m)].derivative().shifted(1)).truncated(order);
  }
  // 0 < k < c: with P_m = e_c^m p_{-m},
  // P_m = sum_{i=1}^{min(m-1,c)} (-1)^{i-1} e_{c-i} e_c^{i-1} P_{m-i} + (-1)^{m-1} m e_{c-m} e_c^{m-1}.
  std::vector<QSeries> P(std::size_t(k) + 1, QSeries(M));
  std::vector<QSeries> ec_pow(std::size_t(k) + 1, QSeries::constant(Rational(1), M));
  for (long i = 1; i <= k; ++i) ec_pow[std::size_t(i)] = ec_pow[std::size_t(i - 1)] * e[std::size_t(c)];
  for (long m = 1; m <= k; ++m) {
    QSeries acc(M);
    for (long i = 1; i < m && i <= c; ++i) {
      QSeries t = e[std::size_t(c - i)] * ec_pow[std::size_t(i - 1)] * P[std::size_t(m - i)];
      acc = (i % 2 == 1) ? acc + t : acc - t;
    }
    QSeries t = Rational(m) * e[std::size_t(c - m)] * ec_pow[std::size_t(m - 1)];
    acc = (m % 2 == 1) ? acc + t : acc - t;
    P[std::size_t(m)] = acc;
  }
  // p_{-k} = z^{-k} s with s = P_k / g^k; the height-k series is
  // -(z/k) d/dz (z^{-k} s) = z^{-k} (s - (z/k) s').
  QSeries gk = QSeries::constant(Rational(1), g.order());
  for (long i = 0; i < k; ++i) gk = gk * g;
  const QSeries sser = P[std::size_t(k)].truncated(gk.order()) / gk;
  QSeries t = sser.truncated(sser.order() - 1) - Rational(1, k) * sser.derivative().shifted(1);
  return t.unshifted(int(k)).truncated(order);
}

QSeries lukasiewicz_gf(int order) {
  if (order < 0) fail_pre("series order must be nonnegative");
  // Kernel 1 - z/(u(1-u)) vanishes at u = z + u^2; F_0 = u/z.
  const int M = order + 1;
  QSeries u(M);
  const QSeries z = QSeries::monomial(Rational(1), 1, M), one = QSeries::constant(Rational(1), M);
  for (int prec = 1; prec <= 2 * (M + 1); prec *= 2) {
    QSeries g = u - u * u - z;
    QSeries dg = one - Rational(2) * u;
    u = u - g * dg.inverse();
  }
  return u.unshifted(1);
}

Integer lukasiewicz_count(long n) {
  if (n < 0) fail_pre("lukasiewicz_count: n must be nonnegative");
  Rational v = lukasiewicz_gf(int(n))[std::size_t(n)];
  return v.get_num();
}

}  // namespace latpath
