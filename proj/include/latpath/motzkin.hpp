#pragma once
// Motzkin, Schroeder and Dyck paths: closed-form counts, algebraic and
// continued-fraction generating functions, and counts in a horizontal strip.
//
// Paths never go below the x-axis.  In weighted versions an up-step has
// weight 1, a level-step at height h has weight b_h, and a down-step from
// height h to h-1 has weight lambda_h.

#include <optional>
#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

Integer motzkin_count(long a, long b, long c, long d);
Integer schroeder_count(long a, long b, long c, long d);  // steps (1,1), (1,-1), (2,0)
Integer motzkin_number(long n);
Integer schroeder_number(long n);  // paths (0,0) -> (2n,0)
Integer little_schroeder(long n);

// From M = 1 + zM + z^2 M^2 and S = 1 + zS + zS^2, solved coefficientwise.
TruncSeries<Integer> motzkin_gf(int order);
TruncSeries<Integer> schroeder_gf(int order);

// b[h] is b_h (h = 0..k) and lambda[h-1] is lambda_h (h = 1..k).
template <class R>
struct MotzkinWeighting {
  std::vector<R> b;
  std::vector<R> lambda;

  int height() const { return int(b.size()) - 1; }
  const R& b_at(int h) const { return b.at(std::size_t(h)); }
  const R& lambda_at(int h) const { return lambda.at(std::size_t(h - 1)); }
  void validate() const {
    if (b.empty()) fail_pre("weighting needs at least b_0");
    if (lambda.size() + 1 != b.size()) fail_pre("weighting needs lambda_1..lambda_k for b_0..b_k");
  }
  static MotzkinWeighting constant(const R& bv, const R& lv, int k) {
    if (k < 0) fail_pre("strip height must be nonnegative");
    return {std::vector<R>(std::size_t(k) + 1, bv), std::vector<R>(std::size_t(k), lv)};
  }
};

// The finite continued fraction 1/(1 - b_0 - lambda_1/(1 - b_1 - ...)) with
// weights polynomial in z.  With k = nullopt the fraction is cut at depth
// `order`, which needs weights up to height `order` and weights without
// constant term.
template <class R>
TruncSeries<R> cf_series(const MotzkinWeighting<Poly<R>>& w, std::optional<int> k, int order) {
  w.validate();
  int depth = k ? *k : order;
  if (depth < 0) fail_pre("continued fraction depth must be nonnegative");
  if (w.height() < depth) fail_pre("continued fraction: weights missing above the requested depth");
  if (!k) {
    for (int h = 0; h <= depth; ++h)
      if (!ring_is_zero(w.b_at(h).coeff(0)) || (h > 0 && !ring_is_zero(w.lambda_at(h).coeff(0))))
        fail_pre("continued fraction to infinite depth needs weights without constant term");
  }
  auto one = TruncSeries<R>::constant(R(1), order);
  auto value = (one - TruncSeries<R>::from_poly(w.b_at(depth), order)).inverse();
  for (int h = depth - 1; h >= 0; --h) {
    auto denom = one - TruncSeries<R>::from_poly(w.b_at(h), order) -
                 TruncSeries<R>::from_poly(w.lambda_at(h + 1), order) * value;
    value = denom.inverse();
  }
  return value;
}

// Dyck paths where a down-step from height h is weighted nu_h after an
// up-step (a peak) and lambda_h after a down-step.  nu[h-1], lambda[h-1]
// hold the weights for height h; the fraction is cut at depth `order`.
template <class R>
TruncSeries<R> rv_peak_cf(const std::vector<Poly<R>>& nu, const std::vector<Poly<R>>& lambda, int order) {
  if (nu.size() != lambda.size()) fail_pre("rv_peak_cf: nu and lambda need equal lengths");
  if (nu.size() < std::size_t(order) + 1) fail_pre("rv_peak_cf: weights needed up to height order + 1");
  MotzkinWeighting<Poly<R>> w;
  for (int h = 0; h <= order; ++h) {
    w.b.push_back(nu[std::size_t(h)] - lambda[std::size_t(h)]);
    if (h > 0) w.lambda.push_back(lambda[std::size_t(h - 1)]);
  }
  return cf_series<R>(w, std::nullopt, order);
}

// Weighted count of paths from height r to height s in n steps that stay in
// 0 <= y <= k, by iterating the transfer matrix.
template <class R>
R strip_count_transfer(int r, int s, int k, int n, const MotzkinWeighting<R>& w) {
  w.validate();
  if (k < 0 || r < 0 || s < 0 || r > k || s > k) fail_pre("strip: need 0 <= r, s <= k");
  if (w.height() < k) fail_pre("strip: weights missing below height k");
  if (n < 0) fail_pre("strip: n must be nonnegative");
  std::vector<R> v(std::size_t(k) + 1, R(0));
  v[std::size_t(r)] = R(1);
  for (int step = 0; step < n; ++step) {
    std::vector<R> nv(v.size(), R(0));
    for (int h = 0; h <= k; ++h) {
      const R& x = v[std::size_t(h)];
      if (ring_is_zero(x)) continue;
      if (h < k) nv[std::size_t(h + 1)] += x;
      nv[std::size_t(h)] += w.b_at(h) * x;
      if (h > 0) nv[std::size_t(h - 1)] += w.lambda_at(h) * x;
    }
    v = std::move(nv);
  }
  return v[std::size_t(s)];
}

// Monic p_n of the three-term recurrence with weights shifted up by `shift`:
// p_0 = 1, p_1 = x - b_shift, p_{m+1} = (x - b_{m+shift}) p_m - lambda_{m+shift} p_{m-1}.
template <class R>
Poly<R> shifted_orthogonal_poly(const MotzkinWeighting<R>& w, int shift, int n) {
  Poly<R> prev(0), cur(1);
  const Poly<R> x = Poly<R>::var();
  for (int m = 0; m < n; ++m) {
    Poly<R> next = (x - Poly<R>(w.b_at(m + shift))) * cur;
    if (m > 0) next -= w.lambda_at(m + shift) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Generating function in x of the strip counts, from the reciprocal
// orthogonal polynomials.
template <class R>
TruncSeries<R> strip_gf(int r, int s, int k, const MotzkinWeighting<R>& w, int order) {
  w.validate();
  if (k < 0 || r < 0 || s < 0 || r > k || s > k) fail_pre("strip: need 0 <= r, s <= k");
  if (w.height() < k) fail_pre("strip: weights missing below height k");
  const int lo = std::min(r, s), hi = std::max(r, s);
  Poly<R> num = shifted_orthogonal_poly(w, 0, lo).reciprocal(lo) *
                shifted_orthogonal_poly(w, hi + 1, k - hi).reciprocal(k - hi);
  Poly<R> den = shifted_orthogonal_poly(w, 0, k + 1).reciprocal(k + 1);
  auto series = (TruncSeries<R>::from_poly(num, order) / TruncSeries<R>::from_poly(den, order)).shifted(hi - lo);
  if (r > s) {
    R lam(1);
    for (int h = s + 1; h <= r; ++h) lam = lam * w.lambda_at(h);
    series = lam * series;
  }
  return series;
}

// Unweighted strip count from the cosine/sine sum, rounded.  Throws
// NumericGuardError if the rounding residual exceeds 1e-6.
Integer strip_count_trig(int r, int s, int k, int n);

// Probability that a player starting with a of R dollars is ruined in
// exactly round N, with per-round win/lose probabilities pA and pB.
Rational gambler_ruin(long a, long R, long N, const Rational& pA, const Rational& pB);

}  // namespace latpath
