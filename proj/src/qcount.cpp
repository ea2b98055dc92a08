#include "latpath/qcount.hpp"

#include <string>


namespace latpath {

namespace {

void check_nonneg(long n, const char* what) {
  if (n < 0) fail_pre(std::string(what) + ": n must be nonnegative");
}

void check_order(int N) {
  if (N < 1) fail_pre("series order N must be at least 1");
}

ZSeries one(int N) { return ZSeries::constant(Integer(1), N); }

ZSeries qmono(long k, int N) { return k > N ? ZSeries(N) : ZSeries::monomial(Integer(1), int(k), N); }

// 1/(1 - q^k) to order N.
ZSeries geometric(long k, int N) {
  ZSeries s(N);
  for (long e = 0; e <= N; e += k) s[std::size_t(e)] = 1;
  return s;
}

ZSeries eval_in_q(const IPoly& p, int N) { return ZSeries::from_poly(p, N); }

}  // namespace

IPoly q_catalan_cr(long n) {
  check_nonneg(n, "q_catalan_cr");
  std::vector<IPoly> C{IPoly(1)};
  for (long m = 1; m <= n; ++m) {
    IPoly acc;
    for (long k = 0; k < m; ++k) acc += (C[std::size_t(k)] * C[std::size_t(m - k - 1)]).shifted(std::size_t(k));
    C.push_back(acc);
  }
  return C[std::size_t(n)];
}

std::vector<IPoly> q_catalan_cr_cf(int depth, int order) {
  if (order < 0) fail_pre("q_catalan_cr_cf: order must be nonnegative");
  if (depth < order) fail_pre("q_catalan_cr_cf: truncation depth must be at least the order");
  // Series in z with polynomial coefficients, f = 1/(1 - q^{i-1} z g)
  // solved as f = 1 + q^{i-1} z g f coefficientwise.
  std::vector<IPoly> f(std::size_t(order) + 1);
  f[0] = IPoly(1);
  for (int i = depth; i >= 1; --i) {
    const std::vector<IPoly> g = f;
    std::vector<IPoly> h(std::size_t(order) + 1);
    h[0] = IPoly(1);
    for (int n = 1; n <= order; ++n) {
      IPoly acc;
      for (int j = 0; j < n; ++j) acc += g[std::size_t(j)] * h[std::size_t(n - 1 - j)];
      h[std::size_t(n)] = acc.shifted(std::size_t(i - 1));
    }
    f = std::move(h);
  }
  return f;
}

IPoly q_catalan_maj(long n) {
  check_nonneg(n, "q_catalan_maj");
  const IPoly num = IPoly(std::vector<Integer>{1, -1}) * qbinom(2 * n, n);
  const IPoly den = IPoly(1) - IPoly::monomial(Integer(1), std::size_t(n + 1));
  try {
    return num.exact_div(den);
  } catch (const std::domain_error&) {
    throw NumericGuardError("q_catalan_maj: division by 1 - q^(n+1) is not exact");
  }
}

ZSeries rr_sum_side(int which, int N) {
  if (which != 1 && which != 2) fail_pre("Rogers-Ramanujan identity index must be 1 or 2");
  check_order(N);
  ZSeries total(N);
  ZSeries inv_qq = one(N);  // 1/(q;q)_n
  for (long n = 0;; ++n) {
    if (n > 0) inv_qq = inv_qq * geometric(n, N);
    const long e = n * n + (which - 1) * n;
    if (e > N) break;
    total = total + inv_qq.shifted(int(e));
  }
  return total;
}

ZSeries rr_product_side(int which, int N) {
  if (which != 1 && which != 2) fail_pre("Rogers-Ramanujan identity index must be 1 or 2");
  check_order(N);
  ZSeries p = one(N);
  for (long part = 1; part <= N; ++part) {
    const long r = part % 5;
    if (r == which || r == 5 - which) p = p * geometric(part, N);
  }
  return p;
}

RRCheck rr_truncation_check(int N) {
  return {rr_sum_side(1, N) == rr_product_side(1, N), rr_sum_side(2, N) == rr_product_side(2, N)};
}

ZSeries ramanujan_cf(int N) {
  check_order(N);
  ZSeries f = one(N);
  for (long i = N; i >= 1; --i) f = one(N) + qmono(i, N) / f;
  return f;
}

bool ramanujan_cf_check(int N) {
  const ZSeries cf = ramanujan_cf(N);
  const ZSeries ratio = rr_sum_side(1, N) / rr_sum_side(2, N);
  // C(z) at z = -q: sum_n C_n(q) (-q)^n, with n <= N sufficient to q^N.
  const auto C = q_catalan_cr_cf(N, N);
  ZSeries at(N);
  for (int n = 0; n <= N; ++n) {
    ZSeries term = eval_in_q(C[std::size_t(n)], N).shifted(n);
    at = (n % 2) ? at - term : at + term;
  }
  return cf == ratio && cf == one(N) / at;
}

}  // namespace latpath
