#include "latpath/motzkin.hpp"

#include <cmath>

namespace latpath {

Integer motzkin_count(long a, long b, long c, long d) {
  if (b < 0 || d < 0) fail_pre("motzkin_count: endpoints must not lie below the x-axis");
  Integer total = 0;
  for (long k = 0; k <= c - a; ++k)
    total += binom(c - a, k) *
             (binom_half(c - a - k, c + d - k - a - b) - binom_half(c - a - k, c + d - k - a + b + 2));
  return total;
}

Integer schroeder_count(long a, long b, long c, long d) {
  if (b < 0 || d < 0) fail_pre("schroeder_count: endpoints must not lie below the x-axis");
  Integer total = 0;
  for (long k = 0; 2 * k <= c - a; ++k)
    total += binom(c - a - k, k) * (binom_half(c - a - 2 * k, c + d - 2 * k - a - b) -
                                    binom_half(c - a - 2 * k, c + d - 2 * k - a + b + 2));
  return total;
}

Integer motzkin_number(long n) {
  if (n < 0) fail_pre("motzkin_number: n >= 0 required");
  Integer total = 0;
  for (long k = 0; 2 * k <= n; ++k) total += binom(n, 2 * k) * binom(2 * k, k) / (k + 1);
  return total;
}

Integer schroeder_number(long n) {
  if (n < 0) fail_pre("schroeder_number: n >= 0 required");
  Integer total = 0;
  for (long k = 0; k <= n; ++k) total += binom(n + k, 2 * k) * binom(2 * k, k) / (k + 1);
  return total;
}

Integer little_schroeder(long n) {
  if (n == 0) return 1;
  return schroeder_number(n) / 2;
}

TruncSeries<Integer> motzkin_gf(int order) {
  TruncSeries<Integer> m(order);
  for (int n = 0; n <= order; ++n) {
    Integer v = n == 0 ? Integer(1) : m[std::size_t(n - 1)];
    for (int i = 0; i <= n - 2; ++i) v += m[std::size_t(i)] * m[std::size_t(n - 2 - i)];
    m[std::size_t(n)] = v;
  }
  return m;
}

TruncSeries<Integer> schroeder_gf(int order) {
  TruncSeries<Integer> s(order);
  for (int n = 0; n <= order; ++n) {
    Integer v = n == 0 ? Integer(1) : s[std::size_t(n - 1)];
    for (int i = 0; i <= n - 1; ++i) v += s[std::size_t(i)] * s[std::size_t(n - 1 - i)];
    s[std::size_t(n)] = v;
  }
  return s;
}

Integer strip_count_trig(int r, int s, int k, int n) {
  if (k < 0 || r < 0 || s < 0 || r > k || s > k) fail_pre("strip: need 0 <= r, s <= k");
  if (n < 0) fail_pre("strip: n must be nonnegative");
  const long double pi = std::acos(-1.0L);
  const long double m = k + 2;
  long double sum = 0;
  for (int j = 1; j <= k + 1; ++j)
    sum += std::pow(2 * std::cos(pi * j / m) + 1, (long double)n) * std::sin(pi * j * (r + 1) / m) *
           std::sin(pi * j * (s + 1) / m);
  sum *= 2 / m;
  const long double rounded = std::round(sum);
  if (std::fabs(sum - rounded) > 1e-6L || std::fabs(rounded) > 9e18L)
    throw NumericGuardError("strip_count_trig: rounding residual too large");
  return Integer(static_cast<long>(rounded));
}

Rational gambler_ruin(long a, long R, long N, const Rational& pA, const Rational& pB) {
  if (!(0 < a && a < R)) fail_pre("gambler_ruin: need 0 < a < R");
  if (N < 1) fail_pre("gambler_ruin: need N >= 1");
  if (pA < 0 || pB < 0 || pA + pB > 1) fail_pre("gambler_ruin: invalid probabilities");
  // Read the path backwards, from height 0 up to a - 1.  Its down-steps are
  // the rounds A won, each paired with one round B won; weighting them
  // pA*pB leaves pB^(a-1) for the unpaired losses.
  auto w = MotzkinWeighting<Rational>::constant(1 - pA - pB, pA * pB, int(R - 2));
  Rational paths = strip_count_transfer(0, int(a - 1), int(R - 2), int(N - 1), w);
  Rational pb_pow = 1;
  for (long i = 0; i < a; ++i) pb_pow *= pB;
  return paths * pb_pow;
}

}  // namespace latpath
