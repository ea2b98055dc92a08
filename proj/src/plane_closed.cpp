#include "latpath/plane_closed.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace latpath {

namespace {

std::string pt(long x, long y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

Integer to_integer_checked(const Rational& r, const char* what) {
  if (r.get_den() != 1)
    throw std::logic_error(std::string(what) + ": non-integral result " + r.get_str());
  return r.get_num();
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Integer count_simple(long a, long b, long c, long d) {
  if (c < a || d < b) return 0;
  return binom(c + d - a - b, c - a);
}

Integer count_pm(long n, long a, long b, long c, long d) {
  if (n < 0) fail_pre("count_pm: n >= 0 violated");
  return binom_half(n, n + c + d - a - b) * binom_half(n, n + c - d - a + b);
}

Integer delannoy(long a, long b, long c, long d) {
  if (c < a || d < b) return 0;
  Integer total = 0;
  for (long k = 0; k <= c - a; ++k) total += multinomial({k, c - a - k, d - b - k});
  return total;
}

IPoly area_gf(long a, long b, long c, long d) {
  if (c < a || d < b) return IPoly();
  long shift = b * (c - a);
  if (shift < 0) fail_pre("area_gf: negative heights give negative area; requires b >= 0 or c = a");
  return qbinom(c + d - a - b, c - a).shifted(std::size_t(shift));
}

Integer below_diagonal(long a, long b, long c, long d) {
  if (a < b) fail_pre("below_diagonal: a >= b violated at start " + pt(a, b));
  if (c < d) fail_pre("below_diagonal: c >= d violated at end " + pt(c, d));
  return binom(c + d - a - b, c - a) - binom(c + d - a - b, c - b + 1);
}

Integer catalan(long n) {
  if (n < 0) fail_pre("catalan: n >= 0 violated");
  return binom(2 * n, n) / (n + 1);
}

Integer ballot(long c, long d) {
  if (d < 0 || c < d) fail_pre("ballot: c >= d >= 0 violated");
  Integer v = (c + 1 - d) * binom(c + d + 1, d);
  return v / (c + d + 1);
}

namespace {

void check_band(long a, long b, long c, long d, long s, long t) {
  if (!(a + t >= b && b >= a + s))
    fail_pre("between_diagonals: a+t >= b >= a+s violated at start " + pt(a, b));
  if (!(c + t >= d && d >= c + s))
    fail_pre("between_diagonals: c+t >= d >= c+s violated at end " + pt(c, d));
}

}  // namespace

Integer between_diagonals(long a, long b, long c, long d, long s, long t) {
  check_band(a, b, c, d, s, t);
  if (c < a || d < b) return 0;
  const long n = c + d - a - b;
  const long w = t - s + 2;
  // Beyond |k| > K both lower indices leave [0, n].
  const long K = (n + std::abs(c - a) + std::abs(c - b + t + 1)) / w + 1;
  Integer total = 0;
  for (long k = -K; k <= K; ++k) {
    total += binom(n, c - a - k * w);
    total -= binom(n, c - b - k * w + t + 1);
  }
  return total;
}

namespace {

template <class F>
F trig_band_sum(long a, long b, long c, long d, long s, long t) {
  const F pi = std::acos(F(-1));
  const long w = t - s + 2;
  const long n = c + d - a - b;
  F total = 0;
  // Symmetric form over k = 1..w-1 with weight 2/w; pairing k with w-k
  // gives the half range with 4/w, except that the half range drops the
  // middle term needed for the empty path when w is even.
  for (long k = 1; k < w; ++k) {
    F base = 2 * std::cos(pi * F(k) / F(w));
    F p = (n == 0) ? F(1) : std::pow(base, F(n));
    total += F(2) / F(w) * p * std::sin(pi * F(k * (a - b + t + 1)) / F(w)) *
             std::sin(pi * F(k * (c - d + t + 1)) / F(w));
  }
  return total;
}

}  // namespace

Integer between_diagonals_trig(long a, long b, long c, long d, long s, long t) {
  check_band(a, b, c, d, s, t);
  if (c < a || d < b) return 0;
  double v = trig_band_sum<double>(a, b, c, d, s, t);
  double r = std::round(v);
  if (std::fabs(v - r) > 1e-6) {
    long double lv = trig_band_sum<long double>(a, b, c, d, s, t);
    long double lr = std::round(lv);
    if (std::fabs(lv - lr) > 1e-6L)
      throw NumericGuardError("between_diagonals_trig: rounding residual " + std::to_string(double(lv - lr)));
    r = double(lr);
  }
  if (std::fabs(r) > 9.0e15) throw NumericGuardError("between_diagonals_trig: value exceeds double precision");
  return Integer(static_cast<long>(r));
}

Integer rational_catalan(long r, long s) {
  if (r < 1 || s < 1) fail_pre("rational_catalan: r, s >= 1 violated");
  if (std::gcd(r, s) != 1) fail_pre("rational_catalan: gcd(r,s) = 1 violated");
  return binom(r + s, r) / (r + s);
}

Integer below_slope_mu(long c, long d, long mu) {
  if (mu < 0) fail_pre("below_slope_mu: mu >= 0 violated");
  if (d < 0) fail_pre("below_slope_mu: d >= 0 violated");
  if (c < mu * d) fail_pre("below_slope_mu: c >= mu*d violated");
  Integer v = (c - mu * d + 1) * binom(c + d + 1, d);
  return v / (c + d + 1);
}

namespace {

// (c - mu d + 1)/(c + d - (mu+1) j + 1) * binom(c + d - (mu+1) j + 1, d - j), which
// counts paths from (mu j, j) to (c, d) below x = mu y.
Integer slope_tail(long c, long d, long j, long mu) {
  const long k = d - j;
  if (k < 0) return 0;
  if (k == 0) return 1;
  // = (c - mu d + 1) / k * binom(N - 1, k - 1) with N = c + d - (mu+1) j + 1
  const long n1 = c + d - (mu + 1) * j;
  Rational v = frac(Integer(c - mu * d + 1) * binom(n1, k - 1), Integer(k));
  return to_integer_checked(v, "slope_tail");
}

}  // namespace

Integer below_slope_mu_general(long a, long b, long c, long d, long mu, SlopeVariant v) {
  if (mu < 0) fail_pre("below_slope_mu_general: mu >= 0 violated");
  if (a < mu * b) fail_pre("below_slope_mu_general: a >= mu*b violated at start " + pt(a, b));
  if (c < mu * d) fail_pre("below_slope_mu_general: c >= mu*d violated at end " + pt(c, d));
  if (c < a || d < b) return 0;
  if (mu == 0) return count_simple(a, b, c, d);
  const long top = floor_div(a, mu);
  if (v == SlopeVariant::LastTouch) {
    Integer total = binom(c + d - a - b, c - a);
    for (long i = top + 1; i <= d; ++i)
      total -= binom(i * (mu + 1) - a - b - 1, i - b) * slope_tail(c, d, i, mu);
    return total;
  }
  Integer total = 0;
  for (long i = 0; i <= top - b; ++i) {
    Integer term = binom(a - mu * (b + i), i) * slope_tail(c, d, b + i, mu);
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Piecewise linear boundary

void validate_segments(const std::vector<BoundarySegment>& segs, long d) {
  if (segs.empty()) fail_pre("piecewise_boundary: no segments");
  long prev = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].mu < 0) fail_pre("piecewise_boundary: mu_" + std::to_string(i + 1) + " >= 0 violated");
    if (segs[i].y_top <= prev && !(i == 0 && segs[i].y_top == 0 && segs.size() == 1))
      fail_pre("piecewise_boundary: 0 = y_0 < y_1 < ... < y_m violated at y_" + std::to_string(i + 1));
    prev = segs[i].y_top;
  }
  if (segs.back().y_top != d) fail_pre("piecewise_boundary: y_m = d violated");
  if (segs[0].nu > 0) fail_pre("piecewise_boundary: origin must satisfy 0 >= nu_1 (nu_1 <= 0 violated)");
}

bool piecewise_admits(const std::vector<BoundarySegment>& segs, long x, long y) {
  if (y < 0) return false;
  for (const auto& s : segs)
    if (y <= s.y_top) return x >= s.mu * y + s.nu;
  return false;
}

namespace {

// Polynomial in c of slope_tail(X, d, j, mu) where X = c + shift.
QPoly slope_tail_poly(long shift, long d, long j, long mu) {
  const long k = d - j;
  if (k < 0) return QPoly();
  if (k == 0) return QPoly(1);
  const QPoly c = QPoly::var();
  QPoly p = c + QPoly(shift - mu * d + 1);
  for (long r = 1; r <= k - 1; ++r) p = p * (c + QPoly(shift + d - (mu + 1) * j + 1 - r));
  return Rational(Integer(1), factorial(k)) * p;
}

QPoly binom_in_c(long d) {
  // binom(c + d, d) as a polynomial in c
  const QPoly c = QPoly::var();
  QPoly p(1);
  for (long r = 1; r <= d; ++r) p = p * (c + QPoly(r));
  return Rational(Integer(1), factorial(d)) * p;
}

QPoly piece_poly(std::vector<BoundarySegment> segs, long d) {
  std::size_t j = 0;
  while (j + 1 < segs.size() && segs[j].y_top < d) ++j;
  segs.resize(j + 1);
  segs.back().y_top = d;
  const auto& last = segs.back();
  if (segs.size() == 1) {
    if (last.mu == 0) return binom_in_c(d);
    // From (a, 0) with a = -nu to (c + a, d) below x = mu y, inclusion-exclusion form.
    const long a = -last.nu;
    QPoly total;
    for (long i = 0; i <= a / last.mu; ++i) {
      QPoly term = Rational(binom(a - last.mu * i, i)) * slope_tail_poly(a, d, i, last.mu);
      if (i % 2) total -= term;
      else total += term;
    }
    return total;
  }
  std::vector<BoundarySegment> lower(segs.begin(), segs.end() - 1);
  const long ytop = lower.back().y_top;
  QPoly total;
  for (long i = 0; i <= ytop; ++i) {
    Rational inner = piece_poly(lower, i).eval(Rational(last.mu * i + last.nu - 1));
    if (inner == 0) continue;
    total += inner * slope_tail_poly(-last.nu, d, i, last.mu);
  }
  return total;
}

}  // namespace

QPoly piecewise_boundary_poly(const std::vector<BoundarySegment>& segs, long d) {
  validate_segments(segs, d);
  return piece_poly(segs, d);
}

Integer piecewise_boundary(const std::vector<BoundarySegment>& segs, long c, long d) {
  validate_segments(segs, d);
  const auto& last = segs.back();
  if (c < last.mu * d + last.nu)
    fail_pre("piecewise_boundary: end point violates c >= mu_m d + nu_m");
  return to_integer_checked(piece_poly(segs, d).eval(Rational(c)), "piecewise_boundary");
}

// ---------------------------------------------------------------------------

Integer sato_example_23(long n) {
  if (n < 0) fail_pre("sato_example_23: n >= 0 violated");
  auto coef = [](long l) -> Rational {
    return gen_binom(frac(1 + 5 * l, 2), l) / Rational(1 + 5 * l);
  };
  Rational v = 0;
  if (n % 2 == 0) {
    for (long l = 0; l <= n; ++l) {
      Rational term = coef(l) * coef(n - l);
      if (l % 2) v -= term;
      else v += term;
    }
  } else {
    v = 2 * coef(n);
  }
  return to_integer_checked(v, "sato_example_23");
}

Integer kreweras(long e1, long e2, long e3) {
  if (e2 < 0 || e3 < 0) fail_pre("kreweras: e2, e3 >= 0 violated");
  if (e1 < std::max(e2, e3)) fail_pre("kreweras: e1 >= max(e2, e3) violated");
  const Integer multi = multinomial({e1, e2, e3});
  Rational v = Rational(multi) - frac(Integer(e2 + e3) * multi, Integer(1 + e1));
  const Integer top = factorial(e1 + e2 + e3);
  for (long i = 1; i <= e3; ++i)
    for (long j = 1; j <= e2; ++j) {
      Integer num = top * factorial(2 * i + 2 * j - 2) * factorial(i + j - 2);
      Integer den = factorial(i) * factorial(e3 - i) * factorial(j) * factorial(e2 - j) *
                    factorial(2 * i - 1) * factorial(2 * j - 1) * factorial(i + j + e1);
      Rational term = frac(num, den);
      if ((i + j) % 2) v -= term;
      else v += term;
    }
  return to_integer_checked(v, "kreweras");
}

Integer kreweras_diagonal(long e1, long e3) {
  if (e3 < 0 || e1 < e3) fail_pre("kreweras_diagonal: e1 >= e3 >= 0 violated");
  Integer pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(2 * e3 + 1);
  Integer f = factorial(e1 - e3);
  Rational v = frac(pow2 * factorial(2 * e1 + e3) * factorial(2 * e1 - 2 * e3 + 1),
                    factorial(2 * e1 + 2) * factorial(e3) * f * f);
  return to_integer_checked(v, "kreweras_diagonal");
}

}  // namespace latpath
