#include "latpath/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace latpath {

namespace {

void check_dims(const Point& a, const Point& e, const char* who) {
  if (a.empty() || a.size() != e.size()) fail_pre(std::string(who) + ": points must have the same dimension d >= 1");
}

bool strictly_decreasing(const Point& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] <= x[i]) return false;
  return true;
}

bool weakly_decreasing(const Point& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] < x[i]) return false;
  return true;
}

bool same_parity(const Point& x) {
  for (long v : x)
    if ((v - x[0]) % 2 != 0) return false;
  return true;
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Every k with lo_i <= k_i <= hi_i and k_1 + ... + k_d = 0.
void for_each_balanced(const std::vector<long>& lo, const std::vector<long>& hi,
                       const std::function<void(const std::vector<long>&)>& f) {
  const std::size_t d = lo.size();
  std::vector<long> k(d, 0);
  // Suffix bounds prune branches that can no longer reach a zero sum.
  std::vector<long> lo_suf(d + 1, 0), hi_suf(d + 1, 0);
  for (std::size_t i = d; i-- > 0;) {
    lo_suf[i] = lo_suf[i + 1] + lo[i];
    hi_suf[i] = hi_suf[i + 1] + hi[i];
  }
  std::function<void(std::size_t, long)> go = [&](std::size_t i, long sum) {
    if (i == d) {
      if (sum == 0) f(k);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      const long rest = sum + v;
      if (rest + lo_suf[i + 1] > 0 || rest + hi_suf[i + 1] < 0) continue;
      k[i] = v;
      go(i + 1, rest);
    }
  };
  go(0, 0);
}

// Ordinary coefficients of I_alpha(2x) = sum_j x^(2j+|alpha|) / (j! (j+|alpha|)!) up to x^m.
QPoly bessel_2x(long alpha, long m) {
  alpha = std::labs(alpha);
  std::vector<Rational> co(std::size_t(m) + 1, Rational(0));
  for (long j = 0; 2 * j + alpha <= m; ++j) co[std::size_t(2 * j + alpha)] = recip_factorial(j) * recip_factorial(j + alpha);
  return QPoly(co);
}

QPoly truncate(const QPoly& p, long m) {
  std::vector<Rational> co;
  for (long i = 0; i <= std::min<long>(p.degree(), m); ++i) co.push_back(p.coeff(std::size_t(i)));
  return QPoly(co);
}

// m! [x^m] det(entries), entries given as polynomials in x.
Integer egf_det_coefficient(const Matrix<QPoly>& M, long m) {
  QPoly d = det(M);
  Rational v = d.coeff(std::size_t(m)) * Rational(factorial(m));
  if (v.get_den() != 1) throw NumericGuardError("egf determinant: coefficient is not integral");
  return v.get_num();
}

constexpr long double kPi = 3.141592653589793238462643383279502884L;

Integer round_guarded(long double v, const char* who) {
  const long double r = std::round(v);
  if (std::fabs(v - r) > 1e-6L || !std::isfinite(v))
    throw NumericGuardError(std::string(who) + ": trigonometric sum is not close to an integer");
  Integer out;
  mpz_set_d(out.get_mpz_t(), static_cast<double>(r));
  if (std::fabs(r) > 9.0e15L) throw NumericGuardError(std::string(who) + ": value exceeds the exact double range");
  return out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t d) {
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int perm_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

void check_affineC(const Point& a, const Point& e, long N, long m, const char* who) {
  check_dims(a, e, who);
  if (N < 1 || m < 0) fail_pre(std::string(who) + ": need N >= 1 and m >= 0");
  for (const Point* p : {&a, &e})
    if (!strictly_decreasing(*p) || p->front() >= N || p->back() <= 0)
      fail_pre(std::string(who) + ": points must satisfy N > x_1 > ... > x_d > 0");
}

void check_affineA(const Point& a, const Point& e, long N, const char* who) {
  check_dims(a, e, who);
  if (N < 1) fail_pre(std::string(who) + ": need N >= 1");
  for (const Point* p : {&a, &e})
    if (!strictly_decreasing(*p) || p->back() <= p->front() - N)
      fail_pre(std::string(who) + ": points must satisfy x_1 > ... > x_d > x_1 - N");
}

}  // namespace

// ---------------------------------------------------------------------------

void ChamberSpec::validate() const {
  if (d < 1) fail_pre("chamber: dimension d >= 1 required");
  const bool affine = group == ChamberGroup::AffineA || group == ChamberGroup::AffineC;
  if (affine && N < 1) fail_pre("chamber: affine groups need N >= 1");
  if ((group == ChamberGroup::C || group == ChamberGroup::AffineC) && steps == StepFamily::Unit)
    fail_pre("chamber: positive unit steps are not invariant under the type C group");
}

bool ChamberSpec::contains(const Point& x) const {
  if (x.size() != d) return false;
  if (!strictly_decreasing(x)) return false;
  switch (group) {
    case ChamberGroup::A: return true;
    case ChamberGroup::AffineA: return x.back() > x.front() - N;
    case ChamberGroup::C: return x.back() > 0;
    case ChamberGroup::AffineC: return x.back() > 0 && x.front() < N;
  }
  return false;
}

Restriction ChamberSpec::restriction() const {
  Restriction r;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Point h(d, 0);
    h[i] = 1;
    h[i + 1] = -1;
    r.and_halfspace(h, 0, true);
  }
  Point first(d, 0), last(d, 0);
  first[0] = 1;
  last[d - 1] = 1;
  switch (group) {
    case ChamberGroup::A: break;
    case ChamberGroup::AffineA: {
      Point h = last - first;
      if (d == 1) break;
      r.and_halfspace(h, -N, true);
      break;
    }
    case ChamberGroup::C: r.and_halfspace(last, 0, true); break;
    case ChamberGroup::AffineC:
      r.and_halfspace(last, 0, true);
      r.and_halfspace(Point(d, 0) - first, -N, true);
      break;
  }
  return r;
}

StepSet ChamberSpec::step_set() const {
  switch (steps) {
    case StepFamily::Unit: return StepSet::simple(d);
    case StepFamily::UnitPm: return StepSet::pm_unit(d);
    case StepFamily::DiagPm: return StepSet::diag_pm(d);
  }
  return {};
}

// ---------------------------------------------------------------------------

Integer multinomial_count(const Point& a, const Point& e) {
  check_dims(a, e, "multinomial_count");
  std::vector<long> parts;
  for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(e[i] - a[i]);
  return multinomial(parts);
}

Integer hyperplane_bound(const std::vector<long>& mu, const std::vector<long>& c) {
  if (c.size() != mu.size() + 1) fail_pre("hyperplane_bound: need c_0..c_d and mu_1..mu_d");
  long slack = c[0], total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) fail_pre("hyperplane_bound: mu_i must be nonnegative");
    slack -= mu[i] * c[i + 1];
  }
  if (slack < 0) fail_pre("hyperplane_bound: need c_0 >= sum mu_i c_i");
  for (long x : c) {
    if (x < 0) return 0;
    total += x;
  }
  std::vector<long> parts(c);
  parts[0] += 1;
  Rational v(Integer(slack + 1) * multinomial(parts), Integer(1 + total));
  v.canonicalize();
  if (v.get_den() != 1) throw NumericGuardError("hyperplane_bound: quotient is not integral");
  return v.get_num();
}

Integer free_walks(StepFamily s, const Point& a, const Point& e, long m) {
  check_dims(a, e, "free_walks");
  if (m < 0) return 0;
  switch (s) {
    case StepFamily::Unit: {
      long total = 0;
      for (std::size_t i = 0; i < a.size(); ++i) total += e[i] - a[i];
      return total == m ? multinomial_count(a, e) : Integer(0);
    }
    case StepFamily::DiagPm: {
      Integer r = 1;
      for (std::size_t i = 0; i < a.size() && r != 0; ++i) r *= binom_half(m, m + e[i] - a[i]);
      return r;
    }
    case StepFamily::UnitPm: {
      // m! [x^m] prod_i I_{e_i - a_i}(2x): each coordinate's walk is
      // interleaved with the others.
      QPoly prod(1);
      for (std::size_t i = 0; i < a.size(); ++i) prod = truncate(prod * bessel_2x(e[i] - a[i], m), m);
      Rational v = prod.coeff(std::size_t(m)) * Rational(factorial(m));
      return v.get_num();
    }
  }
  return 0;
}

Integer signed_reflection_sum(const ChamberSpec& spec, const Point& A, const Point& E, long m) {
  spec.validate();
  if (spec.group == ChamberGroup::AffineA || spec.group == ChamberGroup::AffineC)
    fail_pre("signed_reflection_sum: only finite groups have a finite sum");
  if (A.size() != spec.d || E.size() != spec.d) fail_pre("signed_reflection_sum: points must have dimension d");
  if (!spec.contains(A) || !spec.contains(E))
    fail_pre("signed_reflection_sum: A and E must lie strictly inside the chamber");
  if (spec.steps == StepFamily::DiagPm && !same_parity(A))
    fail_pre("signed_reflection_sum: diagonal steps need all coordinates of A of one parity");
  const std::size_t d = spec.d;
  const bool signed_perms = spec.group == ChamberGroup::C;
  Integer total = 0;
  for (const auto& p : permutations(d)) {
    const int sp = perm_sign(p);
    const std::uint32_t sign_masks = signed_perms ? (1u << d) : 1u;
    for (std::uint32_t mask = 0; mask < sign_masks; ++mask) {
      Point wA(d);
      int s = sp;
      for (std::size_t i = 0; i < d; ++i) {
        const bool flip = mask & (1u << i);
        wA[i] = flip ? -A[p[i]] : A[p[i]];
        if (flip) s = -s;
      }
      Integer c = free_walks(spec.steps, wA, E, m);
      if (s > 0) total += c;
      else total -= c;
    }
  }
  return total;
}

Integer typeA_det(const Point& a, const Point& e) {
  check_dims(a, e, "typeA_det");
  if (!weakly_decreasing(a) || !weakly_decreasing(e)) fail_pre("typeA_det: a and e must be weakly decreasing");
  const std::size_t d = a.size();
  long total = 0;
  for (std::size_t i = 0; i < d; ++i) total += e[i] - a[i];
  if (total < 0) return 0;
  auto M = zero_matrix<Rational>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) M[i][j] = recip_factorial(e[i] - a[j] - long(i) + long(j));
  Rational v = det(M) * Rational(factorial(total));
  return v.get_num();
}

Integer hook_formula(const std::vector<long>& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1])) fail_pre("hook_formula: lambda must be a partition");
  long n = 0;
  for (long x : lambda) n += x;
  Integer hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (long j = 0; j < lambda[i]; ++j) {
      long below = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
      hooks *= (lambda[i] - j - 1) + below + 1;
    }
  const Integer f = factorial(n);
  if (f % hooks != 0) throw NumericGuardError("hook_formula: quotient is not integral");
  return f / hooks;
}

Integer lock_step_det(const Point& a, const Point& e, long m) {
  check_dims(a, e, "lock_step_det");
  if (m < 0) fail_pre("lock_step_det: m must be nonnegative");
  if (!strictly_decreasing(a) || !strictly_decreasing(e)) fail_pre("lock_step_det: points must strictly decrease");
  if (!same_parity(a) || !same_parity(e)) fail_pre("lock_step_det: coordinates of a point must share one parity");
  const std::size_t d = a.size();
  auto M = zero_matrix<Integer>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) M[i][j] = binom_half(m, m + e[i] - a[j]);
  return det(M);
}

Integer typeC_det(const Point& a, const Point& e, long m) {
  check_dims(a, e, "typeC_det");
  if (m < 0) fail_pre("typeC_det: m must be nonnegative");
  if (!strictly_decreasing(a) || !strictly_decreasing(e) || a.back() <= 0 || e.back() <= 0)
    fail_pre("typeC_det: points must satisfy x_1 > ... > x_d > 0");
  if (!same_parity(a) || !same_parity(e)) fail_pre("typeC_det: coordinates of a point must share one parity");
  const std::size_t d = a.size();
  auto M = zero_matrix<Integer>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) M[i][j] = binom_half(m, m + e[i] - a[j]) - binom_half(m, m + e[i] + a[j]);
  return det(M);
}

// ---------------------------------------------------------------------------

Integer affineA_count(const Point& a, const Point& e, long N) {
  check_affineA(a, e, N, "affineA_count");
  const std::size_t d = a.size();
  long total = 0;
  for (std::size_t i = 0; i < d; ++i) total += e[i] - a[i];
  if (total < 0) return 0;
  const long amin = *std::min_element(a.begin(), a.end()), amax = *std::max_element(a.begin(), a.end());
  // A product term needs every argument e_i - a_j + k_i N in [0, total], as
  // the arguments add up to total.
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = ceil_div(amin - e[i], N);
    hi[i] = floor_div(total + amax - e[i], N);
  }
  Rational sum = 0;
  for_each_balanced(lo, hi, [&](const std::vector<long>& k) {
    auto M = zero_matrix<Rational>(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M[i][j] = recip_factorial(e[i] - a[j] + k[i] * N);
    sum += det(M);
  });
  Rational v = sum * Rational(factorial(total));
  if (v.get_den() != 1) throw NumericGuardError("affineA_count: result is not integral");
  return v.get_num();
}

Integer affineA_pm_egf(const Point& a, const Point& e, long N, long m) {
  check_affineA(a, e, N, "affineA_pm_egf");
  if (m < 0) fail_pre("affineA_pm_egf: m must be nonnegative");
  const std::size_t d = a.size();
  const long emin = *std::min_element(e.begin(), e.end()), emax = *std::max_element(e.begin(), e.end());
  // I_alpha(2x) starts at x^|alpha|, so row i needs |e_j - a_i + k_i N| <= m.
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = ceil_div(-m - emax + a[i], N);
    hi[i] = floor_div(m - emin + a[i], N);
  }
  QPoly sum;
  for_each_balanced(lo, hi, [&](const std::vector<long>& k) {
    auto M = zero_matrix<QPoly>(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M[i][j] = bessel_2x(e[j] - a[i] + N * k[i], m);
    sum += truncate(det(M), m);
  });
  Rational v = sum.coeff(std::size_t(m)) * Rational(factorial(m));
  if (v.get_den() != 1) throw NumericGuardError("affineA_pm_egf: result is not integral");
  return v.get_num();
}

Integer affineA_lockstep(const Point& a, const Point& e, long N, long m) {
  check_affineA(a, e, N, "affineA_lockstep");
  if (m < 0) fail_pre("affineA_lockstep: m must be nonnegative");
  if (!same_parity(a) || !same_parity(e)) fail_pre("affineA_lockstep: coordinates of a point must share one parity");
  const std::size_t d = a.size();
  if ((m + e[0] - a[0]) % 2 != 0) return 0;
  // x_1 - x_d stays even, so the alcove of width N is the one of even width
  // 2h with h = ceil(N / 2); the k-sum is written for the latter.
  const long h = (N + 1) / 2;
  const long emin = *std::min_element(e.begin(), e.end()), emax = *std::max_element(e.begin(), e.end());
  std::vector<long> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    // column j needs 0 <= (m + e_i - a_j)/2 + h k_j <= m for some i
    lo[j] = ceil_div(-(m + emax - a[j]) / 2, h);
    hi[j] = floor_div(m - (m + emin - a[j]) / 2, h);
  }
  Integer sum = 0;
  for_each_balanced(lo, hi, [&](const std::vector<long>& k) {
    auto M = zero_matrix<Integer>(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M[i][j] = binom(m, (m + e[i] - a[j]) / 2 + h * k[j]);
    sum += det(M);
  });
  return sum;
}

Integer strip_walks(long a, long e, long N, long m) {
  if (m < 0) fail_pre("strip_walks: m must be nonnegative");
  if (a <= 0 || a >= N || e <= 0 || e >= N) return 0;
  std::vector<Integer> cur(std::size_t(N + 1), Integer(0)), nxt;
  cur[std::size_t(a)] = 1;
  for (long s = 0; s < m; ++s) {
    nxt.assign(std::size_t(N + 1), Integer(0));
    for (long x = 1; x < N; ++x) {
      if (cur[std::size_t(x)] == 0) continue;
      if (x + 1 < N) nxt[std::size_t(x + 1)] += cur[std::size_t(x)];
      if (x - 1 > 0) nxt[std::size_t(x - 1)] += cur[std::size_t(x)];
    }
    cur.swap(nxt);
  }
  return cur[std::size_t(e)];
}

Integer affineC_pm(const Point& a, const Point& e, long N, long m) {
  check_affineC(a, e, N, m, "affineC_pm");
  const std::size_t d = a.size();
  auto M = zero_matrix<QPoly>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // (1/N) sum_r sin(pi r e_i / N) sin(pi r a_j / N) (2 cos(pi r / N))^n
      // is the coefficient of x^n/n! in the entry.
      std::vector<Rational> co;
      for (long n = 0; n <= m; ++n) {
        long double s = 0;
        for (long r = 0; r < 2 * N; ++r) {
          const long double t = kPi * r / N;
          s += std::sin(t * e[i]) * std::sin(t * a[j]) * std::pow(2 * std::cos(t), (long double)n);
        }
        co.push_back(Rational(round_guarded(s / N, "affineC_pm")) * recip_factorial(n));
      }
      M[i][j] = QPoly(co);
    }
  return egf_det_coefficient(M, m);
}

Integer affineC_lockstep(const Point& a, const Point& e, long N, long m) {
  check_affineC(a, e, N, m, "affineC_lockstep");
  if (!same_parity(a) || !same_parity(e)) fail_pre("affineC_lockstep: coordinates of a point must share one parity");
  const std::size_t d = a.size();
  auto M = zero_matrix<Integer>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long double s = 0;
      for (long r = 0; r < 4 * N; ++r) {
        const long double t = kPi * r / N;
        s += std::sin(t * e[i]) * std::sin(t * a[j]) * std::pow(std::cos(t), (long double)m);
      }
      M[i][j] = round_guarded(std::ldexp(s, int(m) - 1) / N, "affineC_lockstep");
    }
  return det(M);
}

}  // namespace latpath
