#pragma once
// Exact arithmetic used by every counting routine: big integers and
// rationals (GMP), dense univariate polynomials, truncated power series,
// sparse multivariate integer polynomials, determinants and Pfaffians.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace latpath {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an operation is called outside its documented domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a floating-point evaluation cannot be trusted to round
// to the exact integer it is supposed to represent.
struct NumericGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_pre(const std::string& msg) {
  throw PreconditionError(msg);
}

// ---------------------------------------------------------------------------
// Scalar combinatorics

Integer factorial(long n);  // n < 0 is a precondition error
Integer binom(long n, long k);  // zero unless 0 <= k <= n
Integer binom_poly(const Integer& n, long k);  // n(n-1)...(n-k+1)/k!, any n
Rational gen_binom(const Rational& r, long k);
Rational recip_factorial(long m);  // 1/m!, and 0 for m < 0
// binom(n, num/2): zero when num is odd.
Integer binom_half(long n, long num);
// (sum parts)! / prod parts!; zero if some part is negative.
Integer multinomial(const std::vector<long>& parts);

// n/d in lowest terms; d != 0.
inline Rational frac(const Integer& n, const Integer& d) {
  if (d == 0) fail_pre("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

// ---------------------------------------------------------------------------
// Ring helpers.  A ring type R must be constructible from long and support
// + - * == .  `ring_inverse` answers whether an element is a unit.

inline std::optional<Integer> ring_inverse(const Integer& a) {
  if (a == 1 || a == -1) return a;
  return std::nullopt;
}
inline std::optional<Rational> ring_inverse(const Rational& a) {
  if (a == 0) return std::nullopt;
  return Rational(1) / a;
}
inline bool ring_is_zero(const Integer& a) { return a == 0; }
inline bool ring_is_zero(const Rational& a) { return a == 0; }

// ---------------------------------------------------------------------------
// Dense univariate polynomial.  Mixing coefficient rings is a compile error:
// there are no cross-type operators.

template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(long v) {  // NOLINT: constants act as ring elements
    if (v != 0) c_.push_back(R(v));
  }
  explicit Poly(const R& v) {
    if (!ring_is_zero(v)) c_.push_back(v);
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& coef, std::size_t deg) {
    std::vector<R> c(deg + 1, R(0));
    c[deg] = coef;
    return Poly(std::move(c));
  }
  static Poly var() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const std::vector<R>& coeffs() const { return c_; }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, Poly a) {
    for (auto& x : a.c_) x = s * x;
    a.trim();
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  // Horner evaluation at an element of another ring S that accepts R.
  template <class S>
  S eval_in(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> r(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = R(long(i)) * c_[i];
    return Poly(std::move(r));
  }

  // x^n p(1/x); requires n >= degree.
  Poly reciprocal(int n) const {
    if (n < degree()) fail_pre("reciprocal: n smaller than degree");
    std::vector<R> r(std::size_t(n) + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[std::size_t(n) - i] = c_[i];
    return Poly(std::move(r));
  }

  // Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<R> r(k, R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  // Exact division; throws if the remainder is nonzero or a leading
  // coefficient division is inexact in R.
  Poly exact_div(const Poly& d) const {
    if (d.is_zero()) fail_pre("polynomial division by zero");
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail_pre("polynomial division by zero");
    std::vector<R> rem = c_;
    std::vector<R> quo;
    const int dd = d.degree();
    if (degree() >= dd) quo.assign(std::size_t(degree() - dd + 1), R(0));
    const R lead = d.leading();
    for (int i = degree(); i >= dd; --i) {
      const R& top = rem[std::size_t(i)];
      if (ring_is_zero(top)) continue;
      R f = divide_exact_scalar(top, lead);
      quo[std::size_t(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) rem[std::size_t(i - dd + j)] -= f * d.c_[std::size_t(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  std::string str(const std::string& var = "q") const;

 private:
  std::vector<R> c_;
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }
  static R divide_exact_scalar(const R& a, const R& b) {
    if constexpr (std::is_same_v<R, Integer>) {
      if (a % b != 0) throw std::domain_error("polynomial division is not exact");
      return a / b;
    } else if constexpr (std::is_same_v<R, Rational>) {
      return a / b;
    } else {
      auto inv = ring_inverse(b);
      if (!inv) throw std::domain_error("leading coefficient is not a unit");
      return a * *inv;
    }
  }
};

template <class R>
inline bool ring_is_zero(const Poly<R>& a) {
  return a.is_zero();
}
template <class R>
inline std::optional<Poly<R>> ring_inverse(const Poly<R>& a) {
  if (a.degree() != 0) return std::nullopt;
  auto inv = ring_inverse(a.coeff(0));
  if (!inv) return std::nullopt;
  return Poly<R>(*inv);
}

template <class R>
std::string Poly<R>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (ring_is_zero(c_[i])) continue;
    std::string cs = to_string(c_[i]);
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) cs = cs.substr(1);
    if (i == 0 || cs != "1") os << cs;
    if (i > 0) {
      if (cs != "1") os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

template <class R>
std::string to_string(const Poly<R>& p) {
  return "(" + p.str("x") + ")";
}

using IPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

inline QPoly to_rational(const IPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return QPoly(std::move(c));
}

// Gaussian polynomial [n choose k]_q; zero outside 0 <= k <= n.
IPoly qbinom(long n, long k);

// ---------------------------------------------------------------------------
// Truncated power series: coefficients 0..order are exact, higher ones are
// unknown.  Binary operations use the smaller of the two orders.

template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(int order = 0) : c_(std::size_t(order) + 1, R(0)), order_(order) {
    if (order < 0) fail_pre("series order must be nonnegative");
  }
  TruncSeries(std::vector<R> coeffs, int order) : TruncSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i <= std::size_t(order); ++i) c_[i] = coeffs[i];
  }
  static TruncSeries constant(const R& v, int order) {
    TruncSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static TruncSeries from_poly(const Poly<R>& p, int order) { return TruncSeries(p.coeffs(), order); }
  // The series z^k (zero if k > order).
  static TruncSeries monomial(const R& coef, int k, int order) {
    TruncSeries s(order);
    if (k <= order) s.c_[std::size_t(k)] = coef;
    return s;
  }

  int order() const { return order_; }
  const R& operator[](std::size_t i) const { return c_.at(i); }
  R& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const {
    return TruncSeries(c_, std::min(order, order_));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend TruncSeries operator*(const R& s, TruncSeries a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  // Multiplicative inverse; the constant term must be a unit of R.
  TruncSeries inverse() const {
    auto inv0 = ring_inverse(c_[0]);
    if (!inv0) fail_pre("series reciprocal: constant term is not invertible");
    TruncSeries r(order_);
    r.c_[0] = *inv0;
    for (int n = 1; n <= order_; ++n) {
      R acc(0);
      for (int k = 1; k <= n; ++k) {
        if (!ring_is_zero(c_[k])) acc += c_[k] * r.c_[n - k];
      }
      r.c_[n] = -(*inv0) * acc;
    }
    return r;
  }
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

  TruncSeries derivative() const {
    TruncSeries r(std::max(order_ - 1, 0));
    for (int i = 1; i <= order_; ++i) r.c_[i - 1] = R(long(i)) * c_[i];
    return r;
  }
  // Multiply by z^k, keeping the order.
  TruncSeries shifted(int k) const {
    TruncSeries r(order_);
    for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
  }
  // Divide by z^k; the first k coefficients must vanish.  Loses k of order.
  TruncSeries unshifted(int k) const {
    for (int i = 0; i < k && i <= order_; ++i)
      if (!ring_is_zero(c_[i])) fail_pre("series is not divisible by z^k");
    TruncSeries r(std::max(order_ - k, 0));
    for (int i = k; i <= order_; ++i) r.c_[i - k] = c_[i];
    return r;
  }
  // p(s) for a polynomial p, with s treated as a series.
  static TruncSeries compose_poly(const Poly<R>& p, const TruncSeries& s) {
    TruncSeries acc(s.order_);
    for (int i = p.degree(); i >= 0; --i) acc = acc * s + constant(p.coeff(std::size_t(i)), s.order_);
    return acc;
  }

 private:
  std::vector<R> c_;
  int order_;
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial with integer coefficients.  Variables are
// indexed 0,1,2,...; used for fully symbolic weight checks.

class MPoly {
 public:
  using Monomial = std::vector<std::uint16_t>;  // exponents, trailing zeros trimmed

  MPoly() = default;
  MPoly(long v) {  // NOLINT
    if (v != 0) t_[Monomial{}] = v;
  }
  explicit MPoly(const Integer& v) {
    if (v != 0) t_[Monomial{}] = v;
  }
  static MPoly var(std::size_t i, unsigned exp = 1);

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::map<Monomial, Integer>& terms() const { return t_; }
  int total_degree() const;
  // Drop every term of total degree above `deg`.
  MPoly truncated(int deg) const;
  std::optional<Integer> constant_value() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& kv : a.t_) kv.second = -kv.second;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Substitute integer values for all variables.
  Integer evaluate(const std::vector<Integer>& values) const;
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::map<Monomial, Integer> t_;
};

inline bool ring_is_zero(const MPoly& a) { return a.is_zero(); }
inline std::optional<MPoly> ring_inverse(const MPoly& a) {
  auto c = a.constant_value();
  if (c && (*c == 1 || *c == -1)) return a;
  return std::nullopt;
}
inline std::string to_string(const MPoly& p) { return "(" + p.str() + ")"; }

// ---------------------------------------------------------------------------
// Matrices, determinants, Pfaffians.

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<R>(rows, std::vector<R>(cols, R(0)));
}

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  auto r = zero_matrix<R>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
  if (a.empty()) return {};
  auto r = zero_matrix<R>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

namespace detail {

inline void check_square(std::size_t n, const std::vector<std::size_t>& row_sizes) {
  for (auto s : row_sizes)
    if (s != n) fail_pre("determinant of a non-square matrix");
}

Integer det_bareiss(Matrix<Integer> m);
Rational det_gauss(Matrix<Rational> m);
Rational pfaffian_elim(Matrix<Rational> m);

// Division-free Laplace expansion with memoisation over column subsets.
template <class R>
R det_laplace(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  if (n > 24) fail_pre("generic determinant limited to size 24");
  // layer[mask] = minor on rows 0..popcount(mask)-1 and the columns in mask
  std::map<std::uint32_t, R> layer{{0u, R(1)}};
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint32_t, R> next;
    for (const auto& [mask, val] : layer) {
      if (ring_is_zero(val)) continue;
      int above = 0;  // columns of mask greater than j, for the sign
      for (int j = int(n) - 1; j >= 0; --j) {
        if (mask & (1u << j)) {
          ++above;
          continue;
        }
        if (ring_is_zero(m[r][std::size_t(j)])) continue;
        R term = m[r][std::size_t(j)] * val;
        auto& slot = next.try_emplace(mask | (1u << j), R(0)).first->second;
        if (above % 2) slot -= term;
        else slot += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((1u << n) - 1);
  return it == layer.end() ? R(0) : it->second;
}

template <class R>
R pfaffian_memo(const Matrix<R>& a, std::uint32_t mask, std::map<std::uint32_t, R>& memo) {
  if (mask == 0) return R(1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int i = __builtin_ctz(mask);
  std::uint32_t rest = mask & ~(1u << i);
  R acc(0);
  int pos = 0;
  for (int j = i + 1; j < 32; ++j) {
    if (!(rest & (1u << j))) continue;
    if (!ring_is_zero(a[std::size_t(i)][std::size_t(j)])) {
      R sub = pfaffian_memo(a, rest & ~(1u << j), memo);
      R term = a[std::size_t(i)][std::size_t(j)] * sub;
      if (pos % 2) acc -= term;
      else acc += term;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

template <class R>
R det(const Matrix<R>& m) {
  std::vector<std::size_t> sizes;
  for (const auto& row : m) sizes.push_back(row.size());
  detail::check_square(m.size(), sizes);
  if constexpr (std::is_same_v<R, Integer>) {
    return detail::det_bareiss(m);
  } else if constexpr (std::is_same_v<R, Rational>) {
    return detail::det_gauss(m);
  } else {
    return detail::det_laplace(m);
  }
}

// Pfaffian of the upper triangle a[i][j], i<j, of an even-sized square array.
// Entries on and below the diagonal are ignored.
template <class R>
R pfaffian(const Matrix<R>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail_pre("pfaffian of a non-square array");
  if (n % 2) fail_pre("pfaffian requires even dimension");
  if (n == 0) return R(1);
  if constexpr (std::is_same_v<R, Integer> || std::is_same_v<R, Rational>) {
    if (n > 6) {
      Matrix<Rational> s(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          s[i][j] = Rational(a[i][j]);
          s[j][i] = -s[i][j];
        }
      Rational v = detail::pfaffian_elim(std::move(s));
      if constexpr (std::is_same_v<R, Integer>) {
        if (v.get_den() != 1) throw std::logic_error("integer pfaffian produced a fraction");
        return v.get_num();
      } else {
        return v;
      }
    }
  }
  if (n > 30) fail_pre("generic pfaffian limited to size 30");
  std::map<std::uint32_t, R> memo;
  return detail::pfaffian_memo(a, (1u << n) - 1, memo);
}

// Full skew-symmetric matrix from the upper triangle.
template <class R>
Matrix<R> skew_completion(const Matrix<R>& a) {
  const std::size_t n = a.size();
  auto s = zero_matrix<R>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s[i][j] = a[i][j];
      s[j][i] = -a[i][j];
    }
  return s;
}

}  // namespace latpath
