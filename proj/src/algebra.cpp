#include "latpath/algebra.hpp"

#include <numeric>

namespace latpath {

Integer factorial(long n) {
  if (n < 0) fail_pre("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer binom_poly(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational gen_binom(const Rational& r, long k) {
  if (k < 0) fail_pre("gen_binom: k must be nonnegative");
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= (r - i);
  acc /= Rational(factorial(k));
  return acc;
}

Rational recip_factorial(long m) {
  if (m < 0) return Rational(0);
  return Rational(Integer(1), factorial(m));
}

Integer binom_half(long n, long num) {
  if (num % 2 != 0) return 0;
  return binom(n, num / 2);
}

Integer multinomial(const std::vector<long>& parts) {
  long total = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
  }
  Integer r = factorial(total);
  for (long p : parts) r /= factorial(p);
  return r;
}

IPoly qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return IPoly();
  // Row-by-row q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<IPoly> row{IPoly(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<IPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = IPoly(1);
    next[static_cast<std::size_t>(m)] = IPoly(1);
    for (long j = 1; j < m; ++j) {
      next[std::size_t(j)] = row[std::size_t(j - 1)] + row[std::size_t(j)].shifted(std::size_t(j));
    }
    row = std::move(next);
  }
  return row[std::size_t(k)];
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::var(std::size_t i, unsigned exp) {
  MPoly r;
  if (exp == 0) return MPoly(1);
  Monomial m(i + 1, 0);
  m[i] = static_cast<std::uint16_t>(exp);
  r.t_[m] = 1;
  return r;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : t_) {
    int d = 0;
    for (auto e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

MPoly MPoly::truncated(int deg) const {
  MPoly r;
  for (const auto& [m, c] : t_) {
    int d = 0;
    for (auto e : m) d += e;
    if (d <= deg) r.t_.emplace(m, c);
  }
  return r;
}

std::optional<Integer> MPoly::constant_value() const {
  if (t_.empty()) return Integer(0);
  if (t_.size() == 1 && t_.begin()->first.empty()) return t_.begin()->second;
  return std::nullopt;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) {
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) {
    auto [it, fresh] = t_.emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  MPoly::Monomial m;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      m.assign(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] = ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + mb[i]);
      auto [it, fresh] = r.t_.try_emplace(m);
      it->second += ca * cb;
    }
  }
  for (auto it = r.t_.begin(); it != r.t_.end();) {
    if (it->second == 0) it = r.t_.erase(it);
    else ++it;
  }
  return r;
}

Integer MPoly::evaluate(const std::vector<Integer>& values) const {
  Integer total = 0;
  for (const auto& [m, c] : t_) {
    Integer term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= values.size()) fail_pre("MPoly::evaluate: missing variable value");
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), values[i].get_mpz_t(), m[i]);
      term *= p;
    }
    total += term;
  }
  return total;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    std::string cs = c.get_str();
    bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool any = false;
    if (cs != "1" || m.empty()) {
      os << cs;
      any = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) os << "*";
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Determinants and Pfaffians over Z and Q

namespace detail {

Integer det_bareiss(Matrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational det_gauss(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      result = -result;
    }
    result *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return result;
}

// Skew elimination: Pf(A) = a_01 * Pf(B) with
// B_ij = a_ij - (a_0i a_1j - a_1i a_0j) / a_01 on the remaining indices.
Rational pfaffian_elim(Matrix<Rational> a) {
  Rational result = 1;
  std::size_t n = a.size();
  while (n > 0) {
    std::size_t piv = 1;
    while (piv < n && a[0][piv] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != 1) {
      std::swap(a[1], a[piv]);
      for (auto& row : a) std::swap(row[1], row[piv]);
      result = -result;
    }
    const Rational p = a[0][1];
    result *= p;
    Matrix<Rational> b(n - 2, std::vector<Rational>(n - 2));
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = 2; j < n; ++j)
        b[i - 2][j - 2] = a[i][j] - (a[0][i] * a[1][j] - a[1][i] * a[0][j]) / p;
    a = std::move(b);
    n -= 2;
  }
  return result;
}

}  // namespace detail

}  // namespace latpath
