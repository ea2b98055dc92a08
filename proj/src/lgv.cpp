#include "latpath/lgv.hpp"

namespace latpath {

std::pair<Rational, Rational> minor_summation_sides(const Matrix<Rational>& M, const Matrix<Rational>& H,
                                                    const Matrix<Rational>& A) {
  const std::size_t n = M.size();
  if (n == 0) fail_pre("minor summation: M needs at least one row");
  const std::size_t p = M[0].size();
  if (H.size() != n) fail_pre("minor summation: H needs as many rows as M");
  const std::size_t m = H.empty() ? 0 : H[0].size();
  for (const auto& row : M)
    if (row.size() != p) fail_pre("minor summation: M is not rectangular");
  for (const auto& row : H)
    if (row.size() != m) fail_pre("minor summation: H is not rectangular");
  if ((n + m) % 2 || m > n || n - m > p) fail_pre("minor summation: need n + m even and 0 <= n - m <= p");
  if (A.size() != p) fail_pre("minor summation: A must be p x p");
  for (std::size_t i = 0; i < p; ++i) {
    if (A[i].size() != p) fail_pre("minor summation: A must be p x p");
    for (std::size_t j = 0; j < p; ++j)
      if (A[i][j] != -A[j][i]) fail_pre("minor summation: A must be skew-symmetric");
  }
  if (p > 30) fail_pre("minor summation: p limited to 30");

  const std::size_t r = n - m;
  Rational lhs = 0;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    if (std::size_t(__builtin_popcount(mask)) != r) continue;
    std::vector<std::size_t> K;
    for (std::size_t k = 0; k < p; ++k)
      if (mask & (1u << k)) K.push_back(k);
    auto AK = zero_matrix<Rational>(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) AK[i][j] = A[K[i]][K[j]];
    Rational pf = pfaffian(AK);
    if (pf == 0) continue;
    auto D = zero_matrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < r; ++j) D[i][j] = M[i][K[j]];
      for (std::size_t j = 0; j < m; ++j) D[i][r + j] = H[i][j];
    }
    lhs += pf * det(D);
  }

  auto MAMt = mat_mul(mat_mul(M, A), transpose(M));
  auto big = zero_matrix<Rational>(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) big[i][j] = MAMt[i][j];
    for (std::size_t j = 0; j < m; ++j) {
      big[i][n + j] = H[i][j];
      big[n + j][i] = -H[i][j];
    }
  }
  Rational rhs = pfaffian(big);
  if ((m * (m - 1) / 2) % 2) rhs = -rhs;
  return {lhs, rhs};
}

bool minor_summation_check(const Matrix<Rational>& M, const Matrix<Rational>& H, const Matrix<Rational>& A) {
  auto [l, r] = minor_summation_sides(M, H, A);
  return l == r;
}

void Shape::validate() const {
  const std::size_t n = lambda.size();
  if (mu.size() != n || a.size() != n || b.size() != n) fail_pre("shape: lambda, mu, a, b need equal lengths");
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] < mu[i]) fail_pre("shape: lambda_i >= mu_i violated");
    if (a[i] < b[i]) fail_pre("shape: a_i >= b_i violated");
    if (i + 1 < n) {
      if (lambda[i] < lambda[i + 1] || mu[i] < mu[i + 1]) fail_pre("shape: lambda and mu must be weakly decreasing");
      if (a[i] > a[i + 1] || b[i] > b[i + 1]) fail_pre("shape: a and b must be weakly increasing");
    }
  }
}

long Shape::cells() const {
  long c = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) c += lambda[i] - mu[i];
  return c;
}

namespace {

long row_offset(const Shape& sh, std::size_t i, std::size_t j) {
  return sh.lambda[i] - sh.mu[j] - long(i) + long(j);
}

}  // namespace

Integer ssyt_count(const Shape& sh) {
  sh.validate();
  const std::size_t n = sh.rows();
  auto m = zero_matrix<Integer>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long k = row_offset(sh, i, j);
      m[i][j] = binom(sh.a[i] - sh.b[j] + k, k);
    }
  return det(m);
}

IPoly ssyt_gf(const Shape& sh) {
  sh.validate();
  if (!sh.b.empty() && sh.b[0] < 0) fail_pre("ssyt_gf: lower bounds must be nonnegative");
  const std::size_t n = sh.rows();
  auto m = zero_matrix<IPoly>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long k = row_offset(sh, i, j);
      if (k < 0) continue;
      m[i][j] = qbinom(sh.a[i] - sh.b[j] + k, k).shifted(std::size_t(sh.b[j] * k));
    }
  return det(m);
}

std::vector<Tableau> ssyt_enumerate(const Shape& sh) {
  sh.validate();
  const std::size_t n = sh.rows();
  Tableau t(n);
  for (std::size_t i = 0; i < n; ++i) t[i].assign(std::size_t(sh.lambda[i] - sh.mu[i]), 0);
  std::vector<Tableau> out;
  // Entry above column c of row i, if that cell exists.
  auto above = [&](std::size_t i, long c) -> std::optional<long> {
    if (i == 0 || c <= sh.mu[i - 1] || c > sh.lambda[i - 1]) return std::nullopt;
    return t[i - 1][std::size_t(c - sh.mu[i - 1] - 1)];
  };
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t pos) {
    if (i == n) {
      out.push_back(t);
      return;
    }
    if (pos == t[i].size()) {
      go(i + 1, 0);
      return;
    }
    const long c = sh.mu[i] + long(pos) + 1;
    long lo = sh.b[i];
    if (pos > 0) lo = std::max(lo, t[i][pos - 1]);
    if (auto up = above(i, c)) lo = std::max(lo, *up + 1);
    for (long v = lo; v <= sh.a[i]; ++v) {
      t[i][pos] = v;
      go(i, pos + 1);
    }
  };
  go(0, 0);
  return out;
}

std::vector<Path> ssyt_to_paths(const Shape& sh, const Tableau& t) {
  sh.validate();
  if (t.size() != sh.rows()) fail_pre("ssyt_to_paths: tableau has the wrong number of rows");
  std::vector<Path> paths;
  for (std::size_t i = 0; i < sh.rows(); ++i) {
    const long row = long(i) + 1;
    Path p{{sh.mu[i] - row, sh.b[i]}, {}};
    long y = sh.b[i];
    for (long e : t[i]) {
      if (e < y || e > sh.a[i]) fail_pre("ssyt_to_paths: entries out of order or out of bounds");
      for (; y < e; ++y) p.steps.push_back({0, 1});
      p.steps.push_back({1, 0});
    }
    for (; y < sh.a[i]; ++y) p.steps.push_back({0, 1});
    paths.push_back(std::move(p));
  }
  return paths;
}

Tableau paths_to_ssyt(const Shape& sh, const std::vector<Path>& paths) {
  Tableau t;
  for (const auto& p : paths) {
    std::vector<long> row;
    long y = p.start.at(1);
    for (const auto& s : p.steps) {
      if (s == Point{1, 0}) row.push_back(y);
      else y += s.at(1);
    }
    t.push_back(std::move(row));
  }
  (void)sh;
  return t;
}

namespace {

std::vector<long> conjugate(const std::vector<long>& lambda) {
  std::vector<long> c;
  for (long j = 1; !lambda.empty() && j <= lambda[0]; ++j) {
    long cnt = 0;
    for (long l : lambda) cnt += l >= j;
    c.push_back(cnt);
  }
  return c;
}

void check_partition(const std::vector<long>& lambda, long a) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]))
      fail_pre("hook_content: lambda must be a partition");
  }
  long rows = 0;
  for (long l : lambda) rows += l > 0;
  if (a < rows) fail_pre("hook_content: a must be at least the number of rows");
}

}  // namespace

Integer hook_content(const std::vector<long>& lambda, long a) {
  check_partition(lambda, a);
  const auto conj = conjugate(lambda);
  Rational prod = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (long j = 1; j <= lambda[i]; ++j) {
      const long content = j - long(i) - 1;
      const long hook = lambda[i] - j + conj[std::size_t(j - 1)] - long(i);
      prod *= frac(a + content, hook);
    }
  if (prod.get_den() != 1) throw NumericGuardError("hook_content: product is not an integer");
  return prod.get_num();
}

IPoly hook_content_gf(const std::vector<long>& lambda, long a) {
  check_partition(lambda, a);
  const auto conj = conjugate(lambda);
  IPoly num(1), den(1);
  auto one_minus_q = [](long e) { return IPoly(1) - IPoly::monomial(Integer(1), std::size_t(e)); };
  long shift = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    shift += long(i + 1) * lambda[i];
    for (long j = 1; j <= lambda[i]; ++j) {
      num *= one_minus_q(a + j - long(i) - 1);
      den *= one_minus_q(lambda[i] - j + conj[std::size_t(j - 1)] - long(i));
    }
  }
  return num.exact_div(den).shifted(std::size_t(shift));
}

}  // namespace latpath
