#include "latpath/orthopoly.hpp"

namespace latpath {

IPoly chebyshev_u(int n) {
  if (n < 0) fail_pre("chebyshev_u: n >= 0 required");
  IPoly u;
  for (int k = 0; 2 * k <= n; ++k) {
    Integer c = binom(n - k, k);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), unsigned(n - 2 * k));
    if (k % 2) c = -c;
    u += IPoly::monomial(c, std::size_t(n - 2 * k));
  }
  return u;
}

Rational hankel_chi(const std::vector<Rational>& mu, int n) {
  if (n < 0) return 0;
  if (int(mu.size()) < 2 * n + 2) fail_pre("hankel_chi: not enough moments");
  auto m = zero_matrix<Rational>(std::size_t(n) + 1, std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[std::size_t(i)][std::size_t(j)] = mu[std::size_t(i + j + (i == n ? 1 : 0))];
  return det(m);
}

ThreeTermSpec<Rational> recover_recurrence(const std::vector<Rational>& mu, int n_max) {
  if (n_max < 0) fail_pre("recover_recurrence: n_max >= 0 required");
  if (int(mu.size()) < 2 * n_max + 2) fail_pre("recover_recurrence: need mu_0..mu_{2 n_max + 1}");
  std::vector<Rational> delta;  // delta[i] = Delta_{i-1}
  delta.push_back(1);
  for (int i = 0; i <= n_max; ++i) {
    Rational d = hankel_det(mu, i);
    if (d == 0) fail_pre("recover_recurrence: Hankel determinant Delta_" + std::to_string(i) + " vanishes");
    delta.push_back(d);
  }
  auto D = [&](int i) -> const Rational& { return delta[std::size_t(i + 1)]; };
  ThreeTermSpec<Rational> s;
  Rational prev_ratio = 0;  // chi_{n-1} / Delta_{n-1}
  for (int n = 0; n <= n_max; ++n) {
    Rational ratio = hankel_chi(mu, n) / D(n);
    s.b.push_back(ratio - prev_ratio);
    prev_ratio = ratio;
    if (n > 0) {
      Rational lam = D(n) * D(n - 2) / (D(n - 1) * D(n - 1));
      s.lambda.push_back(lam);
    }
  }
  return s;
}

QPoly poly_from_moments(const std::vector<Rational>& mu, int n) {
  if (n < 0) fail_pre("poly_from_moments: n >= 0 required");
  if (n == 0) return QPoly(1);
  if (int(mu.size()) < 2 * n) fail_pre("poly_from_moments: need mu_0..mu_{2n-1}");
  const Rational dn1 = hankel_det(mu, n - 1);
  if (dn1 == 0) fail_pre("poly_from_moments: Hankel determinant Delta_" + std::to_string(n - 1) + " vanishes");
  // Expand along the last row: the coefficient of x^j is the signed minor
  // that deletes that row and column j.
  QPoly p;
  for (int j = 0; j <= n; ++j) {
    auto m = zero_matrix<Rational>(std::size_t(n), std::size_t(n));
    for (int i = 0; i < n; ++i) {
      int col = 0;
      for (int c = 0; c <= n; ++c) {
        if (c == j) continue;
        m[std::size_t(i)][std::size_t(col++)] = mu[std::size_t(i + c)];
      }
    }
    Rational minor = det(m);
    if ((n + j) % 2) minor = -minor;
    p += QPoly::monomial(minor / dn1, std::size_t(j));
  }
  return p;
}

}  // namespace latpath
