#pragma once
// Formally orthogonal polynomials: the three-term recurrence, moments as
// weighted Motzkin path counts, Hankel determinants, and the way back from
// moments to the recurrence.

#include <string>
#include <vector>

#include "latpath/algebra.hpp"
#include "latpath/motzkin.hpp"

namespace latpath {

// x p_n = p_{n+1} + b_n p_n + lambda_n p_{n-1}, stored like a Motzkin
// weighting: b[n] = b_n, lambda[n-1] = lambda_n.
template <class R>
using ThreeTermSpec = MotzkinWeighting<R>;

template <class R>
Poly<R> poly_from_recurrence(const ThreeTermSpec<R>& s, int n) {
  if (n < 0) fail_pre("poly_from_recurrence: n >= 0 required");
  if (s.height() < n - 1) fail_pre("poly_from_recurrence: recurrence too short");
  return shifted_orthogonal_poly(s, 0, n);
}

IPoly chebyshev_u(int n);

// mu_n: weighted Motzkin paths from height 0 back to 0 in n steps.
template <class R>
R moment(const ThreeTermSpec<R>& s, int n) {
  if (n < 0) fail_pre("moment: n >= 0 required");
  const int k = n / 2;
  if (s.height() < k) fail_pre("moment: recurrence too short for this moment");
  ThreeTermSpec<R> cut{std::vector<R>(s.b.begin(), s.b.begin() + k + 1),
                       std::vector<R>(s.lambda.begin(), s.lambda.begin() + k)};
  return strip_count_transfer(0, 0, k, n, cut);
}

template <class R>
std::vector<R> moments(const ThreeTermSpec<R>& s, int count) {
  std::vector<R> mu;
  for (int n = 0; n < count; ++n) mu.push_back(moment(s, n));
  return mu;
}

// L(f) for the functional with the given moments.
template <class R>
R apply_functional(const std::vector<R>& mu, const Poly<R>& f) {
  if (f.degree() >= int(mu.size())) fail_pre("functional: not enough moments");
  R acc(0);
  for (int i = 0; i <= f.degree(); ++i) acc += f.coeff(std::size_t(i)) * mu[std::size_t(i)];
  return acc;
}

// L(x^n p_k p_l), expanding the product against the moments of s.
template <class R>
R generalized_moment(const ThreeTermSpec<R>& s, int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) fail_pre("generalized_moment: indices must be nonnegative");
  Poly<R> f = Poly<R>::monomial(R(1), std::size_t(n)) * poly_from_recurrence(s, k) * poly_from_recurrence(s, l);
  const int deg = n + k + l;
  if (s.height() < deg / 2) fail_pre("generalized_moment: recurrence too short");
  return apply_functional(moments(s, deg + 1), f);
}

// det (mu_{i+j})_{0 <= i, j <= n}; Delta_{-1} = 1.
template <class R>
R hankel_det(const std::vector<R>& mu, int n) {
  if (n < 0) return R(1);
  if (int(mu.size()) < 2 * n + 1) fail_pre("hankel_det: not enough moments");
  auto m = zero_matrix<R>(std::size_t(n) + 1, std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[std::size_t(i)][std::size_t(j)] = mu[std::size_t(i + j)];
  return det(m);
}

// The Hankel determinant with its last row shifted up by one moment.
Rational hankel_chi(const std::vector<Rational>& mu, int n);

// b_0..b_{n_max}, lambda_1..lambda_{n_max} from mu_0..mu_{2 n_max + 1}.
// A vanishing Hankel determinant means no orthogonal sequence exists.
ThreeTermSpec<Rational> recover_recurrence(const std::vector<Rational>& mu, int n_max);

// p_n as Delta_{n-1}^{-1} times the Hankel determinant with last row 1, x, ..., x^n.
QPoly poly_from_moments(const std::vector<Rational>& mu, int n);

// The Jacobi continued fraction 1/(1 - b_0 z - lambda_1 z^2/(1 - b_1 z - ...)).
template <class R>
TruncSeries<R> moment_jfraction(const ThreeTermSpec<R>& s, int order) {
  if (order < 0) fail_pre("moment_jfraction: order >= 0 required");
  const int k = order / 2;
  if (s.height() < k) fail_pre("moment_jfraction: recurrence too short");
  MotzkinWeighting<Poly<R>> w;
  for (int h = 0; h <= k; ++h) {
    w.b.push_back(Poly<R>::monomial(s.b_at(h), 1));
    if (h > 0) w.lambda.push_back(Poly<R>::monomial(s.lambda_at(h), 2));
  }
  return cf_series<R>(w, k, order);
}

}  // namespace latpath
