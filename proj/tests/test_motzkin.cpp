#include <functional>
#include <random>

#include "doctest.h"
#include "latpath/motzkin.hpp"
#include "latpath/path_core.hpp"

using namespace latpath;

namespace {

Integer oracle_steps(const StepSet& st, long a, long b, long c, long d) {
  return oracle_count({{a, b}, {c, d}, st, Restriction::halfspace({0, 1}, 0), {}});
}

// Weighted Motzkin oracle in the strip 0 <= y <= k with n steps.
template <class R>
R oracle_strip(int r, int s, int k, int n, const MotzkinWeighting<R>& w) {
  PathQuery q{{0, r}, {n, s}, StepSet::motzkin(), Restriction::band({0, 1}, 0, k), {}};
  return oracle_weighted<R>(q, [&](long, const Point& at, int, int step) -> R {
    if (step == 0) return R(1);
    if (step == 1) return w.b_at(int(at[1]));
    return w.lambda_at(int(at[1]));
  });
}

MotzkinWeighting<MPoly> symbolic_weights(int k) {
  MotzkinWeighting<MPoly> w;
  for (int h = 0; h <= k; ++h) w.b.push_back(MPoly::var(std::size_t(2 * h)));
  for (int h = 1; h <= k; ++h) w.lambda.push_back(MPoly::var(std::size_t(2 * h - 1)));
  return w;
}

MotzkinWeighting<IPoly> constant_z_weights(IPoly b, IPoly l, int k) {
  return MotzkinWeighting<IPoly>::constant(b, l, k);
}

}  // namespace

TEST_CASE("closed-form counts") {
  CHECK(motzkin_count(0, 0, 4, 0) == 9);
  CHECK(schroeder_count(0, 0, 4, 0) == 6);
  CHECK(motzkin_count(0, 0, 0, 0) == 1);
  CHECK(schroeder_count(0, 0, 0, 0) == 1);
  CHECK_THROWS_AS(motzkin_count(0, -1, 2, 0), PreconditionError);
  for (long a = 0; a <= 6; ++a)
    for (long c = a; c <= 6; ++c)
      for (long b = 0; b <= 4; ++b)
        for (long d = 0; d <= 4; ++d) {
          CHECK(motzkin_count(a, b, c, d) == oracle_steps(StepSet::motzkin(), a, b, c, d));
          CHECK(schroeder_count(a, b, c, d) == oracle_steps(StepSet::schroeder(), a, b, c, d));
        }
}

TEST_CASE("Motzkin and Schroeder numbers, four ways") {
  CHECK(motzkin_number(5) == 21);
  CHECK(schroeder_number(3) == 22);
  CHECK(little_schroeder(0) == 1);
  CHECK(little_schroeder(3) == 11);
  const int N = 10;
  auto mg = motzkin_gf(N);
  auto sg = schroeder_gf(N);
  auto z = IPoly::var();
  auto mcf = cf_series<Integer>(constant_z_weights(z, z * z, N), std::nullopt, N);
  auto scf = cf_series<Integer>(constant_z_weights(z * z, z * z, 2 * N), std::nullopt, 2 * N);
  const std::vector<long> m_expected{1, 1, 2, 4, 9, 21, 51};
  const std::vector<long> s_expected{1, 2, 6, 22, 90};
  for (int n = 0; n <= N; ++n) {
    Integer m = motzkin_number(n), s = schroeder_number(n);
    if (n < int(m_expected.size())) CHECK(m == m_expected[std::size_t(n)]);
    if (n < int(s_expected.size())) CHECK(s == s_expected[std::size_t(n)]);
    CHECK(mg[std::size_t(n)] == m);
    CHECK(mcf[std::size_t(n)] == m);
    CHECK(sg[std::size_t(n)] == s);
    CHECK(scf[std::size_t(2 * n)] == s);
    CHECK(scf[std::size_t(2 * n + (n < N ? 1 : 0))] == (n < N ? Integer(0) : s));
    CHECK(oracle_steps(StepSet::motzkin(), 0, 0, n, 0) == m);
    CHECK(oracle_steps(StepSet::schroeder(), 0, 0, 2 * n, 0) == s);
    if (n > 0) CHECK(s % 2 == 0);
  }
  CHECK(motzkin_gf(0) == TruncSeries<Integer>::constant(1, 0));
}

TEST_CASE("continued fractions") {
  auto z = IPoly::var();
  // Only level-steps at height 0.
  auto geo = cf_series<Integer>(constant_z_weights(z, z * z, 0), 0, 6);
  for (int n = 0; n <= 6; ++n) CHECK(geo[std::size_t(n)] == 1);
  // Weights with a constant term are refused at infinite depth.
  CHECK_THROWS_AS(cf_series<Integer>(constant_z_weights(IPoly(1), z, 4), std::nullopt, 4), PreconditionError);

  // Finite depth k equals the strip count with b = z, lambda = z^2.
  for (int k = 0; k <= 3; ++k) {
    auto cf = cf_series<Integer>(constant_z_weights(z, z * z, k), k, 9);
    auto w1 = MotzkinWeighting<Integer>::constant(1, 1, k);
    for (int n = 0; n <= 9; ++n) CHECK(cf[std::size_t(n)] == strip_count_transfer(0, 0, k, n, w1));
  }

  // Depth-N truncation ignores weights above height N.
  const int N = 6;
  auto w = constant_z_weights(z, z * z, N + 3);
  auto base = cf_series<Integer>(w, std::nullopt, N);
  for (int h = N + 1; h <= N + 3; ++h) {
    w.b[std::size_t(h)] = IPoly(std::vector<Integer>{0, 7, 3});
    w.lambda[std::size_t(h - 1)] = IPoly(std::vector<Integer>{0, -2});
  }
  CHECK(cf_series<Integer>(w, std::nullopt, N) == base);
  CHECK(cf_series<Integer>(w, N + 3, N) == base);
}

TEST_CASE("peak continued fraction") {
  const int order = 8;
  using P = Poly<MPoly>;
  auto zz = P::monomial(MPoly(1), 2);
  std::vector<P> nu, lam;
  for (int h = 1; h <= order + 1; ++h) {
    nu.push_back(MPoly::var(std::size_t(2 * h)) * zz);
    lam.push_back(MPoly::var(std::size_t(2 * h + 1)) * zz);
  }
  auto cf = rv_peak_cf<MPoly>(nu, lam, order);
  for (int n = 0; 2 * n <= order; ++n) {
    PathQuery q{{0, 0}, {2 * n, 0}, StepSet::dyck(), Restriction::halfspace({0, 1}, 0), {}};
    MPoly o = oracle_weighted<MPoly>(q, [](long, const Point& at, int prev, int step) -> MPoly {
      if (step == 0) return MPoly(1);
      const auto h = std::size_t(at[1]);
      return MPoly::var(prev == 0 ? 2 * h : 2 * h + 1);
    });
    CHECK(cf[std::size_t(2 * n)] == o);
    if (2 * n + 1 <= order) CHECK(cf[std::size_t(2 * n + 1)] == MPoly(0));
  }
  // nu = lambda gives the plain Dyck fraction.
  std::vector<IPoly> same(order + 1, IPoly::monomial(Integer(1), 2));
  auto dy = rv_peak_cf<Integer>(same, same, order);
  auto plain = cf_series<Integer>(constant_z_weights(IPoly(0), IPoly::monomial(Integer(1), 2), order), std::nullopt,
                                  order);
  CHECK(dy == plain);
  std::vector<IPoly> zero(order + 1, IPoly(0));
  CHECK(rv_peak_cf<Integer>(zero, zero, order) == TruncSeries<Integer>::constant(1, order));
}

TEST_CASE("strip counts") {
  auto cat = MotzkinWeighting<Integer>::constant(0, 1, 8);
  auto gf = strip_gf(0, 0, 8, cat, 8);
  const std::vector<long> catalan{1, 1, 2, 5, 14};
  for (int n = 0; n <= 8; ++n) CHECK(gf[std::size_t(n)] == (n % 2 ? 0 : catalan[std::size_t(n / 2)]));
  auto mot1 = strip_gf(0, 0, 1, MotzkinWeighting<Integer>::constant(1, 1, 1), 8);
  for (int n = 0; n <= 8; ++n) CHECK(mot1[std::size_t(n)] == (n == 0 ? 1 : 1L << (n - 1)));
  auto w = MotzkinWeighting<Integer>::constant(1, 1, 2);
  CHECK(strip_count_transfer(0, 0, 2, 4, w) == oracle_strip(0, 0, 2, 4, w));
  CHECK(strip_count_transfer(1, 1, 3, 0, w.constant(1, 1, 3)) == 1);
  CHECK(strip_count_transfer(1, 2, 3, 0, w.constant(1, 1, 3)) == 0);
  CHECK(strip_count_trig(0, 0, 1, 2) == 2);
  CHECK(strip_count_trig(0, 0, 3, 0) == 1);

  // Symbolic weights: the rational function equals the transfer matrix and
  // the oracle coefficient by coefficient.
  for (int k = 0; k <= 4; ++k) {
    auto sw = symbolic_weights(k);
    for (int r = 0; r <= k; ++r)
      for (int s = 0; s <= k; ++s) {
        const int N = (k <= 2) ? 10 : 7;
        auto g = strip_gf(r, s, k, sw, N);
        for (int n = 0; n <= N; ++n) {
          MPoly t = strip_count_transfer(r, s, k, n, sw);
          CHECK(g[std::size_t(n)] == t);
          if (n <= 6) CHECK(t == oracle_strip(r, s, k, n, sw));
        }
      }
  }

  // Random instances with integer weights.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3), kd(0, 4), nd(0, 8);
  for (int it = 0; it < 100; ++it) {
    const int k = kd(rng);
    std::uniform_int_distribution<int> hd(0, k);
    const int r = hd(rng), s = hd(rng), n = nd(rng);
    MotzkinWeighting<Integer> iw;
    for (int h = 0; h <= k; ++h) iw.b.push_back(small(rng));
    for (int h = 1; h <= k; ++h) iw.lambda.push_back(small(rng));
    CHECK(strip_gf(r, s, k, iw, 8)[std::size_t(n)] == strip_count_transfer(r, s, k, n, iw));
  }

  // Wide strips agree with the unbounded fraction, and trig with transfer.
  const int N = 8;
  auto z = IPoly::var();
  auto unbounded = cf_series<Integer>(constant_z_weights(z, z * z, N), std::nullopt, N);
  auto wide = strip_gf(0, 0, N, MotzkinWeighting<Integer>::constant(1, 1, N), N);
  CHECK(wide == unbounded);
  for (int k = 0; k <= 4; ++k)
    for (int r = 0; r <= k; ++r)
      for (int s = 0; s <= k; ++s)
        for (int n = 0; n <= 10; ++n)
          CHECK(strip_count_trig(r, s, k, n) ==
                strip_count_transfer(r, s, k, n, MotzkinWeighting<Integer>::constant(1, 1, k)));
  CHECK_THROWS_AS(strip_count_trig(0, 0, 3, 80), NumericGuardError);
}

TEST_CASE("gambler's ruin") {
  const Rational half(1, 2);
  CHECK(gambler_ruin(1, 2, 1, half, half) == half);
  CHECK_THROWS_AS(gambler_ruin(0, 2, 1, half, half), PreconditionError);
  CHECK_THROWS_AS(gambler_ruin(1, 2, 1, Rational(3, 4), half), PreconditionError);

  // The 12-round play TATBTTAABBBB with a = 2, R = 6 is one admissible path.
  const std::string play = "TATBTTAABBBB";
  long money = 2, ties = 0, wins = 0, losses = 0;
  bool ok = true;
  for (std::size_t i = 0; i < play.size(); ++i) {
    money += play[i] == 'A' ? 1 : play[i] == 'B' ? -1 : 0;
    ties += play[i] == 'T';
    wins += play[i] == 'A';
    losses += play[i] == 'B';
    if (i + 1 < play.size()) ok = ok && money > 0 && money < 6;
  }
  CHECK(ok);
  CHECK(money == 0);
  CHECK((ties == 4 && wins == 3 && losses == 5));

  // Exhaustive play enumeration.
  std::function<Rational(long, long, long, const Rational&, const Rational&, const Rational&)> play_out =
      [&](long m, long R, long rounds, const Rational& pA, const Rational& pB, const Rational& pT) -> Rational {
    if (m == 0) return rounds == 0 ? Rational(1) : Rational(0);
    if (m == R || rounds == 0) return 0;
    return pA * play_out(m + 1, R, rounds - 1, pA, pB, pT) + pB * play_out(m - 1, R, rounds - 1, pA, pB, pT) +
           pT * play_out(m, R, rounds - 1, pA, pB, pT);
  };
  const std::vector<std::pair<Rational, Rational>> probs{
      {Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(1, 2)}, {Rational(2, 5), Rational(1, 5)}};
  for (const auto& [pA, pB] : probs) {
    const Rational pT = 1 - pA - pB;
    for (long R = 2; R <= 5; ++R)
      for (long a = 1; a < R; ++a) {
        Rational total = 0;
        for (long N = 1; N <= 9; ++N) {
          Rational g = gambler_ruin(a, R, N, pA, pB);
          CHECK(g == play_out(a, R, N, pA, pB, pT));
          total += g;
        }
        CHECK(total <= 1);
      }
  }
}
