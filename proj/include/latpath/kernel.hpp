#pragma once
// Directed walks on the integers with steps (1, b_j) of weight w_j:
// characteristic polynomial, small branches of the kernel, and the
// generating functions of unrestricted and nonnegative walks.
//
// Only symmetric functions of the small branches are ever formed.  They come
// from a factorization of the kernel polynomial into a monic factor of
// degree c (the small roots) and a cofactor, computed by lifting in powers of
// z, so every series stays an ordinary power series over the rationals.

#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

using QSeries = TruncSeries<Rational>;

struct WeightedStep {
  long b;
  Rational w;
};

struct WeightedStepSet1D {
  std::vector<WeightedStep> steps;

  static WeightedStepSet1D unit(const std::vector<long>& jumps);

  long c() const;  // -min b_j, at least 0
  long d() const;  // max b_j, at least 0
  // Sum of the weights of steps with jump j.
  Rational p(long j) const;
  // Nonempty; with `kernel` set, also c >= 1 with p_{-c} != 0.
  void validate(bool kernel) const;
  WeightedStepSet1D reflected() const;  // b -> -b
};

// u^low * body(u).
struct LaurentPoly {
  long low = 0;
  QPoly body;
  Rational coeff(long j) const { return j < low ? Rational(0) : body.coeff(std::size_t(j - low)); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
};

LaurentPoly char_poly(const WeightedStepSet1D& s);

// sum_n z^n (weighted walks of n steps from 0 ending at height k), by
// dynamic programming over heights.
QSeries walk_gf_by_height(const WeightedStepSet1D& s, long k, int order);

// Same for walks never going below 0.
QSeries nonneg_end_height_dp(const WeightedStepSet1D& s, long k, int order);

// The power series root u(z), u(0) = 0, of 1 - z P(u) = 0 when c = 1, by
// Newton iteration.
QSeries small_branch(const WeightedStepSet1D& s, int order);

// u^c - z u^c P(u) = K(u) L(u) with K monic of degree c, K = u^c mod z, and
// L = 1 mod z.  K's roots are the small branches.
struct KernelFactorization {
  long c = 0;
  int order = 0;
  std::vector<QSeries> small;   // small[i] = coefficient of u^i in K, i <= c
  std::vector<QPoly> large;     // large[n] = coefficient of z^n in L
};
KernelFactorization kernel_factorization(const WeightedStepSet1D& s, int order);

// u^c - z sum_k u^c r_k(u) F_k(z) with F_k taken from the dynamic program;
// entry i is the coefficient of u^i.  It agrees with K above.
std::vector<QSeries> kernel_polynomial_from_counts(const WeightedStepSet1D& s, int order);

// Nonnegative walks ending at 0: (-1)^(c-1)/(p_{-c} z) times the product of
// the small branches.
QSeries nonneg_walk_gf(const WeightedStepSet1D& s, int order);
// Nonnegative walks ending at height k: coefficient of u^k in 1/L.
QSeries nonneg_end_height_gf(const WeightedStepSet1D& s, long k, int order);

// Unrestricted walks ending at height k from power sums of the small
// branches (k < c) or, via reflection, of the large ones (k > -d).
QSeries height_gf_from_branches(const WeightedStepSet1D& s, long k, int order);

// Lukasiewicz paths (jumps -1, 0, 1, 2, ...) of length n that return to 0
// without going below it, from the kernel root u = z + u^2.
QSeries lukasiewicz_gf(int order);
Integer lukasiewicz_count(long n);

}  // namespace latpath
