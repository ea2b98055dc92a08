#pragma once
// Non-intersecting path families on finite acyclic graphs: the
// determinant for fixed endpoints, Pfaffians for free endpoints, the minor
// summation identity, and the semistandard tableaux counts they give.
//
// "Non-intersecting" means vertex-disjoint.  Enumeration routines here are
// exponential and meant for cross-checking small systems.

#include <algorithm>
#include <functional>
#include <vector>

#include "latpath/algebra.hpp"
#include "latpath/path_core.hpp"

namespace latpath {

template <class R>
struct WeightedEdge {
  std::size_t from, to;
  R weight;
};

// Directed acyclic graph with ring-valued edge weights.
template <class R>
class Dag {
 public:
  Dag(std::size_t vertices, std::vector<WeightedEdge<R>> edges) : n_(vertices), out_(vertices) {
    std::vector<std::size_t> indeg(n_, 0);
    for (auto& e : edges) {
      if (e.from >= n_ || e.to >= n_) fail_pre("dag: edge endpoint out of range");
      out_[e.from].push_back({e.to, e.weight});
      ++indeg[e.to];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n_; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      topo_.push_back(v);
      for (const auto& [to, w] : out_[v])
        if (--indeg[to] == 0) ready.push_back(to);
    }
    if (topo_.size() != n_) fail_pre("dag: the graph has a directed cycle");
    rank_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) rank_[topo_[i]] = i;
  }

  std::size_t size() const { return n_; }
  const std::vector<std::pair<std::size_t, R>>& out(std::size_t v) const { return out_.at(v); }

  // Path generating functions from u to every vertex.
  std::vector<R> gf_from(std::size_t u) const {
    std::vector<R> g(n_, R(0));
    g.at(u) = R(1);
    for (std::size_t i = rank_[u]; i < n_; ++i) {
      const std::size_t v = topo_[i];
      if (ring_is_zero(g[v])) continue;
      for (const auto& [to, w] : out_[v]) g[to] += g[v] * w;
    }
    return g;
  }
  R path_gf(std::size_t u, std::size_t v) const { return gf_from(u).at(v); }

  // Every path from u ending in `targets`, as (vertex list, weight).
  std::vector<std::pair<std::vector<std::size_t>, R>> paths_from(std::size_t u,
                                                                 const std::vector<std::size_t>& targets) const {
    std::vector<char> is_target(n_, 0);
    for (auto t : targets) is_target.at(t) = 1;
    std::vector<std::pair<std::vector<std::size_t>, R>> out;
    std::vector<std::size_t> cur{u};
    std::function<void(const R&)> go = [&](const R& w) {
      const std::size_t v = cur.back();
      if (is_target[v]) out.push_back({cur, w});
      for (const auto& [to, ew] : out_[v]) {
        cur.push_back(to);
        go(w * ew);
        cur.pop_back();
      }
    };
    go(R(1));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, R>>> out_;
  std::vector<std::size_t> topo_, rank_;
};

// The grid [0,X] x [0,Y] with east and north unit steps; vertex of (x, y)
// is x (Y + 1) + y.  weight(x, y, dir) gives the weight of the step leaving
// (x, y), dir 0 = east, 1 = north.
template <class R>
Dag<R> grid_dag(long X, long Y, const std::function<R(long, long, int)>& weight) {
  if (X < 0 || Y < 0) fail_pre("grid_dag: negative size");
  std::vector<WeightedEdge<R>> edges;
  auto id = [Y](long x, long y) { return std::size_t(x * (Y + 1) + y); };
  for (long x = 0; x <= X; ++x)
    for (long y = 0; y <= Y; ++y) {
      if (x < X) edges.push_back({id(x, y), id(x + 1, y), weight(x, y, 0)});
      if (y < Y) edges.push_back({id(x, y), id(x, y + 1), weight(x, y, 1)});
    }
  return Dag<R>(std::size_t((X + 1) * (Y + 1)), std::move(edges));
}
inline std::size_t grid_vertex(long Y, long x, long y) { return std::size_t(x * (Y + 1) + y); }
template <class R>
Dag<R> unit_grid(long X, long Y) {
  return grid_dag<R>(X, Y, [](long, long, int) { return R(1); });
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

}  // namespace detail

// det (GF(A_j -> E_i)).
template <class R>
R lgv_det(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E) {
  if (A.size() != E.size()) fail_pre("lgv_det: need as many end points as starting points");
  const std::size_t n = A.size();
  auto m = zero_matrix<R>(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto from = g.gf_from(A[j]);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = from.at(E[i]);
  }
  return det(m);
}

// Exhaustive enumeration of vertex-disjoint families.  Each starting point
// in `starts` takes a path to one of `ends` (pairwise distinct, as a
// consequence of disjointness); visit(end_index_per_start, weight)
// is called for each family.
template <class R>
void for_each_disjoint_family(
    const Dag<R>& g, const std::vector<std::size_t>& starts, const std::vector<std::size_t>& ends,
    const std::function<void(const std::vector<std::size_t>&, const R&)>& visit) {
  std::vector<std::vector<std::pair<std::vector<std::size_t>, R>>> options;
  for (auto a : starts) options.push_back(g.paths_from(a, ends));
  std::vector<int> used(g.size(), 0);
  std::vector<std::size_t> end_idx(starts.size());
  std::function<void(std::size_t, const R&)> go = [&](std::size_t i, const R& w) {
    if (i == starts.size()) {
      visit(end_idx, w);
      return;
    }
    for (const auto& [path, pw] : options[i]) {
      bool clash = false;
      for (auto v : path)
        if (used[v]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (auto v : path) used[v] = 1;
      end_idx[i] = std::size_t(std::find(ends.begin(), ends.end(), path.back()) - ends.begin());
      go(i + 1, w * pw);
      for (auto v : path) used[v] = 0;
    }
  };
  go(0, R(1));
}

// Signed sum over sigma of non-intersecting families A_sigma -> E (fixed ends).
template <class R>
R lgv_signed_enumeration(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E) {
  if (A.size() != E.size()) fail_pre("lgv: need as many end points as starting points");
  R total(0);
  for_each_disjoint_family<R>(g, A, E, [&](const std::vector<std::size_t>& ends, const R& w) {
    // Path of start j ends at E[ends[j]]; sigma(ends[j]) = j.
    std::vector<std::size_t> sigma(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) sigma[ends[j]] = j;
    if (detail::permutation_sign(sigma) > 0) total += w;
    else total -= w;
  });
  return total;
}

// Signed sum over families A_sigma -> (E_{k_1}, ..., E_{k_n}), k increasing.
// With only the identity possible this is the plain family count.
template <class R>
R free_end_signed_enumeration(const Dag<R>& g, const std::vector<std::size_t>& A,
                              const std::vector<std::size_t>& E) {
  R total(0);
  for_each_disjoint_family<R>(g, A, E, [&](const std::vector<std::size_t>& ends, const R& w) {
    std::vector<std::size_t> order(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ends[x] < ends[y]; });
    if (detail::permutation_sign(order) > 0) total += w;
    else total -= w;
  });
  return total;
}

// Q(i, j): pairs A_i -> E_k, A_j -> E_l with k < l, minus those with k > l,
// summed as 2 x 2 path determinants.  Skew-symmetric n x n.
template <class R>
Matrix<R> pair_matrix(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E) {
  const std::size_t n = A.size(), p = E.size();
  Matrix<R> e = zero_matrix<R>(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    auto from = g.gf_from(A[i]);
    for (std::size_t k = 0; k < p; ++k) e[i][k] = from.at(E[k]);
  }
  auto Q = zero_matrix<R>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      R acc(0);
      // sum over k < l of e_ik e_jl - e_il e_jk, with running sums over k.
      R prefix_i(0), prefix_j(0);
      for (std::size_t l = 0; l < p; ++l) {
        acc += prefix_i * e[j][l] - prefix_j * e[i][l];
        prefix_i += e[i][l];
        prefix_j += e[j][l];
      }
      Q[i][j] = acc;
      Q[j][i] = -acc;
    }
  return Q;
}

// Q(i, j) by enumerating non-intersecting pairs (k < l counted positively).
template <class R>
R pair_enumeration(const Dag<R>& g, std::size_t Ai, std::size_t Aj, const std::vector<std::size_t>& E) {
  R total(0);
  for_each_disjoint_family<R>(g, {Ai, Aj}, E, [&](const std::vector<std::size_t>& ends, const R& w) {
    if (ends[0] < ends[1]) total += w;
    else total -= w;
  });
  return total;
}

// Pfaffian over free end points.  For odd n a phantom start is appended whose
// pair entries are the total path weights from A_i into E.
template <class R>
R pf_free_endpoints(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E) {
  auto Q = pair_matrix(g, A, E);
  if (A.size() % 2) {
    const std::size_t n = A.size();
    for (auto& row : Q) row.push_back(R(0));
    Q.push_back(std::vector<R>(n + 1, R(0)));
    for (std::size_t i = 0; i < n; ++i) {
      auto from = g.gf_from(A[i]);
      R h(0);
      for (auto e : E) h += from.at(e);
      Q[i][n] = h;
      Q[n][i] = -h;
    }
  }
  return pfaffian(Q);
}

// Ends E_1..E_m fixed for the first m positions, the rest free in Ehat:
// (-1)^binom(m,2) Pf [[Q, H], [-H^t, 0]].
template <class R>
R pf_mixed(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E,
           const std::vector<std::size_t>& Ehat) {
  const std::size_t n = A.size(), m = E.size();
  if (m > n || (m + n) % 2) fail_pre("pf_mixed: need m <= n and m + n even");
  auto Q = pair_matrix(g, A, Ehat);
  auto big = zero_matrix<R>(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) big[i][j] = Q[i][j];
    auto from = g.gf_from(A[i]);
    for (std::size_t j = 0; j < m; ++j) {
      big[i][n + j] = from.at(E[j]);
      big[n + j][i] = -from.at(E[j]);
    }
  }
  R pf = pfaffian(big);
  return ((m * (m - 1) / 2) % 2) ? R(-pf) : pf;
}

// Signed enumeration for the mixed case: position i <= m ends at E_i, the
// remaining positions end in Ehat in increasing order.
template <class R>
R mixed_signed_enumeration(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E,
                           const std::vector<std::size_t>& Ehat) {
  const std::size_t m = E.size();
  std::vector<std::size_t> all_ends(E);
  all_ends.insert(all_ends.end(), Ehat.begin(), Ehat.end());
  R total(0);
  for_each_disjoint_family<R>(g, A, all_ends, [&](const std::vector<std::size_t>& ends, const R& w) {
    std::size_t fixed_hits = 0;
    for (auto k : ends) fixed_hits += k < m;
    if (fixed_hits != m) return;
    std::vector<std::size_t> order(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ends[x] < ends[y]; });
    if (detail::permutation_sign(order) > 0) total += w;
    else total -= w;
  });
  return total;
}

enum class BothFreeCase {
  EvenPairs,    // n even, t^s marks 2s paths
  OddAll,       // n odd, t^s marks s paths
  EvenAll,      // n even, t^s marks s paths
};

// Starting and end points both chosen from subsequences, as a polynomial in t.
template <class R>
Poly<R> pf_both_free(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E,
                     BothFreeCase c) {
  const std::size_t n = A.size();
  const bool odd = n % 2;
  if ((c == BothFreeCase::OddAll) != odd) fail_pre("pf_both_free: case does not match the parity of n");
  using P = Poly<R>;
  auto Q = pair_matrix(g, A, E);
  std::size_t size = n;
  if (c == BothFreeCase::OddAll) size = n + 1;
  if (c == BothFreeCase::EvenAll) size = n + 2;
  std::vector<R> h(n, R(0));
  for (std::size_t i = 0; i < n; ++i) {
    auto from = g.gf_from(A[i]);
    for (auto e : E) h[i] += from.at(e);
  }
  auto M = zero_matrix<P>(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      // 1-based i + j - 1 is odd exactly when the 0-based i + j is odd.
      P entry((i + j) % 2 ? 1L : -1L);
      if (c == BothFreeCase::EvenPairs) {
        entry += P::monomial(Q[i][j], 1);
      } else if (j < n) {
        entry += P::monomial(Q[i][j], 2);
      } else if (j == n) {
        entry += P::monomial(h[i], 1);
      }
      M[i][j] = entry;
    }
  return pfaffian(M);
}

// Exhaustive version: coefficient of t^s sums the signed families of the
// size the case attaches to t^s.
template <class R>
Poly<R> both_free_enumeration(const Dag<R>& g, const std::vector<std::size_t>& A, const std::vector<std::size_t>& E,
                              BothFreeCase c) {
  const std::size_t n = A.size();
  std::vector<R> coeffs(n + 1, R(0));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(A[i]);
    if (c == BothFreeCase::EvenPairs && sub.size() % 2) continue;
    R v = free_end_signed_enumeration(g, sub, E);
    coeffs[c == BothFreeCase::EvenPairs ? sub.size() / 2 : sub.size()] += v;
  }
  return Poly<R>(coeffs);
}

// Both sides of the minor summation identity: the sum over (n-m)-subsets K
// of Pf(A_K) det(M_K | H), and (-1)^binom(m,2) Pf [[M A M^t, H], [-H^t, 0]].
std::pair<Rational, Rational> minor_summation_sides(const Matrix<Rational>& M, const Matrix<Rational>& H,
                                                    const Matrix<Rational>& A);
bool minor_summation_check(const Matrix<Rational>& M, const Matrix<Rational>& H, const Matrix<Rational>& A);

// ---------------------------------------------------------------------------
// Semistandard tableaux of shape lambda/mu with row i entries in [b_i, a_i].

struct Shape {
  std::vector<long> lambda, mu, a, b;
  void validate() const;
  std::size_t rows() const { return lambda.size(); }
  long cells() const;
};

using Tableau = std::vector<std::vector<long>>;  // row i holds columns mu_i+1..lambda_i

Integer ssyt_count(const Shape& sh);
// Sum of q^(entry sum); needs b_1 >= 0 so that exponents are nonnegative.
IPoly ssyt_gf(const Shape& sh);
std::vector<Tableau> ssyt_enumerate(const Shape& sh);

// Row i becomes the path (mu_i - i, b_i) -> (lambda_i - i, a_i) whose
// horizontal steps sit at the row's entries.
std::vector<Path> ssyt_to_paths(const Shape& sh, const Tableau& t);
Tableau paths_to_ssyt(const Shape& sh, const std::vector<Path>& paths);

// Entries in [1, a] on the straight shape lambda.
Integer hook_content(const std::vector<long>& lambda, long a);
IPoly hook_content_gf(const std::vector<long>& lambda, long a);

}  // namespace latpath
