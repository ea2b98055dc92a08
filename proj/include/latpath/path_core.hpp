#pragma once
// Lattice points, step sets, restrictions, and the brute-force path oracle
// that every closed formula in this library is checked against.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

using Point = std::vector<long>;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

struct StepSet {
  std::vector<Point> steps;
  std::string name;

  std::size_t dim() const { return steps.empty() ? 0 : steps[0].size(); }
  // Every step has nonnegative coordinates and a positive coordinate sum, so
  // paths between two points have bounded length and never revisit a point.
  bool is_positive() const;
  void validate() const;

  static StepSet simple(std::size_t d);        // positive unit steps e_1..e_d
  static StepSet pm_unit(std::size_t d);       // +-e_i
  static StepSet diag_pm(std::size_t d);       // (+-1,...,+-1)
  static StepSet delannoy();                   // E, N, NE
  static StepSet dyck();                       // (1,1), (1,-1)
  static StepSet motzkin();                    // (1,1), (1,0), (1,-1)
  static StepSet schroeder();                  // (1,1), (2,0), (1,-1)
  static StepSet lukasiewicz(long max_jump);   // (1,b), -1 <= b <= max_jump
  static StepSet jumps(const std::vector<long>& heights);  // (1,b) for given b
};

// r . x >= c  (or > c when strict)
struct Halfspace {
  Point r;
  long c = 0;
  bool strict = false;
  bool contains(const Point& p) const;
};

// Column bounds of a ladder-shaped region for paths from (0, b_1) to
// (n, a_n): the point (x, y), 0 <= x <= n, is admissible iff
// b_{max(x,1)} <= y <= a_{min(x+1,n)}.
struct LadderBounds {
  std::vector<long> a, b;
  void validate() const;
  bool contains(const Point& p) const;
};

struct Restriction {
  std::vector<Halfspace> halfspaces;
  std::optional<LadderBounds> ladder;
  std::set<Point> forbidden;
  std::function<bool(const Point&)> region;  // optional extra predicate

  bool allows(const Point& p) const;

  static Restriction none() { return {}; }
  static Restriction halfspace(Point r, long c, bool strict = false);
  // s <= r.x - ... : both r.x >= lo and r.x <= hi
  static Restriction band(const Point& r, long lo, long hi);
  Restriction& and_halfspace(Point r, long c, bool strict = false);
};

struct PathQuery {
  Point from, to;
  StepSet steps;
  Restriction restriction;
  std::optional<long> length;
};

struct Path {
  Point start;
  std::vector<Point> steps;
  Point end() const;
};

// Number of admissible paths; restrictions are tested at every visited point
// including both endpoints.
Integer oracle_count(const PathQuery& q);

// All admissible paths (exponential; for small cross-checks only).
std::vector<Path> oracle_paths(const PathQuery& q);

enum class Statistic {
  Area,      // sum of heights of horizontal (1,0) steps
  NETurns,   // vertices entered by (0,1) and left by (1,0)
  ENTurns,   // vertices entered by (1,0) and left by (0,1)
  Runs,      // maximal blocks of equal steps
  Peaks,     // up-step followed by down-step (second coordinate)
  PeakMaj,   // sum of step counts from the origin to each peak
  Maj,       // major index of the step word with up=0, down=1
  DyckArea,  // sum over up-steps of the starting height
};

// Generating polynomial sum_P q^{stat(P)}.
IPoly oracle_gf(const PathQuery& q, Statistic stat);

// Weighted oracle.  weight(pos, at, prev, step) gives the contribution of
// taking step index `step` from point `at` as the pos-th step, where `prev`
// is the previous step index or -1.  Returns the sum over paths of the
// product of contributions.
template <class R, class WeightFn>
R oracle_weighted(const PathQuery& q, WeightFn weight);

// Two-rowed turn arrays (rows p and q, each strictly increasing).
struct TurnArray {
  std::vector<long> p, q;
  std::size_t size() const { return p.size(); }
  friend bool operator==(const TurnArray& a, const TurnArray& b) { return a.p == b.p && a.q == b.q; }
};

enum class TurnKind { NE, EN };

TurnArray ne_turns(const Path& path);
TurnArray en_turns(const Path& path);
TurnArray turns(const Path& path, TurnKind kind);
// Rebuild the unique simple path from `from` to `to` with the given turns.
Path turns_to_path(const TurnArray& t, const Point& from, const Point& to, TurnKind kind);
// Paths from a word over {E,N} (or {1,2} as in the usual figures).
Path path_from_word(const Point& start, const std::string& word);
std::string path_word(const Path& path);

// Rotation index i such that a_i, a_{i+1}, ... has all prefix sums >= 0.
std::size_t spitzer_shift(const std::vector<Rational>& a);

// Cyclic shifts of a word over {1,2} in which every nonempty prefix has
// more ones than mu times the number of twos.
std::vector<std::size_t> cycle_lemma_valid_shifts(const std::vector<int>& word, long mu);

// ---------------------------------------------------------------------------

namespace detail {

struct OracleKey {
  Point at;
  int prev;
  long pos;
  bool operator<(const OracleKey& o) const {
    return std::tie(at, prev, pos) < std::tie(o.at, o.prev, o.pos);
  }
};

// A linear functional that increases by at least one with every step, if the
// step set has one (sum of coordinates, or the first coordinate).
std::optional<Point> progress_functional(const StepSet& s);
long dot(const Point& a, const Point& b);
void oracle_check(const PathQuery& q);

}  // namespace detail

template <class R, class WeightFn>
R oracle_weighted(const PathQuery& q, WeightFn weight) {
  detail::oracle_check(q);
  if (!q.restriction.allows(q.from)) return R(0);
  const auto prog = detail::progress_functional(q.steps);
  const long target = prog ? detail::dot(*prog, q.to) : 0;
  std::map<detail::OracleKey, R> memo;
  const auto& steps = q.steps.steps;
  std::function<R(const Point&, int, long)> go = [&](const Point& at, int prev, long pos) -> R {
    if (q.length) {
      if (pos == *q.length) return at == q.to ? R(1) : R(0);
    } else if (detail::dot(*prog, at) >= target) {
      return at == q.to ? R(1) : R(0);
    }
    detail::OracleKey key{at, prev, pos};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    R acc(0);
    for (std::size_t s = 0; s < steps.size(); ++s) {
      Point nxt = at + steps[s];
      if (prog && detail::dot(*prog, nxt) > target) continue;
      if (!q.restriction.allows(nxt)) continue;
      R sub = go(nxt, int(s), pos + 1);
      if (ring_is_zero(sub)) continue;
      acc += weight(pos, at, prev, int(s)) * sub;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return go(q.from, -1, 0);
}

}  // namespace latpath
