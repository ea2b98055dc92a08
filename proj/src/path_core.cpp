#include "latpath/path_core.hpp"

#include <numeric>

namespace latpath {

Point operator+(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

namespace detail {

long dot(const Point& a, const Point& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<Point> progress_functional(const StepSet& s) {
  const std::size_t d = s.dim();
  bool nonneg = true, first = true;
  for (const auto& st : s.steps) {
    long sum = 0;
    for (long c : st) {
      if (c < 0) nonneg = false;
      sum += c;
    }
    if (sum < 1) nonneg = false;
    if (st[0] < 1) first = false;
  }
  if (nonneg) return Point(d, 1);
  if (first) {
    Point f(d, 0);
    f[0] = 1;
    return f;
  }
  return std::nullopt;
}

void oracle_check(const PathQuery& q) {
  q.steps.validate();
  if (q.from.size() != q.steps.dim() || q.to.size() != q.steps.dim())
    fail_pre("oracle: dimension mismatch between endpoints and steps");
  if (!q.length && !progress_functional(q.steps))
    fail_pre("oracle: unbounded search; a path length is required for this step set");
  if (q.length && *q.length < 0) fail_pre("oracle: negative length");
}

}  // namespace detail

bool StepSet::is_positive() const {
  for (const auto& s : steps) {
    long sum = 0;
    for (long c : s) {
      if (c < 0) return false;
      sum += c;
    }
    if (sum < 1) return false;
  }
  return !steps.empty();
}

void StepSet::validate() const {
  if (steps.empty()) fail_pre("step set is empty");
  for (const auto& s : steps)
    if (s.size() != steps[0].size()) fail_pre("steps of different dimensions");
}

StepSet StepSet::simple(std::size_t d) {
  StepSet s{{}, "simple"};
  for (std::size_t i = 0; i < d; ++i) {
    Point p(d, 0);
    p[i] = 1;
    s.steps.push_back(p);
  }
  return s;
}

StepSet StepSet::pm_unit(std::size_t d) {
  StepSet s{{}, "pm-unit"};
  for (std::size_t i = 0; i < d; ++i)
    for (long sgn : {1L, -1L}) {
      Point p(d, 0);
      p[i] = sgn;
      s.steps.push_back(p);
    }
  return s;
}

StepSet StepSet::diag_pm(std::size_t d) {
  StepSet s{{}, "diag-pm"};
  for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
    Point p(d, 1);
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) p[i] = -1;
    s.steps.push_back(p);
  }
  return s;
}

StepSet StepSet::delannoy() { return {{{1, 0}, {0, 1}, {1, 1}}, "delannoy"}; }
StepSet StepSet::dyck() { return {{{1, 1}, {1, -1}}, "dyck"}; }
StepSet StepSet::motzkin() { return {{{1, 1}, {1, 0}, {1, -1}}, "motzkin"}; }
StepSet StepSet::schroeder() { return {{{1, 1}, {2, 0}, {1, -1}}, "schroeder"}; }

StepSet StepSet::lukasiewicz(long max_jump) {
  StepSet s{{}, "lukasiewicz"};
  for (long b = -1; b <= max_jump; ++b) s.steps.push_back({1, b});
  return s;
}

StepSet StepSet::jumps(const std::vector<long>& heights) {
  StepSet s{{}, "jumps"};
  for (long b : heights) s.steps.push_back({1, b});
  return s;
}

bool Halfspace::contains(const Point& p) const {
  long v = detail::dot(r, p);
  return strict ? v > c : v >= c;
}

void LadderBounds::validate() const {
  if (a.empty() || a.size() != b.size()) fail_pre("ladder: a and b must be nonempty and of equal length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) fail_pre("ladder: a_i >= b_i violated at i=" + std::to_string(i + 1));
    if (i && (a[i] < a[i - 1] || b[i] < b[i - 1])) fail_pre("ladder: bounds must be nondecreasing");
  }
}

bool LadderBounds::contains(const Point& p) const {
  const long n = long(a.size());
  const long x = p[0], y = p[1];
  if (x < 0 || x > n) return false;
  const long lo = b[std::size_t(std::max(x, 1L) - 1)];
  const long hi = a[std::size_t(std::min(x + 1, n) - 1)];
  return lo <= y && y <= hi;
}

bool Restriction::allows(const Point& p) const {
  for (const auto& h : halfspaces)
    if (!h.contains(p)) return false;
  if (ladder && !ladder->contains(p)) return false;
  if (!forbidden.empty() && forbidden.count(p)) return false;
  if (region && !region(p)) return false;
  return true;
}

Restriction Restriction::halfspace(Point r, long c, bool strict) {
  Restriction res;
  res.halfspaces.push_back({std::move(r), c, strict});
  return res;
}

Restriction Restriction::band(const Point& r, long lo, long hi) {
  Restriction res;
  res.halfspaces.push_back({r, lo, false});
  Point neg(r);
  for (auto& x : neg) x = -x;
  res.halfspaces.push_back({neg, -hi, false});
  return res;
}

Restriction& Restriction::and_halfspace(Point r, long c, bool strict) {
  halfspaces.push_back({std::move(r), c, strict});
  return *this;
}

Point Path::end() const {
  Point p = start;
  for (const auto& s : steps) p = p + s;
  return p;
}

Integer oracle_count(const PathQuery& q) {
  detail::oracle_check(q);
  if (!q.restriction.allows(q.from)) return 0;
  const auto prog = detail::progress_functional(q.steps);
  const long target = prog ? detail::dot(*prog, q.to) : 0;
  std::map<std::pair<Point, long>, Integer> memo;
  const auto& steps = q.steps.steps;
  std::function<Integer(const Point&, long)> go = [&](const Point& at, long pos) -> Integer {
    if (q.length) {
      if (pos == *q.length) return at == q.to ? 1 : 0;
    } else if (detail::dot(*prog, at) >= target) {
      return at == q.to ? 1 : 0;
    }
    // In progress mode the position is irrelevant to the future.
    const long key_pos = q.length ? pos : 0;
    auto key = std::make_pair(at, key_pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer acc = 0;
    for (const auto& s : steps) {
      Point nxt = at + s;
      if (prog && detail::dot(*prog, nxt) > target) continue;
      if (!q.restriction.allows(nxt)) continue;
      acc += go(nxt, pos + 1);
    }
    memo.emplace(std::move(key), acc);
    return acc;
  };
  return go(q.from, 0);
}

std::vector<Path> oracle_paths(const PathQuery& q) {
  detail::oracle_check(q);
  std::vector<Path> out;
  if (!q.restriction.allows(q.from)) return out;
  const auto prog = detail::progress_functional(q.steps);
  const long target = prog ? detail::dot(*prog, q.to) : 0;
  Path cur{q.from, {}};
  std::function<void(const Point&)> go = [&](const Point& at) {
    const long pos = long(cur.steps.size());
    if (q.length) {
      if (pos == *q.length) {
        if (at == q.to) out.push_back(cur);
        return;
      }
    } else if (detail::dot(*prog, at) >= target) {
      if (at == q.to) out.push_back(cur);
      return;
    }
    for (const auto& s : q.steps.steps) {
      Point nxt = at + s;
      if (prog && detail::dot(*prog, nxt) > target) continue;
      if (!q.restriction.allows(nxt)) continue;
      cur.steps.push_back(s);
      go(nxt);
      cur.steps.pop_back();
    }
  };
  go(q.from);
  return out;
}

namespace {

bool is_step(const Point& s, long dx, long dy) { return s.size() == 2 && s[0] == dx && s[1] == dy; }

}  // namespace

IPoly oracle_gf(const PathQuery& q, Statistic stat) {
  const auto& st = q.steps.steps;
  auto mono = [](long e) {
    if (e < 0) throw std::logic_error("negative statistic exponent");
    return IPoly::monomial(Integer(1), std::size_t(e));
  };
  auto weight = [&](long pos, const Point& at, int prev, int s) -> IPoly {
    const Point& step = st[std::size_t(s)];
    switch (stat) {
      case Statistic::Area:
        return is_step(step, 1, 0) ? mono(at[1]) : IPoly(1);
      case Statistic::NETurns:
        return (prev >= 0 && is_step(st[std::size_t(prev)], 0, 1) && is_step(step, 1, 0)) ? mono(1) : IPoly(1);
      case Statistic::ENTurns:
        return (prev >= 0 && is_step(st[std::size_t(prev)], 1, 0) && is_step(step, 0, 1)) ? mono(1) : IPoly(1);
      case Statistic::Runs:
        return (prev < 0 || prev != s) ? mono(1) : IPoly(1);
      case Statistic::Peaks:
        return (prev >= 0 && st[std::size_t(prev)][1] > 0 && step[1] < 0) ? mono(1) : IPoly(1);
      case Statistic::PeakMaj:
        return (prev >= 0 && st[std::size_t(prev)][1] > 0 && step[1] < 0) ? mono(pos) : IPoly(1);
      case Statistic::Maj:
        return (prev >= 0 && st[std::size_t(prev)][1] < 0 && step[1] > 0) ? mono(pos) : IPoly(1);
      case Statistic::DyckArea:
        return step[1] > 0 ? mono(at[1]) : IPoly(1);
    }
    return IPoly(1);
  };
  return oracle_weighted<IPoly>(q, weight);
}

// ---------------------------------------------------------------------------
// Turns

TurnArray turns(const Path& path, TurnKind kind) {
  TurnArray t;
  Point at = path.start;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& s = path.steps[i];
    if (!(is_step(s, 1, 0) || is_step(s, 0, 1))) fail_pre("turns: path is not a simple plane path");
    at = at + s;
    if (i + 1 < path.steps.size()) {
      const auto& nx = path.steps[i + 1];
      bool ne = is_step(s, 0, 1) && is_step(nx, 1, 0);
      bool en = is_step(s, 1, 0) && is_step(nx, 0, 1);
      if ((kind == TurnKind::NE && ne) || (kind == TurnKind::EN && en)) {
        t.p.push_back(at[0]);
        t.q.push_back(at[1]);
      }
    }
  }
  return t;
}

TurnArray ne_turns(const Path& path) { return turns(path, TurnKind::NE); }
TurnArray en_turns(const Path& path) { return turns(path, TurnKind::EN); }

Path turns_to_path(const TurnArray& t, const Point& from, const Point& to, TurnKind kind) {
  if (t.p.size() != t.q.size()) fail_pre("turn array rows of unequal length");
  for (std::size_t i = 1; i < t.p.size(); ++i)
    if (t.p[i] <= t.p[i - 1] || t.q[i] <= t.q[i - 1]) fail_pre("turn array rows must increase strictly");
  Path path{from, {}};
  long x = from[0], y = from[1];
  auto east = [&](long tx) {
    if (tx < x) fail_pre("turn array out of bounds");
    for (; x < tx; ++x) path.steps.push_back({1, 0});
  };
  auto north = [&](long ty) {
    if (ty < y) fail_pre("turn array out of bounds");
    for (; y < ty; ++y) path.steps.push_back({0, 1});
  };
  if (kind == TurnKind::NE) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      east(t.p[i]);
      north(t.q[i]);
    }
    east(to[0]);
    north(to[1]);
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) {
      north(t.q[i]);
      east(t.p[i]);
    }
    north(to[1]);
    east(to[0]);
  }
  if (turns(path, kind) != t) fail_pre("turn array violates the endpoint bounds");
  return path;
}

Path path_from_word(const Point& start, const std::string& word) {
  Path p{start, {}};
  for (char ch : word) {
    if (ch == 'E' || ch == '1') p.steps.push_back({1, 0});
    else if (ch == 'N' || ch == '2') p.steps.push_back({0, 1});
    else fail_pre(std::string("path word: unexpected letter ") + ch);
  }
  return p;
}

std::string path_word(const Path& path) {
  std::string w;
  for (const auto& s : path.steps) w += is_step(s, 1, 0) ? 'E' : is_step(s, 0, 1) ? 'N' : '?';
  return w;
}

// ---------------------------------------------------------------------------
// Cycle lemmas

std::size_t spitzer_shift(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  if (n == 0) fail_pre("spitzer_shift: empty sequence");
  Rational total = 0;
  for (const auto& x : a) total += x;
  if (total != 0) fail_pre("spitzer_shift: total sum is " + total.get_str() + ", not 0");
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t len = 1; len < n; ++len) {
      s += a[(j + len - 1) % n];
      if (s == 0)
        fail_pre("spitzer_shift: cyclic subsum of length " + std::to_string(len) + " starting at index " +
                 std::to_string(j) + " vanishes");
    }
  }
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      s += a[(i + k) % n];
      if (s < 0) ok = false;
    }
    if (ok) {
      if (found) throw std::logic_error("spitzer_shift: rotation not unique");
      found = i;
    }
  }
  if (!found) throw std::logic_error("spitzer_shift: no valid rotation");
  return *found;
}

std::vector<std::size_t> cycle_lemma_valid_shifts(const std::vector<int>& word, long mu) {
  if (mu < 0) fail_pre("cycle lemma: mu must be nonnegative");
  long ones = 0, twos = 0;
  for (int w : word) {
    if (w == 1) ++ones;
    else if (w == 2) ++twos;
    else fail_pre("cycle lemma: letters must be 1 or 2");
  }
  if (ones < mu * twos) fail_pre("cycle lemma: requires m >= mu*n");
  std::vector<std::size_t> out;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    long c1 = 0, c2 = 0;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      if (word[(i + k) % n] == 1) ++c1;
      else ++c2;
      if (!(c1 > mu * c2)) ok = false;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace latpath
