#pragma once
// Formula-against-oracle sweeps.  The acceptance grid runs a fixed set of
// criteria; `verify` runs one named family up to a coordinate bound.

#include <functional>
#include <string>
#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

namespace detail {
std::string show(const Integer& v);
std::string show(const Rational& v);
std::string show(const MPoly& v);
template <class R>
std::string show(const Poly<R>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? " " : "") + show(p.coeffs()[i]);
  return s + "]";
}
template <class R>
std::string show(const TruncSeries<R>& f) {
  std::string s = "[";
  for (int i = 0; i <= f.order(); ++i) s += (i ? " " : "") + show(f[std::size_t(i)]);
  return s + " +O(z^" + std::to_string(f.order() + 1) + ")]";
}
template <class T>
std::string show(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + show(v[i]);
  return s + ")";
}
}  // namespace detail

struct SweepResult {
  long cases = 0;
  long mismatches = 0;
  std::string first_mismatch;  // full parameter set of the first failure
  bool ok() const { return mismatches == 0 && cases > 0; }
};

// Collects comparisons.  Only the first mismatch is kept in full.
class Sweep {
 public:
  template <class T>
  void expect(const T& got, const T& want, const std::function<std::string()>& params);
  void expect_true(bool ok, const std::function<std::string()>& params);
  void fail(const std::string& what);
  // Runs body, turning exceptions into a mismatch tagged with `params`.
  void guarded(const std::function<std::string()>& params, const std::function<void()>& body);
  void merge(const SweepResult& r);
  const SweepResult& result() const { return r_; }

 private:
  void record(const std::string& what);
  SweepResult r_;
};

template <class T>
void Sweep::expect(const T& got, const T& want, const std::function<std::string()>& params) {
  ++r_.cases;
  if (got == want) return;
  record(params() + ": got " + detail::show(got) + ", expected " + detail::show(want));
}

struct CriterionInfo {
  int id;
  std::string title;
};

struct CriterionResult {
  CriterionInfo info;
  SweepResult sweep;
  double seconds = 0;
};

std::vector<CriterionInfo> acceptance_criteria();
CriterionResult run_criterion(int id, unsigned seed);
std::vector<CriterionResult> run_acceptance(unsigned seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
// "PASS  3  title: N cases (t s)" or "FAIL ..." with the first mismatch.
std::string format_criterion(const CriterionResult& r);

std::vector<std::string> verify_families();
// Throws PreconditionError for an unknown family or a negative bound.
SweepResult run_verify(const std::string& family, long max, unsigned seed);

}  // namespace latpath
