#include "doctest.h"
#include "latpath/path_core.hpp"

using namespace latpath;

namespace {

PathQuery simple2(Point a, Point e, Restriction r = {}) { return {a, e, StepSet::simple(2), std::move(r), {}}; }

// Every E/N word of the given length, as a path from `start`.
std::vector<Path> all_words(const Point& start, int len) {
  std::vector<Path> out;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::string w;
    for (int i = 0; i < len; ++i) w += (mask >> i & 1) ? 'N' : 'E';
    out.push_back(path_from_word(start, w));
  }
  return out;
}

}  // namespace

TEST_CASE("oracle examples") {
  CHECK(oracle_count(simple2({0, 0}, {2, 1})) == 3);
  // Brute force over the 20 words of length 6, keeping x >= y.
  long below = 0;
  for (const auto& p : all_words({0, 0}, 6)) {
    if (p.end() != Point{3, 3}) continue;
    Point at = p.start;
    bool ok = true;
    for (const auto& s : p.steps) {
      at = at + s;
      if (at[0] < at[1]) ok = false;
    }
    below += ok;
  }
  CHECK(below == 5);
  CHECK(oracle_count(simple2({0, 0}, {3, 3}, Restriction::halfspace({1, -1}, 0))) == 5);

  Restriction avoid;
  avoid.forbidden.insert({0, 0});
  PathQuery loops{{1, 0}, {1, 0}, StepSet::pm_unit(2), avoid, 2};
  CHECK(oracle_count(loops) == 3);

  PathQuery unbounded{{0, 0}, {0, 0}, StepSet::pm_unit(2), {}, {}};
  CHECK_THROWS_AS(oracle_count(unbounded), PreconditionError);
}

TEST_CASE("oracle agrees with binomials and decomposes over first steps") {
  for (long dx = 0; dx <= 7; ++dx)
    for (long dy = 0; dy <= 7; ++dy) {
      CHECK(oracle_count(simple2({0, 0}, {dx, dy})) == binom(dx + dy, dx));
      Restriction r = Restriction::halfspace({1, -1}, 0);
      Integer whole = oracle_count(simple2({0, 0}, {dx, dy}, r));
      Integer split = 0;
      for (const auto& s : StepSet::simple(2).steps)
        if (r.allows(s)) split += oracle_count(simple2(s, {dx, dy}, r));
      if (dx || dy) CHECK(whole == split);
    }
}

TEST_CASE("oracle statistics") {
  CHECK(oracle_gf(simple2({0, 0}, {2, 1}), Statistic::Area) == IPoly(std::vector<Integer>{1, 1, 1}));
  CHECK(oracle_gf(simple2({0, 0}, {2, 2}), Statistic::NETurns) == IPoly(std::vector<Integer>{1, 4, 1}));
  CHECK(oracle_gf(simple2({0, 0}, {-1, 2}), Statistic::Area).is_zero());
  // Runs: EN and NE both have two runs.
  CHECK(oracle_gf(simple2({0, 0}, {1, 1}), Statistic::Runs) == IPoly::monomial(Integer(2), 2));
  CHECK(oracle_gf(simple2({0, 0}, {3, 0}), Statistic::Runs) == IPoly::var());
}

TEST_CASE("turn representations") {
  // The running example: word 221221112122 from (1,-1), with 1 = E, 2 = N.
  Path p0 = path_from_word({1, -1}, "221221112122");
  CHECK(p0.end() == Point{6, 6});
  TurnArray ne = ne_turns(p0);
  CHECK(ne.p == std::vector<long>{1, 2, 5});
  CHECK(ne.q == std::vector<long>{1, 3, 4});
  TurnArray en = en_turns(p0);
  CHECK(en.p == std::vector<long>{2, 5, 6});
  CHECK(en.q == std::vector<long>{1, 3, 4});
  CHECK(ne.size() + en.size() + 1 == 7);  // run count

  CHECK(ne_turns(path_from_word({0, 0}, "EEEE")).size() == 0);
  TurnArray nene = ne_turns(path_from_word({0, 0}, "NENE"));
  CHECK(nene.p == std::vector<long>{0, 1});
  CHECK(nene.q == std::vector<long>{1, 2});

  CHECK_THROWS_AS(ne_turns(Path{{0, 0}, {{1, 1}}}), PreconditionError);

  for (int len = 0; len <= 8; ++len)
    for (const auto& p : all_words({0, 0}, len))
      for (TurnKind k : {TurnKind::NE, TurnKind::EN}) {
        Path back = turns_to_path(turns(p, k), p.start, p.end(), k);
        CHECK(path_word(back) == path_word(p));
      }
}

TEST_CASE("Spitzer and cycle lemma") {
  CHECK(spitzer_shift({1, -2, 1}) == 2);
  CHECK(spitzer_shift({1, -1}) == 0);
  CHECK(spitzer_shift({2, -1, -1}) == 0);
  CHECK_THROWS_AS(spitzer_shift({1, -1, 1, -1}), PreconditionError);
  CHECK_THROWS_AS(spitzer_shift({1, 1}), PreconditionError);

  std::vector<int> w{1, 2, 1, 1, 1, 1, 1, 2, 2, 1, 1, 1};
  CHECK(cycle_lemma_valid_shifts(w, 2).size() == 3);
  CHECK(cycle_lemma_valid_shifts({1, 1, 1, 1}, 0).size() == 4);
  CHECK(cycle_lemma_valid_shifts({1, 1, 2, 2}, 1).empty());

  for (int len = 1; len <= 10; ++len)
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<int> word;
      long m = 0, n = 0;
      for (int i = 0; i < len; ++i) {
        bool two = mask >> i & 1;
        word.push_back(two ? 2 : 1);
        two ? ++n : ++m;
      }
      for (long mu = 0; mu <= 3; ++mu) {
        if (m < mu * n) continue;
        CHECK(long(cycle_lemma_valid_shifts(word, mu).size()) == m - mu * n);
      }
    }
}
