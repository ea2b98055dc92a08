#pragma once
// q-Catalan numbers (Carlitz-Riordan and major index), the q-Catalan
// continued fraction, and truncated checks of the Rogers-Ramanujan
// identities and Ramanujan's continued fraction.

#include <vector>

#include "latpath/algebra.hpp"

namespace latpath {

using ZSeries = TruncSeries<Integer>;

// C_0 = 1, C_n = sum_k q^k C_k C_{n-k-1}.
IPoly q_catalan_cr(long n);

// Coefficients of z^0..z^order in 1/(1 - z/(1 - qz/(1 - q^2 z/ ...))) cut
// after `depth` levels.  Requires depth >= order, which makes the result
// independent of depth.
std::vector<IPoly> q_catalan_cr_cf(int depth, int order);

// (1 - q)/(1 - q^{n+1}) [2n choose n]_q; the division must be exact.
IPoly q_catalan_maj(long n);

// Rogers-Ramanujan: `which` is 1 or 2.  Sum side sum_n q^{n^2 + (which-1) n}/(q;q)_n
// and product side 1/prod over parts congruent to +-which mod 5, both to q^N.
ZSeries rr_sum_side(int which, int N);
ZSeries rr_product_side(int which, int N);

struct RRCheck {
  bool first = false;
  bool second = false;
};
RRCheck rr_truncation_check(int N);

// 1 + q/(1 + q^2/(1 + q^3/(1 + ...))) with N levels, as a q-series to q^N.
ZSeries ramanujan_cf(int N);
// The continued fraction agrees to q^N with the ratio of the two sum sides
// and with the reciprocal of the q-Catalan continued fraction at z = -q.
bool ramanujan_cf_check(int N);

}  // namespace latpath
