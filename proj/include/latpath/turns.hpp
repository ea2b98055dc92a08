#pragma once
// Counting simple paths (east and north unit steps) by their turns and runs.
//
// An NE-turn is a vertex entered by a north step and left by an east step,
// an EN-turn the opposite.  Paths stay "below the diagonal" when every point
// satisfies x >= y.

#include <functional>
#include <vector>

#include "latpath/algebra.hpp"
#include "latpath/path_core.hpp"

namespace latpath {

enum class TurnBoundary { None, BelowDiagonal };

// Paths (a,b) -> (c,d) with exactly l turns of the given kind.
Integer turns_unrestricted(long a, long b, long c, long d, long l, TurnKind kind);

// Same, restricted to x >= y.  Needs a >= b and c >= d.
Integer turns_below_diagonal(long a, long b, long c, long d, long l, TurnKind kind);

// NE-turns of paths in the band x + t >= y >= x + s, with both endpoints
// inside the band.
Integer turns_two_boundaries(long a, long b, long c, long d, long s, long t, long l);

// Paths (0,0) -> (c,d) staying in x >= mu y, mu >= 1 and c >= mu d.
Integer turns_slope_mu(long c, long d, long mu, long l, TurnKind kind);
// The quotient form (c - mu d + 1)/(c + 1) binom(c+1, l) binom(d-1, l-1) of
// the EN count.
Integer turns_slope_mu_en_quotient(long c, long d, long mu, long l);

// ---------------------------------------------------------------------------
// Runs.  A TurnGf returns the NE-turn generating polynomial of the paths
// A -> E in some fixed region (zero when there are none).

using TurnGf = std::function<IPoly(const Point&, const Point&)>;

TurnGf ne_turn_gf_unrestricted();
TurnGf ne_turn_gf_below_diagonal();
TurnGf ne_turn_gf_band(long s, long t);

// Generating polynomial of the paths A -> E by number of runs, assembled
// from the NE-turn polynomials of the four endpoint variants A or A + (1,0)
// to E or E - (0,1).
IPoly run_gf(const Point& A, const Point& E, const TurnGf& ne_gf);
IPoly run_gf(long a, long b, long c, long d, TurnBoundary boundary);

// ---------------------------------------------------------------------------
// Two-rowed arrays encoding NE-turns: p in [a, c-1] and q in [b+1, d], both
// strictly increasing.  The path lies below the diagonal iff p_i >= q_i.

struct TurnArrayBounds {
  long a, b, c, d;
};

bool is_ne_array(const TurnArray& t, const TurnArrayBounds& bd);
bool violates_diagonal(const TurnArray& t);
// Top row of l-1 entries in [b+1, c-1], bottom row of l+1 entries in [a, d].
bool is_reflected_array(const TurnArray& t, const TurnArrayBounds& bd);

// Bijection from arrays violating p_i >= q_i onto reflected arrays, and its
// inverse.  Reflected arrays store the top row in p and the bottom row in q.
TurnArray reflect_turn_array(const TurnArray& t);
TurnArray unreflect_turn_array(const TurnArray& t);

// ---------------------------------------------------------------------------
// Families of non-intersecting paths A_i -> E_i counted by their total
// number of turns, as sums over compositions of l of n x n determinants.
//
// NE turns need a_1 weakly increasing, a_2 strictly decreasing, e_1 strictly
// increasing, e_2 weakly decreasing.  EN turns need a_1 strictly
// increasing, a_2 weakly decreasing, e_1 weakly increasing, e_2 strictly
// decreasing.  Below the diagonal every A_i and E_i must satisfy x >= y.
Integer nonint_turns(const std::vector<Point>& A, const std::vector<Point>& E, long l, TurnBoundary boundary,
                     TurnKind kind);

}  // namespace latpath
