#pragma once

#include <optional>
#include <vector>

#include "maniplex/maniplex.hpp"

namespace maniplex {

// Edge weights in Z_k, stored per (colour, flag) with the edge symmetry
// w[i][u] == w[i][u^i]. Values are canonical representatives 0..k-1.
struct WeightFunction {
  int modulus = 0;
  std::vector<std::vector<int>> values;

  int at(Colour i, Flag u) const { return values[static_cast<std::size_t>(i)][u]; }
};

// Shape, range and edge-symmetry check relative to m; throws on violation.
void require_compatible(const Maniplex& m, const WeightFunction& w);
bool edge_symmetric(const Maniplex& m, const WeightFunction& w);

// Alternating-sign weight of a walk: sum of (-1)^t w(e_t) mod k.
int walk_weight(const Maniplex& m, const WeightFunction& w, const Walk& walk);

// Lift of a walk into the cross-cover, tracked as (flag, level) pairs with
// level' = w(e) - level. Closed iff the final pair equals (start, base_level).
struct LiftResult {
  std::vector<std::pair<Flag, int>> flags;
  bool closed = false;
};

LiftResult lift_walk(const Maniplex& m, const WeightFunction& w, const Walk& walk,
                     int base_level);

// k-fold cross-cover: vertex (u,i) gets index u*k + i and (u,i)^c =
// (u^c, w(e)-i). The result keeps m's colouring but may fail connectivity
// or the string property; callers validate.
Maniplex cross_cover(const Maniplex& m, const WeightFunction& w);

// True iff every 4-cycle of alternating non-consecutive colours has weight
// zero; equivalent to cross_cover(m,w) having the string property.
bool string_property_of_cover(const Maniplex& m, const WeightFunction& w);

// Searches the bicoloured cycles of m (plus any supplied closed even walks)
// for an even cycle C with gcd(w(C), k) = 1, which forces the cross-cover
// connected. Absence of a witness is inconclusive.
std::optional<Walk> connectivity_witness(const Maniplex& m, const WeightFunction& w,
                                         const std::vector<Walk>& extra_cycles = {});

// Shortest closed walk of odd length whose weight is even, found by BFS on
// the parity cover (flag, length mod 2, weight mod 2) based at flag 0.
// Requires even modulus.
std::optional<Walk> odd_walk_even_weight(const Maniplex& m, const WeightFunction& w);

// Restriction of a weight function to a submaniplex described by its
// parent-flag table (as produced by facet_submaniplex).
WeightFunction restrict_weight(const Maniplex& parent, const WeightFunction& w,
                               const Maniplex& sub, const std::vector<Flag>& to_parent);

}  // namespace maniplex
