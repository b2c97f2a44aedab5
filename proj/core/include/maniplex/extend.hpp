#pragma once

#include <cstdint>
#include <vector>

#include "maniplex/maniplex.hpp"
#include "maniplex/symmetry.hpp"
#include "maniplex/weights.hpp"

namespace maniplex {

enum class ColouringKind { total, antipodal, custom };

// Surjective assignment of colours 1..num_colours to the facets of a
// maniplex, indexed by facet id.
struct Colouring {
  int num_colours = 0;
  std::vector<int> colour_of;
  ColouringKind kind = ColouringKind::custom;
};

// Parity of a label: +1 when popcount is even, -1 otherwise.
int label_parity(std::uint32_t x);

// All facets receive different colours: colour f+1 to facet f.
Colouring total_colouring(const Maniplex& m);

// Facets share a colour iff their labels are antipodal (all bits flipped).
// Requires facet labels whose values enumerate Z_2^bits; colour ids are
// assigned by smallest label per pair.
Colouring antipodal_colouring(const Maniplex& m);

void require_valid_colouring(const Maniplex& m, const Colouring& c);

// True iff every generator of Aut(m) induces a well-defined bijection of
// the colour classes (equivalently, the chromatic classes form a block
// system).
bool verify_colouring_invariant(const Maniplex& m, const Colouring& c,
                                AutSearch mode = default_aut_search());
bool verify_colouring_invariant(const Maniplex& m, const Colouring& c,
                                const AutAnalysis& analysis);

// Colour-coded extension: rank n+1 on flags (u,x) indexed u*2^l + x, where
// i-edges with i < n stay within a facet copy and the new n-edge flips the
// label bit given by the colour of u's facet. Always a valid maniplex.
Maniplex extension(const Maniplex& m, const Colouring& c);

// The label-bit-flip symmetry tau_j : (u,x) -> (u, x^j), 1 <= j <= bits.
// Requires the canonical extension flag layout.
Automorphism tau(const Maniplex& ext, int j);

// Extension of phi in Aut(m) to the extension of (m, C): (u,x) -> (phi(u),
// phi(x)) with labels permuted by the induced colour permutation. Requires
// C phi-invariant.
Automorphism extend_automorphism(const Maniplex& m, const Colouring& c,
                                 const Automorphism& phi);

// Sign-twisted extension of a weight function: i-edges (i < n) inside the
// facet copy F_x weigh parity(x) * w(e), new-colour edges weigh 0.
WeightFunction extend_weight(const Maniplex& m, const Colouring& c,
                             const WeightFunction& w);

}  // namespace maniplex
