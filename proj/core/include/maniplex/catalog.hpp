#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maniplex/maniplex.hpp"
#include "maniplex/symmetry.hpp"
#include "maniplex/weights.hpp"

namespace maniplex {

// Catalogued non-orientable regular seed maps. Every entry has p or q odd.
struct SeedSpec {
  std::string name;
  MapType type;
  Flag flags = 0;
};

const std::vector<SeedSpec>& seed_catalogue();

// Flag graph of a Platonic solid, built from combinatorial vertex/edge/face
// incidence: cube, octahedron, dodecahedron, icosahedron.
Maniplex platonic_flag_graph(std::string_view name);

// Quotient of a regular flag graph by its unique central involution (the
// antipodal symmetry). Orbit representatives keep their relative order.
Maniplex antipodal_quotient(const Maniplex& m);

// Builds the named hemi map (antipodal quotient of the matching Platonic
// flag graph) and certifies it: valid, regular, non-orientable, expected
// type and flag count. Throws std::logic_error on any internal failure.
Maniplex build_seed(std::string_view name);

// The rank-3 weight functions into Z_4 used by the construction: vartheta
// weighs 1-edges 0 and everything else 1; vartheta_prime is the reverse.
WeightFunction vartheta(const Maniplex& m);
WeightFunction vartheta_prime(const Maniplex& m);

// Conditions for (m, w) to be a proper pair: regular base, a closed odd
// walk of even weight, a cross-cover that is a non-orientable maniplex,
// and an Aut-consistent weight function.
struct ProperPairReport {
  bool regular = false;
  std::optional<Walk> odd_even_walk;
  bool cover_nonorientable_maniplex = false;
  bool aut_consistent = false;
  std::uint64_t aut_order = 0;

  bool verdict() const {
    return regular && odd_even_walk.has_value() && cover_nonorientable_maniplex &&
           aut_consistent;
  }
};

ProperPairReport verify_proper_pair(const Maniplex& m, const WeightFunction& w,
                                    AutSearch mode = default_aut_search());

}  // namespace maniplex
