#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maniplex/maniplex.hpp"
#include "maniplex/weights.hpp"

namespace maniplex {

// A colour-preserving flag permutation. Colour preservation implies the
// action is semiregular, so an automorphism is determined by the image of
// any single flag.
class Automorphism {
public:
  explicit Automorphism(std::vector<Flag> image);
  static Automorphism identity(Flag num_flags);

  Flag operator()(Flag u) const { return image_[u]; }
  Flag size() const { return static_cast<Flag>(image_.size()); }
  const std::vector<Flag>& image() const { return image_; }

  bool is_identity() const;
  Automorphism inverse() const;
  // (a.then(b))(u) = b(a(u))
  Automorphism then(const Automorphism& b) const;

  bool operator==(const Automorphism&) const = default;

private:
  std::vector<Flag> image_;
};

bool is_colour_preserving(const Maniplex& m, const Automorphism& phi);

// The unique colour-preserving automorphism mapping a to b, or nullopt.
// Propagates the assignment breadth-first along the edges; any conflict
// proves non-existence. O(F*n) per candidate.
std::optional<Automorphism> find_automorphism(const Maniplex& m, Flag a, Flag b);

enum class AutSearch {
  // Exact accelerated search: conflicts found while testing a candidate
  // yield closed colour words at the base flag that move the candidate;
  // such words are necessarily satisfied by genuine images and are used to
  // discard whole families of candidates. Successful candidates enter a
  // generator closure, so only one propagation per new generator is paid.
  pruned,
  // Oracle mode: plain candidate scan over every flag.
  exhaustive,
};

AutSearch default_aut_search();

struct AutAnalysis {
  std::uint64_t order = 0;
  std::uint32_t num_orbits = 0;
  std::vector<std::uint32_t> orbit_of;  // orbit ids ordered by smallest flag
  std::vector<Automorphism> generators;  // generate the full group
};

AutAnalysis analyze_automorphisms(const Maniplex& m, AutSearch mode = default_aut_search());

// (order, orbit_of): order is the number of valid images of a fixed base
// flag; both searches produce identical results.
std::pair<std::uint64_t, std::vector<std::uint32_t>> aut_order_and_orbits(
    const Maniplex& m, AutSearch mode = default_aut_search());

// Quotient of m by its full automorphism group: one vertex per flag orbit,
// with target[i][o] the orbit reached along colour i (a semi-edge iff the
// target equals o).
struct SymmetryTypeGraph {
  std::uint32_t num_orbits = 0;
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::vector<std::uint32_t>> target;  // target[colour][orbit]

  bool semi_edge(Colour i, std::uint32_t orbit) const {
    return target[static_cast<std::size_t>(i)][orbit] == orbit;
  }
};

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m,
                                      AutSearch mode = default_aut_search());
SymmetryTypeGraph symmetry_type_graph(const Maniplex& m, const AutAnalysis& analysis);

// "2^n_{...}" label for a 2-orbit maniplex, empty string otherwise.
std::string stg_label(const SymmetryTypeGraph& stg, int rank);

struct FaceTransitivity {
  std::vector<bool> per_colour;
  bool fully = false;
};

// i-face-transitive iff the STG minus colour i stays connected.
FaceTransitivity is_fully_transitive(const SymmetryTypeGraph& stg);
FaceTransitivity is_fully_transitive(const Maniplex& m,
                                     AutSearch mode = default_aut_search());

struct StabilityVerdict {
  std::uint64_t aut_order_base = 0;
  std::uint64_t aut_order_cover = 0;
  bool stable = false;
};

// Compares the automorphism group orders of m and of its canonical double
// cover; stable iff the cover admits only the expected automorphisms.
// Requires m non-orientable (otherwise the double cover is disconnected).
StabilityVerdict is_stable(const Maniplex& m, AutSearch mode = default_aut_search());

// Colour-preserving isomorphism m1 -> m2 fixing flag 0 of m1 to the first
// viable image flag of m2, in flag order.
std::optional<Automorphism> are_isomorphic(const Maniplex& m1, const Maniplex& m2);

// Lift of phi to the cross-cover cross_cover(m, w). Stage 1 searches
// Aut(Z_k) (multiplication by the units of Z_k) for alpha with
// w(e phi) = alpha(w(e)) on all edges and lifts as (u,i) -> (phi(u), alpha(i));
// stage 2 falls back to the exact search over base levels.
std::optional<Automorphism> lift_automorphism(const Maniplex& m, const WeightFunction& w,
                                              const Automorphism& phi);

// As above, but reports whether the cheap stage-1 criterion fired.
struct LiftOutcome {
  std::optional<Automorphism> lift;
  bool via_unit_multiplier = false;
};
LiftOutcome lift_automorphism_detailed(const Maniplex& m, const WeightFunction& w,
                                       const Automorphism& phi);

// True iff every generator of Aut(m) lifts to the cross-cover (lifts
// compose, so a generating set suffices).
bool is_aut_consistent(const Maniplex& m, const WeightFunction& w,
                       AutSearch mode = default_aut_search());
bool is_aut_consistent(const Maniplex& m, const WeightFunction& w,
                       const AutAnalysis& analysis);

}  // namespace maniplex
