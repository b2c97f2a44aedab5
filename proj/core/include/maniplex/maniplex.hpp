#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maniplex {

using Flag = std::uint32_t;
using Colour = int;

inline constexpr Flag kNoFlag = std::numeric_limits<Flag>::max();

// Per-flag facet labels in Z_2^bits. Present on maniplexes built as
// colour-coded extensions; the label of a flag identifies the facet F_x
// containing it. Capped at 24 bits.
struct FacetLabels {
  int bits = 0;
  std::vector<std::uint32_t> label;
};

inline constexpr int kMaxLabelBits = 24;

// Rank-n properly edge-coloured n-valent flag graph, stored as one map
// flag -> flag per colour over dense flag ids 0..F-1. Construction checks
// shapes and index ranges only (out-of-range input is malformed, not a
// verdict); the maniplex axioms are checked by validate(). Values are
// immutable after construction.
class Maniplex {
public:
  Maniplex(int rank, std::vector<std::vector<Flag>> adjacency,
           std::optional<FacetLabels> labels = std::nullopt,
           std::string provenance = {});

  int rank() const { return rank_; }
  Flag num_flags() const { return num_flags_; }

  // u^i
  Flag adj(Colour i, Flag u) const { return adj_[static_cast<std::size_t>(i)][u]; }
  const std::vector<Flag>& adj_row(Colour i) const { return adj_[static_cast<std::size_t>(i)]; }

  const std::optional<FacetLabels>& facet_labels() const { return facet_labels_; }
  const std::string& provenance() const { return provenance_; }

private:
  int rank_;
  Flag num_flags_;
  std::vector<std::vector<Flag>> adj_;
  std::optional<FacetLabels> facet_labels_;
  std::string provenance_;
};

// Outcome of the structural checks, reported independently so hand-built
// inputs get full diagnostics instead of a first-failure abort.
struct ValidationReport {
  bool involutions = false;
  bool fixed_point_free = false;
  // No i-edge coincides with a j-edge for non-consecutive i, j. Parallel
  // edges of consecutive colours are admitted; they only occur in the
  // degenerate rank <= 2 objects the data model keeps for small facets.
  bool proper_colouring = false;
  bool connected = false;
  // For |i-j| > 1 the composite adj[i] o adj[j] squares to the identity.
  bool string_property = false;
  bool facet_labels_consistent = true;
  std::vector<std::string> failures;

  bool ok() const {
    return involutions && fixed_point_free && proper_colouring && connected &&
           string_property && facet_labels_consistent;
  }
};

ValidationReport validate(const Maniplex& m);

// Orientable <=> the flag graph is bipartite.
bool is_orientable(const Maniplex& m);

// Connected components of the subgraph avoiding colour-i edges. Face ids
// are assigned in order of smallest contained flag.
struct FacePartition {
  Colour colour = 0;
  std::uint32_t num_faces = 0;
  std::vector<std::uint32_t> face_of;
};

FacePartition faces(const Maniplex& m, Colour i);

// Number of (rank-1)-faces.
std::uint32_t count_facets(const Maniplex& m);

// Extracts facet `facet_id` as a rank-(n-1) maniplex. New flag ids are the
// member flags in increasing parent order; returns the submaniplex and the
// parent flag of each new flag.
std::pair<Maniplex, std::vector<Flag>> facet_submaniplex(const Maniplex& m,
                                                         std::uint32_t facet_id);

// Schlafli type {p,q} of an equivelar rank-3 maniplex.
struct MapType {
  int p = 0;
  int q = 0;
  bool operator==(const MapType&) const = default;
};

// Returns {p,q} iff every 01-cycle has length 2p and every 12-cycle length
// 2q; nullopt when non-equivelar. Throws for rank != 3.
std::optional<MapType> schlafli_type(const Maniplex& m);

// Canonical double cover: flag (u,j) gets index 2u+j and (u,j)^i = (u^i, j+1).
// Connected iff m is non-orientable; always bipartite.
Maniplex double_cover(const Maniplex& m);

// A walk is a start flag plus the colour sequence of the edges it traces.
struct Walk {
  Flag start = 0;
  std::vector<Colour> colours;

  std::size_t length() const { return colours.size(); }
};

Flag apply_word(const Maniplex& m, Flag u, std::span<const Colour> word);

std::vector<Flag> walk_flags(const Maniplex& m, const Walk& w);
Flag walk_end(const Maniplex& m, const Walk& w);
bool walk_closed(const Maniplex& m, const Walk& w);

// Concatenation; requires end(a) == start(b).
Walk walk_concat(const Maniplex& m, const Walk& a, const Walk& b);
// b-fold concatenation of a closed walk with itself.
Walk walk_power(const Maniplex& m, const Walk& w, int b);
// Same edges in reverse order, rebased at the end flag.
Walk walk_reverse(const Maniplex& m, const Walk& w);

}  // namespace maniplex
