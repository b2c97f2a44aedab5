#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maniplex/catalog.hpp"
#include "maniplex/maniplex.hpp"
#include "maniplex/symmetry.hpp"

namespace maniplex {

// Full certification of a cross-cover candidate: structure, orbit count,
// symmetry type, face transitivities and the stability verdict.
struct CoverCertificate {
  bool valid_maniplex = false;
  bool non_orientable = false;
  std::uint32_t orbits = 0;
  std::uint64_t aut_order = 0;
  std::string stg;
  bool fully_transitive = false;
  bool stable = false;
  std::uint64_t aut_order_double = 0;
  bool stability_lower_bound_ok = false;
  std::uint64_t cover_flags = 0;
  std::uint64_t double_cover_flags = 0;
};

CoverCertificate certify_cover(const Maniplex& cover,
                               AutSearch mode = default_aut_search());

// Semi-edge colour set {0..rank-1} minus {0,2}, the symmetry type the
// construction produces at every rank.
std::string expected_stg_label(int rank);

enum class VariantMode { all, antipodal_only };

// Colouring-choice words for one rank: empty at rank 3, otherwise words
// over {T, A} of length rank-3 whose first letter is forced to T (the seed
// is not an extension, so it admits no antipodal colouring).
std::vector<std::string> variant_words(int rank, VariantMode mode = VariantMode::all);

struct TheoremOneOptions {
  std::string seed = "hemicube";
  int max_rank = 4;
  VariantMode variants = VariantMode::all;
  // Budget on the cross-cover flag count (its double cover feeds the
  // automorphism search); larger variants become SKIPPED(budget) entries.
  std::uint64_t max_flags = 200000;
  int threads = 0;  // 0: hardware concurrency, capped by MANIPLEX_THREADS
  std::string out_dir;  // when set, certified covers are serialized here
  AutSearch aut_mode = default_aut_search();
};

struct TheoremOneEntry {
  int rank = 0;
  std::string variant;  // word over {T,A}; empty at rank 3
  bool skipped = false;
  std::string skip_reason;

  std::uint64_t extension_flags = 0;
  std::uint64_t extension_facets = 0;
  std::uint64_t cover_flags = 0;
  std::uint64_t double_cover_flags = 0;

  bool proper_pair = false;
  bool pair_regular = false;
  bool pair_odd_even_walk = false;
  bool pair_cover_ok = false;
  bool pair_aut_consistent = false;
  std::uint64_t extension_aut_order = 0;

  CoverCertificate cert;
  bool certified_ok = false;
  double wall_ms = 0.0;
  std::string mpx_path;
};

struct NonIsomorphismRecord {
  int rank = 0;
  std::string variant_a;
  std::string variant_b;
  std::string method;  // "facet-count" or "full-isomorphism"
  bool isomorphic = true;
};

struct TheoremOneReport {
  TheoremOneOptions options;
  std::vector<TheoremOneEntry> entries;
  std::vector<NonIsomorphismRecord> non_isomorphism;
  bool variant_counts_ok = false;
  bool ok = false;
};

TheoremOneReport run_theorem1(const TheoremOneOptions& options);

std::string report_text(const TheoremOneReport& report);
std::string report_json_text(const TheoremOneReport& report);

}  // namespace maniplex
