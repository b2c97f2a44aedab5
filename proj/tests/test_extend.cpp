#include <doctest.h>

#include <random>
#include <set>

#include "maniplex/catalog.hpp"
#include "maniplex/extend.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;

namespace {

Maniplex rank4_total_extension() {
  const Maniplex hemi = build_seed("hemicube");
  return extension(hemi, total_colouring(hemi));
}

}  // namespace

TEST_CASE("label parity") {
  CHECK(label_parity(0) == 1);
  CHECK(label_parity(1) == -1);
  CHECK(label_parity(0b1010) == 1);
  CHECK(label_parity(0b1011) == -1);
}

TEST_CASE("total colouring gives one colour per facet") {
  const Maniplex hemi = build_seed("hemicube");
  const Colouring c = total_colouring(hemi);
  CHECK(c.num_colours == 3);
  CHECK(c.colour_of == std::vector<int>{1, 2, 3});
  CHECK(c.kind == ColouringKind::total);

  // one facet: the rank-2 digon edge
  const Maniplex digon(2, {{1, 0}, {1, 0}});
  CHECK(total_colouring(digon).num_colours == 1);

  const Maniplex ext = rank4_total_extension();
  CHECK(count_facets(ext) == 8);
  CHECK(total_colouring(ext).num_colours == 8);
}

TEST_CASE("antipodal colouring pairs complementary labels") {
  const Maniplex ext = rank4_total_extension();
  const Colouring c = antipodal_colouring(ext);
  CHECK(c.num_colours == 4);
  CHECK(c.kind == ColouringKind::antipodal);
  // facet ids equal labels here, so antipodal pairs are (x, 7-x)
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(c.colour_of[x] == c.colour_of[7 - x]);
  CHECK(c.colour_of[0] == 1);
  CHECK(c.colour_of[1] == 2);
  CHECK(c.colour_of[3] == 4);

  // two facets collapse to a single colour
  const Maniplex hemi = build_seed("hemicube");
  Colouring one;
  one.num_colours = 1;
  one.colour_of = {1, 1, 1};
  const Maniplex trivial = extension(hemi, one);
  CHECK(count_facets(trivial) == 2);
  CHECK(antipodal_colouring(trivial).num_colours == 1);

  CHECK_THROWS_AS(antipodal_colouring(hemi), std::invalid_argument);
}

TEST_CASE("colouring validation") {
  const Maniplex hemi = build_seed("hemicube");
  Colouring c;
  c.num_colours = 2;
  c.colour_of = {1, 1, 2};
  CHECK_NOTHROW(require_valid_colouring(hemi, c));

  c.colour_of = {1, 1, 1};  // colour 2 never used
  CHECK_THROWS_AS(require_valid_colouring(hemi, c), std::invalid_argument);
  c.colour_of = {1, 2};  // wrong facet count
  CHECK_THROWS_AS(require_valid_colouring(hemi, c), std::invalid_argument);
}

TEST_CASE("colouring invariance under the automorphism group") {
  const Maniplex hemi = build_seed("hemicube");
  CHECK(verify_colouring_invariant(hemi, total_colouring(hemi)));

  const Maniplex ext = rank4_total_extension();
  CHECK(verify_colouring_invariant(ext, antipodal_colouring(ext)));
  CHECK(verify_colouring_invariant(ext, total_colouring(ext)));

  // an uneven split of the three hemicube facets breaks invariance
  Colouring uneven;
  uneven.num_colours = 2;
  uneven.colour_of = {1, 1, 2};
  CHECK_FALSE(verify_colouring_invariant(hemi, uneven));
}

TEST_CASE("the total extension of the hemicube") {
  const Maniplex hemi = build_seed("hemicube");
  const Maniplex ext = rank4_total_extension();
  CHECK(ext.rank() == 4);
  CHECK(ext.num_flags() == 192);
  CHECK(validate(ext).ok());
  REQUIRE(ext.facet_labels().has_value());
  CHECK(ext.facet_labels()->bits == 3);
  CHECK(count_facets(ext) == 8);

  for (std::uint32_t f = 0; f < 8; ++f) {
    const auto [facet, to_parent] = facet_submaniplex(ext, f);
    CHECK(facet.num_flags() == hemi.num_flags());
    CHECK(are_isomorphic(facet, hemi).has_value());
  }
}

TEST_CASE("extension index formula is bit exact") {
  const Maniplex hemi = build_seed("hemicube");
  const Colouring c = total_colouring(hemi);
  const Maniplex ext = extension(hemi, c);
  const FacePartition fp = faces(hemi, 2);
  for (Flag u = 0; u < hemi.num_flags(); ++u)
    for (std::uint32_t x = 0; x < 8; ++x) {
      const Flag t = u * 8 + x;
      for (Colour i = 0; i < 3; ++i) CHECK(ext.adj(i, t) == hemi.adj(i, u) * 8 + x);
      const std::uint32_t flip = 1u << (c.colour_of[fp.face_of[u]] - 1);
      CHECK(ext.adj(3, t) == u * 8 + (x ^ flip));
      CHECK(ext.facet_labels()->label[t] == x);
    }
}

TEST_CASE("trivial extension doubles the flags") {
  const Maniplex hemi = build_seed("hemicube");
  Colouring one;
  one.num_colours = 1;
  one.colour_of = {1, 1, 1};
  const Maniplex ext = extension(hemi, one);
  CHECK(ext.num_flags() == 48);
  CHECK(count_facets(ext) == 2);
  CHECK(validate(ext).ok());
}

TEST_CASE("extensions validate for random admissible colourings") {
  std::mt19937 rng(53);
  const Maniplex hemi = build_seed("hemicube");
  const Maniplex hemioct = build_seed("hemioctahedron");
  for (int t = 0; t < 10; ++t) {
    const Maniplex& m = t % 2 == 0 ? hemi : hemioct;
    const std::uint32_t facets = count_facets(m);
    std::uniform_int_distribution<int> colours(1, static_cast<int>(facets));
    Colouring c;
    c.num_colours = colours(rng);
    c.colour_of.resize(facets);
    // surjective random assignment
    for (std::uint32_t f = 0; f < facets; ++f)
      c.colour_of[f] = f < static_cast<std::uint32_t>(c.num_colours)
                           ? static_cast<int>(f) + 1
                           : std::uniform_int_distribution<int>(1, c.num_colours)(rng);
    CHECK(validate(extension(m, c)).ok());
  }
}

TEST_CASE("tau symmetries") {
  const Maniplex ext = rank4_total_extension();
  for (int j = 1; j <= 3; ++j) {
    const Automorphism t = tau(ext, j);
    CHECK(is_colour_preserving(ext, t));
    CHECK(t.then(t).is_identity());
  }
  CHECK_THROWS_AS(tau(ext, 0), std::invalid_argument);
  CHECK_THROWS_AS(tau(ext, 4), std::invalid_argument);

  // the taus act regularly on facets: the XOR masks they induce span Z_2^l
  std::set<std::uint32_t> reached{0};
  std::vector<std::uint32_t> frontier{0};
  const auto& labels = ext.facet_labels()->label;
  while (!frontier.empty()) {
    const std::uint32_t x = frontier.back();
    frontier.pop_back();
    for (int j = 1; j <= 3; ++j) {
      // image of any flag of facet x under tau_j lands in facet x ^ bit
      const std::uint32_t y = x ^ (1u << (j - 1));
      if (reached.insert(y).second) frontier.push_back(y);
    }
  }
  CHECK(reached.size() == 8);
  (void)labels;
}

TEST_CASE("tau on the trivial extension swaps the two facets") {
  const Maniplex hemi = build_seed("hemicube");
  Colouring one;
  one.num_colours = 1;
  one.colour_of = {1, 1, 1};
  const Maniplex ext = extension(hemi, one);
  const Automorphism t = tau(ext, 1);
  const auto& labels = ext.facet_labels()->label;
  for (Flag u = 0; u < ext.num_flags(); ++u)
    CHECK(labels[t(u)] == (labels[u] ^ 1u));
}

TEST_CASE("extending automorphisms over an invariant colouring") {
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  const Maniplex ext = extension(hemi, total);

  const Automorphism id_ext =
      extend_automorphism(hemi, total, Automorphism::identity(hemi.num_flags()));
  CHECK(id_ext.is_identity());

  // the standard generator rho_i maps the base flag to its i-neighbour and
  // extends to do the same on (u0, 0)
  const Flag u0 = 0;
  for (Colour i = 0; i < 3; ++i) {
    const auto rho = find_automorphism(hemi, u0, hemi.adj(i, u0));
    REQUIRE(rho.has_value());
    const Automorphism ext_rho = extend_automorphism(hemi, total, *rho);
    CHECK(is_colour_preserving(ext, ext_rho));
    CHECK(ext_rho(u0 * 8 + 0) == hemi.adj(i, u0) * 8 + 0);
  }
}

TEST_CASE("extending over a non-invariant colouring is rejected") {
  const Maniplex hemi = build_seed("hemicube");
  Colouring uneven;
  uneven.num_colours = 2;
  uneven.colour_of = {1, 1, 2};
  // some automorphism moves facet 2 into the colour-1 class
  bool rejected = false;
  for (Flag b = 1; b < hemi.num_flags() && !rejected; ++b) {
    const auto phi = find_automorphism(hemi, 0, b);
    REQUIRE(phi.has_value());
    try {
      extend_automorphism(hemi, uneven, *phi);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
  }
  CHECK(rejected);
}

TEST_CASE("extension of automorphisms is a homomorphism") {
  std::mt19937 rng(59);
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  std::uniform_int_distribution<Flag> pick(0, hemi.num_flags() - 1);
  for (int t = 0; t < 10; ++t) {
    const auto phi = find_automorphism(hemi, 0, pick(rng));
    const auto psi = find_automorphism(hemi, 0, pick(rng));
    REQUIRE(phi.has_value());
    REQUIRE(psi.has_value());
    const Automorphism lhs = extend_automorphism(hemi, total, phi->then(*psi));
    const Automorphism rhs = extend_automorphism(hemi, total, *phi)
                                 .then(extend_automorphism(hemi, total, *psi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("extended weights twist by the facet parity") {
  std::mt19937 rng(61);
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  const Maniplex ext = extension(hemi, total);
  const WeightFunction theta = vartheta(hemi);
  const WeightFunction wc = extend_weight(hemi, total, theta);

  CHECK(edge_symmetric(ext, wc));
  const int k = wc.modulus;

  // new-colour edges weigh zero
  for (Flag t = 0; t < ext.num_flags(); ++t) CHECK(wc.at(3, t) == 0);

  // walks inside a facet copy twist by the parity of its label
  for (int trial = 0; trial < 40; ++trial) {
    Walk base = oracles::random_walk(hemi, rng, trial % 8);
    const std::uint32_t x = static_cast<std::uint32_t>(trial) % 8;
    Walk lifted{base.start * 8 + x, base.colours};
    const int twisted = walk_weight(ext, wc, lifted);
    const int expected = label_parity(x) > 0
                             ? walk_weight(hemi, theta, base)
                             : (k - walk_weight(hemi, theta, base)) % k;
    CHECK(twisted == expected);
  }

  // even-label facets restrict back to the original weights
  for (std::uint32_t x : {0u, 3u, 5u, 6u}) {
    const auto [facet, to_parent] = facet_submaniplex(ext, x);
    const WeightFunction restricted = restrict_weight(ext, wc, facet, to_parent);
    for (Colour i = 0; i < 3; ++i)
      for (Flag t = 0; t < facet.num_flags(); ++t)
        CHECK(restricted.at(i, t) == theta.at(i, to_parent[t] / 8));
  }
}

TEST_CASE("string property of the cover survives extension") {
  std::mt19937 rng(67);
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  int preserved = 0;
  for (int t = 0; t < 12; ++t) {
    WeightFunction w;
    if (t == 0) {
      w = vartheta(hemi);
    } else if (t == 1) {
      w = WeightFunction{4, std::vector<std::vector<int>>(
                                3, std::vector<int>(hemi.num_flags(), 0))};
    } else {
      w = oracles::random_weight(hemi, 2 + t % 5, rng);
    }
    if (!string_property_of_cover(hemi, w)) continue;
    ++preserved;
    CHECK(string_property_of_cover(extension(hemi, total), extend_weight(hemi, total, w)));
  }
  CHECK(preserved >= 2);
}

TEST_CASE("every facet cover of the extension is the base cover") {
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  const Maniplex ext = extension(hemi, total);
  const WeightFunction theta = vartheta(hemi);
  const WeightFunction wc = extend_weight(hemi, total, theta);
  const Maniplex base_cover = cross_cover(hemi, theta);

  for (std::uint32_t x : {0u, 1u, 7u}) {
    const auto [facet, to_parent] = facet_submaniplex(ext, x);
    const Maniplex facet_cover =
        cross_cover(facet, restrict_weight(ext, wc, facet, to_parent));
    CHECK(are_isomorphic(facet_cover, base_cover).has_value());
  }
}

TEST_CASE("facet covers match the base cover for the antipodal step too") {
  const Maniplex hemi = build_seed("hemicube");
  const Colouring total = total_colouring(hemi);
  const Maniplex ext4 = extension(hemi, total);
  const WeightFunction w4 = extend_weight(hemi, total, vartheta(hemi));
  const Colouring anti = antipodal_colouring(ext4);
  const Maniplex ext5 = extension(ext4, anti);
  const WeightFunction w5 = extend_weight(ext4, anti, w4);

  const Maniplex rank4_cover = cross_cover(ext4, w4);
  const auto [facet, to_parent] = facet_submaniplex(ext5, 5);
  const Maniplex facet_cover =
      cross_cover(facet, restrict_weight(ext5, w5, facet, to_parent));
  CHECK(are_isomorphic(facet_cover, rank4_cover).has_value());
}

TEST_CASE("antipodal colourings of extensions are always invariant") {
  const Maniplex hemi = build_seed("hemicube");
  Colouring one;
  one.num_colours = 1;
  one.colour_of = {1, 1, 1};
  const Maniplex trivial = extension(hemi, one);
  CHECK(verify_colouring_invariant(trivial, antipodal_colouring(trivial)));

  const Maniplex ext4 = rank4_total_extension();
  const Maniplex ext5 = extension(ext4, antipodal_colouring(ext4));
  CHECK(verify_colouring_invariant(ext5, antipodal_colouring(ext5)));
}

TEST_CASE("tau requires the canonical extension layout") {
  const Maniplex ext = rank4_total_extension();
  // relabel flags with a nontrivial automorphism: labels no longer match
  // the u*2^l + x indexing
  const auto phi = find_automorphism(ext, 0, ext.adj(3, 0));
  REQUIRE(phi.has_value());
  std::vector<std::vector<Flag>> adj(4, std::vector<Flag>(ext.num_flags()));
  FacetLabels labels{3, std::vector<std::uint32_t>(ext.num_flags())};
  for (Colour i = 0; i < 4; ++i)
    for (Flag u = 0; u < ext.num_flags(); ++u)
      adj[static_cast<std::size_t>(i)][(*phi)(u)] = (*phi)(ext.adj(i, u));
  for (Flag u = 0; u < ext.num_flags(); ++u)
    labels.label[(*phi)(u)] = ext.facet_labels()->label[u];
  const Maniplex shuffled(4, std::move(adj), std::move(labels));
  CHECK(validate(shuffled).ok());
  CHECK_THROWS_AS(tau(shuffled, 1), std::invalid_argument);
}

TEST_CASE("capacity guards reject oversized extensions") {
  const Maniplex ext4 = rank4_total_extension();
  const Maniplex ext5 = extension(ext4, total_colouring(ext4));  // 49152 flags, 256 facets
  CHECK(ext5.num_flags() == 49152);
  CHECK(count_facets(ext5) == 256);

  // 256 label bits exceed the 24-bit capacity
  CHECK_THROWS_AS(extension(ext5, total_colouring(ext5)), std::invalid_argument);

  // 16 bits fit, but 49152 * 2^16 flags overflow the flag space
  Colouring sixteen;
  sixteen.num_colours = 16;
  sixteen.colour_of.resize(256);
  for (int f = 0; f < 256; ++f) sixteen.colour_of[f] = f % 16 + 1;
  CHECK_THROWS_AS(extension(ext5, sixteen), std::invalid_argument);
}
