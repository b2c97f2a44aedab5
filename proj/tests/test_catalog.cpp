#include <doctest.h>

#include "maniplex/catalog.hpp"
#include "maniplex/extend.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;

TEST_CASE("platonic flag graphs") {
  const Maniplex cube = platonic_flag_graph("cube");
  CHECK(cube.num_flags() == 48);
  CHECK(validate(cube).ok());
  CHECK(*schlafli_type(cube) == MapType{4, 3});
  CHECK(is_orientable(cube));
  CHECK(analyze_automorphisms(cube).order == 48);

  const Maniplex icosa = platonic_flag_graph("icosahedron");
  CHECK(icosa.num_flags() == 120);
  CHECK(validate(icosa).ok());
  CHECK(*schlafli_type(icosa) == MapType{3, 5});

  CHECK(*schlafli_type(platonic_flag_graph("dodecahedron")) == MapType{5, 3});
  CHECK(*schlafli_type(platonic_flag_graph("octahedron")) == MapType{3, 4});
  CHECK_THROWS_AS(platonic_flag_graph("tetrahedron"), std::invalid_argument);
}

TEST_CASE("every catalogued seed builds and self-certifies") {
  for (const SeedSpec& spec : seed_catalogue()) {
    CHECK((spec.type.p % 2 == 1 || spec.type.q % 2 == 1));
    const Maniplex m = build_seed(spec.name);
    CHECK(m.num_flags() == spec.flags);
    CHECK(validate(m).ok());
    CHECK_FALSE(is_orientable(m));
    CHECK(*schlafli_type(m) == spec.type);
    CHECK(analyze_automorphisms(m).order == m.num_flags());
    CHECK(is_stable(m).stable);
  }
  CHECK_THROWS_AS(build_seed("cube"), std::invalid_argument);
}

TEST_CASE("the antipodal quotient halves the cube flag graph") {
  const Maniplex hemi = antipodal_quotient(platonic_flag_graph("cube"));
  CHECK(hemi.num_flags() == 24);
  CHECK(are_isomorphic(hemi, build_seed("hemicube")).has_value());
}

TEST_CASE("vartheta weight values") {
  const Maniplex hemi = build_seed("hemicube");
  const WeightFunction theta = vartheta(hemi);
  const WeightFunction prime = vartheta_prime(hemi);
  CHECK(theta.modulus == 4);
  CHECK(prime.modulus == 4);
  for (Flag u = 0; u < hemi.num_flags(); ++u) {
    CHECK(theta.at(1, u) == 0);
    CHECK(theta.at(0, u) == 1);
    CHECK(theta.at(2, u) == 1);
    // the two functions cover every edge with weight exactly one
    for (Colour i = 0; i < 3; ++i) CHECK(theta.at(i, u) + prime.at(i, u) == 1);
  }
  CHECK_THROWS_AS(vartheta(Maniplex(2, {{1, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("proper pair verification for the worked pairs") {
  const Maniplex hemi = build_seed("hemicube");

  const ProperPairReport theta_report = verify_proper_pair(hemi, vartheta(hemi));
  CHECK(theta_report.regular);
  CHECK(theta_report.odd_even_walk.has_value());
  CHECK(theta_report.cover_nonorientable_maniplex);
  CHECK(theta_report.aut_consistent);
  CHECK(theta_report.verdict());
  CHECK(theta_report.aut_order == 24);

  const ProperPairReport prime_report = verify_proper_pair(hemi, vartheta_prime(hemi));
  CHECK(prime_report.verdict());
  const Maniplex prime_cover = cross_cover(hemi, vartheta_prime(hemi));
  CHECK(stg_label(symmetry_type_graph(prime_cover), 3) == "2^3_{0,2}");

  // the cube flag graph is bipartite, so condition (2) fails
  const Maniplex cube = platonic_flag_graph("cube");
  const ProperPairReport cube_report = verify_proper_pair(cube, vartheta(cube));
  CHECK(cube_report.regular);
  CHECK_FALSE(cube_report.odd_even_walk.has_value());
  CHECK_FALSE(cube_report.verdict());

  CHECK_THROWS_AS(verify_proper_pair(hemi,
                                     WeightFunction{3, std::vector<std::vector<int>>(
                                                           3, std::vector<int>(24, 0))}),
                  std::invalid_argument);
}

TEST_CASE("odd walks of even weight exist for every seed with vartheta") {
  for (const SeedSpec& spec : seed_catalogue()) {
    const Maniplex m = build_seed(spec.name);
    const auto walk = odd_walk_even_weight(m, vartheta(m));
    REQUIRE(walk.has_value());
    CHECK(walk->length() % 2 == 1);
    const int weight = walk_weight(m, vartheta(m), *walk);
    CHECK((weight == 0 || weight == 2));
  }
}

TEST_CASE("every seed yields a 2-orbit fully transitive unstable vartheta cover") {
  for (const SeedSpec& spec : seed_catalogue()) {
    const Maniplex m = build_seed(spec.name);
    CHECK(verify_proper_pair(m, vartheta(m)).verdict());
    const Maniplex cover = cross_cover(m, vartheta(m));
    const AutAnalysis analysis = analyze_automorphisms(cover);
    CHECK(analysis.num_orbits == 2);
    CHECK(analysis.order == cover.num_flags() / 2);
    CHECK(stg_label(symmetry_type_graph(cover, analysis), 3) == "2^3_{1}");
    CHECK(is_fully_transitive(cover).fully);
    CHECK_FALSE(is_stable(cover).stable);
  }
}

TEST_CASE("proper pairs extend along invariant colourings") {
  const Maniplex hemi = build_seed("hemicube");
  const WeightFunction theta = vartheta(hemi);
  REQUIRE(verify_proper_pair(hemi, theta).verdict());

  const Colouring total = total_colouring(hemi);
  REQUIRE(verify_colouring_invariant(hemi, total));
  const Maniplex ext = extension(hemi, total);
  const WeightFunction wc = extend_weight(hemi, total, theta);
  const ProperPairReport report = verify_proper_pair(ext, wc);
  CHECK(report.regular);
  CHECK(report.aut_order == 192);
  CHECK(report.verdict());

  // and once more through the antipodal colouring up to rank 5
  const Colouring anti = antipodal_colouring(ext);
  REQUIRE(verify_colouring_invariant(ext, anti));
  const Maniplex ext5 = extension(ext, anti);
  CHECK(ext5.num_flags() == 3072);
  CHECK(verify_proper_pair(ext5, extend_weight(ext, anti, wc)).verdict());
}
