#include "maniplex/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

namespace maniplex {

namespace {

using VertexPair = std::pair<int, int>;

// Flag graph of a polyhedron given by its faces as cyclic vertex lists.
// Flags are the incident (vertex, edge, face) triples, enumerated in
// lexicographic (v, e, f) order; colour 0 swaps the vertex, colour 1 the
// edge, colour 2 the face.
Maniplex flag_graph_from_faces(int num_vertices, const std::vector<std::vector<int>>& face_cycles,
                               std::string provenance) {
  std::map<VertexPair, int> edge_id;
  std::vector<VertexPair> edges;
  auto edge_of = [&](int a, int b) {
    const VertexPair key{std::min(a, b), std::max(a, b)};
    auto it = edge_id.find(key);
    if (it == edge_id.end()) {
      it = edge_id.emplace(key, static_cast<int>(edges.size())).first;
      edges.push_back(key);
    }
    return it->second;
  };

  // face incidence as consecutive pairs of the cycles
  std::vector<std::vector<int>> face_edges(face_cycles.size());
  for (std::size_t f = 0; f < face_cycles.size(); ++f) {
    const auto& cyc = face_cycles[f];
    if (cyc.size() < 3) throw std::logic_error("face cycle too short");
    for (std::size_t t = 0; t < cyc.size(); ++t)
      face_edges[f].push_back(edge_of(cyc[t], cyc[(t + 1) % cyc.size()]));
  }

  std::vector<std::vector<int>> edge_faces(edges.size());
  for (std::size_t f = 0; f < face_edges.size(); ++f)
    for (int e : face_edges[f]) edge_faces[static_cast<std::size_t>(e)].push_back(static_cast<int>(f));
  for (const auto& ef : edge_faces)
    if (ef.size() != 2) throw std::logic_error("every edge must lie in exactly two faces");

  struct Triple {
    int v, e, f;
    bool operator<(const Triple& o) const {
      return std::tie(v, e, f) < std::tie(o.v, o.e, o.f);
    }
    bool operator==(const Triple&) const = default;
  };
  std::vector<Triple> flags;
  for (std::size_t f = 0; f < face_edges.size(); ++f)
    for (int e : face_edges[f]) {
      flags.push_back({edges[static_cast<std::size_t>(e)].first, e, static_cast<int>(f)});
      flags.push_back({edges[static_cast<std::size_t>(e)].second, e, static_cast<int>(f)});
    }
  std::sort(flags.begin(), flags.end());
  std::map<Triple, Flag> flag_id;
  for (std::size_t t = 0; t < flags.size(); ++t) flag_id[flags[t]] = static_cast<Flag>(t);

  auto other_vertex = [&](const Triple& t) {
    const auto& [a, b] = edges[static_cast<std::size_t>(t.e)];
    return Triple{t.v == a ? b : a, t.e, t.f};
  };
  auto other_edge = [&](const Triple& t) {
    // the unique second edge of face f incident to vertex v
    int found = -1;
    for (int e : face_edges[static_cast<std::size_t>(t.f)]) {
      if (e == t.e) continue;
      const auto& [a, b] = edges[static_cast<std::size_t>(e)];
      if (a == t.v || b == t.v) {
        if (found != -1) throw std::logic_error("face has more than two edges at a vertex");
        found = e;
      }
    }
    if (found == -1) throw std::logic_error("face has no second edge at a vertex");
    return Triple{t.v, found, t.f};
  };
  auto other_face = [&](const Triple& t) {
    const auto& fs = edge_faces[static_cast<std::size_t>(t.e)];
    return Triple{t.v, t.e, fs[0] == t.f ? fs[1] : fs[0]};
  };

  std::vector<std::vector<Flag>> adj(3, std::vector<Flag>(flags.size()));
  for (std::size_t t = 0; t < flags.size(); ++t) {
    adj[0][t] = flag_id.at(other_vertex(flags[t]));
    adj[1][t] = flag_id.at(other_edge(flags[t]));
    adj[2][t] = flag_id.at(other_face(flags[t]));
  }
  (void)num_vertices;
  return Maniplex(3, std::move(adj), std::nullopt, std::move(provenance));
}

std::vector<std::vector<int>> cube_faces() {
  // vertices are bit triples; each face fixes one axis
  std::vector<std::vector<int>> out;
  for (int axis = 0; axis < 3; ++axis) {
    const int c = (axis + 1) % 3;
    const int d = (axis + 2) % 3;
    for (int value = 0; value < 2; ++value) {
      const int base = value << axis;
      out.push_back({base, base | (1 << c), base | (1 << c) | (1 << d), base | (1 << d)});
    }
  }
  return out;
}

std::vector<std::vector<int>> icosahedron_faces() {
  // gyroelongated pentagonal bipyramid: poles 0 and 11, upper ring 1..5,
  // lower ring 6..10, with u_i adjacent to l_i and l_{i+1}
  auto u = [](int i) { return 1 + (i % 5 + 5) % 5; };
  auto l = [](int i) { return 6 + (i % 5 + 5) % 5; };
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 5; ++i) {
    out.push_back({0, u(i), u(i + 1)});
    out.push_back({u(i), l(i), l(i + 1)});
    out.push_back({u(i), u(i + 1), l(i + 1)});
    out.push_back({11, l(i), l(i + 1)});
  }
  return out;
}

// swap vertex and face roles
Maniplex dual3(const Maniplex& m, std::string provenance) {
  if (m.rank() != 3) throw std::invalid_argument("dual is implemented for rank 3");
  std::vector<std::vector<Flag>> adj{m.adj_row(2), m.adj_row(1), m.adj_row(0)};
  return Maniplex(3, std::move(adj), std::nullopt, std::move(provenance));
}

// The unique non-identity central automorphism, required to be an
// involution with no fixed flag.
Automorphism central_involution(const Maniplex& m) {
  const AutAnalysis analysis = analyze_automorphisms(m);
  if (analysis.order != m.num_flags())
    throw std::logic_error("central involution search expects a regular maniplex");

  // With a regular action every automorphism is determined by the image of
  // flag 0; enumerate them all and keep the central involutions.
  std::optional<Automorphism> found;
  for (Flag b = 1; b < m.num_flags(); ++b) {
    auto phi = find_automorphism(m, 0, b);
    if (!phi) throw std::logic_error("regular maniplex lost an automorphism");
    if (!phi->then(*phi).is_identity()) continue;
    bool central = true;
    for (const Automorphism& g : analysis.generators) {
      if (!(phi->then(g) == g.then(*phi))) {
        central = false;
        break;
      }
    }
    if (!central) continue;
    bool fixed_point_free = true;
    for (Flag u = 0; u < m.num_flags(); ++u)
      if ((*phi)(u) == u) {
        fixed_point_free = false;
        break;
      }
    if (!fixed_point_free) continue;
    if (found) throw std::logic_error("central involution is not unique");
    found = std::move(*phi);
  }
  if (!found) throw std::logic_error("no central involution found");
  return *found;
}

}  // namespace

const std::vector<SeedSpec>& seed_catalogue() {
  static const std::vector<SeedSpec> table{
      {"hemicube", {4, 3}, 24},
      {"hemioctahedron", {3, 4}, 24},
      {"hemidodecahedron", {5, 3}, 60},
      {"hemiicosahedron", {3, 5}, 60},
  };
  return table;
}

Maniplex platonic_flag_graph(std::string_view name) {
  if (name == "cube") return flag_graph_from_faces(8, cube_faces(), "cube");
  if (name == "octahedron")
    return dual3(flag_graph_from_faces(8, cube_faces(), "cube"), "octahedron");
  if (name == "icosahedron")
    return flag_graph_from_faces(12, icosahedron_faces(), "icosahedron");
  if (name == "dodecahedron")
    return dual3(flag_graph_from_faces(12, icosahedron_faces(), "icosahedron"),
                 "dodecahedron");
  throw std::invalid_argument("unknown polyhedron: " + std::string(name));
}

Maniplex antipodal_quotient(const Maniplex& m) {
  const Automorphism phi = central_involution(m);

  std::vector<Flag> rep_index(m.num_flags(), kNoFlag);
  std::vector<Flag> reps;
  for (Flag u = 0; u < m.num_flags(); ++u) {
    if (phi(u) < u) continue;  // phi(u) == u is impossible here
    rep_index[u] = static_cast<Flag>(reps.size());
    reps.push_back(u);
  }
  auto quotient_id = [&](Flag u) {
    return rep_index[u] != kNoFlag ? rep_index[u] : rep_index[phi(u)];
  };

  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(m.rank()),
                                     std::vector<Flag>(reps.size()));
  for (Colour i = 0; i < m.rank(); ++i)
    for (std::size_t t = 0; t < reps.size(); ++t) {
      const Flag image = quotient_id(m.adj(i, reps[t]));
      if (image == t) throw std::logic_error("antipodal quotient produced a fixed point");
      adj[static_cast<std::size_t>(i)][t] = image;
    }
  return Maniplex(m.rank(), std::move(adj), std::nullopt,
                  "antipodal_quotient(" + m.provenance() + ")");
}

Maniplex build_seed(std::string_view name) {
  const SeedSpec* spec = nullptr;
  for (const SeedSpec& s : seed_catalogue())
    if (s.name == name) spec = &s;
  if (!spec) throw std::invalid_argument("unknown seed: " + std::string(name));

  static const std::array<std::pair<std::string_view, std::string_view>, 4> solids{{
      {"hemicube", "cube"},
      {"hemioctahedron", "octahedron"},
      {"hemidodecahedron", "dodecahedron"},
      {"hemiicosahedron", "icosahedron"},
  }};
  std::string_view solid;
  for (const auto& [seed, poly] : solids)
    if (seed == name) solid = poly;

  const Maniplex full = platonic_flag_graph(solid);
  if (!validate(full).ok()) throw std::logic_error("platonic flag graph failed validation");

  Maniplex hemi = antipodal_quotient(full);
  if (!validate(hemi).ok()) throw std::logic_error("seed failed validation");
  if (hemi.num_flags() != spec->flags) throw std::logic_error("seed has wrong flag count");
  if (is_orientable(hemi)) throw std::logic_error("seed is orientable");
  if (analyze_automorphisms(hemi).order != hemi.num_flags())
    throw std::logic_error("seed is not regular");
  const auto type = schlafli_type(hemi);
  if (!type || !(*type == spec->type)) throw std::logic_error("seed has wrong type");

  return Maniplex(hemi.rank(),
                  std::vector<std::vector<Flag>>{hemi.adj_row(0), hemi.adj_row(1),
                                                 hemi.adj_row(2)},
                  std::nullopt, std::string(name));
}

namespace {

WeightFunction constant_by_colour(const Maniplex& m, int one_edge_weight, int other_weight) {
  if (m.rank() != 3) throw std::invalid_argument("vartheta weights are defined for rank 3");
  WeightFunction w;
  w.modulus = 4;
  w.values.assign(3, std::vector<int>(m.num_flags()));
  for (Colour i = 0; i < 3; ++i)
    std::fill(w.values[static_cast<std::size_t>(i)].begin(),
              w.values[static_cast<std::size_t>(i)].end(),
              i == 1 ? one_edge_weight : other_weight);
  return w;
}

}  // namespace

WeightFunction vartheta(const Maniplex& m) { return constant_by_colour(m, 0, 1); }

WeightFunction vartheta_prime(const Maniplex& m) { return constant_by_colour(m, 1, 0); }

ProperPairReport verify_proper_pair(const Maniplex& m, const WeightFunction& w,
                                    AutSearch mode) {
  require_compatible(m, w);
  if (w.modulus % 2 != 0)
    throw std::invalid_argument("proper pair verification requires an even modulus");

  ProperPairReport report;
  const AutAnalysis analysis = analyze_automorphisms(m, mode);
  report.aut_order = analysis.order;
  report.regular = (analysis.order == m.num_flags());
  report.odd_even_walk = odd_walk_even_weight(m, w);

  const Maniplex cover = cross_cover(m, w);
  report.cover_nonorientable_maniplex = validate(cover).ok() && !is_orientable(cover);
  report.aut_consistent = is_aut_consistent(m, w, analysis);
  return report;
}

}  // namespace maniplex
