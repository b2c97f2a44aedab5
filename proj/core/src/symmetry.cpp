#include "maniplex/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maniplex {

namespace {

// Breadth-first extension of the partial map a -> b between two maniplexes
// of equal rank. Either completes to a full colour-preserving bijection or
// stops at the first inconsistent edge; in the latter case it reports a
// colour word that is closed at a in ma but moves b in mb. Every genuine
// image of a satisfies all such words, which is what makes them usable as
// exact candidate filters.
struct Propagation {
  bool ok = false;
  std::vector<Flag> image;
  std::vector<Colour> conflict_word;
};

Propagation propagate(const Maniplex& ma, Flag a, const Maniplex& mb, Flag b) {
  const int n = ma.rank();
  const Flag fa = ma.num_flags();
  Propagation p;

  if (ma.rank() != mb.rank())
    throw std::invalid_argument("rank mismatch in automorphism search");

  std::vector<Flag> img(fa, kNoFlag);
  std::vector<Flag> parent(fa, kNoFlag);
  std::vector<Colour> via(fa, -1);
  std::vector<Flag> queue;
  queue.reserve(fa);
  img[a] = b;
  queue.push_back(a);
  std::size_t head = 0;
  while (head < queue.size()) {
    const Flag u = queue[head++];
    const Flag x = img[u];
    for (Colour c = 0; c < n; ++c) {
      const Flag v = ma.adj(c, u);
      const Flag y = mb.adj(c, x);
      if (img[v] == kNoFlag) {
        img[v] = y;
        parent[v] = u;
        via[v] = c;
        queue.push_back(v);
      } else if (img[v] != y) {
        // tree word a->u, the edge colour, then the tree word v->a.
        std::vector<Colour>& w = p.conflict_word;
        for (Flag t = u; t != a; t = parent[t]) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        w.push_back(c);
        for (Flag t = v; t != a; t = parent[t]) w.push_back(via[t]);
        return p;
      }
    }
  }
  if (queue.size() != fa)
    throw std::invalid_argument("automorphism search requires a connected flag graph");

  // A completed assignment out of a connected ma is automatically a
  // colour-preserving morphism, but onto a disconnected mb it can be a
  // covering map instead of a bijection; reject those (with no screening
  // word: the failure carries no stabilizer witness).
  std::vector<char> used(mb.num_flags(), 0);
  for (Flag y : img) {
    if (used[y]) return p;
    used[y] = 1;
  }
  p.ok = true;
  p.image = std::move(img);
  return p;
}

// Orbit ids in order of smallest contained flag, from union-find roots.
std::pair<std::uint32_t, std::vector<std::uint32_t>> compact_orbits(
    std::vector<Flag>& root_of) {
  const Flag f = static_cast<Flag>(root_of.size());
  std::vector<std::uint32_t> orbit_of(f);
  std::vector<std::uint32_t> id_of_root(f, kNoFlag);
  std::uint32_t next = 0;

  // path compression pass
  auto find = [&root_of](Flag u) {
    while (root_of[u] != u) {
      root_of[u] = root_of[root_of[u]];
      u = root_of[u];
    }
    return u;
  };
  for (Flag u = 0; u < f; ++u) {
    const Flag r = find(u);
    if (id_of_root[r] == kNoFlag) id_of_root[r] = next++;
    orbit_of[u] = id_of_root[r];
  }
  return {next, std::move(orbit_of)};
}

std::pair<std::uint32_t, std::vector<std::uint32_t>> orbit_partition(
    Flag num_flags, const std::vector<Automorphism>& gens) {
  std::vector<Flag> root(num_flags);
  std::iota(root.begin(), root.end(), Flag{0});
  auto find = [&root](Flag u) {
    while (root[u] != u) {
      root[u] = root[root[u]];
      u = root[u];
    }
    return u;
  };
  for (const Automorphism& g : gens) {
    for (Flag u = 0; u < num_flags; ++u) {
      const Flag ru = find(u);
      const Flag rv = find(g(u));
      if (ru != rv) root[std::max(ru, rv)] = std::min(ru, rv);
    }
  }
  return compact_orbits(root);
}

AutAnalysis analyze_exhaustive(const Maniplex& m) {
  AutAnalysis a;
  const Flag f = m.num_flags();
  for (Flag b = 0; b < f; ++b) {
    Propagation p = propagate(m, 0, m, b);
    if (p.ok) a.generators.emplace_back(std::move(p.image));
  }
  a.order = a.generators.size();
  std::tie(a.num_orbits, a.orbit_of) = orbit_partition(f, a.generators);
  return a;
}

AutAnalysis analyze_pruned(const Maniplex& m) {
  const Flag f = m.num_flags();
  const Flag base = 0;

  std::vector<char> candidate(f, 1);
  std::vector<char> in_orbit(f, 0);
  std::vector<Flag> orbit_list{base};
  std::vector<std::uint32_t> gens_applied{0};  // per orbit_list entry
  in_orbit[base] = 1;
  std::vector<Automorphism> gens;

  auto close_orbit = [&] {
    for (std::size_t idx = 0; idx < orbit_list.size(); ++idx) {
      const Flag u = orbit_list[idx];
      for (std::size_t g = gens_applied[idx]; g < gens.size(); ++g) {
        const Flag v = gens[g](u);
        if (!in_orbit[v]) {
          in_orbit[v] = 1;
          orbit_list.push_back(v);
          gens_applied.push_back(0);
        }
      }
      gens_applied[idx] = static_cast<std::uint32_t>(gens.size());
    }
  };

  Flag next = 0;
  while (true) {
    while (next < f && (!candidate[next] || in_orbit[next])) ++next;
    if (next >= f) break;
    Propagation p = propagate(m, base, m, next);
    if (p.ok) {
      gens.emplace_back(std::move(p.image));
      close_orbit();
    } else if (p.conflict_word.empty()) {
      candidate[next] = 0;
    } else {
      const auto& w = p.conflict_word;
      for (Flag s = 0; s < f; ++s) {
        if (candidate[s] && !in_orbit[s] &&
            apply_word(m, s, w) != s)
          candidate[s] = 0;
      }
    }
  }

  AutAnalysis a;
  a.order = orbit_list.size();
  a.generators = std::move(gens);
  std::tie(a.num_orbits, a.orbit_of) = orbit_partition(f, a.generators);
  return a;
}

}  // namespace

Automorphism::Automorphism(std::vector<Flag> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("empty automorphism");
}

Automorphism Automorphism::identity(Flag num_flags) {
  std::vector<Flag> img(num_flags);
  std::iota(img.begin(), img.end(), Flag{0});
  return Automorphism(std::move(img));
}

bool Automorphism::is_identity() const {
  for (Flag u = 0; u < size(); ++u)
    if (image_[u] != u) return false;
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<Flag> inv(image_.size());
  for (Flag u = 0; u < size(); ++u) inv[image_[u]] = u;
  return Automorphism(std::move(inv));
}

Automorphism Automorphism::then(const Automorphism& b) const {
  std::vector<Flag> out(image_.size());
  for (Flag u = 0; u < size(); ++u) out[u] = b(image_[u]);
  return Automorphism(std::move(out));
}

bool is_colour_preserving(const Maniplex& m, const Automorphism& phi) {
  if (phi.size() != m.num_flags()) return false;
  for (Colour i = 0; i < m.rank(); ++i)
    for (Flag u = 0; u < m.num_flags(); ++u)
      if (phi(m.adj(i, u)) != m.adj(i, phi(u))) return false;
  return true;
}

std::optional<Automorphism> find_automorphism(const Maniplex& m, Flag a, Flag b) {
  if (a >= m.num_flags() || b >= m.num_flags())
    throw std::invalid_argument("flag out of range");
  Propagation p = propagate(m, a, m, b);
  if (!p.ok) return std::nullopt;
  return Automorphism(std::move(p.image));
}

AutSearch default_aut_search() {
#ifdef MANIPLEX_DISABLE_AUT_PRUNING
  return AutSearch::exhaustive;
#else
  return AutSearch::pruned;
#endif
}

AutAnalysis analyze_automorphisms(const Maniplex& m, AutSearch mode) {
  return mode == AutSearch::pruned ? analyze_pruned(m) : analyze_exhaustive(m);
}

std::pair<std::uint64_t, std::vector<std::uint32_t>> aut_order_and_orbits(
    const Maniplex& m, AutSearch mode) {
  AutAnalysis a = analyze_automorphisms(m, mode);
  return {a.order, std::move(a.orbit_of)};
}

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m, const AutAnalysis& analysis) {
  SymmetryTypeGraph stg;
  stg.num_orbits = analysis.num_orbits;
  stg.orbit_of = analysis.orbit_of;
  stg.target.assign(static_cast<std::size_t>(m.rank()),
                    std::vector<std::uint32_t>(stg.num_orbits, kNoFlag));
  for (Colour i = 0; i < m.rank(); ++i) {
    auto& row = stg.target[static_cast<std::size_t>(i)];
    for (Flag u = 0; u < m.num_flags(); ++u) {
      const std::uint32_t from = stg.orbit_of[u];
      const std::uint32_t to = stg.orbit_of[m.adj(i, u)];
      if (row[from] == kNoFlag)
        row[from] = to;
      else if (row[from] != to)
        throw std::logic_error("orbit quotient is not well defined");
    }
  }
  return stg;
}

SymmetryTypeGraph symmetry_type_graph(const Maniplex& m, AutSearch mode) {
  return symmetry_type_graph(m, analyze_automorphisms(m, mode));
}

std::string stg_label(const SymmetryTypeGraph& stg, int rank) {
  if (stg.num_orbits != 2) return {};
  std::string inner;
  for (Colour i = 0; i < rank; ++i) {
    if (stg.semi_edge(i, 0)) {
      if (!inner.empty()) inner += ',';
      inner += std::to_string(i);
    }
  }
  return "2^" + std::to_string(rank) + "_{" + inner + "}";
}

FaceTransitivity is_fully_transitive(const SymmetryTypeGraph& stg) {
  const int n = static_cast<int>(stg.target.size());
  FaceTransitivity ft;
  ft.per_colour.assign(static_cast<std::size_t>(n), false);
  ft.fully = true;
  for (Colour i = 0; i < n; ++i) {
    std::vector<std::uint32_t> root(stg.num_orbits);
    std::iota(root.begin(), root.end(), 0u);
    auto find = [&root](std::uint32_t o) {
      while (root[o] != o) {
        root[o] = root[root[o]];
        o = root[o];
      }
      return o;
    };
    for (Colour j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::uint32_t o = 0; o < stg.num_orbits; ++o) {
        const std::uint32_t a = find(o);
        const std::uint32_t b = find(stg.target[static_cast<std::size_t>(j)][o]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    std::uint32_t components = 0;
    for (std::uint32_t o = 0; o < stg.num_orbits; ++o)
      if (find(o) == o) ++components;
    ft.per_colour[static_cast<std::size_t>(i)] = (components == 1);
    ft.fully = ft.fully && components == 1;
  }
  return ft;
}

FaceTransitivity is_fully_transitive(const Maniplex& m, AutSearch mode) {
  return is_fully_transitive(symmetry_type_graph(m, mode));
}

StabilityVerdict is_stable(const Maniplex& m, AutSearch mode) {
  if (is_orientable(m))
    throw std::invalid_argument("stability verdict requires a non-orientable maniplex");
  StabilityVerdict v;
  v.aut_order_base = analyze_automorphisms(m, mode).order;
  v.aut_order_cover = analyze_automorphisms(double_cover(m), mode).order;
  v.stable = (v.aut_order_cover == 2 * v.aut_order_base);
  return v;
}

std::optional<Automorphism> are_isomorphic(const Maniplex& m1, const Maniplex& m2) {
  if (m1.rank() != m2.rank() || m1.num_flags() != m2.num_flags()) return std::nullopt;
  const Flag f = m2.num_flags();
  std::vector<char> candidate(f, 1);
  for (Flag b = 0; b < f; ++b) {
    if (!candidate[b]) continue;
    Propagation p = propagate(m1, 0, m2, b);
    if (p.ok) return Automorphism(std::move(p.image));
    const auto& w = p.conflict_word;
    if (w.empty()) continue;
    for (Flag s = b + 1; s < f; ++s)
      if (candidate[s] && apply_word(m2, s, w) != s) candidate[s] = 0;
  }
  return std::nullopt;
}

LiftOutcome lift_automorphism_detailed(const Maniplex& m, const WeightFunction& w,
                                       const Automorphism& phi) {
  const int k = w.modulus;
  const int n = m.rank();
  const Flag f = m.num_flags();
  if (phi.size() != f) throw std::invalid_argument("automorphism size mismatch");

  for (int alpha = 1; alpha < k; ++alpha) {
    if (std::gcd(alpha, k) != 1) continue;
    bool matches = true;
    for (Colour i = 0; i < n && matches; ++i)
      for (Flag u = 0; u < f; ++u)
        if (w.at(i, phi(u)) != (alpha * w.at(i, u)) % k) {
          matches = false;
          break;
        }
    if (!matches) continue;
    std::vector<Flag> img(std::size_t{f} * k);
    for (Flag u = 0; u < f; ++u)
      for (int i = 0; i < k; ++i)
        img[std::size_t{u} * k + i] =
            static_cast<Flag>(std::size_t{phi(u)} * k + (alpha * i) % k);
    return {Automorphism(std::move(img)), true};
  }

  const Maniplex cover = cross_cover(m, w);
  for (int j = 0; j < k; ++j) {
    auto lifted = find_automorphism(cover, 0, static_cast<Flag>(std::size_t{phi(0)} * k + j));
    if (!lifted) continue;
    bool projects = true;
    for (Flag x = 0; x < cover.num_flags() && projects; ++x)
      projects = ((*lifted)(x) / k == phi(x / static_cast<Flag>(k)));
    if (projects) return {std::move(lifted), false};
  }
  return {std::nullopt, false};
}

std::optional<Automorphism> lift_automorphism(const Maniplex& m, const WeightFunction& w,
                                              const Automorphism& phi) {
  return lift_automorphism_detailed(m, w, phi).lift;
}

bool is_aut_consistent(const Maniplex& m, const WeightFunction& w,
                       const AutAnalysis& analysis) {
  for (const Automorphism& g : analysis.generators)
    if (!lift_automorphism(m, w, g)) return false;
  return true;
}

bool is_aut_consistent(const Maniplex& m, const WeightFunction& w, AutSearch mode) {
  return is_aut_consistent(m, w, analyze_automorphisms(m, mode));
}

}  // namespace maniplex
