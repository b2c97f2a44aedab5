// Test-side oracles, kept independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "maniplex/maniplex.hpp"
#include "maniplex/weights.hpp"

namespace oracles {

using maniplex::Colour;
using maniplex::Flag;
using maniplex::Maniplex;
using maniplex::Walk;
using maniplex::WeightFunction;

// Component count of the subgraph spanned by the given colours, via a
// plain adjacency-list union-find (independent of faces()).
inline std::uint32_t component_count(const Maniplex& m, const std::vector<Colour>& colours) {
  std::vector<Flag> root(m.num_flags());
  for (Flag u = 0; u < m.num_flags(); ++u) root[u] = u;
  std::function<Flag(Flag)> find = [&](Flag u) {
    return root[u] == u ? u : root[u] = find(root[u]);
  };
  for (Colour c : colours)
    for (Flag u = 0; u < m.num_flags(); ++u) {
      const Flag a = find(u), b = find(m.adj(c, u));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::uint32_t n = 0;
  for (Flag u = 0; u < m.num_flags(); ++u)
    if (find(u) == u) ++n;
  return n;
}

inline std::vector<Colour> colours_without(const Maniplex& m, Colour removed) {
  std::vector<Colour> out;
  for (Colour c = 0; c < m.rank(); ++c)
    if (c != removed) out.push_back(c);
  return out;
}

// 2-colouring check by DFS over an explicit stack.
inline bool bipartite(const Maniplex& m) {
  std::vector<int> side(m.num_flags(), -1);
  for (Flag s = 0; s < m.num_flags(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Flag> stack{s};
    while (!stack.empty()) {
      const Flag u = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < m.rank(); ++c) {
        const Flag v = m.adj(c, u);
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Literal unfolding of the alternating-sign weight sum.
inline int direct_walk_weight(const Maniplex& m, const WeightFunction& w, const Walk& walk) {
  long long total = 0;
  Flag u = walk.start;
  int sign = 1;
  for (Colour c : walk.colours) {
    total += sign * w.at(c, u);
    sign = -sign;
    u = m.adj(c, u);
  }
  const long long k = w.modulus;
  return static_cast<int>(((total % k) + k) % k);
}

// Edge-symmetric weight function with uniform values in 0..k-1.
inline WeightFunction random_weight(const Maniplex& m, int k, std::mt19937& rng) {
  WeightFunction w;
  w.modulus = k;
  w.values.assign(static_cast<std::size_t>(m.rank()),
                  std::vector<int>(m.num_flags(), -1));
  std::uniform_int_distribution<int> value(0, k - 1);
  for (Colour i = 0; i < m.rank(); ++i)
    for (Flag u = 0; u < m.num_flags(); ++u)
      if (w.values[static_cast<std::size_t>(i)][u] == -1) {
        const int x = value(rng);
        w.values[static_cast<std::size_t>(i)][u] = x;
        w.values[static_cast<std::size_t>(i)][m.adj(i, u)] = x;
      }
  return w;
}

inline Walk random_walk(const Maniplex& m, std::mt19937& rng, int length) {
  std::uniform_int_distribution<Flag> flag(0, m.num_flags() - 1);
  std::uniform_int_distribution<int> colour(0, m.rank() - 1);
  Walk w{flag(rng), {}};
  for (int t = 0; t < length; ++t) w.colours.push_back(colour(rng));
  return w;
}

// Random closed walk of the requested length parity; odd parity only
// terminates on non-bipartite inputs.
inline std::optional<Walk> random_closed_walk(const Maniplex& m, std::mt19937& rng,
                                              bool odd, int max_steps = 1 << 14) {
  std::uniform_int_distribution<Flag> flag(0, m.num_flags() - 1);
  std::uniform_int_distribution<int> colour(0, m.rank() - 1);
  const Flag start = flag(rng);
  Walk w{start, {}};
  Flag u = start;
  for (int t = 0; t < max_steps; ++t) {
    const Colour c = colour(rng);
    w.colours.push_back(c);
    u = m.adj(c, u);
    if (u == start && (w.colours.size() % 2 == (odd ? 1u : 0u))) return w;
  }
  return std::nullopt;
}

// Connected component of `seed` as a standalone maniplex, flags renumbered
// in increasing order.
inline Maniplex component_of(const Maniplex& m, Flag seed) {
  std::vector<char> in(m.num_flags(), 0);
  std::vector<Flag> stack{seed};
  in[seed] = 1;
  while (!stack.empty()) {
    const Flag u = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < m.rank(); ++c) {
      const Flag v = m.adj(c, u);
      if (!in[v]) {
        in[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<Flag> local(m.num_flags(), maniplex::kNoFlag);
  std::vector<Flag> members;
  for (Flag u = 0; u < m.num_flags(); ++u)
    if (in[u]) {
      local[u] = static_cast<Flag>(members.size());
      members.push_back(u);
    }
  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(m.rank()),
                                     std::vector<Flag>(members.size()));
  for (Colour c = 0; c < m.rank(); ++c)
    for (std::size_t t = 0; t < members.size(); ++t)
      adj[static_cast<std::size_t>(c)][t] = local[m.adj(c, members[t])];
  return Maniplex(m.rank(), std::move(adj));
}

// Relabel flags by a permutation: adj'[i][p(u)] = p(adj[i][u]).
inline Maniplex relabel(const Maniplex& m, const std::vector<Flag>& p) {
  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(m.rank()),
                                     std::vector<Flag>(m.num_flags()));
  for (Colour c = 0; c < m.rank(); ++c)
    for (Flag u = 0; u < m.num_flags(); ++u)
      adj[static_cast<std::size_t>(c)][p[u]] = p[m.adj(c, u)];
  return Maniplex(m.rank(), std::move(adj));
}

}  // namespace oracles
