#include "maniplex/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maniplex {

void require_compatible(const Maniplex& m, const WeightFunction& w) {
  if (w.modulus < 2) throw std::invalid_argument("weight modulus must be >= 2");
  if (w.values.size() != static_cast<std::size_t>(m.rank()))
    throw std::invalid_argument("weight function must have one row per colour");
  for (const auto& row : w.values) {
    if (row.size() != m.num_flags())
      throw std::invalid_argument("weight rows must have num_flags entries");
    for (int v : row)
      if (v < 0 || v >= w.modulus) throw std::invalid_argument("weight value out of Z_k range");
  }
  if (!edge_symmetric(m, w))
    throw std::invalid_argument("weight function is not symmetric on edges");
}

bool edge_symmetric(const Maniplex& m, const WeightFunction& w) {
  for (Colour i = 0; i < m.rank(); ++i)
    for (Flag u = 0; u < m.num_flags(); ++u)
      if (w.at(i, u) != w.at(i, m.adj(i, u))) return false;
  return true;
}

namespace {

// cheap shape guard for the hot-path entry points
void require_shape(const Maniplex& m, const WeightFunction& w) {
  if (w.modulus < 2 || w.values.size() != static_cast<std::size_t>(m.rank()) ||
      w.values[0].size() != m.num_flags())
    throw std::invalid_argument("weight function does not match the maniplex shape");
}

}  // namespace

int walk_weight(const Maniplex& m, const WeightFunction& w, const Walk& walk) {
  require_shape(m, w);
  const int k = w.modulus;
  int total = 0;
  Flag u = walk.start;
  for (std::size_t t = 0; t < walk.colours.size(); ++t) {
    const Colour c = walk.colours[t];
    const int value = w.at(c, u);
    total += (t % 2 == 0) ? value : -value;
    u = m.adj(c, u);
  }
  return ((total % k) + k) % k;
}

LiftResult lift_walk(const Maniplex& m, const WeightFunction& w, const Walk& walk,
                     int base_level) {
  require_shape(m, w);
  const int k = w.modulus;
  LiftResult r;
  r.flags.reserve(walk.colours.size() + 1);
  Flag u = walk.start;
  int level = ((base_level % k) + k) % k;
  r.flags.emplace_back(u, level);
  for (Colour c : walk.colours) {
    level = ((w.at(c, u) - level) % k + k) % k;
    u = m.adj(c, u);
    r.flags.emplace_back(u, level);
  }
  r.closed = (u == walk.start && level == ((base_level % k) + k) % k);
  return r;
}

Maniplex cross_cover(const Maniplex& m, const WeightFunction& w) {
  require_compatible(m, w);
  const int n = m.rank();
  const Flag f = m.num_flags();
  const int k = w.modulus;
  if (static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(k) >= (1u << 31))
    throw std::invalid_argument("cross-cover flag count exceeds capacity");

  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(n),
                                     std::vector<Flag>(std::size_t{f} * k));
  for (Colour c = 0; c < n; ++c) {
    auto& row = adj[static_cast<std::size_t>(c)];
    for (Flag u = 0; u < f; ++u) {
      const Flag v = m.adj(c, u);
      const int weight = w.at(c, u);
      for (int i = 0; i < k; ++i)
        row[std::size_t{u} * k + i] =
            static_cast<Flag>(std::size_t{v} * k + ((weight - i) % k + k) % k);
    }
  }
  return Maniplex(n, std::move(adj), std::nullopt, "cross(" + m.provenance() + ")");
}

bool string_property_of_cover(const Maniplex& m, const WeightFunction& w) {
  for (Colour i = 0; i < m.rank(); ++i)
    for (Colour j = i + 2; j < m.rank(); ++j)
      for (Flag u = 0; u < m.num_flags(); ++u)
        if (walk_weight(m, w, Walk{u, {i, j, i, j}}) != 0) return false;
  return true;
}

std::optional<Walk> connectivity_witness(const Maniplex& m, const WeightFunction& w,
                                         const std::vector<Walk>& extra_cycles) {
  const int k = w.modulus;
  auto is_witness = [&](const Walk& c) {
    return c.length() % 2 == 0 && walk_closed(m, c) &&
           std::gcd(walk_weight(m, w, c), k) == 1;
  };

  std::vector<char> seen;
  for (Colour i = 0; i < m.rank(); ++i) {
    for (Colour j = i + 1; j < m.rank(); ++j) {
      seen.assign(m.num_flags(), 0);
      for (Flag s = 0; s < m.num_flags(); ++s) {
        if (seen[s]) continue;
        Walk cycle{s, {}};
        Flag u = s;
        Colour next = i;
        do {
          seen[u] = 1;
          cycle.colours.push_back(next);
          u = m.adj(next, u);
          next = (next == i) ? j : i;
        } while (u != s || next != i);
        if (is_witness(cycle)) return cycle;
      }
    }
  }
  for (const Walk& c : extra_cycles)
    if (is_witness(c)) return c;
  return std::nullopt;
}

std::optional<Walk> odd_walk_even_weight(const Maniplex& m, const WeightFunction& w) {
  if (w.modulus % 2 != 0)
    throw std::invalid_argument("odd_walk_even_weight requires an even modulus");
  const int n = m.rank();
  const Flag f = m.num_flags();

  // States (flag, length parity, weight parity); the alternating signs of
  // the walk weight do not affect its parity.
  const std::size_t states = std::size_t{f} * 4;
  std::vector<std::int32_t> parent(states, -2);  // -2 unseen, -1 root
  std::vector<Colour> via(states, -1);
  auto state = [](Flag u, int lp, int wp) {
    return std::size_t{u} * 4 + static_cast<std::size_t>(lp) * 2 +
           static_cast<std::size_t>(wp);
  };

  const std::size_t root = state(0, 0, 0);
  const std::size_t target = state(0, 1, 0);
  parent[root] = -1;
  std::vector<std::size_t> queue{root};
  std::size_t head = 0;
  while (head < queue.size() && parent[target] == -2) {
    const std::size_t s = queue[head++];
    const Flag u = static_cast<Flag>(s / 4);
    const int lp = static_cast<int>((s / 2) % 2);
    const int wp = static_cast<int>(s % 2);
    for (Colour c = 0; c < n; ++c) {
      const std::size_t t = state(m.adj(c, u), 1 - lp, wp ^ (w.at(c, u) & 1));
      if (parent[t] == -2) {
        parent[t] = static_cast<std::int32_t>(s);
        via[t] = c;
        queue.push_back(t);
      }
    }
  }
  if (parent[target] == -2) return std::nullopt;

  Walk out{0, {}};
  for (std::size_t s = target; parent[s] != -1; s = static_cast<std::size_t>(parent[s]))
    out.colours.push_back(via[s]);
  std::reverse(out.colours.begin(), out.colours.end());
  return out;
}

WeightFunction restrict_weight(const Maniplex& parent, const WeightFunction& w,
                               const Maniplex& sub, const std::vector<Flag>& to_parent) {
  require_shape(parent, w);
  if (sub.num_flags() != to_parent.size() || sub.rank() > parent.rank())
    throw std::invalid_argument("parent-flag table does not match the submaniplex");
  WeightFunction out;
  out.modulus = w.modulus;
  out.values.assign(static_cast<std::size_t>(sub.rank()),
                    std::vector<int>(sub.num_flags()));
  for (Colour i = 0; i < sub.rank(); ++i)
    for (Flag t = 0; t < sub.num_flags(); ++t)
      out.values[static_cast<std::size_t>(i)][t] = w.at(i, to_parent[t]);
  return out;
}

}  // namespace maniplex
