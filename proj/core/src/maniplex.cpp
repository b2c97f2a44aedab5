#include "maniplex/maniplex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace maniplex {

namespace {

std::string describe_flag_pair(Colour i, Flag u, Flag v) {
  std::ostringstream os;
  os << "colour " << i << " at flag " << u << " (image " << v << ")";
  return os.str();
}

}  // namespace

Maniplex::Maniplex(int rank, std::vector<std::vector<Flag>> adjacency,
                   std::optional<FacetLabels> labels, std::string provenance)
    : rank_(rank),
      num_flags_(0),
      adj_(std::move(adjacency)),
      facet_labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  if (rank_ < 1) throw std::invalid_argument("maniplex rank must be >= 1");
  if (adj_.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("adjacency must have one row per colour");
  if (adj_[0].empty()) throw std::invalid_argument("maniplex needs at least one flag");
  num_flags_ = static_cast<Flag>(adj_[0].size());
  for (const auto& row : adj_) {
    if (row.size() != num_flags_)
      throw std::invalid_argument("adjacency rows must all have num_flags entries");
    for (Flag v : row)
      if (v >= num_flags_) throw std::invalid_argument("adjacency image out of range");
  }
  if (facet_labels_) {
    if (facet_labels_->bits < 1 || facet_labels_->bits > kMaxLabelBits)
      throw std::invalid_argument("facet label width out of range");
    if (facet_labels_->label.size() != num_flags_)
      throw std::invalid_argument("facet labels must have one entry per flag");
    const std::uint32_t limit = 1u << facet_labels_->bits;
    for (std::uint32_t x : facet_labels_->label)
      if (x >= limit) throw std::invalid_argument("facet label exceeds its bit width");
  }
}

ValidationReport validate(const Maniplex& m) {
  ValidationReport r;
  const int n = m.rank();
  const Flag f = m.num_flags();

  r.involutions = true;
  r.fixed_point_free = true;
  for (Colour i = 0; i < n && (r.involutions || r.fixed_point_free); ++i) {
    for (Flag u = 0; u < f; ++u) {
      const Flag v = m.adj(i, u);
      if (v == u && r.fixed_point_free) {
        r.fixed_point_free = false;
        r.failures.push_back("fixed point: " + describe_flag_pair(i, u, v));
      }
      if (m.adj(i, v) != u && r.involutions) {
        r.involutions = false;
        r.failures.push_back("not an involution: " + describe_flag_pair(i, u, v));
      }
      if (!r.involutions && !r.fixed_point_free) break;
    }
  }

  r.proper_colouring = true;
  for (Colour i = 0; i < n && r.proper_colouring; ++i) {
    for (Colour j = i + 2; j < n && r.proper_colouring; ++j) {
      for (Flag u = 0; u < f; ++u) {
        if (m.adj(i, u) == m.adj(j, u)) {
          r.proper_colouring = false;
          std::ostringstream os;
          os << "parallel " << i << "," << j << "-edges at flag " << u;
          r.failures.push_back(os.str());
          break;
        }
      }
    }
  }

  {
    std::vector<char> seen(f, 0);
    std::vector<Flag> queue{0};
    seen[0] = 1;
    std::size_t head = 0, reached = 1;
    while (head < queue.size()) {
      const Flag u = queue[head++];
      for (Colour i = 0; i < n; ++i) {
        const Flag v = m.adj(i, u);
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    r.connected = (reached == f);
    if (!r.connected) r.failures.push_back("flag graph is disconnected");
  }

  r.string_property = true;
  for (Colour i = 0; i < n && r.string_property; ++i) {
    for (Colour j = i + 2; j < n && r.string_property; ++j) {
      for (Flag u = 0; u < f; ++u) {
        if (m.adj(j, m.adj(i, m.adj(j, m.adj(i, u)))) != u) {
          r.string_property = false;
          std::ostringstream os;
          os << "string property fails for colours " << i << "," << j << " at flag " << u;
          r.failures.push_back(os.str());
          break;
        }
      }
    }
  }

  if (m.facet_labels()) {
    const auto& fl = *m.facet_labels();
    for (Flag u = 0; u < f && r.facet_labels_consistent; ++u) {
      for (Colour i = 0; i < n; ++i) {
        const std::uint32_t diff = fl.label[u] ^ fl.label[m.adj(i, u)];
        const bool ok = (i < n - 1) ? diff == 0 : std::popcount(diff) == 1;
        if (!ok) {
          r.facet_labels_consistent = false;
          r.failures.push_back("facet labels inconsistent at " + describe_flag_pair(i, u, m.adj(i, u)));
          break;
        }
      }
    }
  }

  return r;
}

bool is_orientable(const Maniplex& m) {
  const Flag f = m.num_flags();
  const int n = m.rank();
  std::vector<char> side(f, 2);
  std::vector<Flag> queue{0};
  side[0] = 0;
  std::size_t head = 0;
  while (head < queue.size()) {
    const Flag u = queue[head++];
    for (Colour i = 0; i < n; ++i) {
      const Flag v = m.adj(i, u);
      if (side[v] == 2) {
        side[v] = static_cast<char>(1 - side[u]);
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  return true;
}

FacePartition faces(const Maniplex& m, Colour i) {
  if (i < 0 || i >= m.rank()) throw std::invalid_argument("face colour out of range");
  const Flag f = m.num_flags();
  const int n = m.rank();
  FacePartition p;
  p.colour = i;
  p.face_of.assign(f, kNoFlag);
  std::vector<Flag> queue;
  for (Flag s = 0; s < f; ++s) {
    if (p.face_of[s] != kNoFlag) continue;
    const std::uint32_t id = p.num_faces++;
    p.face_of[s] = id;
    queue.assign(1, s);
    std::size_t head = 0;
    while (head < queue.size()) {
      const Flag u = queue[head++];
      for (Colour c = 0; c < n; ++c) {
        if (c == i) continue;
        const Flag v = m.adj(c, u);
        if (p.face_of[v] == kNoFlag) {
          p.face_of[v] = id;
          queue.push_back(v);
        }
      }
    }
  }
  return p;
}

std::uint32_t count_facets(const Maniplex& m) {
  return faces(m, m.rank() - 1).num_faces;
}

std::pair<Maniplex, std::vector<Flag>> facet_submaniplex(const Maniplex& m,
                                                         std::uint32_t facet_id) {
  if (m.rank() < 2) throw std::invalid_argument("facet extraction needs rank >= 2");
  const FacePartition fp = faces(m, m.rank() - 1);
  if (facet_id >= fp.num_faces) throw std::invalid_argument("facet id out of range");

  std::vector<Flag> to_parent;
  std::vector<Flag> local(m.num_flags(), kNoFlag);
  for (Flag u = 0; u < m.num_flags(); ++u) {
    if (fp.face_of[u] == facet_id) {
      local[u] = static_cast<Flag>(to_parent.size());
      to_parent.push_back(u);
    }
  }

  const int sub_rank = m.rank() - 1;
  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(sub_rank),
                                     std::vector<Flag>(to_parent.size()));
  for (Colour i = 0; i < sub_rank; ++i)
    for (std::size_t t = 0; t < to_parent.size(); ++t)
      adj[static_cast<std::size_t>(i)][t] = local[m.adj(i, to_parent[t])];

  std::ostringstream prov;
  prov << "facet(" << m.provenance() << "," << facet_id << ")";
  return {Maniplex(sub_rank, std::move(adj), std::nullopt, prov.str()), std::move(to_parent)};
}

std::optional<MapType> schlafli_type(const Maniplex& m) {
  if (m.rank() != 3) throw std::invalid_argument("schlafli type is defined for rank 3 only");

  // Every {i,i+1}-component of a valid rank-3 maniplex is a single cycle,
  // of length twice the face degree.
  auto half_cycle = [&m](Colour i, Colour j) -> std::optional<int> {
    std::vector<char> seen(m.num_flags(), 0);
    std::optional<int> common;
    for (Flag s = 0; s < m.num_flags(); ++s) {
      if (seen[s]) continue;
      int size = 0;
      Flag u = s;
      Colour next = i;
      do {
        seen[u] = 1;
        ++size;
        u = m.adj(next, u);
        next = (next == i) ? j : i;
      } while (u != s || next != i);
      if (size % 2 != 0 || size / 2 < 2) return std::nullopt;
      if (!common) common = size / 2;
      if (*common != size / 2) return std::nullopt;
    }
    return common;
  };

  const auto p = half_cycle(0, 1);
  if (!p) return std::nullopt;
  const auto q = half_cycle(1, 2);
  if (!q) return std::nullopt;
  return MapType{*p, *q};
}

Maniplex double_cover(const Maniplex& m) {
  const int n = m.rank();
  const Flag f = m.num_flags();
  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(n),
                                     std::vector<Flag>(2 * std::size_t{f}));
  for (Colour i = 0; i < n; ++i) {
    auto& row = adj[static_cast<std::size_t>(i)];
    for (Flag u = 0; u < f; ++u) {
      const Flag v = m.adj(i, u);
      row[2 * u] = 2 * v + 1;
      row[2 * u + 1] = 2 * v;
    }
  }
  return Maniplex(n, std::move(adj), std::nullopt, "double(" + m.provenance() + ")");
}

Flag apply_word(const Maniplex& m, Flag u, std::span<const Colour> word) {
  for (Colour c : word) u = m.adj(c, u);
  return u;
}

std::vector<Flag> walk_flags(const Maniplex& m, const Walk& w) {
  std::vector<Flag> out;
  out.reserve(w.colours.size() + 1);
  Flag u = w.start;
  out.push_back(u);
  for (Colour c : w.colours) {
    if (c < 0 || c >= m.rank()) throw std::invalid_argument("walk colour out of range");
    u = m.adj(c, u);
    out.push_back(u);
  }
  return out;
}

Flag walk_end(const Maniplex& m, const Walk& w) {
  return apply_word(m, w.start, w.colours);
}

bool walk_closed(const Maniplex& m, const Walk& w) {
  return walk_end(m, w) == w.start;
}

Walk walk_concat(const Maniplex& m, const Walk& a, const Walk& b) {
  if (walk_end(m, a) != b.start)
    throw std::invalid_argument("walk concatenation requires end(a) == start(b)");
  Walk out{a.start, a.colours};
  out.colours.insert(out.colours.end(), b.colours.begin(), b.colours.end());
  return out;
}

Walk walk_power(const Maniplex& m, const Walk& w, int b) {
  if (b < 0) throw std::invalid_argument("walk power requires b >= 0");
  if (!walk_closed(m, w)) throw std::invalid_argument("walk power requires a closed walk");
  Walk out{w.start, {}};
  out.colours.reserve(w.colours.size() * static_cast<std::size_t>(b));
  for (int t = 0; t < b; ++t)
    out.colours.insert(out.colours.end(), w.colours.begin(), w.colours.end());
  return out;
}

Walk walk_reverse(const Maniplex& m, const Walk& w) {
  Walk out{walk_end(m, w), {w.colours.rbegin(), w.colours.rend()}};
  return out;
}

}  // namespace maniplex
