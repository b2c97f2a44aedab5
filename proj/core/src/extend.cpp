#include "maniplex/extend.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace maniplex {

namespace {

// Facet label of every facet id; requires labels constant on facets.
std::vector<std::uint32_t> facet_label_table(const Maniplex& m, const FacePartition& fp) {
  std::vector<std::uint32_t> table(fp.num_faces, 0);
  std::vector<char> set(fp.num_faces, 0);
  const auto& fl = *m.facet_labels();
  for (Flag u = 0; u < m.num_flags(); ++u) {
    const std::uint32_t f = fp.face_of[u];
    if (!set[f]) {
      table[f] = fl.label[u];
      set[f] = 1;
    } else if (table[f] != fl.label[u]) {
      throw std::invalid_argument("facet labels are not constant on facets");
    }
  }
  return table;
}

// colour of the facet containing each flag
std::vector<int> flag_colour_table(const Maniplex& m, const Colouring& c,
                                   const FacePartition& fp) {
  std::vector<int> out(m.num_flags());
  for (Flag u = 0; u < m.num_flags(); ++u)
    out[u] = c.colour_of[fp.face_of[u]];
  return out;
}

}  // namespace

int label_parity(std::uint32_t x) { return std::popcount(x) % 2 == 0 ? 1 : -1; }

Colouring total_colouring(const Maniplex& m) {
  Colouring c;
  c.kind = ColouringKind::total;
  const std::uint32_t facets = count_facets(m);
  c.num_colours = static_cast<int>(facets);
  c.colour_of.resize(facets);
  for (std::uint32_t f = 0; f < facets; ++f) c.colour_of[f] = static_cast<int>(f) + 1;
  return c;
}

Colouring antipodal_colouring(const Maniplex& m) {
  if (!m.facet_labels())
    throw std::invalid_argument("antipodal colouring requires an extension (facet labels)");
  const FacePartition fp = faces(m, m.rank() - 1);
  const std::vector<std::uint32_t> labels = facet_label_table(m, fp);
  const int bits = m.facet_labels()->bits;
  const std::uint32_t span = 1u << bits;
  if (fp.num_faces != span)
    throw std::invalid_argument("facet labels do not enumerate Z_2^l");

  std::vector<std::uint32_t> facet_of_label(span, kNoFlag);
  for (std::uint32_t f = 0; f < fp.num_faces; ++f) {
    if (facet_of_label[labels[f]] != kNoFlag)
      throw std::invalid_argument("facet labels are not distinct");
    facet_of_label[labels[f]] = f;
  }

  const std::uint32_t mask = span - 1;
  Colouring c;
  c.kind = ColouringKind::antipodal;
  c.colour_of.assign(fp.num_faces, 0);
  int next = 0;
  for (std::uint32_t x = 0; x < span; ++x) {
    const std::uint32_t y = x ^ mask;
    if (x < y) {
      ++next;
      c.colour_of[facet_of_label[x]] = next;
      c.colour_of[facet_of_label[y]] = next;
    } else if (x == y) {
      throw std::invalid_argument("antipodal pairing needs at least one label bit");
    }
  }
  c.num_colours = next;
  return c;
}

void require_valid_colouring(const Maniplex& m, const Colouring& c) {
  const std::uint32_t facets = count_facets(m);
  if (c.colour_of.size() != facets)
    throw std::invalid_argument("colouring must assign a colour to every facet");
  if (c.num_colours < 1) throw std::invalid_argument("colouring needs at least one colour");
  std::vector<char> used(static_cast<std::size_t>(c.num_colours) + 1, 0);
  for (int col : c.colour_of) {
    if (col < 1 || col > c.num_colours)
      throw std::invalid_argument("facet colour out of range");
    used[static_cast<std::size_t>(col)] = 1;
  }
  for (int col = 1; col <= c.num_colours; ++col)
    if (!used[static_cast<std::size_t>(col)])
      throw std::invalid_argument("colouring is not surjective");
}

bool verify_colouring_invariant(const Maniplex& m, const Colouring& c,
                                const AutAnalysis& analysis) {
  require_valid_colouring(m, c);
  const FacePartition fp = faces(m, m.rank() - 1);

  // representative flag per facet
  std::vector<Flag> rep(fp.num_faces, kNoFlag);
  for (Flag u = 0; u < m.num_flags(); ++u)
    if (rep[fp.face_of[u]] == kNoFlag) rep[fp.face_of[u]] = u;

  for (const Automorphism& g : analysis.generators) {
    std::vector<int> colour_map(static_cast<std::size_t>(c.num_colours) + 1, 0);
    for (std::uint32_t f = 0; f < fp.num_faces; ++f) {
      const int from = c.colour_of[f];
      const int to = c.colour_of[fp.face_of[g(rep[f])]];
      if (colour_map[static_cast<std::size_t>(from)] == 0)
        colour_map[static_cast<std::size_t>(from)] = to;
      else if (colour_map[static_cast<std::size_t>(from)] != to)
        return false;
    }
    std::vector<char> hit(static_cast<std::size_t>(c.num_colours) + 1, 0);
    for (int col = 1; col <= c.num_colours; ++col) {
      const int to = colour_map[static_cast<std::size_t>(col)];
      if (to == 0 || hit[static_cast<std::size_t>(to)]) return false;
      hit[static_cast<std::size_t>(to)] = 1;
    }
  }
  return true;
}

bool verify_colouring_invariant(const Maniplex& m, const Colouring& c, AutSearch mode) {
  return verify_colouring_invariant(m, c, analyze_automorphisms(m, mode));
}

Maniplex extension(const Maniplex& m, const Colouring& c) {
  require_valid_colouring(m, c);
  const int n = m.rank();
  const Flag f = m.num_flags();
  const int bits = c.num_colours;
  if (bits > kMaxLabelBits)
    throw std::invalid_argument("extension would exceed the facet label capacity");
  const std::uint64_t new_flags = static_cast<std::uint64_t>(f) << bits;
  if (new_flags >= (1u << 31))
    throw std::invalid_argument("extension flag count exceeds capacity");

  const FacePartition fp = faces(m, n - 1);
  const std::vector<int> flag_colour = flag_colour_table(m, c, fp);
  const std::uint32_t span = 1u << bits;

  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(n) + 1,
                                     std::vector<Flag>(new_flags));
  for (Colour i = 0; i < n; ++i) {
    auto& row = adj[static_cast<std::size_t>(i)];
    for (Flag u = 0; u < f; ++u) {
      const std::uint64_t vbase = static_cast<std::uint64_t>(m.adj(i, u)) << bits;
      const std::uint64_t ubase = static_cast<std::uint64_t>(u) << bits;
      for (std::uint32_t x = 0; x < span; ++x)
        row[ubase + x] = static_cast<Flag>(vbase + x);
    }
  }
  {
    auto& row = adj[static_cast<std::size_t>(n)];
    for (Flag u = 0; u < f; ++u) {
      const std::uint32_t flip = 1u << (flag_colour[u] - 1);
      const std::uint64_t ubase = static_cast<std::uint64_t>(u) << bits;
      for (std::uint32_t x = 0; x < span; ++x)
        row[ubase + x] = static_cast<Flag>(ubase + (x ^ flip));
    }
  }

  FacetLabels labels;
  labels.bits = bits;
  labels.label.resize(new_flags);
  for (std::uint64_t t = 0; t < new_flags; ++t)
    labels.label[t] = static_cast<std::uint32_t>(t & (span - 1));

  return Maniplex(n + 1, std::move(adj), std::move(labels),
                  "ext(" + m.provenance() + ")");
}

namespace {

// Extensions index flag (u,x) as u*2^bits + x; tau and extended
// automorphisms rely on that layout.
void require_canonical_layout(const Maniplex& ext) {
  if (!ext.facet_labels())
    throw std::invalid_argument("operation requires an extension (facet labels)");
  const auto& fl = *ext.facet_labels();
  const std::uint32_t mask = (1u << fl.bits) - 1;
  for (Flag u = 0; u < ext.num_flags(); ++u)
    if (fl.label[u] != (u & mask))
      throw std::invalid_argument("extension does not use the canonical flag layout");
}

}  // namespace

Automorphism tau(const Maniplex& ext, int j) {
  require_canonical_layout(ext);
  const int bits = ext.facet_labels()->bits;
  if (j < 1 || j > bits) throw std::invalid_argument("tau index out of range");
  const Flag flip = 1u << (j - 1);
  std::vector<Flag> img(ext.num_flags());
  for (Flag u = 0; u < ext.num_flags(); ++u) img[u] = u ^ flip;
  Automorphism out(std::move(img));
  if (!is_colour_preserving(ext, out))
    throw std::logic_error("tau is not an automorphism of this maniplex");
  return out;
}

Automorphism extend_automorphism(const Maniplex& m, const Colouring& c,
                                 const Automorphism& phi) {
  require_valid_colouring(m, c);
  if (phi.size() != m.num_flags())
    throw std::invalid_argument("automorphism size mismatch");
  const FacePartition fp = faces(m, m.rank() - 1);

  std::vector<Flag> rep(fp.num_faces, kNoFlag);
  for (Flag u = 0; u < m.num_flags(); ++u)
    if (rep[fp.face_of[u]] == kNoFlag) rep[fp.face_of[u]] = u;

  // induced colour permutation; fails when C is not phi-invariant
  std::vector<int> colour_map(static_cast<std::size_t>(c.num_colours) + 1, 0);
  for (std::uint32_t f = 0; f < fp.num_faces; ++f) {
    const int from = c.colour_of[f];
    const int to = c.colour_of[fp.face_of[phi(rep[f])]];
    if (colour_map[static_cast<std::size_t>(from)] == 0)
      colour_map[static_cast<std::size_t>(from)] = to;
    else if (colour_map[static_cast<std::size_t>(from)] != to)
      throw std::invalid_argument("colouring is not invariant under this automorphism");
  }

  const int bits = c.num_colours;
  const std::uint32_t span = 1u << bits;
  // phi(x): bit (col-1) of x lands in bit (phi(col)-1)
  std::vector<std::uint32_t> label_image(span, 0);
  for (std::uint32_t x = 0; x < span; ++x) {
    std::uint32_t y = 0;
    for (int col = 1; col <= bits; ++col)
      if (x & (1u << (col - 1)))
        y |= 1u << (colour_map[static_cast<std::size_t>(col)] - 1);
    label_image[x] = y;
  }

  std::vector<Flag> img(static_cast<std::size_t>(m.num_flags()) << bits);
  for (Flag u = 0; u < m.num_flags(); ++u) {
    const std::uint64_t ubase = static_cast<std::uint64_t>(u) << bits;
    const std::uint64_t vbase = static_cast<std::uint64_t>(phi(u)) << bits;
    for (std::uint32_t x = 0; x < span; ++x)
      img[ubase + x] = static_cast<Flag>(vbase + label_image[x]);
  }
  return Automorphism(std::move(img));
}

WeightFunction extend_weight(const Maniplex& m, const Colouring& c,
                             const WeightFunction& w) {
  require_compatible(m, w);
  require_valid_colouring(m, c);
  const int n = m.rank();
  const int bits = c.num_colours;
  const std::uint32_t span = 1u << bits;
  const std::uint64_t new_flags = static_cast<std::uint64_t>(m.num_flags()) << bits;
  const int k = w.modulus;

  WeightFunction out;
  out.modulus = k;
  out.values.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(new_flags, 0));
  for (Colour i = 0; i < n; ++i) {
    auto& row = out.values[static_cast<std::size_t>(i)];
    for (Flag u = 0; u < m.num_flags(); ++u) {
      const int base = w.at(i, u);
      const std::uint64_t ubase = static_cast<std::uint64_t>(u) << bits;
      for (std::uint32_t x = 0; x < span; ++x)
        row[ubase + x] = label_parity(x) > 0 ? base : (k - base) % k;
    }
  }
  return out;
}

}  // namespace maniplex
