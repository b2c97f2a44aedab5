#include "maniplex/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace maniplex {

namespace {

// Line-oriented tokenizer that skips blank and `#` comment lines and
// remembers line numbers for diagnostics.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // next meaningful line split into tokens; false at end of input
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  int line() const { return line_; }

private:
  std::istream& in_;
  int line_ = 0;
};

long long parse_int(const LineReader& r, const std::string& tok, long long lo,
                    long long hi, const char* what) {
  long long value = 0;
  std::size_t used = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(r.line(), std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(r.line(), std::string("trailing junk in ") + what + " '" + tok + "'");
  if (value < lo || value > hi)
    throw ParseError(r.line(), std::string(what) + " out of range: " + tok);
  return value;
}

std::uint32_t parse_hex(const LineReader& r, const std::string& tok, std::uint32_t limit) {
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoull(tok, &used, 16);
  } catch (const std::exception&) {
    throw ParseError(r.line(), "expected hex label, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(r.line(), "trailing junk in hex label '" + tok + "'");
  if (value >= limit) throw ParseError(r.line(), "facet label out of range: " + tok);
  return static_cast<std::uint32_t>(value);
}

template <typename T>
T open_and_read(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return reader(in);
}

void open_and_write(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot open " + path + " for writing");
  writer(out);
  if (!out) throw ParseError(0, "write to " + path + " failed");
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

Maniplex read_mpx(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;

  if (!r.next(tok)) throw ParseError(r.line(), "empty MPX input");
  if (tok[0] != "mpx" || tok.size() != 3)
    throw ParseError(r.line(), "expected header 'mpx <rank> <num_flags>'");
  const int rank = static_cast<int>(parse_int(r, tok[1], 1, 64, "rank"));
  const long long flags =
      parse_int(r, tok[2], 1, (1LL << 31) - 1, "flag count");

  std::vector<std::vector<Flag>> adj(static_cast<std::size_t>(rank));
  std::vector<char> seen(static_cast<std::size_t>(rank), 0);
  std::optional<FacetLabels> labels;

  for (int row = 0; row < rank; ++row) {
    if (!r.next(tok)) throw ParseError(r.line(), "missing adjacency line");
    if (tok[0] == "adj") {
      if (tok.size() != static_cast<std::size_t>(flags) + 2)
        throw ParseError(r.line(), "adjacency line has wrong number of entries");
      const int colour = static_cast<int>(parse_int(r, tok[1], 0, rank - 1, "colour"));
      if (seen[static_cast<std::size_t>(colour)])
        throw ParseError(r.line(), "duplicate adjacency for colour " + tok[1]);
      seen[static_cast<std::size_t>(colour)] = 1;
      auto& out = adj[static_cast<std::size_t>(colour)];
      out.resize(static_cast<std::size_t>(flags));
      for (long long t = 0; t < flags; ++t)
        out[static_cast<std::size_t>(t)] = static_cast<Flag>(
            parse_int(r, tok[static_cast<std::size_t>(t) + 2], 0, flags - 1, "flag image"));
    } else {
      throw ParseError(r.line(), "expected 'adj <colour> ...', got '" + tok[0] + "'");
    }
  }

  while (r.next(tok)) {
    if (tok[0] == "facets") {
      if (labels) throw ParseError(r.line(), "duplicate facets line");
      if (tok.size() != static_cast<std::size_t>(flags) + 2)
        throw ParseError(r.line(), "facets line has wrong number of entries");
      FacetLabels fl;
      fl.bits = static_cast<int>(parse_int(r, tok[1], 1, kMaxLabelBits, "label width"));
      fl.label.resize(static_cast<std::size_t>(flags));
      const std::uint32_t limit = 1u << fl.bits;
      for (long long t = 0; t < flags; ++t)
        fl.label[static_cast<std::size_t>(t)] =
            parse_hex(r, tok[static_cast<std::size_t>(t) + 2], limit);
      labels = std::move(fl);
    } else {
      throw ParseError(r.line(), "unexpected line '" + tok[0] + "'");
    }
  }

  try {
    return Maniplex(rank, std::move(adj), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void write_mpx(std::ostream& out, const Maniplex& m) {
  out << "mpx " << m.rank() << ' ' << m.num_flags() << '\n';
  for (Colour i = 0; i < m.rank(); ++i) {
    out << "adj " << i;
    for (Flag u = 0; u < m.num_flags(); ++u) out << ' ' << m.adj(i, u);
    out << '\n';
  }
  if (m.facet_labels()) {
    out << "facets " << m.facet_labels()->bits << std::hex;
    for (std::uint32_t x : m.facet_labels()->label) out << ' ' << x;
    out << std::dec << '\n';
  }
}

WeightFunction read_wgt(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;

  if (!r.next(tok)) throw ParseError(r.line(), "empty WGT input");
  if (tok[0] != "wgt" || tok.size() != 2)
    throw ParseError(r.line(), "expected header 'wgt <k>'");
  const int k = static_cast<int>(parse_int(r, tok[1], 2, 1 << 20, "modulus"));

  WeightFunction w;
  w.modulus = k;
  while (r.next(tok)) {
    if (tok[0] != "w")
      throw ParseError(r.line(), "expected 'w <colour> ...', got '" + tok[0] + "'");
    if (tok.size() < 3) throw ParseError(r.line(), "weight line has no values");
    const std::size_t colour = static_cast<std::size_t>(
        parse_int(r, tok[1], 0, 63, "colour"));
    if (colour >= w.values.size()) w.values.resize(colour + 1);
    if (!w.values[colour].empty())
      throw ParseError(r.line(), "duplicate weights for colour " + tok[1]);
    auto& row = w.values[colour];
    row.resize(tok.size() - 2);
    for (std::size_t t = 0; t < row.size(); ++t)
      row[t] = static_cast<int>(parse_int(r, tok[t + 2], 0, k - 1, "weight"));
  }
  if (w.values.empty()) throw ParseError(r.line(), "WGT input has no weight rows");
  const std::size_t flags = w.values[0].size();
  for (std::size_t i = 0; i < w.values.size(); ++i)
    if (w.values[i].size() != flags)
      throw ParseError(0, "weight rows have inconsistent lengths");
  return w;
}

void write_wgt(std::ostream& out, const WeightFunction& w) {
  out << "wgt " << w.modulus << '\n';
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    out << "w " << i;
    for (int value : w.values[i]) out << ' ' << value;
    out << '\n';
  }
}

Colouring read_clr(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;
  if (!r.next(tok)) throw ParseError(r.line(), "empty CLR input");
  if (tok[0] != "clr" || tok.size() < 3)
    throw ParseError(r.line(), "expected 'clr <num_colours> <facet colours>'");
  Colouring c;
  c.kind = ColouringKind::custom;
  c.num_colours = static_cast<int>(parse_int(r, tok[1], 1, kMaxLabelBits, "colour count"));
  c.colour_of.resize(tok.size() - 2);
  for (std::size_t t = 0; t < c.colour_of.size(); ++t)
    c.colour_of[t] =
        static_cast<int>(parse_int(r, tok[t + 2], 1, c.num_colours, "facet colour"));
  if (r.next(tok)) throw ParseError(r.line(), "unexpected line '" + tok[0] + "'");
  return c;
}

void write_clr(std::ostream& out, const Colouring& c) {
  out << "clr " << c.num_colours;
  for (int col : c.colour_of) out << ' ' << col;
  out << '\n';
}

Maniplex read_mpx_file(const std::string& path) { return open_and_read(path, read_mpx); }
WeightFunction read_wgt_file(const std::string& path) { return open_and_read(path, read_wgt); }
Colouring read_clr_file(const std::string& path) { return open_and_read(path, read_clr); }

void write_mpx_file(const std::string& path, const Maniplex& m) {
  open_and_write(path, [&m](std::ostream& out) { write_mpx(out, m); });
}
void write_wgt_file(const std::string& path, const WeightFunction& w) {
  open_and_write(path, [&w](std::ostream& out) { write_wgt(out, w); });
}
void write_clr_file(const std::string& path, const Colouring& c) {
  open_and_write(path, [&c](std::ostream& out) { write_clr(out, c); });
}

}  // namespace maniplex
