#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "maniplex/extend.hpp"
#include "maniplex/maniplex.hpp"
#include "maniplex/weights.hpp"

namespace maniplex {

// Malformed input; carries the 1-based line number of the offending line
// (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

private:
  int line_;
};

// MPX v1: `mpx <rank> <num_flags>`, one `adj <i> <images>` line per colour,
// optional `facets <bits> <labels as hex>`; `#` starts a comment line.
Maniplex read_mpx(std::istream& in);
Maniplex read_mpx_file(const std::string& path);
void write_mpx(std::ostream& out, const Maniplex& m);
void write_mpx_file(const std::string& path, const Maniplex& m);

// WGT v1: `wgt <k>`, one `w <i> <values>` line per colour. Edge symmetry is
// enforced when the weights are paired with a maniplex.
WeightFunction read_wgt(std::istream& in);
WeightFunction read_wgt_file(const std::string& path);
void write_wgt(std::ostream& out, const WeightFunction& w);
void write_wgt_file(const std::string& path, const WeightFunction& w);

// CLR v1: `clr <num_colours> <per-facet colours>`.
Colouring read_clr(std::istream& in);
Colouring read_clr_file(const std::string& path);
void write_clr(std::ostream& out, const Colouring& c);
void write_clr_file(const std::string& path, const Colouring& c);

}  // namespace maniplex
