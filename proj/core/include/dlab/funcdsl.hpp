#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dlab/error.hpp"
#include "dlab/piecewise.hpp"

namespace dlab {

/// Textual mini-language for piecewise functions. Examples:
///
///   1
///   x^2 - 3*x + 2
///   [0,1pi): 1 ; [1pi,2pi]: 0
///   [0,2]: exp(-1*x)
///   [0,2pi]: 2*cos(3*x+1/2)
///
/// A bare expression is shorthand for a single segment on [0, 2pi]. Interval
/// bounds are rationals, optionally suffixed "pi" ("3/2pi", "0.5pi"), and are
/// kept exact. Whitespace is insignificant; keywords are lower-case.

enum class ParseErrorKind { Syntax, Tiling, UnsupportedExponent };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind k, int line_no, int col_no, std::string detail_msg)
      : Error("line " + std::to_string(line_no) + ", col " +
              std::to_string(col_no) + ": " + detail_msg),
        kind(k),
        line(line_no),
        col(col_no),
        detail(std::move(detail_msg)) {}

  ParseErrorKind kind;
  int line;
  int col;
  std::string detail;
};

/// Parse a function spec; throws ParseError on syntax, tiling, or exponent
/// violations.
PiecewiseFunction parse_function(std::string_view text);

/// Canonical text form; parse_function(format_function(f)) reproduces f
/// exactly.
std::string format_function(const PiecewiseFunction& f);

/// Parse a corpus: one function spec per line, '#' starts a comment, blank
/// lines ignored. ParseError line numbers refer to the corpus text.
std::vector<PiecewiseFunction> parse_corpus(std::string_view text);

/// Parse a scalar in bound syntax: a rational with optional "pi" suffix
/// ("0.5pi", "3/2pi", "2.75"). Used by command-line flags.
double parse_scalar(std::string_view text);

}  // namespace dlab
