#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orderlink/digraph.hpp"

namespace orderlink {

/// Malformed arc-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Arc-list text: the vertex count on the first line, then one "u v" line per
// arc u->v. Serialisation sorts arcs; parsing ignores blank lines.

void write_arc_list(std::ostream& os, const Digraph& d);
std::string to_arc_list(const Digraph& d);
Digraph read_arc_list(std::istream& is);
Digraph parse_arc_list(std::string_view text);

/// Graphviz rendering, one statement per vertex and per arc.
std::string to_dot(const Digraph& d);

}  // namespace orderlink
