#include "orderlink/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace orderlink {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

void write_arc_list(std::ostream& os, const Digraph& d) {
  os << d.order() << '\n';
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v : d.out(u)) os << u << ' ' << v << '\n';
}

std::string to_arc_list(const Digraph& d) {
  std::ostringstream os;
  write_arc_list(os, d);
  return os.str();
}

Digraph read_arc_list(std::istream& is) {
  std::optional<DigraphBuilder> builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const auto fields = split_fields(raw);
    if (fields.empty()) continue;
    if (!builder) {
      if (fields.size() != 1) throw ParseError(line_no, "header must hold the vertex count only");
      const auto n = parse_number(fields[0], line_no);
      if (n >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      builder.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const auto u = parse_number(fields[0], line_no);
    const auto v = parse_number(fields[1], line_no);
    if (u >= builder->order() || v >= builder->order())
      throw ParseError(line_no, "endpoint out of range for n=" + std::to_string(builder->order()));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    builder->add_arc(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!builder) throw ParseError(line_no + 1, "missing vertex-count header");
  return std::move(*builder).build();
}

Digraph parse_arc_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_arc_list(is);
}

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph {\n";
  for (VertexId v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v : d.out(u)) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace orderlink
