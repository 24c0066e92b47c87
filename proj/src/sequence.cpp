#include "orderlink/sequence.hpp"

#include <algorithm>
#include <string>

namespace orderlink {

namespace {

void require_distinct(std::vector<VertexId> vs, const char* what) {
  std::sort(vs.begin(), vs.end());
  if (auto it = std::adjacent_find(vs.begin(), vs.end()); it != vs.end())
    throw GraphError(std::string(what) + ": vertex " + std::to_string(*it) + " repeated");
}

}  // namespace

SpecialSequence::SpecialSequence(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw GraphError("special sequence is empty");
  require_distinct(vertices_, "special sequence");
}

void SpecialSequence::validate_against(const Digraph& d) const {
  for (VertexId v : vertices_)
    if (v >= d.order())
      throw GraphError("special vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(d.order()));
}

VertexSet SpecialSequence::as_set(std::size_t universe) const {
  return VertexSet(universe, std::span<const VertexId>(vertices_));
}

LinkRequest::LinkRequest(std::vector<TerminalPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw GraphError("link request is empty");
  std::vector<VertexId> ends;
  for (const auto& p : pairs_) {
    ends.push_back(p.source);
    ends.push_back(p.target);
  }
  require_distinct(std::move(ends), "link request");
}

SpecialSequence LinkRequest::interleaved() const {
  std::vector<VertexId> seq;
  seq.reserve(2 * pairs_.size());
  for (const auto& p : pairs_) {
    seq.push_back(p.source);
    seq.push_back(p.target);
  }
  return SpecialSequence(std::move(seq));
}

void LinkRequest::validate_against(const Digraph& d) const { interleaved().validate_against(d); }

}  // namespace orderlink
