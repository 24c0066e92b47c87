#include "orderlink/path_system.hpp"

namespace orderlink {

std::size_t PathSystem::index_count() const {
  std::size_t c = 0;
  for (const auto& f : families_) c += f.empty() ? 0 : 1;
  return c;
}

std::size_t PathSystem::total_paths() const {
  std::size_t c = 0;
  for (const auto& f : families_) c += f.size();
  return c;
}

std::vector<std::size_t> PathSystem::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < families_.size(); ++j)
    if (!families_[j].empty()) out.push_back(j);
  return out;
}

void PathSystem::replace(std::size_t j, Path p) {
  auto& f = families_.at(j);
  f.clear();
  f.push_back(std::move(p));
}

std::vector<Path> PathSystem::take(std::size_t j) {
  std::vector<Path> out;
  out.swap(families_.at(j));
  return out;
}

VertexSet PathSystem::interiors(std::size_t universe) const {
  VertexSet x(universe);
  for (const auto& f : families_)
    for (const auto& p : f)
      for (VertexId v : p.interior()) x.set(v);
  return x;
}

VertexSet PathSystem::interiors_of(std::size_t j, std::size_t universe) const {
  VertexSet x(universe);
  for (const auto& p : families_.at(j))
    for (VertexId v : p.interior()) x.set(v);
  return x;
}

std::optional<std::string> system_defect(const Digraph& d, const SpecialSequence& s,
                                         const PathSystem& system, std::size_t max_multiplicity) {
  if (system.k() != s.size()) return "system has " + std::to_string(system.k()) + " slots, k=" + std::to_string(s.size());
  const VertexSet specials = s.as_set(d.order());
  VertexSet used(d.order());
  for (std::size_t j = 0; j < system.k(); ++j) {
    const auto& family = system.family(j);
    const auto tag = "family " + std::to_string(j) + ": ";
    if (family.size() > max_multiplicity)
      return tag + "t_j=" + std::to_string(family.size()) + " exceeds " + std::to_string(max_multiplicity);
    bool direct_seen = false;
    for (const Path& p : family) {
      if (p.vertices.empty() || p.source() != s.at(j) || p.target() != s.next(j)) return tag + "wrong endpoints";
      if (auto defect = path_defect(d, p)) return tag + *defect;
      if (p.length() > kMaxSegmentLength) return tag + "path longer than " + std::to_string(kMaxSegmentLength);
      if (p.length() == 1) {
        if (direct_seen) return tag + "direct arc listed twice";
        direct_seen = true;
      }
      for (VertexId v : p.interior()) {
        if (specials.test(v)) return tag + "interior meets special vertex " + std::to_string(v);
        if (used.test(v)) return tag + "interior collision at vertex " + std::to_string(v);
        used.set(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace orderlink
