#include "lkgraph/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace lkgraph {

std::size_t Diagram::passage_count(const std::string& edge) const {
  std::set<std::size_t> seen;
  for (const auto& [id, c] : crossings) {
    if (c.over.edge == edge) seen.insert(c.over.passage);
    if (c.under.edge == edge) seen.insert(c.under.passage);
  }
  return seen.size();
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Component> components(const Diagram& d) {
  std::vector<std::string> ids(d.vertices.begin(), d.vertices.end());
  auto index_of = [&ids](const std::string& v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  DisjointSets sets(ids.size());
  for (const auto& [id, e] : d.edges) {
    if (!d.vertices.contains(e.tail) || !d.vertices.contains(e.head)) continue;
    sets.unite(index_of(e.tail), index_of(e.head));
  }

  // Roots are the smallest index of each class, so iterating vertices in
  // ascending order discovers components in ascending order of minimum id.
  std::map<std::size_t, std::size_t> slot;
  std::vector<Component> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(sets.find(i), out.size());
    if (inserted) out.emplace_back();
    out[it->second].vertices.push_back(ids[i]);
  }
  for (const auto& [id, e] : d.edges) {
    if (!d.vertices.contains(e.tail)) continue;
    out[slot.at(sets.find(index_of(e.tail)))].edges.push_back(id);
  }
  return out;
}

std::map<std::string, std::size_t> edge_components(const Diagram& d) {
  std::map<std::string, std::size_t> out;
  const auto comps = components(d);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (const auto& e : comps[k].edges) out.emplace(e, k);
  }
  return out;
}

bool is_identifier(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  });
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidIdentifier: return "invalid-identifier";
    case ViolationKind::DanglingVertex: return "dangling-vertex";
    case ViolationKind::DanglingEdge: return "dangling-edge";
    case ViolationKind::SelfCrossing: return "self-crossing";
    case ViolationKind::PassageDuplicate: return "passage-duplicate";
    case ViolationKind::PassageGap: return "passage-index gap";
    case ViolationKind::InvalidSign: return "invalid-sign";
    case ViolationKind::ComponentCount: return "component-count";
  }
  return "unknown";
}

std::vector<Violation> validate(const Diagram& d, ComponentRequirement requirement) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, const std::string& entity, std::string message) {
    out.push_back({kind, entity, std::move(message)});
  };

  for (const auto& v : d.vertices) {
    if (!is_identifier(v)) report(ViolationKind::InvalidIdentifier, v, "bad vertex identifier");
  }
  for (const auto& [key, e] : d.edges) {
    if (!is_identifier(key) || key != e.id) {
      report(ViolationKind::InvalidIdentifier, key, "bad edge identifier");
    }
    for (const auto* end : {&e.tail, &e.head}) {
      if (!d.vertices.contains(*end)) {
        report(ViolationKind::DanglingVertex, key, "edge " + key + " references unknown vertex " + *end);
      }
    }
  }

  // passage index -> crossings using it, per edge
  std::map<std::string, std::map<std::size_t, std::set<std::string>>> usage;
  for (const auto& [key, c] : d.crossings) {
    if (!is_identifier(key) || key != c.id) {
      report(ViolationKind::InvalidIdentifier, key, "bad crossing identifier");
    }
    if (c.sign != 1 && c.sign != -1) {
      report(ViolationKind::InvalidSign, key, "crossing " + key + " has sign " + std::to_string(c.sign));
    }
    if (c.over == c.under) {
      report(ViolationKind::SelfCrossing, key,
             "crossing " + key + " uses " + c.over.edge + "#" + std::to_string(c.over.passage) +
                 " as both strands");
    }
    for (const auto* strand : {&c.over, &c.under}) {
      if (!d.edges.contains(strand->edge)) {
        report(ViolationKind::DanglingEdge, key, "crossing " + key + " references unknown edge " + strand->edge);
        continue;
      }
      usage[strand->edge][strand->passage].insert(key);
    }
  }

  for (const auto& [edge, indices] : usage) {
    for (const auto& [index, users] : indices) {
      if (users.size() > 1) {
        std::string names;
        for (const auto& u : users) names += (names.empty() ? "" : ", ") + u;
        report(ViolationKind::PassageDuplicate, edge,
               "edge " + edge + " passage " + std::to_string(index) + " used by " + names);
      }
    }
    std::size_t expected = 0;
    for (const auto& [index, users] : indices) {
      if (index != expected) {
        report(ViolationKind::PassageGap, edge,
               "passage-index gap on edge " + edge + ": index " + std::to_string(expected) + " missing");
        break;
      }
      ++expected;
    }
  }

  if (requirement == ComponentRequirement::Two) {
    const auto count = components(d).size();
    if (count != 2) {
      report(ViolationKind::ComponentCount, "",
             "expected 2 connected components, found " + std::to_string(count));
    }
  }
  return out;
}

}  // namespace lkgraph
