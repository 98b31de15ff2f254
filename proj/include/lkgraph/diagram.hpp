#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lkgraph {

/// One passage of an edge through a crossing: the edge and the position of
/// the passage along the edge, counted from 0 in tail-to-head order.
struct StrandRef {
  std::string edge;
  std::size_t passage = 0;

  auto operator<=>(const StrandRef&) const = default;
};

struct Edge {
  std::string id;
  std::string tail;
  std::string head;

  bool is_loop() const { return tail == head; }
  auto operator<=>(const Edge&) const = default;
};

/// Sign is +1 when (over tangent, under tangent) is a right-handed frame.
struct Crossing {
  std::string id;
  StrandRef over;
  StrandRef under;
  int sign = 1;

  auto operator<=>(const Crossing&) const = default;
};

/// Combinatorial spatial-graph diagram. Entities are keyed by identifier so
/// that two diagrams are equal exactly when they have the same vertices,
/// edges and crossings, independent of declaration order.
struct Diagram {
  std::set<std::string> vertices;
  std::map<std::string, Edge> edges;
  std::map<std::string, Crossing> crossings;

  bool operator==(const Diagram&) const = default;

  /// Number of crossing passages along `edge` (each reference counts once).
  std::size_t passage_count(const std::string& edge) const;
};

/// A connected component of the abstract graph underlying a diagram.
struct Component {
  std::vector<std::string> vertices;  // ascending
  std::vector<std::string> edges;     // ascending
};

/// Connected components, ordered by their smallest vertex identifier.
std::vector<Component> components(const Diagram& d);

/// Component index of every edge, keyed by edge id.
std::map<std::string, std::size_t> edge_components(const Diagram& d);

bool is_identifier(std::string_view token);

/// Smallest `prefix<k>` (k >= 1) not contained in `taken`.
template <typename Container>
std::string fresh_id(const std::string& prefix, const Container& taken) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = prefix + std::to_string(k);
    if (!taken.contains(candidate)) return candidate;
  }
}

enum class ViolationKind {
  InvalidIdentifier,
  DanglingVertex,
  DanglingEdge,
  SelfCrossing,
  PassageDuplicate,
  PassageGap,
  InvalidSign,
  ComponentCount,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string entity;
  std::string message;
};

enum class ComponentRequirement { Any, Two };

/// Every broken invariant of `d`; empty iff the diagram is valid. With
/// ComponentRequirement::Two the component count is checked as well.
std::vector<Violation> validate(const Diagram& d,
                                ComponentRequirement requirement = ComponentRequirement::Any);

}  // namespace lkgraph
