#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lkgraph/diagram.hpp"

namespace lkgraph {

/// Integer 1-chain supported on the edges of one component. Missing edges
/// have coefficient 0; stored coefficients are never 0.
struct Cycle {
  std::size_t component = 0;  // 0-based, in `components()` order
  std::map<std::string, std::int64_t> coeffs;

  std::int64_t coeff(const std::string& edge) const;
  void add(const std::string& edge, std::int64_t value);

  bool operator==(const Cycle&) const = default;
};

Cycle operator+(const Cycle& a, const Cycle& b);
Cycle operator-(const Cycle& c);
Cycle operator*(std::int64_t k, const Cycle& c);

/// Signed incidence sum at every vertex touched by `c`; all zero iff `c` is a cycle.
std::map<std::string, std::int64_t> boundary(const Diagram& d, const Cycle& c);

struct CycleBasis {
  std::size_t component = 0;
  std::vector<std::string> tree_edges;  // BFS discovery order
  std::vector<Cycle> cycles;            // one per non-tree edge, ascending edge id
  std::vector<std::string> defining_edges;
};

/// Breadth-first spanning tree from the smallest vertex, exploring incident
/// edges in ascending id order. Loops never enter the tree.
std::vector<std::string> spanning_tree(const Diagram& d, std::size_t component);

/// Fundamental cycles of the BFS spanning tree.
CycleBasis cycle_basis(const Diagram& d, std::size_t component);

/// Fundamental cycles of a caller-chosen spanning tree. Throws DomainError if
/// `tree_edges` is not a spanning tree of the component.
CycleBasis cycle_basis(const Diagram& d, std::size_t component, const std::vector<std::string>& tree_edges);

/// First Betti number E - V + 1 of the component.
std::size_t rank(const Diagram& d, std::size_t component);

}  // namespace lkgraph
