#include "lkgraph/homology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lkgraph/errors.hpp"

namespace lkgraph {

std::int64_t Cycle::coeff(const std::string& edge) const {
  auto it = coeffs.find(edge);
  return it == coeffs.end() ? 0 : it->second;
}

void Cycle::add(const std::string& edge, std::int64_t value) {
  if (value == 0) return;
  auto& slot = coeffs[edge];
  slot += value;
  if (slot == 0) coeffs.erase(edge);
}

Cycle operator+(const Cycle& a, const Cycle& b) {
  Cycle out = a;
  for (const auto& [e, k] : b.coeffs) out.add(e, k);
  return out;
}

Cycle operator-(const Cycle& c) { return -1 * c; }

Cycle operator*(std::int64_t k, const Cycle& c) {
  Cycle out;
  out.component = c.component;
  for (const auto& [e, v] : c.coeffs) out.add(e, k * v);
  return out;
}

std::map<std::string, std::int64_t> boundary(const Diagram& d, const Cycle& c) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [id, k] : c.coeffs) {
    const Edge& e = d.edges.at(id);
    out[e.head] += k;
    out[e.tail] -= k;
  }
  return out;
}

namespace {

const Component& component_at(const std::vector<Component>& comps, std::size_t component) {
  if (component >= comps.size()) {
    throw DomainError("no component " + std::to_string(component) + " (diagram has " +
                      std::to_string(comps.size()) + ")");
  }
  return comps[component];
}

/// Rooted spanning tree: parent edge of every non-root vertex plus depth.
struct RootedTree {
  std::map<std::string, std::string> parent_edge;
  std::map<std::string, std::size_t> depth;
};

RootedTree root_tree(const Diagram& d, const Component& comp, const std::vector<std::string>& tree_edges) {
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& id : tree_edges) {
    const Edge& e = d.edges.at(id);
    adjacency[e.tail].push_back(id);
    adjacency[e.head].push_back(id);
  }
  RootedTree tree;
  const std::string& root = comp.vertices.front();
  tree.depth[root] = 0;
  std::deque<std::string> queue{root};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& id : adjacency[v]) {
      const Edge& e = d.edges.at(id);
      const auto& other = e.tail == v ? e.head : e.tail;
      if (tree.depth.contains(other)) continue;
      tree.depth[other] = tree.depth[v] + 1;
      tree.parent_edge[other] = id;
      queue.push_back(other);
    }
  }
  return tree;
}

}  // namespace

std::vector<std::string> spanning_tree(const Diagram& d, std::size_t component) {
  const auto comps = components(d);
  const Component& comp = component_at(comps, component);

  std::map<std::string, std::vector<std::string>> incident;
  for (const auto& id : comp.edges) {  // ascending, so adjacency lists are sorted
    const Edge& e = d.edges.at(id);
    if (e.is_loop()) continue;
    incident[e.tail].push_back(id);
    incident[e.head].push_back(id);
  }

  std::vector<std::string> tree;
  std::set<std::string> visited{comp.vertices.front()};
  std::deque<std::string> queue{comp.vertices.front()};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& id : incident[v]) {
      const Edge& e = d.edges.at(id);
      const auto& other = e.tail == v ? e.head : e.tail;
      if (!visited.insert(other).second) continue;
      tree.push_back(id);
      queue.push_back(other);
    }
  }
  return tree;
}

CycleBasis cycle_basis(const Diagram& d, std::size_t component) {
  return cycle_basis(d, component, spanning_tree(d, component));
}

CycleBasis cycle_basis(const Diagram& d, std::size_t component, const std::vector<std::string>& tree_edges) {
  const auto comps = components(d);
  const Component& comp = component_at(comps, component);

  const std::set<std::string> in_tree(tree_edges.begin(), tree_edges.end());
  const std::set<std::string> in_comp(comp.edges.begin(), comp.edges.end());
  if (in_tree.size() != tree_edges.size()) throw DomainError("spanning tree lists an edge twice");
  for (const auto& id : tree_edges) {
    if (!in_comp.contains(id) || d.edges.at(id).is_loop()) {
      throw DomainError("edge " + id + " cannot be a tree edge of component " + std::to_string(component));
    }
  }
  if (tree_edges.size() + 1 != comp.vertices.size()) {
    throw DomainError("tree has " + std::to_string(tree_edges.size()) + " edges, component needs " +
                      std::to_string(comp.vertices.size() - 1));
  }
  const RootedTree tree = root_tree(d, comp, tree_edges);
  if (tree.depth.size() != comp.vertices.size()) throw DomainError("tree edges do not span the component");

  CycleBasis basis;
  basis.component = component;
  basis.tree_edges = tree_edges;

  // Coefficient of a tree edge walked from `v` towards the root.
  auto upward = [&](const std::string& v) {
    return d.edges.at(tree.parent_edge.at(v)).tail == v ? std::int64_t{1} : std::int64_t{-1};
  };
  auto parent = [&](const std::string& v) -> const std::string& {
    const Edge& e = d.edges.at(tree.parent_edge.at(v));
    return e.tail == v ? e.head : e.tail;
  };

  for (const auto& id : comp.edges) {
    if (in_tree.contains(id)) continue;
    const Edge& e = d.edges.at(id);
    Cycle z;
    z.component = component;
    z.add(id, 1);
    // Tree path from head back to tail: climb from both ends to the common ancestor,
    // forwards on the head side and backwards on the tail side.
    std::string from_head = e.head;
    std::string from_tail = e.tail;
    while (from_head != from_tail) {
      if (tree.depth.at(from_head) >= tree.depth.at(from_tail)) {
        z.add(tree.parent_edge.at(from_head), upward(from_head));
        from_head = parent(from_head);
      } else {
        z.add(tree.parent_edge.at(from_tail), -upward(from_tail));
        from_tail = parent(from_tail);
      }
    }
    basis.cycles.push_back(std::move(z));
    basis.defining_edges.push_back(id);
  }
  return basis;
}

std::size_t rank(const Diagram& d, std::size_t component) {
  const auto comps = components(d);
  const Component& comp = component_at(comps, component);
  return comp.edges.size() + 1 - comp.vertices.size();
}

}  // namespace lkgraph
