#include "lkgraph/linking.hpp"

#include <map>

#include "lkgraph/errors.hpp"

namespace lkgraph {
namespace {

enum class Layer { Over, Under };

void check_support(const std::map<std::string, std::size_t>& membership, const Cycle& c) {
  for (const auto& [edge, k] : c.coeffs) {
    auto it = membership.find(edge);
    if (it == membership.end()) throw DomainError("cycle uses unknown edge " + edge);
    if (it->second != c.component) {
      throw DomainError("cycle declared on component " + std::to_string(c.component) + " uses edge " + edge +
                        " of component " + std::to_string(it->second));
    }
  }
}

std::int64_t count(const Diagram& d, const Cycle& z, const Cycle& w, Layer layer) {
  if (z.component == w.component) throw DomainError("linking number needs cycles in different components");
  const auto membership = edge_components(d);
  check_support(membership, z);
  check_support(membership, w);

  std::int64_t total = 0;
  for (const auto& [id, c] : d.crossings) {
    const auto& z_strand = layer == Layer::Over ? c.over : c.under;
    const auto& w_strand = layer == Layer::Over ? c.under : c.over;
    total += c.sign * z.coeff(z_strand.edge) * w.coeff(w_strand.edge);
  }
  return total;
}

/// Per edge, the coefficient of that edge in each basis cycle.
std::map<std::string, std::vector<std::int64_t>> coefficient_columns(const CycleBasis& basis) {
  std::map<std::string, std::vector<std::int64_t>> out;
  for (std::size_t k = 0; k < basis.cycles.size(); ++k) {
    for (const auto& [edge, v] : basis.cycles[k].coeffs) {
      auto& column = out[edge];
      column.resize(basis.cycles.size());
      column[k] = v;
    }
  }
  return out;
}

IntMatrix assemble(const Diagram& d, const CycleBasis& b1, const CycleBasis& b2, Layer layer) {
  IntMatrix m(b1.cycles.size(), b2.cycles.size());
  const auto col1 = coefficient_columns(b1);
  const auto col2 = coefficient_columns(b2);
  for (const auto& [id, c] : d.crossings) {
    const auto& first = layer == Layer::Over ? c.over : c.under;
    const auto& second = layer == Layer::Over ? c.under : c.over;
    auto u = col1.find(first.edge);
    auto v = col2.find(second.edge);
    if (u == col1.end() || v == col2.end()) continue;
    for (std::size_t i = 0; i < u->second.size(); ++i) {
      if (u->second[i] == 0) continue;
      for (std::size_t j = 0; j < v->second.size(); ++j) {
        m(i, j) += c.sign * u->second[i] * v->second[j];
      }
    }
  }
  return m;
}

}  // namespace

void require_two_components(const Diagram& d) {
  const auto n = components(d).size();
  if (n != 2) throw DomainError("expected 2 connected components, found " + std::to_string(n));
}

std::int64_t linking_number(const Diagram& d, const Cycle& z, const Cycle& w) {
  return count(d, z, w, Layer::Over);
}

std::int64_t linking_number_under(const Diagram& d, const Cycle& z, const Cycle& w) {
  return count(d, z, w, Layer::Under);
}

LinkingMatrix linking_matrix(const Diagram& d) {
  require_two_components(d);
  LinkingMatrix out;
  out.basis1 = cycle_basis(d, 0);
  out.basis2 = cycle_basis(d, 1);
  out.entries = assemble(d, out.basis1, out.basis2, Layer::Over);
  return out;
}

IntMatrix linking_matrix_under(const Diagram& d) {
  require_two_components(d);
  return assemble(d, cycle_basis(d, 0), cycle_basis(d, 1), Layer::Under);
}

bool over_under_consistent(const Diagram& d) {
  return linking_matrix(d).entries == linking_matrix_under(d);
}

LkInvariant lk_invariant(const Diagram& d) { return lk_invariant(linking_matrix(d).entries); }

}  // namespace lkgraph
