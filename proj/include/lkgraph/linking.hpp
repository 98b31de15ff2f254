#pragma once

#include <cstdint>

#include "lkgraph/diagram.hpp"
#include "lkgraph/homology.hpp"
#include "lkgraph/int_matrix.hpp"
#include "lkgraph/smith.hpp"

namespace lkgraph {

/// Signed count of crossings where an edge of z's component passes over an
/// edge of w's component, weighted by the cycle coefficients. Throws
/// DomainError if z and w share a component or leave their component.
std::int64_t linking_number(const Diagram& d, const Cycle& z, const Cycle& w);

/// Same count over crossings where z's component is the under-strand. Agrees
/// with linking_number on diagrams that come from actual embeddings.
std::int64_t linking_number_under(const Diagram& d, const Cycle& z, const Cycle& w);

struct LinkingMatrix {
  IntMatrix entries;  // rows: basis1 cycles, cols: basis2 cycles
  CycleBasis basis1;
  CycleBasis basis2;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

/// Linking matrix over the fundamental bases of the two components. Throws
/// DomainError unless the diagram has exactly two components.
LinkingMatrix linking_matrix(const Diagram& d);

/// Under-crossing counterpart of linking_matrix(d).entries.
IntMatrix linking_matrix_under(const Diagram& d);

/// Over- and under-crossing matrices coincide.
bool over_under_consistent(const Diagram& d);

LkInvariant lk_invariant(const Diagram& d);

/// Throws DomainError unless `d` has exactly two components.
void require_two_components(const Diagram& d);

}  // namespace lkgraph
