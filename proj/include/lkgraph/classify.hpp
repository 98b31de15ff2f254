#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "lkgraph/diagram.hpp"
#include "lkgraph/smith.hpp"

namespace lkgraph {

enum class VerdictResult { Equivalent, Inequivalent, HypothesisViolated };
enum class Pairing { Ordered, Swapped, None };

std::string_view to_string(VerdictResult result);
std::string_view to_string(Pairing pairing);

struct Verdict {
  VerdictResult result = VerdictResult::HypothesisViolated;
  Pairing pairing = Pairing::None;
  LkInvariant first;
  LkInvariant second;
  /// H1 ranks: first diagram's two components, then the second diagram's.
  std::array<std::size_t, 4> ranks{};
  /// "rank" or "divisors" when Inequivalent, empty otherwise.
  std::string obstruction;
  /// Ranks are reported as handlebody genera.
  bool handlebody = false;

  /// One-line human-readable summary.
  std::string summary() const;
};

/// Decides neighborhood homotopy of two 2-component diagrams by comparing
/// component ranks and Lk. Unless `ordered`, the swapped component pairing is
/// admitted too. Throws DomainError if either diagram does not have exactly
/// two components.
Verdict classify(const Diagram& a, const Diagram& b, bool ordered = false);

/// classify(a, b, false) for handlebody-link spines; ranks read as genera.
Verdict handlebody_mode(const Diagram& a, const Diagram& b);

}  // namespace lkgraph
