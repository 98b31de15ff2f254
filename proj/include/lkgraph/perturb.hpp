#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lkgraph/moves.hpp"
#include "lkgraph/smith.hpp"

namespace lkgraph {

/// A walk (random or replayed) with the Lk value re-checked after every move.
struct CheckedWalk {
  Diagram diagram;
  std::vector<MoveRecord> moves;
  LkInvariant before;
  LkInvariant after;
  /// First step whose Lk differs from `before`; the walk stops there.
  std::optional<std::size_t> failed_step;
  /// Per-step over/under agreement on the linking matrix.
  bool over_under_consistent = true;
};

/// Random homotopy walk with a per-step invariance self-check.
CheckedWalk perturb_checked(const Diagram& d, std::size_t steps, std::uint64_t seed);

/// Replays `moves` in order with the same self-check. Throws DomainError on
/// moves that are not homotopy-preserving or do not apply.
CheckedWalk replay_checked(const Diagram& d, std::vector<MoveRecord> moves);

}  // namespace lkgraph
