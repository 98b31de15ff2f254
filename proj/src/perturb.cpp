#include "lkgraph/perturb.hpp"

#include "lkgraph/errors.hpp"
#include "lkgraph/linking.hpp"

namespace lkgraph {
namespace {

/// Returns false once Lk drifts from `walk.before`.
bool check_step(CheckedWalk& walk, std::size_t step, const Diagram& d) {
  const LinkingMatrix m = linking_matrix(d);
  walk.over_under_consistent = walk.over_under_consistent && m.entries == linking_matrix_under(d);
  if (lk_invariant(m.entries) == walk.before) return true;
  walk.failed_step = step;
  return false;
}

}  // namespace

CheckedWalk perturb_checked(const Diagram& d, std::size_t steps, std::uint64_t seed) {
  CheckedWalk walk;
  walk.before = lk_invariant(d);
  walk.over_under_consistent = over_under_consistent(d);
  auto result = random_homotopy_walk(d, steps, seed, [&walk](std::size_t step, const MoveRecord&, const Diagram& cur) {
    if (!walk.failed_step) check_step(walk, step, cur);
  });
  walk.diagram = std::move(result.diagram);
  walk.moves = std::move(result.moves);
  walk.after = lk_invariant(walk.diagram);
  return walk;
}

CheckedWalk replay_checked(const Diagram& d, std::vector<MoveRecord> moves) {
  CheckedWalk walk;
  walk.before = lk_invariant(d);
  walk.over_under_consistent = over_under_consistent(d);
  walk.diagram = d;
  for (std::size_t step = 0; step < moves.size(); ++step) {
    MoveRecord& move = moves[step];
    Diagram next = apply_move(walk.diagram, move);
    if (!move.homotopy_preserving) {
      throw DomainError("move " + std::to_string(step + 1) + " (" + format_move(move) +
                        ") is not homotopy-preserving");
    }
    walk.diagram = std::move(next);
    walk.moves.push_back(move);
    if (!check_step(walk, step, walk.diagram)) break;
  }
  walk.after = lk_invariant(walk.diagram);
  return walk;
}

}  // namespace lkgraph
