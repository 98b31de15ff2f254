#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lkgraph/diagram.hpp"

namespace lkgraph {

enum class MoveKind { CrossingChange, Clasp, ContractEdge, SplitVertex };

std::string_view to_string(MoveKind kind);

/// A move as applied, with the parameters needed to replay it. Parameter
/// layout per kind:
///   CrossingChange  <xid>
///   Clasp           <e> <pos_e> <f> <pos_f> <+|->
///   ContractEdge    <eid>
///   SplitVertex     <vid> <new_vid> <new_eid> <moved edge-ends...>
/// Edge-ends are written `<eid>:t` or `<eid>:h`.
struct MoveRecord {
  MoveKind kind;
  std::vector<std::string> params;
  bool homotopy_preserving = false;

  bool operator==(const MoveRecord&) const = default;
};

/// `<kind> <params...>`
std::string format_move(const MoveRecord& move);
/// Inverse of format_move; homotopy_preserving is left false until applied.
MoveRecord parse_move(std::string_view line);
/// One move per non-empty line; '#' starts a comment.
std::vector<MoveRecord> parse_move_list(std::string_view text);

enum class EndSide { Tail, Head };

struct EdgeEnd {
  std::string edge;
  EndSide side;

  auto operator<=>(const EdgeEnd&) const = default;
};

/// Swaps the strands of crossing `xid` and negates its sign.
Diagram crossing_change(const Diagram& d, const std::string& xid);

/// Inserts one Hopf clasp: crossing A (e over f) and crossing B (f over e),
/// both of sign `eps`, at passages pos_e, pos_e + 1 of e and pos_f, pos_f + 1
/// of f. Later passages on e and f shift by two.
Diagram clasp(const Diagram& d, const std::string& e, std::size_t pos_e, const std::string& f, std::size_t pos_f,
              int eps);

/// Merges the head of a crossing-free, non-loop edge into its tail.
Diagram contract_edge(const Diagram& d, const std::string& eid);

/// Moves the edge-ends in `moved` to a new vertex `new_vid`, joined to `vid`
/// by a crossing-free edge `new_eid` (tail vid, head new_vid). `kept` and
/// `moved` must partition the edge-ends at `vid`.
Diagram split_vertex(const Diagram& d, const std::string& vid, const std::vector<EdgeEnd>& kept,
                     const std::vector<EdgeEnd>& moved, const std::string& new_vid, const std::string& new_eid);

/// Applies a recorded move and returns the resulting diagram. The record's
/// homotopy_preserving flag is recomputed against `d`.
Diagram apply_move(const Diagram& d, MoveRecord& move);

/// Whether `move` is a neighborhood-homotopy move on `d`.
bool is_homotopy_preserving(const Diagram& d, const MoveRecord& move);

/// Two bouquets (vertex "u" with m loops, vertex "v" with n loops) with
/// divisors[i] parallel positive clasps between loop i of each.
Diagram canonical_diagram(std::size_t m, std::size_t n, const std::vector<std::int64_t>& divisors);

struct WalkResult {
  Diagram diagram;
  std::vector<MoveRecord> moves;
};

/// Called after every applied step with the step index, move and new diagram.
using WalkObserver = std::function<void(std::size_t, const MoveRecord&, const Diagram&)>;

/// Applies `steps` homotopy-preserving moves chosen at random: intra-component
/// crossing changes and clasps, contractions, and vertex splittings.
/// Deterministic in `seed`.
WalkResult random_homotopy_walk(const Diagram& d, std::size_t steps, std::uint64_t seed,
                                const WalkObserver& observer = {});

}  // namespace lkgraph
