#include "lkgraph/moves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lkgraph/errors.hpp"

namespace lkgraph {
namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string word; in >> word;) out.push_back(word);
  return out;
}

std::size_t parse_index(const std::string& token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DomainError("expected a nonnegative integer, got '" + token + "'");
  }
  return value;
}

std::string format_end(const EdgeEnd& end) { return end.edge + (end.side == EndSide::Tail ? ":t" : ":h"); }

EdgeEnd parse_end(const std::string& token) {
  auto colon = token.rfind(':');
  if (colon == std::string::npos || colon + 2 != token.size() || (token.back() != 't' && token.back() != 'h')) {
    throw DomainError("bad edge-end '" + token + "', expected <eid>:t or <eid>:h");
  }
  return {token.substr(0, colon), token.back() == 't' ? EndSide::Tail : EndSide::Head};
}

std::vector<EdgeEnd> ends_at(const Diagram& d, const std::string& vid) {
  std::vector<EdgeEnd> out;
  for (const auto& [id, e] : d.edges) {
    if (e.tail == vid) out.push_back({id, EndSide::Tail});
    if (e.head == vid) out.push_back({id, EndSide::Head});
  }
  return out;
}

const Edge& edge_or_throw(const Diagram& d, const std::string& eid) {
  auto it = d.edges.find(eid);
  if (it == d.edges.end()) throw DomainError("unknown edge '" + eid + "'");
  return it->second;
}

void shift_passages(Diagram& d, const std::string& edge, std::size_t from, std::size_t by) {
  for (auto& [id, c] : d.crossings) {
    for (auto* s : {&c.over, &c.under}) {
      if (s->edge == edge && s->passage >= from) s->passage += by;
    }
  }
}

std::string pad(std::size_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::CrossingChange: return "CrossingChange";
    case MoveKind::Clasp: return "Clasp";
    case MoveKind::ContractEdge: return "ContractEdge";
    case MoveKind::SplitVertex: return "SplitVertex";
  }
  return "Unknown";
}

std::string format_move(const MoveRecord& move) {
  std::string out(to_string(move.kind));
  for (const auto& p : move.params) out += " " + p;
  return out;
}

MoveRecord parse_move(std::string_view line) {
  auto words = split_words(line);
  if (words.empty()) throw DomainError("empty move line");
  MoveRecord move{};
  const std::map<std::string, std::pair<MoveKind, std::size_t>> kinds = {
      {"CrossingChange", {MoveKind::CrossingChange, 1}},
      {"Clasp", {MoveKind::Clasp, 5}},
      {"ContractEdge", {MoveKind::ContractEdge, 1}},
      {"SplitVertex", {MoveKind::SplitVertex, 3}},
  };
  auto it = kinds.find(words[0]);
  if (it == kinds.end()) throw DomainError("unknown move kind '" + words[0] + "'");
  move.kind = it->second.first;
  move.params.assign(words.begin() + 1, words.end());
  const std::size_t expected = it->second.second;
  const bool ok = move.kind == MoveKind::SplitVertex ? move.params.size() >= expected : move.params.size() == expected;
  if (!ok) throw DomainError("wrong parameter count for " + words[0]);
  return move;
}

std::vector<MoveRecord> parse_move_list(std::string_view text) {
  std::vector<MoveRecord> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (split_words(line).empty()) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

Diagram crossing_change(const Diagram& d, const std::string& xid) {
  auto it = d.crossings.find(xid);
  if (it == d.crossings.end()) throw DomainError("unknown crossing '" + xid + "'");
  Diagram out = d;
  Crossing& c = out.crossings.at(xid);
  std::swap(c.over, c.under);
  c.sign = -c.sign;
  return out;
}

Diagram clasp(const Diagram& d, const std::string& e, std::size_t pos_e, const std::string& f, std::size_t pos_f,
              int eps) {
  edge_or_throw(d, e);
  edge_or_throw(d, f);
  if (e == f) throw DomainError("clasp needs two distinct edges");
  if (eps != 1 && eps != -1) throw DomainError("clasp sign must be +1 or -1");
  if (pos_e > d.passage_count(e)) throw DomainError("insertion index out of range on edge " + e);
  if (pos_f > d.passage_count(f)) throw DomainError("insertion index out of range on edge " + f);

  Diagram out = d;
  shift_passages(out, e, pos_e, 2);
  shift_passages(out, f, pos_f, 2);
  Crossing a{fresh_id("x", out.crossings), {e, pos_e}, {f, pos_f}, eps};
  out.crossings.emplace(a.id, a);
  Crossing b{fresh_id("x", out.crossings), {f, pos_f + 1}, {e, pos_e + 1}, eps};
  out.crossings.emplace(b.id, b);
  return out;
}

Diagram contract_edge(const Diagram& d, const std::string& eid) {
  const Edge& edge = edge_or_throw(d, eid);
  if (edge.is_loop()) throw DomainError("cannot contract loop " + eid);
  if (d.passage_count(eid) != 0) throw DomainError("cannot contract edge " + eid + ": it carries crossings");

  Diagram out = d;
  const std::string keep = edge.tail;
  const std::string gone = edge.head;
  out.edges.erase(eid);
  out.vertices.erase(gone);
  for (auto& [id, e] : out.edges) {
    if (e.tail == gone) e.tail = keep;
    if (e.head == gone) e.head = keep;
  }
  return out;
}

Diagram split_vertex(const Diagram& d, const std::string& vid, const std::vector<EdgeEnd>& kept,
                     const std::vector<EdgeEnd>& moved, const std::string& new_vid, const std::string& new_eid) {
  if (!d.vertices.contains(vid)) throw DomainError("unknown vertex '" + vid + "'");
  if (!is_identifier(new_vid) || !is_identifier(new_eid)) throw DomainError("invalid fresh identifier");
  if (d.vertices.contains(new_vid)) throw DomainError("vertex id '" + new_vid + "' already in use");
  if (d.edges.contains(new_eid)) throw DomainError("edge id '" + new_eid + "' already in use");

  auto expected = ends_at(d, vid);
  std::vector<EdgeEnd> given = kept;
  given.insert(given.end(), moved.begin(), moved.end());
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (given != expected) throw DomainError("partition must cover every edge-end at " + vid + " exactly once");

  Diagram out = d;
  out.vertices.insert(new_vid);
  for (const auto& end : moved) {
    Edge& e = out.edges.at(end.edge);
    (end.side == EndSide::Tail ? e.tail : e.head) = new_vid;
  }
  out.edges.emplace(new_eid, Edge{new_eid, vid, new_vid});
  return out;
}

bool is_homotopy_preserving(const Diagram& d, const MoveRecord& move) {
  auto same_component = [&](const std::string& a, const std::string& b) {
    const auto membership = edge_components(d);
    auto ia = membership.find(a);
    auto ib = membership.find(b);
    return ia != membership.end() && ib != membership.end() && ia->second == ib->second;
  };
  switch (move.kind) {
    case MoveKind::CrossingChange: {
      auto it = d.crossings.find(move.params.at(0));
      return it != d.crossings.end() && same_component(it->second.over.edge, it->second.under.edge);
    }
    case MoveKind::Clasp:
      return same_component(move.params.at(0), move.params.at(2));
    case MoveKind::ContractEdge:
    case MoveKind::SplitVertex:
      return true;
  }
  return false;
}

Diagram apply_move(const Diagram& d, MoveRecord& move) {
  const auto& p = move.params;
  Diagram out;
  switch (move.kind) {
    case MoveKind::CrossingChange:
      out = crossing_change(d, p.at(0));
      break;
    case MoveKind::Clasp: {
      int eps = 0;
      if (p.at(4) == "+") eps = 1;
      if (p.at(4) == "-") eps = -1;
      if (eps == 0) throw DomainError("clasp sign must be '+' or '-'");
      out = clasp(d, p.at(0), parse_index(p.at(1)), p.at(2), parse_index(p.at(3)), eps);
      break;
    }
    case MoveKind::ContractEdge:
      out = contract_edge(d, p.at(0));
      break;
    case MoveKind::SplitVertex: {
      const std::string& vid = p.at(0);
      std::vector<EdgeEnd> moved;
      for (std::size_t k = 3; k < p.size(); ++k) moved.push_back(parse_end(p[k]));
      std::vector<EdgeEnd> kept;
      for (const auto& end : ends_at(d, vid)) {
        if (std::find(moved.begin(), moved.end(), end) == moved.end()) kept.push_back(end);
      }
      out = split_vertex(d, vid, kept, moved, p.at(1), p.at(2));
      break;
    }
  }
  move.homotopy_preserving = is_homotopy_preserving(d, move);
  return out;
}

Diagram canonical_diagram(std::size_t m, std::size_t n, const std::vector<std::int64_t>& divisors) {
  if (divisors.size() > std::min(m, n)) {
    throw DomainError("divisor chain of length " + std::to_string(divisors.size()) + " exceeds min(" +
                      std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] <= 0) throw DomainError("divisors must be positive");
    if (i > 0 && divisors[i] % divisors[i - 1] != 0) {
      throw DomainError(std::to_string(divisors[i - 1]) + " does not divide " + std::to_string(divisors[i]));
    }
  }

  const std::size_t width = std::to_string(std::max<std::size_t>({m, n, 1})).size();
  Diagram d;
  d.vertices = {"u", "v"};
  auto loop_id = [width](char prefix, std::size_t i) { return std::string(1, prefix) + pad(i + 1, width); };
  for (std::size_t i = 0; i < m; ++i) d.edges.emplace(loop_id('a', i), Edge{loop_id('a', i), "u", "u"});
  for (std::size_t j = 0; j < n; ++j) d.edges.emplace(loop_id('b', j), Edge{loop_id('b', j), "v", "v"});

  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const auto z = loop_id('a', i);
    const auto w = loop_id('b', i);
    for (std::int64_t k = 0; k < divisors[i]; ++k) {
      const auto at = static_cast<std::size_t>(2 * k);
      d = clasp(d, z, at, w, at, 1);
    }
  }
  return d;
}

WalkResult random_homotopy_walk(const Diagram& d, std::size_t steps, std::uint64_t seed,
                                const WalkObserver& observer) {
  WalkResult result{d, {}};
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  for (std::size_t step = 0; step < steps;) {
    const Diagram& cur = result.diagram;
    const auto membership = edge_components(cur);
    MoveRecord move{};

    switch (pick(4)) {
      case 0: {
        std::vector<std::string> candidates;
        for (const auto& [id, c] : cur.crossings) {
          if (membership.at(c.over.edge) == membership.at(c.under.edge)) candidates.push_back(id);
        }
        if (candidates.empty()) continue;
        move = {MoveKind::CrossingChange, {candidates[pick(candidates.size())]}};
        break;
      }
      case 1: {
        std::map<std::size_t, std::vector<std::string>> by_component;
        for (const auto& [edge, k] : membership) by_component[k].push_back(edge);
        std::vector<std::string> candidates;
        for (const auto& [edge, k] : membership) {
          if (by_component[k].size() >= 2) candidates.push_back(edge);
        }
        if (candidates.empty()) continue;
        const auto e = candidates[pick(candidates.size())];
        const auto& peers = by_component[membership.at(e)];
        std::string f = e;
        while (f == e) f = peers[pick(peers.size())];
        move = {MoveKind::Clasp,
                {e, std::to_string(pick(cur.passage_count(e) + 1)), f, std::to_string(pick(cur.passage_count(f) + 1)),
                 pick(2) ? "+" : "-"}};
        break;
      }
      case 2: {
        std::vector<std::string> candidates;
        for (const auto& [id, e] : cur.edges) {
          if (!e.is_loop() && cur.passage_count(id) == 0) candidates.push_back(id);
        }
        if (candidates.empty()) continue;
        move = {MoveKind::ContractEdge, {candidates[pick(candidates.size())]}};
        break;
      }
      default: {
        if (cur.vertices.empty()) continue;
        auto v = cur.vertices.begin();
        std::advance(v, static_cast<std::ptrdiff_t>(pick(cur.vertices.size())));
        // Fresh vertex ids extend the component's smallest id so that the
        // component order stays put.
        std::string root = *v;
        for (const auto& comp : components(cur)) {
          if (std::binary_search(comp.vertices.begin(), comp.vertices.end(), *v)) root = comp.vertices.front();
        }
        move = {MoveKind::SplitVertex, {*v, fresh_id(root + "_", cur.vertices), fresh_id("s", cur.edges)}};
        for (const auto& end : ends_at(cur, *v)) {
          if (pick(2)) move.params.push_back(format_end(end));
        }
        break;
      }
    }

    Diagram next = apply_move(cur, move);
    result.diagram = std::move(next);
    result.moves.push_back(move);
    if (observer) observer(step, result.moves.back(), result.diagram);
    ++step;
  }
  return result;
}

}  // namespace lkgraph
