#include "lkgraph/sgd.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lkgraph/errors.hpp"

namespace lkgraph {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

enum class Section { Vertices, Edges, Crossings };

class Parser {
 public:
  explicit Parser(bool strict) : strict_(strict) {}

  Diagram run(std::string_view text) {
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      ++line_;
      auto tokens = tokenize(text.substr(pos, eol - pos));
      pos = eol + 1;
      if (tokens.empty()) continue;
      if (!header_seen) {
        if (tokens.size() != 2 || tokens[0].text != "sgd") fail("expected header 'sgd 1'", tokens[0]);
        if (tokens[1].text != "1") fail("unsupported SGD version '" + std::string(tokens[1].text) + "'", tokens[1]);
        header_seen = true;
        continue;
      }
      dispatch(tokens);
    }
    if (!header_seen) throw ParseError("missing header 'sgd 1'", line_ == 0 ? 1 : line_, 1);
    if (strict_) check_passages();
    return std::move(diagram_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    throw ParseError(what, line_, at.column);
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t n, const char* form) const {
    if (tokens.size() != n) {
      const Token& at = tokens.size() > n ? tokens[n] : tokens.back();
      fail(std::string("expected '") + form + "'", at);
    }
  }

  std::string identifier(const Token& t) const {
    if (!is_identifier(t.text)) fail("invalid identifier '" + std::string(t.text) + "'", t);
    return std::string(t.text);
  }

  void enter(Section s, const Token& at) {
    if (s < section_) fail("declarations must be ordered vertices, edges, crossings", at);
    section_ = s;
  }

  void dispatch(const std::vector<Token>& tokens) {
    const auto keyword = tokens[0].text;
    if (keyword == "vertex") {
      enter(Section::Vertices, tokens[0]);
      expect_count(tokens, 2, "vertex <vid>");
      auto id = identifier(tokens[1]);
      if (!diagram_.vertices.insert(id).second) fail("duplicate vertex identifier '" + id + "'", tokens[1]);
    } else if (keyword == "edge") {
      enter(Section::Edges, tokens[0]);
      expect_count(tokens, 4, "edge <eid> <tail> <head>");
      Edge e{identifier(tokens[1]), identifier(tokens[2]), identifier(tokens[3])};
      for (std::size_t k = 2; k <= 3 && strict_; ++k) {
        if (!diagram_.vertices.contains(std::string(tokens[k].text))) {
          fail("unknown vertex '" + std::string(tokens[k].text) + "'", tokens[k]);
        }
      }
      if (diagram_.edges.contains(e.id)) fail("duplicate edge identifier '" + e.id + "'", tokens[1]);
      diagram_.edges.emplace(e.id, e);
    } else if (keyword == "crossing") {
      enter(Section::Crossings, tokens[0]);
      expect_count(tokens, 10, "crossing <xid> over <eid> <idx> under <eid> <idx> sign <+|->");
      if (tokens[2].text != "over") fail("expected 'over'", tokens[2]);
      if (tokens[5].text != "under") fail("expected 'under'", tokens[5]);
      if (tokens[8].text != "sign") fail("expected 'sign'", tokens[8]);
      Crossing c;
      c.id = identifier(tokens[1]);
      c.over = strand(tokens[3], tokens[4]);
      c.under = strand(tokens[6], tokens[7]);
      if (tokens[9].text == "+") {
        c.sign = 1;
      } else if (tokens[9].text == "-") {
        c.sign = -1;
      } else {
        fail("sign must be '+' or '-'", tokens[9]);
      }
      if (diagram_.crossings.contains(c.id)) fail("duplicate crossing identifier '" + c.id + "'", tokens[1]);
      diagram_.crossings.emplace(c.id, c);
      if (!strict_) return;
      if (c.over == c.under) fail("over and under strands coincide", tokens[6]);
      for (const auto* s : {&c.over, &c.under}) {
        auto [it, fresh] = passage_line_[s->edge].try_emplace(s->passage, line_);
        if (!fresh) {
          fail("passage " + std::to_string(s->passage) + " of edge " + s->edge + " already used on line " +
                   std::to_string(it->second),
               s == &c.over ? tokens[4] : tokens[7]);
        }
      }
    } else {
      fail("unknown declaration '" + std::string(keyword) + "'", tokens[0]);
    }
  }

  StrandRef strand(const Token& edge, const Token& index) const {
    StrandRef s;
    s.edge = identifier(edge);
    if (strict_ && !diagram_.edges.contains(s.edge)) fail("unknown edge '" + s.edge + "'", edge);
    const auto* first = index.text.data();
    const auto* last = first + index.text.size();
    auto [ptr, ec] = std::from_chars(first, last, s.passage);
    if (ec != std::errc{} || ptr != last) fail("passage index must be a nonnegative integer", index);
    return s;
  }

  void check_passages() const {
    for (const auto& [edge, indices] : passage_line_) {
      std::size_t expected = 0;
      for (const auto& [index, line] : indices) {
        if (index != expected) {
          throw ParseError("passage-index gap on edge " + edge + ": index " + std::to_string(expected) +
                               " missing (index " + std::to_string(index) + " used)",
                           line, 1);
        }
        ++expected;
      }
    }
  }

  bool strict_;
  Diagram diagram_;
  Section section_ = Section::Vertices;
  std::size_t line_ = 0;
  std::map<std::string, std::map<std::size_t, std::size_t>> passage_line_;
};

}  // namespace

Diagram parse_sgd(std::string_view text) { return Parser(true).run(text); }

Diagram parse_sgd_unchecked(std::string_view text) { return Parser(false).run(text); }

std::string serialize_sgd(const Diagram& d) {
  std::ostringstream out;
  out << "sgd 1\n";
  for (const auto& v : d.vertices) out << "vertex " << v << '\n';
  for (const auto& [id, e] : d.edges) out << "edge " << id << ' ' << e.tail << ' ' << e.head << '\n';
  for (const auto& [id, c] : d.crossings) {
    out << "crossing " << id << " over " << c.over.edge << ' ' << c.over.passage << " under " << c.under.edge
        << ' ' << c.under.passage << " sign " << (c.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Diagram read_sgd_file(const std::string& path) { return parse_sgd(read_text_file(path)); }

}  // namespace lkgraph
