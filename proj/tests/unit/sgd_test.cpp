#include <gtest/gtest.h>

#include "generators.hpp"
#include "lkgraph/errors.hpp"
#include "lkgraph/linking.hpp"
#include "lkgraph/sgd.hpp"

namespace lkgraph {
namespace {

using testing::kHopfSgd;

TEST(Sgd, TwoIsolatedVertices) {
  const Diagram d = parse_sgd("sgd 1\nvertex a\nvertex b\n");
  EXPECT_EQ(d.vertices.size(), 2u);
  EXPECT_TRUE(d.edges.empty());
  EXPECT_EQ(components(d).size(), 2u);
}

TEST(Sgd, HopfDiagram) {
  const Diagram d = parse_sgd(kHopfSgd);
  const auto comps = components(d);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].edges, std::vector<std::string>{"e1"});
  EXPECT_EQ(comps[1].edges, std::vector<std::string>{"e2"});
  EXPECT_EQ(d.passage_count("e1"), 2u);
  EXPECT_TRUE(validate(d).empty());
  EXPECT_EQ(linking_number(d, cycle_basis(d, 0).cycles[0], cycle_basis(d, 1).cycles[0]), 1);
}

TEST(Sgd, CommentsAndBlankLines) {
  const Diagram d = parse_sgd("# leading comment\n\nsgd 1   # header\n  vertex a\t# x\n\n");
  EXPECT_EQ(d.vertices, std::set<std::string>{"a"});
}

TEST(Sgd, PassageGapIsRejected) {
  const char* text =
      "sgd 1\nvertex a\nvertex b\nedge e1 a a\nedge e2 b b\n"
      "crossing x1 over e1 0 under e2 2 sign +\n";
  try {
    parse_sgd(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("passage-index gap"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("e2"), std::string::npos);
  }
}

TEST(Sgd, SyntaxErrorsReportPosition) {
  try {
    parse_sgd("sgd 1\nvertex a\nedge e1 a\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 9u);
  }
  try {
    parse_sgd("sgd 1\nvertex a\nedge e1 a a\ncrossing x1 over e1 0 under e1 1 sign ?\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 39u);
  }
}

TEST(Sgd, ReferenceAndDuplicateErrors) {
  EXPECT_THROW(parse_sgd(""), ParseError);
  EXPECT_THROW(parse_sgd("sgd 2\n"), ParseError);
  EXPECT_THROW(parse_sgd("vertex a\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nvertex a\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nedge e1 a b\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nedge e1 a a\nvertex a\n"), ParseError);  // forward reference
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nedge e1 a a\nvertex b\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a-b\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nedge e1 a a\ncrossing x1 over e1 0 under e9 0 sign +\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nedge e1 a a\ncrossing x1 over e1 0 under e1 0 sign +\n"), ParseError);
  EXPECT_THROW(parse_sgd("sgd 1\nvertex a\nedge e1 a a\nedge e2 a a\n"
                         "crossing x1 over e1 0 under e2 0 sign +\ncrossing x2 over e1 0 under e2 1 sign +\n"),
               ParseError);
}

TEST(Sgd, EmptyDiagramSerializesToHeader) { EXPECT_EQ(serialize_sgd(Diagram{}), "sgd 1\n"); }

TEST(Sgd, SerializationIsSortedAndCanonical) {
  const Diagram a = parse_sgd(
      "sgd 1\nvertex z\nvertex a\nedge k a z\nedge b z z\n"
      "crossing y over b 0 under k 0 sign -\ncrossing c over k 1 under b 1 sign +\n");
  EXPECT_EQ(serialize_sgd(a),
            "sgd 1\nvertex a\nvertex z\nedge b z z\nedge k a z\n"
            "crossing c over k 1 under b 1 sign +\ncrossing y over b 0 under k 0 sign -\n");
}

TEST(SgdProperty, RoundTripOnRandomDiagrams) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Diagram d = testing::random_diagram(rng);
    ASSERT_TRUE(validate(d).empty());
    const std::string text = serialize_sgd(d);
    const Diagram back = parse_sgd(text);
    ASSERT_EQ(back, d) << text;
    ASSERT_EQ(serialize_sgd(back), text);
  }
}

TEST(Validate, SelfCrossingIsOneViolation) {
  Diagram d = parse_sgd(kHopfSgd);
  d.crossings.erase("x2");
  d.crossings.at("x1").under = {"e1", 0};
  const auto v = validate(d);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::SelfCrossing);
  EXPECT_EQ(v[0].entity, "x1");
}

TEST(Validate, ComponentCountCheck) {
  const Diagram d = parse_sgd("sgd 1\nvertex a\nvertex b\nvertex c\n");
  EXPECT_TRUE(validate(d).empty());
  const auto v = validate(d, ComponentRequirement::Two);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::ComponentCount);
  EXPECT_TRUE(validate(parse_sgd(kHopfSgd), ComponentRequirement::Two).empty());
}

// Breaking one invariant of a valid diagram reports exactly that violation class.
TEST(ValidateProperty, MutationsAreDetected) {
  testing::Rng rng(5);
  int mutated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Diagram d = testing::random_diagram(rng);
    if (d.crossings.empty()) continue;
    auto it = d.crossings.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(testing::uniform(rng, 0, d.crossings.size() - 1)));
    Crossing& c = it->second;
    ViolationKind expected{};
    switch (testing::uniform(rng, 0, 3)) {
      case 0:
        c.sign = 0;
        expected = ViolationKind::InvalidSign;
        break;
      case 1:
        d.crossings.emplace("zz", Crossing{"zz", {"missing_a", 0}, {"missing_b", 0}, 1});
        expected = ViolationKind::DanglingEdge;
        break;
      case 2: {
        // Move the strand past the end of its edge.
        c.under.passage = d.passage_count(c.under.edge) + 3;
        expected = ViolationKind::PassageGap;
        break;
      }
      default:
        d.edges.begin()->second.head = "missing_vertex";
        expected = ViolationKind::DanglingVertex;
        break;
    }
    const auto v = validate(d);
    ASSERT_FALSE(v.empty());
    for (const auto& violation : v) EXPECT_EQ(violation.kind, expected) << violation.message;
    ++mutated;
  }
  EXPECT_GT(mutated, 100);
}

TEST(Validate, UncheckedParseFeedsValidate) {
  const Diagram d = parse_sgd_unchecked(
      "sgd 1\nvertex a\nedge e1 a a\ncrossing x1 over e1 0 under e1 2 sign +\n");
  const auto v = validate(d);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::PassageGap);
  EXPECT_EQ(v[0].entity, "e1");
}

}  // namespace
}  // namespace lkgraph
