#include <gtest/gtest.h>

#include "generators.hpp"
#include "lkgraph/errors.hpp"
#include "lkgraph/linking.hpp"
#include "lkgraph/moves.hpp"
#include "lkgraph/sgd.hpp"

namespace lkgraph {
namespace {

using testing::kHopfSgd;
using testing::kSplitSgd;

TEST(LinkingNumber, HopfOverAndUnder) {
  // x1: e1 over e2 (+); x2: e2 over e1 (+). One crossing each way.
  const Diagram d = parse_sgd(kHopfSgd);
  const Cycle z{0, {{"e1", 1}}};
  const Cycle w{1, {{"e2", 1}}};
  EXPECT_EQ(linking_number(d, z, w), 1);
  EXPECT_EQ(linking_number_under(d, z, w), 1);
  EXPECT_EQ(linking_number(d, -z, w), -1);
  EXPECT_EQ(linking_number(d, Cycle{0, {}}, w), 0);
  EXPECT_EQ(linking_number_under(d, Cycle{0, {}}, w), 0);
}

TEST(LinkingNumber, SingleCrossingIsUnbalanced) {
  const Diagram d = parse_sgd(
      "sgd 1\nvertex p\nvertex q\nedge e1 p p\nedge e2 q q\ncrossing x1 over e1 0 under e2 0 sign +\n");
  const Cycle z{0, {{"e1", 1}}};
  const Cycle w{1, {{"e2", 1}}};
  EXPECT_EQ(linking_number(d, z, w), 1);
  EXPECT_EQ(linking_number_under(d, z, w), 0);
  EXPECT_FALSE(over_under_consistent(d));
}

TEST(LinkingNumber, Errors) {
  const Diagram d = parse_sgd(kHopfSgd);
  EXPECT_THROW(linking_number(d, Cycle{0, {{"e1", 1}}}, Cycle{0, {{"e1", 1}}}), DomainError);
  EXPECT_THROW(linking_number(d, Cycle{0, {{"e2", 1}}}, Cycle{1, {{"e2", 1}}}), DomainError);
  EXPECT_THROW(linking_number(d, Cycle{0, {{"nope", 1}}}, Cycle{1, {{"e2", 1}}}), DomainError);
}

TEST(LinkingMatrix, Hopf) {
  const auto lm = linking_matrix(parse_sgd(kHopfSgd));
  EXPECT_EQ(lm.entries, IntMatrix{{1}});
  EXPECT_EQ(lk_invariant(parse_sgd(kHopfSgd)).to_string(), "1");
}

TEST(LinkingMatrix, SplitIsZero) {
  const Diagram d = parse_sgd(kSplitSgd);
  EXPECT_EQ(linking_matrix(d).entries, IntMatrix{{0}});
  EXPECT_TRUE(lk_invariant(d).is_zero());
}

TEST(LinkingMatrix, CanonicalOneSix) {
  const Diagram d = canonical_diagram(2, 2, {1, 6});
  EXPECT_EQ(linking_matrix(d).entries, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_TRUE(over_under_consistent(d));
}

TEST(LinkingMatrix, TreeComponentGivesEmptyDimension) {
  const Diagram d = parse_sgd("sgd 1\nvertex p\nvertex q\nvertex r\nedge e1 p p\nedge t q r\n");
  const auto lm = linking_matrix(d);
  EXPECT_EQ(lm.rows(), 1u);
  EXPECT_EQ(lm.cols(), 0u);
  EXPECT_TRUE(lk_invariant(d).is_zero());
}

TEST(LinkingMatrix, ComponentCount) {
  EXPECT_THROW(linking_matrix(parse_sgd("sgd 1\nvertex a\n")), DomainError);
  EXPECT_THROW(linking_matrix(parse_sgd("sgd 1\nvertex a\nvertex b\nvertex c\n")), DomainError);
}

TEST(LinkingProperty, EntriesMatchPairwiseLinkingNumbers) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Diagram d = testing::random_two_component_diagram(rng);
    const auto lm = linking_matrix(d);
    const auto under = linking_matrix_under(d);
    for (std::size_t i = 0; i < lm.rows(); ++i)
      for (std::size_t j = 0; j < lm.cols(); ++j) {
        ASSERT_EQ(lm.entries(i, j), linking_number(d, lm.basis1.cycles[i], lm.basis2.cycles[j]));
        ASSERT_EQ(under(i, j), linking_number_under(d, lm.basis1.cycles[i], lm.basis2.cycles[j]));
      }
  }
}

TEST(LinkingProperty, Bilinearity) {
  testing::Rng rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const Diagram d = testing::random_two_component_diagram(rng);
    const auto b1 = cycle_basis(d, 0);
    const auto b2 = cycle_basis(d, 1);
    if (b1.cycles.empty() || b2.cycles.empty()) continue;
    auto any = [&](const std::vector<Cycle>& cs) { return cs[testing::uniform(rng, 0, cs.size() - 1)]; };
    const Cycle z = any(b1.cycles);
    const Cycle z2 = 3 * any(b1.cycles);
    const Cycle w = any(b2.cycles);
    const Cycle w2 = -any(b2.cycles);
    EXPECT_EQ(linking_number(d, z + z2, w), linking_number(d, z, w) + linking_number(d, z2, w));
    EXPECT_EQ(linking_number(d, z, w + w2), linking_number(d, z, w) + linking_number(d, z, w2));
    EXPECT_EQ(linking_number_under(d, z + z2, w + w2),
              linking_number_under(d, z, w) + linking_number_under(d, z, w2) + linking_number_under(d, z2, w) +
                  linking_number_under(d, z2, w2));
  }
}

// Any spanning trees give the same elementary divisors.
TEST(LinkingProperty, DivisorsIgnoreTreeChoice) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Diagram d = testing::random_two_component_diagram(rng);
    const auto reference = lk_invariant(d);
    const auto b1 = cycle_basis(d, 0, testing::random_spanning_tree(d, 0, rng));
    const auto b2 = cycle_basis(d, 1, testing::random_spanning_tree(d, 1, rng));
    IntMatrix m(b1.cycles.size(), b2.cycles.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = linking_number(d, b1.cycles[i], b2.cycles[j]);
    EXPECT_EQ(lk_invariant(m), reference);
    const auto a = random_unimodular(m.rows(), rng(), 10);
    const auto b = random_unimodular(m.cols(), rng(), 10);
    EXPECT_EQ(lk_invariant(a * m * b), reference);
  }
}

}  // namespace
}  // namespace lkgraph
