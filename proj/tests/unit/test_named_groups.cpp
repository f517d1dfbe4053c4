#include <gtest/gtest.h>

#include <numeric>

#include "roth/error.hpp"
#include "roth/named_groups.hpp"

using namespace roth;

TEST(NamedGroups, SpecExamples) {
  const auto z6 = make_named_group(GroupSpec::cyclic(6));
  EXPECT_EQ(z6.order(), 6u);
  EXPECT_TRUE(z6.is_abelian());

  const auto d3 = make_named_group(GroupSpec::dihedral(3));
  EXPECT_EQ(d3.order(), 6u);
  EXPECT_FALSE(d3.is_abelian());

  const auto e8 = make_named_group(GroupSpec::elementary_abelian(2, 3));
  EXPECT_EQ(e8.order(), 8u);
  for (Element x = 1; x < 8; ++x) EXPECT_EQ(e8.element_order(x), 2u);
}

TEST(NamedGroups, EveryBuiltinSatisfiesTheAxioms) {
  for (const auto& spec : builtin_group_specs(64)) {
    const auto g = make_named_group(spec);
    EXPECT_EQ(g.order(), spec.order()) << spec.label();
    EXPECT_FALSE(find_axiom_violation(g.table())) << spec.label();
  }
}

TEST(NamedGroups, QuaternionNumbering) {
  const auto q = make_named_group(GroupSpec::quaternion8());
  // i*j = k, j*i = -k, i^2 = -1.
  EXPECT_EQ(q.mul(2, 4), 6u);
  EXPECT_EQ(q.mul(4, 2), 7u);
  EXPECT_EQ(q.mul(2, 2), 1u);
  EXPECT_EQ(q.element_order(1), 2u);
  for (Element x = 2; x < 8; ++x) EXPECT_EQ(q.element_order(x), 4u);
}

TEST(NamedGroups, DihedralNumbering) {
  const auto d = make_named_group(GroupSpec::dihedral(5));
  for (Element i = 5; i < 10; ++i) EXPECT_EQ(d.element_order(i), 2u);
  EXPECT_EQ(d.element_order(1), 5u);
}

TEST(NamedGroups, SymmetricGroups) {
  EXPECT_EQ(make_named_group(GroupSpec::symmetric(4)).order(), 24u);
  EXPECT_EQ(make_named_group(GroupSpec::symmetric(5)).order(), 120u);
  try {
    make_named_group(GroupSpec::symmetric(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedParameter);
  }
}

TEST(NamedGroups, ElementaryAbelianNeedsPrime) {
  EXPECT_THROW(make_named_group(parse_group_spec("cyclic:0")), Error);
  EXPECT_THROW(make_named_group(GroupSpec::elementary_abelian(4, 2)), Error);
}

TEST(NamedGroups, OverflowGuard) {
  try {
    make_named_group(GroupSpec::cyclic(2048));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflowGuard);
  }
}

TEST(NamedGroups, ProductOrdersMultiply) {
  const auto spec = GroupSpec::direct_product(GroupSpec::cyclic(3), GroupSpec::dihedral(3));
  const auto g = make_named_group(spec);
  EXPECT_EQ(g.order(), 18u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(GroupSpecParsing, ColonSyntax) {
  EXPECT_EQ(parse_group_spec("cyclic:12").order(), 12u);
  EXPECT_EQ(parse_group_spec("elemab:2:3").order(), 8u);
  EXPECT_EQ(parse_group_spec("dihedral:4").order(), 8u);
  EXPECT_EQ(parse_group_spec("q8").order(), 8u);
  EXPECT_EQ(parse_group_spec("product:cyclic:3:cyclic:3").order(), 9u);
  EXPECT_EQ(parse_group_spec("product:product:cyclic:2:cyclic:2:q8").order(), 32u);
}

TEST(GroupSpecParsing, LabelRoundTrips) {
  for (const auto& spec : builtin_group_specs(64)) EXPECT_EQ(parse_group_spec(spec.label()).label(), spec.label());
}

TEST(GroupSpecParsing, RejectsGarbage) {
  for (const char* bad : {"", "cyclic", "cyclic:x", "nope:3", "product:cyclic:3", "cyclic:3:4"})
    EXPECT_THROW(parse_group_spec(bad), Error) << bad;
}

TEST(BuiltinGroups, SortedAndFiltered) {
  const auto specs = builtin_group_specs(12);
  ASSERT_FALSE(specs.empty());
  for (std::size_t i = 1; i < specs.size(); ++i) EXPECT_LE(specs[i - 1].order(), specs[i].order());
  for (const auto& s : specs) EXPECT_LE(s.order(), 12u);
}
