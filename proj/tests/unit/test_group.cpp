#include <gtest/gtest.h>

#include "roth/error.hpp"
#include "roth/group.hpp"
#include "roth/named_groups.hpp"

using namespace roth;

namespace {

GroupAxiom axiom_of(const std::string& text) {
  try {
    load_cayley_table(text);
  } catch (const NotAGroupError& e) {
    return e.axiom();
  }
  ADD_FAILURE() << "expected NotAGroupError";
  return GroupAxiom::kClosure;
}

}  // namespace

TEST(CayleyTable, TrivialGroup) {
  const auto g = load_cayley_table("1\n0\n");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.mul(0, 0), 0u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(CayleyTable, CyclicTwo) {
  const auto g = load_cayley_table("# Z2\n2\n0 1\n1 0\n");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(1), 1u);
  EXPECT_EQ(g.element_order(1), 2u);
}

TEST(CayleyTable, IdempotentNonIdentityIsRejected) {
  EXPECT_EQ(axiom_of("3\n0 1 2\n1 1 1\n2 1 0\n"), GroupAxiom::kInverses);
}

TEST(CayleyTable, ReportsEachAxiom) {
  EXPECT_EQ(axiom_of("2\n0 1\n1 2\n"), GroupAxiom::kClosure);
  EXPECT_EQ(axiom_of("2\n1 0\n0 0\n"), GroupAxiom::kIdentity);
  // A Latin square with identity 0 that is not associative (order 5 loop).
  EXPECT_EQ(axiom_of("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"), GroupAxiom::kAssociativity);
}

TEST(CayleyTable, AssociativityWitnessIsReal) {
  const std::vector<std::vector<long>> t{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  const auto v = find_axiom_violation(t);
  ASSERT_TRUE(v);
  const auto [a, b, c] = v->witness;
  EXPECT_NE(t[t[a][b]][c], t[a][t[b][c]]);
}

TEST(CayleyTable, RelabelsIdentityToZero) {
  // Z3 written with identity 2.
  const auto g = load_cayley_table("3\n1 2 0\n2 0 1\n0 1 2\n");
  EXPECT_EQ(g.order(), 3u);
  for (Element a = 0; a < 3; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, 0), a);
  }
  EXPECT_FALSE(find_axiom_violation(g.table()));
}

TEST(CayleyTable, ParseErrorsCarryLineNumbers) {
  try {
    load_cayley_table("2\n0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(load_cayley_table(""), Error);
  EXPECT_THROW(load_cayley_table("2\n0 1\n"), Error);
  EXPECT_THROW(load_cayley_table("2\n0 1 1\n1 0\n"), Error);
}

TEST(CayleyTable, OverflowGuard) {
  Limits limits;
  limits.max_group_order = 2;
  try {
    load_cayley_table("3\n0 1 2\n1 2 0\n2 0 1\n", "z3", limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflowGuard);
  }
}

TEST(CayleyTable, WriteThenLoadRoundTrips) {
  const auto g = make_named_group(GroupSpec::dihedral(4));
  const auto back = load_cayley_table(write_cayley_table(g));
  EXPECT_EQ(back.table(), g.table());
}

TEST(FiniteGroup, PowAndOrders) {
  const auto g = make_named_group(GroupSpec::cyclic(12));
  EXPECT_EQ(g.pow(5, 3), 3u);
  EXPECT_EQ(g.pow(5, 0), 0u);
  EXPECT_EQ(g.element_order(4), 3u);
  EXPECT_EQ(g.element_order(0), 1u);
}

TEST(FiniteGroup, HandlesShareIdentity) {
  const auto a = make_named_group(GroupSpec::cyclic(3));
  const auto b = a;
  const auto c = make_named_group(GroupSpec::cyclic(3));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
}
