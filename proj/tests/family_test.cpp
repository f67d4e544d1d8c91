#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "groupgraph/family.hpp"

using namespace groupgraph;

namespace {

GroupErrorKind build_error(const FamilySpec& spec, std::size_t cap = kDefaultOrderCap) {
  try {
    (void)build_family(spec, cap);
  } catch (const GroupError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected GroupError for " << label(spec);
  return GroupErrorKind::FileError;
}

GroupErrorKind parse_error(std::string_view text) {
  try {
    (void)parse_family_spec(text);
  } catch (const GroupError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected GroupError for " << text;
  return GroupErrorKind::FileError;
}

}  // namespace

TEST(Families, Orders) {
  EXPECT_EQ(build_family(FamilySpec::cyclic(7)).order(), 7u);
  EXPECT_EQ(build_family(FamilySpec::dihedral(5)).order(), 10u);
  EXPECT_EQ(build_family(FamilySpec::dicyclic(3)).order(), 12u);
  EXPECT_EQ(build_family(FamilySpec::symmetric(4)).order(), 24u);
  EXPECT_EQ(build_family(FamilySpec::elementary_abelian(3, 2)).order(), 9u);
  EXPECT_EQ(build_family(FamilySpec::product({FamilySpec::cyclic(3), FamilySpec::cyclic(5)})).order(),
            15u);
}

TEST(Families, QuaternionGroup) {
  auto q8 = build_family(FamilySpec::dicyclic(2));
  EXPECT_EQ(q8.exponent(), 4u);
  std::size_t involutions = 0;
  for (auto o : q8.element_orders()) involutions += o == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_FALSE(q8.is_abelian());
}

TEST(Families, DihedralOneAndTwoAreAbelian) {
  EXPECT_TRUE(build_family(FamilySpec::dihedral(1)).is_abelian());
  auto d2 = build_family(FamilySpec::dihedral(2));
  EXPECT_TRUE(d2.is_abelian());
  EXPECT_EQ(d2.exponent(), 2u);
}

TEST(Families, ProductOfCoprimeCyclicsIsCyclic) {
  auto g = build_family(FamilySpec::product({FamilySpec::cyclic(3), FamilySpec::cyclic(5)}));
  EXPECT_EQ(g.exponent(), 15u);
  EXPECT_EQ(label(FamilySpec::product({FamilySpec::cyclic(3), FamilySpec::cyclic(5)})),
            "Product(Cyclic(3),Cyclic(5))");
}

TEST(Families, InvalidParameters) {
  EXPECT_EQ(build_error(FamilySpec::cyclic(0)), GroupErrorKind::InvalidParameter);
  EXPECT_EQ(build_error(FamilySpec::dihedral(0)), GroupErrorKind::InvalidParameter);
  EXPECT_EQ(build_error(FamilySpec::elementary_abelian(4, 2)), GroupErrorKind::InvalidParameter);
  EXPECT_EQ(build_error(FamilySpec::elementary_abelian(2, 0)), GroupErrorKind::InvalidParameter);
}

TEST(Families, OrderCap) {
  EXPECT_EQ(build_error(FamilySpec::symmetric(6)), GroupErrorKind::OrderCapExceeded);
  EXPECT_EQ(build_error(FamilySpec::cyclic(65), 64), GroupErrorKind::OrderCapExceeded);
  EXPECT_EQ(build_family(FamilySpec::cyclic(64), 64).order(), 64u);
  EXPECT_EQ(build_family(FamilySpec::symmetric(5)).order(), 120u);
  // Predicted order overflows before any table is allocated.
  EXPECT_EQ(build_error(FamilySpec::elementary_abelian(2, 80)), GroupErrorKind::OrderCapExceeded);
}

TEST(FamilySpecText, ParseAndRoundTrip) {
  for (const char* s : {"cyclic:6", "dihedral:5", "dicyclic:2", "symmetric:4", "ea:2,3",
                        "product:cyclic:3*cyclic:5", "product:dihedral:3*ea:2,2*cyclic:2"}) {
    auto spec = parse_family_spec(s);
    EXPECT_EQ(to_spec_string(spec), s);
    EXPECT_EQ(label(parse_family_spec(to_spec_string(spec))), label(spec));
  }
  EXPECT_EQ(label(parse_family_spec("ea:2,3")), "ElementaryAbelian(2,3)");
}

TEST(FamilySpecText, Malformed) {
  for (const char* s : {"", "cyclic", "cyclic:", "cyclic:x", "cyclic:-3", "circle:4", "ea:2",
                        "product:", "cyclic:4extra"}) {
    EXPECT_EQ(parse_error(s), GroupErrorKind::ParseError) << s;
  }
}

TEST(CayleyText, ParsesWithComments) {
  auto t = parse_cayley_table("# Z2\n2\n0 1  # row e\n1 0\n");
  EXPECT_EQ(t, (CayleyTable{{0, 1}, {1, 0}}));
}

TEST(CayleyText, RejectsBadInput) {
  EXPECT_THROW((void)parse_cayley_table("2\n0 1\n1\n"), GroupError);
  EXPECT_THROW((void)parse_cayley_table("2\n0 1\n1 0\n0 1\n"), GroupError);
  EXPECT_THROW((void)parse_cayley_table("2\n0 1\n1 a\n"), GroupError);
  EXPECT_THROW((void)parse_cayley_table(""), GroupError);
}

TEST(CayleyText, FormatRoundTrip) {
  auto g = build_family(FamilySpec::dihedral(4));
  auto again = FiniteGroup::from_cayley_table(parse_cayley_table(format_cayley_table(g)), "x");
  EXPECT_EQ(again.table(), g.table());
}

TEST(CayleyText, FileFamily) {
  const std::string path = ::testing::TempDir() + "family_test_q8.txt";
  {
    std::ofstream out(path);
    out << format_cayley_table(build_family(FamilySpec::dicyclic(2)));
  }
  auto g = build_family(FamilySpec::from_file(path));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.center().size(), 2u);
  EXPECT_EQ(build_error(FamilySpec::from_file(path + ".missing")), GroupErrorKind::FileError);
}

TEST(OrderCap, Environment) {
  ::setenv("GROUPGRAPH_ORDER_CAP", "64", 1);
  EXPECT_EQ(order_cap_from_env(), 64u);
  ::unsetenv("GROUPGRAPH_ORDER_CAP");
  EXPECT_EQ(order_cap_from_env(), kDefaultOrderCap);
}
