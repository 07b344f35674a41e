#include <gtest/gtest.h>

#include "prodquot/coset_enumeration.hpp"
#include "prodquot/error.hpp"
#include "prodquot/presentation.hpp"
#include "test_support.hpp"

using namespace prodquot;
using testing_support::catalog;

namespace {

GroupId identify_text(const std::string& text) {
  return catalog().identify(group_from_permutations(coset_enumeration(parse_presentation(text))));
}

std::size_t order_of_text(const std::string& text, std::size_t cap = kDefaultCosetCap) {
  return coset_enumeration(parse_presentation(text), cap).degree;
}

}  // namespace

TEST(Parser, BasicPresentation) {
  const Presentation p = parse_presentation("gens: x, y;\nrel: x^2 = y^3 = (x*y)^7 = 1;");
  EXPECT_EQ(p.generators, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(p.relators.size(), 3u);
}

TEST(Parser, EquationBecomesRelator) {
  const Presentation p = parse_presentation("gens: x, y; rel: x*y*x^-1 = y^3;");
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(format_word(p, p.relators[0]), "x*y*x^-1*y^-3");
}

TEST(Parser, CommutatorConvention) {
  const Presentation p = parse_presentation("gens: a, b; rel: [a,b] = 1;");
  EXPECT_EQ(format_word(p, p.relators[0]), "a*b*a^-1*b^-1");
}

TEST(Parser, FreeReductionAndEmptyRelators) {
  const Presentation p = parse_presentation("gens: a; rel: a*a^-1 = 1; rel: a^3 = a^-2;");
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(format_word(p, p.relators[0]), "a^5");
}

TEST(Parser, CommentsAndWhitespace) {
  const Presentation p = parse_presentation("# header\ngens: a ; # gens\n rel : a ^ 4 = 1 ;\n");
  EXPECT_EQ(p.relators.size(), 1u);
}

TEST(Parser, RoundTripsThroughFormatter) {
  const Presentation p = parse_presentation("gens: x, y, z; rel: x^4 = y^2 = z^2 = 1; rel: x*y*x^-1 = y*z;");
  EXPECT_EQ(parse_presentation(format_presentation(p)), p);
}

TEST(Parser, UnknownGeneratorReportsPosition) {
  try {
    parse_presentation("gens: a, b;\nrel: a*c = 1;");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_generator);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 8);
  }
}

TEST(Parser, SyntaxErrors) {
  EXPECT_THROW(parse_presentation("gens: a; rel: a^ = 1;"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a; rel: (a = 1;"), ParseError);
  EXPECT_THROW(parse_presentation("rel: a = 1;"), ParseError);
  try {
    parse_presentation("gens: ;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_generator_list);
  }
}

TEST(CosetEnumeration, SmallOrders) {
  EXPECT_EQ(order_of_text("gens: x; rel: x^12 = 1;"), 12u);
  EXPECT_EQ(order_of_text("gens: x, y; rel: x^2 = y^3 = (x*y)^2 = 1;"), 6u);
  EXPECT_EQ(order_of_text("gens: x, y; rel: x^2 = y^3 = (x*y)^5 = 1;"), 60u);
  EXPECT_EQ(order_of_text("gens: x, y; rel: x^2 = y^3 = (x*y)^7 = [x,y]^4 = 1;"), 168u);
}

TEST(CosetEnumeration, TrivialGroup) {
  EXPECT_EQ(identify_text("gens: x; rel: x = 1;"), (GroupId{1, 1}));
  EXPECT_EQ(identify_text("gens: x, y; rel: x^2 = y^3 = x*y = 1;"), (GroupId{1, 1}));
}

TEST(CosetEnumeration, InfiniteGroupHitsCap) {
  try {
    order_of_text("gens: x, y; rel: [x,y] = 1;", 1000);
    FAIL() << "expected cap_exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
  }
}

TEST(CosetEnumeration, MetacyclicPresentations) {
  EXPECT_EQ(identify_text("gens: x, y; rel: x^2 = y^12 = 1; rel: x*y*x^-1 = y^5;"), (GroupId{24, 5}));
  EXPECT_EQ(identify_text("gens: x, y; rel: x^2 = y^8 = 1; rel: x*y*x^-1 = y^3;"), (GroupId{16, 8}));
  EXPECT_EQ(identify_text("gens: x, y; rel: x^2 = y^8 = 1; rel: x*y*x^-1 = y^5;"), (GroupId{16, 6}));
}
