#include <gtest/gtest.h>

#include "crosscap/error.hpp"
#include "crosscap/index_expr.hpp"
#include "support.hpp"

using namespace crosscap;
using testing_support::alphabet;
using testing_support::randomWord;

namespace {

ParseContext context(int g, int p) {
  ParseContext ctx;
  ctx.params = build(g, p);
  return ctx;
}

Letter twist(Family f, int i, int exp = 1) { return {Generator::twist({f, i}), exp}; }

}  // namespace

TEST(IndexExpr, ArithmeticAndBindings) {
  const Bindings vars{{"r", 7}, {"i", 2}};
  EXPECT_EQ(evalIndexExpr("r+5", vars), 12);
  EXPECT_EQ(evalIndexExpr("2*(r+3)-i", vars), 18);
  EXPECT_EQ(evalIndexExpr("(r-1)/2", vars), 3);
  EXPECT_EQ(evalIndexExpr("r%3", vars), 1);
  EXPECT_THROW(evalIndexExpr("q+1", vars), SyntaxError);
  EXPECT_THROW(evalIndexExpr("r+", vars), SyntaxError);
}

TEST(FreeReduction, CancelsNestedPairs) {
  const auto a = twist(Family::A, 1);
  const auto b = twist(Family::B, 1);
  EXPECT_TRUE(freelyReduce({a, b, b.inverse(), a.inverse()}).empty());
  EXPECT_EQ(freelyReduce({a, a, b, b.inverse()}), (std::vector<Letter>{a, a}));
}

TEST(Word, PowerInverseConjugate) {
  const Word a(Generator::twist({Family::A, 1}));
  const Word b(Generator::twist({Family::B, 1}));
  EXPECT_EQ(a.power(3).size(), 3u);
  EXPECT_EQ(a.power(-2), a.inverse() * a.inverse());
  EXPECT_TRUE(a.power(0).empty());
  EXPECT_EQ(conjugate(a, b), b * a * b.inverse());
  EXPECT_TRUE((invert(b * a) * b * a).empty());
}

TEST(Parser, BasicLettersAndComposition) {
  const auto ctx = context(15, 2);
  const Word w = parse("A1 B2^-1 * y u3", ctx);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w.letters()[0], twist(Family::A, 1));
  EXPECT_EQ(w.letters()[1], twist(Family::B, 2, -1));
  EXPECT_EQ(w.letters()[2].gen, Generator::slide(1));
  EXPECT_EQ(w.letters()[3].gen, Generator::transposition(3));
}

TEST(Parser, SymbolicSubscriptsUseSurfaceBindings) {
  const auto ctx = context(15, 2);  // r = 7
  const Word w = parse("Gamma5 B1 u{r+5} v{r+3,p}", ctx);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w.letters()[2].gen, Generator::transposition(12));
  EXPECT_EQ(w.letters()[3].gen, Generator::punctureSlide(10, 2));
}

TEST(Parser, PowersConjugationAndIdentity) {
  const auto ctx = context(15, 2);
  EXPECT_EQ(parse("A1^3", ctx), parse("A1 A1 A1", ctx));
  EXPECT_EQ(parse("A1^-2", ctx), parse("A1^-1 A1^-1", ctx));
  EXPECT_EQ(parse("T^{p}", ctx), parse("T T", ctx));
  EXPECT_EQ(parse("A1^(B1)", ctx), parse("B1 A1 B1^-1", ctx));
  EXPECT_TRUE(parse("1", ctx).empty());
  EXPECT_TRUE(parse("A1 A1^-1", ctx).empty());
}

TEST(Parser, CyclicFamiliesWrap) {
  const auto ctx = context(15, 1);
  EXPECT_EQ(parse("alpha16", ctx), parse("alpha1", ctx));
  EXPECT_EQ(parse("Gamma0", ctx), parse("Gamma15", ctx));
}

TEST(Parser, AbbreviationsExpandAtUseSite) {
  auto ctx = context(15, 2);
  ctx.abbreviations["G1"] = "Gamma5 B1 u{r+5}";
  ctx.abbreviations["G2"] = "G1^(T^2)";
  EXPECT_EQ(parse("G2", ctx), parse("T^2 Gamma5 B1 u{r+5} T^-2", ctx));
}

TEST(Parser, Errors) {
  const auto ctx = context(15, 2);
  EXPECT_THROW(parse("A1 (B1", ctx), SyntaxError);
  EXPECT_THROW(parse("Q3", ctx), SyntaxError);
  EXPECT_THROW(parse("A1^", ctx), SyntaxError);
  EXPECT_THROW(parse("A99", ctx), Error);
  EXPECT_THROW(parse("v{3,5}", ctx), Error);
}

TEST(Parser, SyntaxErrorCarriesOffset) {
  try {
    parse("A1 B1 )", context(15, 2));
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

// Property: printing then parsing gives back the same word.
TEST(WordProperty, PrintParseRoundTrip) {
  for (const auto& [g, p] : testing_support::kSurfaces) {
    const Model model(build(g, p));
    const auto gens = alphabet(model);
    std::mt19937_64 rng(g * 100 + p);
    ParseContext ctx;
    ctx.params = model.params();
    for (int n = 0; n < 200; ++n) {
      const Word w = randomWord(gens, rng, 12);
      EXPECT_EQ(parse(toString(w), ctx), w) << toString(w);
    }
  }
}

// Property: group axioms hold for free words.
TEST(WordProperty, InverseAndAssociativity) {
  const Model model(build(15, 2));
  const auto gens = alphabet(model);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    const Word a = randomWord(gens, rng, 8);
    const Word b = randomWord(gens, rng, 8);
    const Word c = randomWord(gens, rng, 8);
    EXPECT_TRUE((a * a.inverse()).empty());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(freelyReduce(a.letters()), a.letters());
  }
}
