#include <gtest/gtest.h>

#include "crosscap/error.hpp"
#include "support.hpp"

using namespace crosscap;
using testing_support::alphabet;
using testing_support::kSurfaces;
using testing_support::randomWord;
using testing_support::word;

namespace {

// Transvections written entry by entry.
F2Matrix f2TwistOracle(const CurveClass& c, int g, int n) {
  F2Matrix m = F2Matrix::identity(n);
  for (int j = 0; j < g; ++j) {
    if ((c.coefficients[j] & 1) == 0) continue;
    for (int i = 0; i < n; ++i)
      if (c.coefficients[i] & 1) m.set(i, j, !m.get(i, j));
  }
  return m;
}

ZMatrix zTwistOracle(const CurveClass& c, int exp, int n) {
  ZMatrix m = ZMatrix::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) += exp * c.pairing[j] * c.coefficients[i];
  return m;
}

bool squareOfDifferenceVanishes(const ZMatrix& m) {
  const int n = m.dim();
  ZMatrix d = m;
  for (int i = 0; i < n; ++i) d(i, i) -= 1;
  return (d * d) == ZMatrix(n);
}

}  // namespace

TEST(Form, DiagonalOnCrosscapsOnly) {
  const Representation rep(Model(build(15, 3)));
  EXPECT_EQ(rep.form().dim, 17);
  EXPECT_EQ(rep.form().diagonal, (1u << 15) - 1);
  EXPECT_TRUE(rep.form().preservedBy(F2Matrix::identity(17)));
}

TEST(Generators, TwistMatricesMatchOracle) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    for (const auto& sym : model.catalog()) {
      const CurveClass c = model.curve(sym);
      if (c.oneSided) {
        EXPECT_THROW(rep.twistMatrixF2(c), Error);
        continue;
      }
      EXPECT_EQ(rep.twistMatrixF2(c), f2TwistOracle(c, g, model.rank())) << toString(sym);
      EXPECT_EQ(rep.twistMatrixZ(c, 1), zTwistOracle(c, 1, model.rank())) << toString(sym);
      EXPECT_EQ(rep.twistMatrixZ(c, -1), zTwistOracle(c, -1, model.rank())) << toString(sym);
    }
  }
}

TEST(Generators, SlideAndTransposition) {
  const Model model(build(15, 2));
  const Representation rep(model);
  const ZMatrix y = rep.generatorZ(Generator::slide(3));
  EXPECT_EQ(y(2, 2), -1);
  EXPECT_EQ(y(2, 3), 2);
  EXPECT_EQ(y(3, 3), 1);
  EXPECT_TRUE(rep.generatorF2(Generator::slide(3)).isIdentity());

  const F2Matrix u = rep.generatorF2(Generator::transposition(4));
  EXPECT_EQ(u.column(3), 1u << 4);
  EXPECT_EQ(u.column(4), 1u << 3);
  EXPECT_EQ(rep.generatorZ(Generator::transposition(4)).mod2(), u);
}

TEST(Generators, PuncturesSlideModTwo) {
  const Model model(build(16, 3));
  const Representation rep(model);
  const int g = 16;
  // x -> x + Q(x, mu_i) nu_j, with nu_3 = nu_1 + nu_2 mod 2.
  const F2Matrix v1 = rep.generatorF2(Generator::punctureSlide(5, 1));
  EXPECT_EQ(v1.column(4), (1u << 4) | (1u << g));
  const F2Matrix v3 = rep.generatorF2(Generator::punctureSlide(5, 3));
  EXPECT_EQ(v3.column(4), (1u << 4) | (1u << g) | (1u << (g + 1)));
  EXPECT_EQ(v3.column(0), 1u);
}

TEST(Generators, InversesAgree) {
  const Model model(build(15, 2));
  const Representation rep(model);
  for (const auto& gen : alphabet(model)) {
    EXPECT_TRUE((rep.generatorF2(gen, 1) * rep.generatorF2(gen, -1)).isIdentity()) << toString(gen);
    EXPECT_TRUE((rep.generatorZ(gen, 1) * rep.generatorZ(gen, -1)).isIdentity()) << toString(gen);
  }
}

TEST(Check, SignSearchAndExplicitPlans) {
  const Model model(build(15, 2));
  const Representation rep(model);
  const auto res = rep.checkZ(word(model, "y"), word(model, "A1 u1"));
  EXPECT_EQ(res.verdict, Verdict::Pass);
  EXPECT_EQ(res.signPlan.size(), 1u);
  const auto wrong = rep.checkZ(word(model, "y"), word(model, "A1 u1"), std::vector<int>{-res.signPlan[0]});
  EXPECT_EQ(wrong.verdict, Verdict::Fail);
  EXPECT_THROW(rep.checkZ(word(model, "y"), word(model, "A1 u1"), std::vector<int>{1, 1}), Error);
  EXPECT_EQ(rep.checkF2(word(model, "A1"), word(model, "B1")).verdict, Verdict::Fail);
  EXPECT_EQ(rep.checkF2(word(model, "rho3^2"), word(model, "1")).verdict, Verdict::Pass);
}

TEST(Check, DerivedClassFollowsWord) {
  const Model model(build(15, 2));
  const Representation rep(model);
  const CurveClass c = derivedCurveClass(rep, word(model, "T"), {Family::A, 1});
  EXPECT_EQ(mod2(c.coefficients), mod2(model.curve({Family::B, 1}).coefficients));
}

// Properties over 1000 random words per surface: evaluation is a
// homomorphism, the Z image reduces to the separately computed F2 image, the
// F2 image preserves the form, and twist matrices are unipotent.
TEST(HomProperty, RandomWords) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    const auto gens = alphabet(model);
    std::mt19937_64 rng(1000 * g + p);
    int overflow = 0;
    for (int n = 0; n < 1000; ++n) {
      const Word a = randomWord(gens, rng, 5);
      const Word b = randomWord(gens, rng, 5);
      const F2Matrix fa = rep.evalF2(a);
      EXPECT_EQ(rep.evalF2(a * b), fa * rep.evalF2(b));
      EXPECT_TRUE(rep.form().preservedBy(fa));
      try {
        const ZMatrix za = rep.evalZ(a);
        EXPECT_EQ(rep.evalZ(a * b), za * rep.evalZ(b)) << toString(a) << " | " << toString(b);
        EXPECT_EQ(za.mod2(), fa) << toString(a);
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::Overflow);
        ++overflow;
      }
    }
    EXPECT_EQ(overflow, 0);
    for (const auto& gen : gens) {
      if (gen.kind != GenKind::Twist) continue;
      EXPECT_TRUE(squareOfDifferenceVanishes(rep.generatorZ(gen))) << toString(gen);
    }
  }
}
