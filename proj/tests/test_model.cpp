#include <gtest/gtest.h>

#include "crosscap/error.hpp"
#include "support.hpp"

using namespace crosscap;
using testing_support::kSurfaces;

namespace {

int wrap(long l, int g) { return static_cast<int>(((l - 1) % g + g) % g) + 1; }

// Reflection data written out from the defining formulas, independently of
// the model's own construction.
std::vector<int> reflectionOracle(int k, const SurfaceParams& s) {
  const int g = s.g;
  const int r = s.r;
  std::vector<int> out(g);
  for (int l = 1; l <= g; ++l) {
    switch (k) {
      case 1: out[l - 1] = wrap(2L * (r + 3) - l, g); break;
      case 2: out[l - 1] = wrap(2L * (r + 3) - l + 1, g); break;
      case 3: out[l - 1] = l; break;
      case 4: out[l - 1] = l <= 2 * r ? 2 * r + 1 - l : l; break;
    }
  }
  if (k == 3) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {5, 8}, {6, 7}, {r + 5, r + 6}})
      std::swap(out[a - 1], out[b - 1]);
  }
  return out;
}

std::vector<int> punctureOracle(int k, int p) {
  std::vector<int> out(p);
  for (int i = 1; i <= p; ++i) {
    switch (k) {
      case 1: out[i - 1] = p >= 2 && i <= 2 ? 3 - i : i; break;
      case 2: out[i - 1] = i; break;
      case 3: out[i - 1] = p + 1 - i; break;
      case 4: out[i - 1] = i < p ? p - i : p; break;
    }
  }
  return out;
}

}  // namespace

TEST(Surface, ParameterWindow) {
  EXPECT_EQ(build(14, 1).r, 6);
  EXPECT_TRUE(build(14, 1).even());
  EXPECT_EQ(build(15, 2).r, 7);
  EXPECT_FALSE(build(15, 2).even());
  EXPECT_EQ(build(16, 3).rank(), 18);
  EXPECT_THROW(build(13, 1), Error);
  EXPECT_THROW(build(12, 1), Error);
  EXPECT_THROW(build(15, 0), Error);
  EXPECT_THROW(build(16, 1, Parity::Odd), Error);
  EXPECT_NO_THROW(build(17, 1, Parity::Odd));
}

TEST(Convention, ReflectionsMatchFormulas) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(model.reflection(k).crosscaps, reflectionOracle(k, model.params()))
          << "rho" << k << " g=" << g;
      EXPECT_EQ(model.reflection(k).punctures, punctureOracle(k, p)) << "rho" << k << " p=" << p;
      EXPECT_EQ(model.reflection(k).sign, -1);
    }
  }
}

TEST(Convention, RotationShiftsCrosscaps) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Symmetry t = model.rotation();
    for (int l = 1; l <= g; ++l) EXPECT_EQ(t.crosscaps[l - 1], wrap(l + 1, g));
    EXPECT_EQ(t.sign, 1);
  }
}

TEST(Convention, ReflectionsAreInvolutions) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    for (int k = 1; k <= 4; ++k) {
      const Symmetry s = compose(model.reflection(k), model.reflection(k));
      const ZMatrix m = model.symmetryMatrix(model.reflection(k));
      EXPECT_TRUE((m * m).isIdentity()) << "rho" << k;
      EXPECT_EQ(s.sign, 1);
    }
  }
}

TEST(Convention, SerializeRoundTripAndHash) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const std::string text = serialize(model.convention());
    const Convention back = parseConvention(text);
    EXPECT_EQ(back, model.convention());
    EXPECT_EQ(conventionHash(back), conventionHash(model.convention()));
    EXPECT_EQ(conventionHash(back).size(), 16u);
  }
  EXPECT_NE(conventionHash(defaultConvention(build(15, 1))),
            conventionHash(defaultConvention(build(15, 2))));
}

TEST(Convention, RejectsMalformedText) {
  EXPECT_THROW(parseConvention("g 15\n"), Error);
  EXPECT_THROW(parseConvention("nonsense"), Error);
  std::string text = serialize(defaultConvention(build(15, 2)));
  const auto pos = text.find("rho1");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos + 4, " 99");
  EXPECT_THROW(parseConvention(text), Error);
}

TEST(Model, ReduceEliminatesLastPuncture) {
  const Model model(build(15, 3));
  ZVector ext(18, 0);
  ext[15 + 2] = 1;  // nu_3
  const ZVector v = model.reduce(ext);
  ASSERT_EQ(v.size(), 17u);
  for (int i = 0; i < 15; ++i) EXPECT_EQ(v[i], -2);
  EXPECT_EQ(v[15], -1);
  EXPECT_EQ(v[16], -1);
}

TEST(Model, KnownIntersections) {
  const Model model(build(15, 2));
  EXPECT_EQ(model.intersection({Family::A, 1}, {Family::B, 1}), 1);
  EXPECT_EQ(model.intersection({Family::A, 1}, {Family::B, 2}), 0);
  EXPECT_EQ(model.intersection({Family::B, 1}, {Family::C, 1}), 1);
  EXPECT_FALSE(model.intersection({Family::D1, 1}, {Family::A, 1}).has_value());
  EXPECT_THROW(model.curve({Family::A, 99}), Error);
}

// Property: every two-sided class pairs to zero with itself, and its pairing
// reduces to the mod-2 form against the class.
TEST(ModelProperty, PairingIsIsotropicAndReducesToForm) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    for (const auto& sym : model.catalog()) {
      const CurveClass c = model.curve(sym);
      ASSERT_EQ(static_cast<int>(c.coefficients.size()), model.rank());
      if (c.oneSided) continue;
      EXPECT_EQ(dot(c.pairing, c.coefficients), 0) << toString(sym);
      EXPECT_EQ(mod2(c.pairing), mod2(c.coefficients) & rep.form().diagonal) << toString(sym);
    }
  }
}

// Property: where the intersection table has an entry, its parity equals the
// mod-2 form on the homology classes.
TEST(ModelProperty, IntersectionParityMatchesForm) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    const auto cat = model.catalog();
    int compared = 0;
    for (const auto& s1 : cat) {
      for (const auto& s2 : cat) {
        const auto n = model.intersection(s1, s2);
        if (!n) continue;
        const int q = rep.form()(mod2(model.curve(s1).coefficients), mod2(model.curve(s2).coefficients));
        EXPECT_EQ(*n % 2, q) << toString(s1) << " " << toString(s2);
        ++compared;
      }
    }
    EXPECT_GT(compared, 100);
  }
}
