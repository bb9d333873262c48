#include <gtest/gtest.h>

#include <set>

#include "crosscap/error.hpp"
#include "crosscap/permrep.hpp"
#include "support.hpp"

using namespace crosscap;
using testing_support::alphabet;
using testing_support::kSurfaces;
using testing_support::randomWord;
using testing_support::word;

namespace {

PuncturePermutation make(std::vector<int> images) { return PuncturePermutation{std::move(images)}; }

// Size of the generated group by closing under right multiplication.
std::size_t closureSize(int p, const std::vector<PuncturePermutation>& gens) {
  std::set<std::vector<int>> seen{PuncturePermutation::identity(p).images};
  std::vector<PuncturePermutation> frontier{PuncturePermutation::identity(p)};
  while (!frontier.empty()) {
    std::vector<PuncturePermutation> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        const auto y = x * s;
        if (seen.insert(y.images).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Permutation, CycleNotation) {
  EXPECT_EQ(toString(PuncturePermutation::identity(4)), "()");
  EXPECT_EQ(toString(make({2, 1, 3})), "(1 2)");
  EXPECT_EQ(toString(make({2, 3, 1, 5, 4})), "(1 2 3)(4 5)");
}

TEST(Permutation, ProductIsComposition) {
  const auto a = make({2, 1, 3});
  const auto b = make({1, 3, 2});
  EXPECT_EQ((a * b).images, (std::vector<int>{2, 3, 1}));
  EXPECT_TRUE((a * a.inverse()).isIdentity());
}

TEST(Permutation, GeneratorsOnPunctures) {
  const Model model(build(15, 3));
  EXPECT_EQ(toString(perm(model, word(model, "rho1"))), "(1 2)");
  EXPECT_EQ(toString(perm(model, word(model, "rho3"))), "(1 3)");
  EXPECT_EQ(toString(perm(model, word(model, "rho4"))), "(1 2)");
  EXPECT_EQ(toString(perm(model, word(model, "rho3 rho4"))), "(1 2 3)");
  EXPECT_TRUE(perm(model, word(model, "A1 B2 y u3 v{4,2}")).isIdentity());
  const Model one(build(14, 1));
  EXPECT_EQ(toString(perm(one, word(one, "rho1"))), "()");
}

TEST(Permutation, GeneratesSymAgainstClosure) {
  std::mt19937_64 rng(11);
  for (int p = 1; p <= 6; ++p) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<PuncturePermutation> gens;
      for (int k = trial % 3 + 1; k > 0; --k) {
        auto images = PuncturePermutation::identity(p).images;
        std::shuffle(images.begin(), images.end(), rng);
        gens.push_back(make(images));
      }
      EXPECT_EQ(generatesSym(p, gens), closureSize(p, gens) == factorial(p));
    }
  }
  EXPECT_THROW(generatesSym(11, {PuncturePermutation::identity(11)}), Error);
}

TEST(Permutation, SurjectionOntoSymAtGenus15) {
  for (int p = 1; p <= 6; ++p) {
    const Model model(build(15, p));
    const std::vector<PuncturePermutation> gens{perm(model, word(model, "rho3 rho4")),
                                                perm(model, word(model, "rho1"))};
    EXPECT_EQ(closureSize(p, gens), factorial(p)) << "p=" << p;
    EXPECT_TRUE(generatesSym(model, {word(model, "rho3 rho4"), word(model, "rho1")}));
  }
}

// Property: perm is a homomorphism from words.
TEST(PermProperty, Homomorphism) {
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const auto gens = alphabet(model);
    std::mt19937_64 rng(g + 17 * p);
    for (int n = 0; n < 300; ++n) {
      const Word a = randomWord(gens, rng, 8);
      const Word b = randomWord(gens, rng, 8);
      EXPECT_EQ(perm(model, a * b), perm(model, a) * perm(model, b));
      EXPECT_TRUE((perm(model, a) * perm(model, a.inverse())).isIdentity());
    }
  }
}
