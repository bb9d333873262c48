#pragma once

#include <string>
#include <vector>

#include "crosscap/model.hpp"
#include "crosscap/words.hpp"

namespace crosscap {

/// A bijection of the punctures {1..p}; puncture k goes to images[k-1].
struct PuncturePermutation {
  std::vector<int> images;

  static PuncturePermutation identity(int p);
  int degree() const { return static_cast<int>(images.size()); }
  bool isIdentity() const;
  PuncturePermutation inverse() const;
  /// (a * b)(k) = a(b(k)).
  friend PuncturePermutation operator*(const PuncturePermutation& a, const PuncturePermutation& b);
  friend bool operator==(const PuncturePermutation&, const PuncturePermutation&) = default;
};

/// Cycle notation, e.g. "(1 2)(3 4)"; "()" for the identity.
std::string toString(const PuncturePermutation& perm);

/// Twists, crosscap slides, crosscap transpositions and puncture slides fix
/// every puncture; the reflections act through the convention.
PuncturePermutation generatorPerm(const Model& model, const Generator& gen, int exp = 1);

PuncturePermutation perm(const Model& model, const Word& w);

/// Whether the permutations generate the full symmetric group, by closure.
/// Throws Error(TooLarge) for degree above kMaxClosureDegree.
bool generatesSym(int p, const std::vector<PuncturePermutation>& gens);
bool generatesSym(const Model& model, const std::vector<Word>& words);

inline constexpr int kMaxClosureDegree = 10;

}  // namespace crosscap
