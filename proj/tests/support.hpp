#pragma once

#include <random>
#include <utility>
#include <vector>

#include "crosscap/error.hpp"
#include "crosscap/homrep.hpp"
#include "crosscap/model.hpp"
#include "crosscap/words.hpp"

namespace testing_support {

using namespace crosscap;

inline const std::vector<std::pair<int, int>> kSurfaces{{14, 1}, {14, 2}, {15, 1},
                                                        {15, 2}, {16, 3}, {17, 2}};

/// Every generator the representation accepts on this surface.
inline std::vector<Generator> alphabet(const Model& model) {
  const auto& params = model.params();
  const Representation rep(model);
  std::vector<Generator> candidates;
  for (const auto& c : model.catalog())
    if (c.sidedness() == Sidedness::TwoSided) candidates.push_back(Generator::twist(c));
  for (int i = 1; i < params.g; ++i) {
    candidates.push_back(Generator::slide(i));
    candidates.push_back(Generator::transposition(i));
  }
  for (int i = 1; i <= params.g; ++i)
    for (int j = 1; j <= params.p; ++j) candidates.push_back(Generator::punctureSlide(i, j));
  for (int k = 1; k <= 4; ++k) candidates.push_back(Generator::reflection(k));
  candidates.push_back(Generator::rotation());

  std::vector<Generator> out;
  for (const auto& gen : candidates) {
    try {
      rep.generatorF2(validate(params, gen));
      out.push_back(validate(params, gen));
    } catch (const Error&) {
    }
  }
  return out;
}

inline Word randomWord(const std::vector<Generator>& gens, std::mt19937_64& rng, int maxLength) {
  std::uniform_int_distribution<int> length(0, maxLength);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution invert(0.5);
  std::vector<Letter> letters;
  for (int n = length(rng); n > 0; --n) letters.push_back({gens[pick(rng)], invert(rng) ? -1 : 1});
  return Word(std::move(letters));
}

inline Word word(const Model& model, std::string_view text) {
  ParseContext ctx;
  ctx.params = model.params();
  return parse(text, ctx);
}

}  // namespace testing_support
