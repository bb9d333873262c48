#include "crosscap/permrep.hpp"

#include <deque>

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

// Lehmer-code rank of a permutation of {1..n}.
std::size_t rank(const std::vector<int>& images) {
  const std::size_t n = images.size();
  std::size_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (images[j] < images[i]) ++smaller;
    code = code * (n - i) + smaller;
  }
  return code;
}

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::size_t>(i);
  return out;
}

}  // namespace

PuncturePermutation PuncturePermutation::identity(int p) {
  PuncturePermutation out;
  for (int k = 1; k <= p; ++k) out.images.push_back(k);
  return out;
}

bool PuncturePermutation::isIdentity() const { return *this == identity(degree()); }

PuncturePermutation PuncturePermutation::inverse() const {
  PuncturePermutation out;
  out.images.resize(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) out.images[images[k] - 1] = static_cast<int>(k) + 1;
  return out;
}

PuncturePermutation operator*(const PuncturePermutation& a, const PuncturePermutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DimensionMismatch, "permutation degrees differ");
  PuncturePermutation out;
  out.images.resize(b.images.size());
  for (std::size_t k = 0; k < b.images.size(); ++k) out.images[k] = a.images[b.images[k] - 1];
  return out;
}

std::string toString(const PuncturePermutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.images.size() + 1, false);
  for (int start = 1; start <= perm.degree(); ++start) {
    if (seen[start] || perm.images[start - 1] == start) continue;
    out += '(';
    for (int k = start; !seen[k]; k = perm.images[k - 1]) {
      seen[k] = true;
      if (k != start) out += ' ';
      out += std::to_string(k);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PuncturePermutation generatorPerm(const Model& model, const Generator& genIn, int exp) {
  const Generator gen = validate(model.params(), genIn);
  PuncturePermutation out;
  switch (gen.kind) {
    case GenKind::Reflection: out.images = model.reflection(gen.i).punctures; break;
    case GenKind::Rotation: out.images = model.rotation().punctures; break;
    default: return PuncturePermutation::identity(model.params().p);
  }
  return exp > 0 ? out : out.inverse();
}

PuncturePermutation perm(const Model& model, const Word& w) {
  PuncturePermutation out = PuncturePermutation::identity(model.params().p);
  for (const Letter& l : w.letters()) out = out * generatorPerm(model, l.gen, l.exp);
  return out;
}

bool generatesSym(int p, const std::vector<PuncturePermutation>& gens) {
  if (p > kMaxClosureDegree)
    throw Error(ErrorKind::TooLarge, "closure over Sym_" + std::to_string(p) + " is not attempted");
  const std::size_t total = factorial(p);
  std::vector<bool> seen(total, false);
  std::deque<PuncturePermutation> queue{PuncturePermutation::identity(p)};
  seen[rank(queue.front().images)] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const PuncturePermutation cur = queue.front();
    queue.pop_front();
    for (const auto& gen : gens) {
      PuncturePermutation next = gen * cur;
      const std::size_t code = rank(next.images);
      if (seen[code]) continue;
      seen[code] = true;
      ++count;
      queue.push_back(std::move(next));
    }
  }
  return count == total;
}

bool generatesSym(const Model& model, const std::vector<Word>& words) {
  std::vector<PuncturePermutation> gens;
  for (const auto& w : words) gens.push_back(perm(model, w));
  return generatesSym(model.params().p, gens);
}

}  // namespace crosscap
