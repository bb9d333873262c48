#include "crosscap/groupcheck.hpp"

#include <random>

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

constexpr int kProductReplacementSlots = 10;
constexpr int kWarmupSteps = 50;
constexpr int kQuietSifts = 30;

F2Vector firstMovedBasisVector(const F2Matrix& m) {
  for (int j = 0; j < m.dim(); ++j)
    if (m.column(j) != (F2Vector{1} << j)) return F2Vector{1} << j;
  return 0;
}

}  // namespace

class SchreierSimsBuilder {
 public:
  SchreierSimsBuilder(int n, std::uint64_t seed) : rng_(seed) { chain_.dim_ = n; }

  void addGenerator(const F2Matrix& m) { absorb(siftFrom(m, 0)); }

  void randomPhase(const std::vector<F2Matrix>& gens) {
    if (gens.empty()) return;
    std::vector<F2Matrix> slots;
    while (static_cast<int>(slots.size()) < kProductReplacementSlots)
      for (const auto& g : gens) slots.push_back(g);
    F2Matrix acc = F2Matrix::identity(chain_.dim_);
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    auto step = [&] {
      const std::size_t i = pick(rng_);
      std::size_t j = pick(rng_);
      while (j == i) j = pick(rng_);
      slots[i] = (rng_() & 1) ? slots[i] * slots[j] : slots[j] * slots[i];
      acc = acc * slots[i];
      return acc;
    };
    for (int k = 0; k < kWarmupSteps; ++k) step();
    int quiet = 0;
    while (quiet < kQuietSifts) {
      if (absorb(siftFrom(step(), 0))) quiet = 0;
      else ++quiet;
    }
  }

  // Sifts every Schreier generator of every level, bottom up; any residue is
  // absorbed and the affected levels are checked again.
  void verify() {
    int i = static_cast<int>(chain_.levels_.size()) - 1;
    while (i >= 0) {
      const int changed = verifyLevel(i);
      if (changed >= 0) i = changed;
      else --i;
    }
  }

  BSGS take() { return std::move(chain_); }

 private:
  struct Residue {
    F2Matrix m;
    int level;
  };

  Residue siftFrom(F2Matrix g, int start) const {
    for (int i = start; i < static_cast<int>(chain_.levels_.size()); ++i) {
      const auto& level = chain_.levels_[i];
      const std::int32_t pos = level.position[g.apply(level.point)];
      if (pos < 0) return {g, i};
      g = level.repInverses[pos] * g;
    }
    return {g, static_cast<int>(chain_.levels_.size())};
  }

  // Returns whether the chain grew.
  bool absorb(const Residue& res) {
    const int depth = static_cast<int>(chain_.levels_.size());
    if (res.level == depth) {
      if (res.m.isIdentity()) return false;
      BSGS::Level level;
      level.point = firstMovedBasisVector(res.m);
      level.position.assign(std::size_t{1} << chain_.dim_, -1);
      level.position[level.point] = 0;
      level.orbit.push_back(level.point);
      level.reps.push_back(F2Matrix::identity(chain_.dim_));
      level.repInverses.push_back(F2Matrix::identity(chain_.dim_));
      level.parent.push_back(-1);
      level.parentGen.push_back(-1);
      chain_.levels_.push_back(std::move(level));
    }
    addStrong(res.m, res.level);
    lastChanged_ = res.level;
    return true;
  }

  void addStrong(const F2Matrix& s, int upto) {
    const int idx = static_cast<int>(chain_.strong_.size());
    chain_.strong_.push_back(s);
    strongInverses_.push_back(s.inverse());
    for (int j = 0; j <= upto; ++j) {
      chain_.levels_[j].generators.push_back(idx);
      extendOrbit(chain_.levels_[j]);
    }
  }

  void extendOrbit(BSGS::Level& level) {
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (int gi : level.generators) {
        const F2Matrix& s = chain_.strong_[gi];
        const F2Vector image = s.apply(level.orbit[k]);
        if (level.position[image] >= 0) continue;
        level.position[image] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(image);
        level.reps.push_back(s * level.reps[k]);
        level.repInverses.push_back(level.repInverses[k] * strongInverses_[gi]);
        level.parent.push_back(static_cast<std::int32_t>(k));
        level.parentGen.push_back(gi);
      }
    }
  }

  // Returns the deepest level that changed, or -1 if level i checked clean.
  int verifyLevel(int i) {
    for (std::size_t k = 0; k < chain_.levels_[i].orbit.size(); ++k) {
      const std::vector<int> gens = chain_.levels_[i].generators;
      for (int gi : gens) {
        const auto& level = chain_.levels_[i];
        const F2Matrix& s = chain_.strong_[gi];
        const std::int32_t to = level.position[s.apply(level.orbit[k])];
        const F2Matrix schreier = level.repInverses[to] * s * level.reps[k];
        if (absorb(siftFrom(schreier, i + 1))) return lastChanged_;
      }
    }
    return -1;
  }

  BSGS chain_;
  std::vector<F2Matrix> strongInverses_;
  std::mt19937_64 rng_;
  int lastChanged_ = -1;
};

std::vector<F2Vector> BSGS::base() const {
  std::vector<F2Vector> out;
  for (const auto& level : levels_) out.push_back(level.point);
  return out;
}

BigInt BSGS::order() const {
  BigInt out = 1;
  for (const auto& level : levels_) out *= level.orbit.size();
  return out;
}

std::optional<std::vector<int>> BSGS::contains(const F2Matrix& m) const {
  if (m.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix dimension differs from the group");
  F2Matrix g = m;
  std::vector<int> witness;
  for (const auto& level : levels_) {
    const std::int32_t pos = level.position[g.apply(level.point)];
    if (pos < 0) return std::nullopt;
    for (std::int32_t k = pos; level.parent[k] >= 0; k = level.parent[k])
      witness.push_back(level.parentGen[k]);
    g = level.repInverses[pos] * g;
  }
  if (!g.isIdentity()) return std::nullopt;
  return witness;
}

BSGS schreierSims(const std::vector<F2Matrix>& gens, std::uint64_t seed) {
  if (gens.empty()) throw Error(ErrorKind::DimensionMismatch, "no generators given");
  const int n = gens.front().dim();
  if (n > kMaxGroupDim)
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxGroupDim));
  std::vector<F2Matrix> nontrivial;
  for (const auto& g : gens) {
    if (g.dim() != n) throw Error(ErrorKind::DimensionMismatch, "generators differ in dimension");
    if (!g.isInvertible()) throw Error(ErrorKind::SingularMatrix, "generator is not invertible");
    if (!g.isIdentity()) nontrivial.push_back(g);
  }
  SchreierSimsBuilder builder(n, seed);
  for (const auto& g : nontrivial) builder.addGenerator(g);
  builder.randomPhase(nontrivial);
  builder.verify();
  return builder.take();
}

SubgroupComparison sameSubgroup(const std::vector<F2Matrix>& a, const std::vector<F2Matrix>& b,
                                std::uint64_t seed) {
  const BSGS chainA = schreierSims(a, seed);
  const BSGS chainB = schreierSims(b, seed);
  SubgroupComparison out;
  out.orderA = chainA.order();
  out.orderB = chainB.order();
  for (const auto& m : a) out.aInB.push_back(chainB.contains(m).has_value());
  for (const auto& m : b) out.bInA.push_back(chainA.contains(m).has_value());
  out.equal = out.orderA == out.orderB;
  for (bool in : out.aInB) out.equal = out.equal && in;
  for (bool in : out.bInA) out.equal = out.equal && in;
  return out;
}

}  // namespace crosscap
