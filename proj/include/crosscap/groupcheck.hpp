#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "crosscap/f2.hpp"

namespace crosscap {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxGroupDim = 20;

/// Base and strong generating set of a subgroup of GL(n, 2), acting on the
/// nonzero vectors of F2^n.
class BSGS {
 public:
  struct Level {
    F2Vector point = 0;
    /// Strong generators fixing all earlier base points.
    std::vector<int> generators;
    std::vector<F2Vector> orbit;
    /// Position in `orbit` of each vector, or -1.
    std::vector<std::int32_t> position;
    /// Transversal: reps[k] maps `point` to orbit[k].
    std::vector<F2Matrix> reps;
    std::vector<F2Matrix> repInverses;
    /// Schreier tree: orbit[k] = strongGenerators[parentGen[k]](orbit[parent[k]]).
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> parentGen;
  };

  int dim() const { return dim_; }
  const std::vector<F2Matrix>& strongGenerators() const { return strong_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<F2Vector> base() const;
  BigInt order() const;

  /// Sifts `m`; on success returns indices of strong generators whose
  /// product (left to right) equals `m`. Throws Error(DimensionMismatch).
  std::optional<std::vector<int>> contains(const F2Matrix& m) const;

 private:
  friend BSGS schreierSims(const std::vector<F2Matrix>& gens, std::uint64_t seed);
  friend class SchreierSimsBuilder;

  int dim_ = 0;
  std::vector<F2Matrix> strong_;
  std::vector<Level> levels_;
};

/// Randomized Schreier-Sims followed by a deterministic verification pass,
/// so the chain is exact for every seed. Throws DimensionMismatch,
/// SingularMatrix, or TooLarge (n > kMaxGroupDim).
BSGS schreierSims(const std::vector<F2Matrix>& gens, std::uint64_t seed = 1);

struct SubgroupComparison {
  bool equal = false;
  BigInt orderA;
  BigInt orderB;
  std::vector<bool> aInB;
  std::vector<bool> bInA;
};

SubgroupComparison sameSubgroup(const std::vector<F2Matrix>& a, const std::vector<F2Matrix>& b,
                                std::uint64_t seed = 1);

}  // namespace crosscap
