#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/f2.hpp"
#include "crosscap/model.hpp"
#include "crosscap/verdict.hpp"
#include "crosscap/words.hpp"
#include "crosscap/zmatrix.hpp"

namespace crosscap {

enum class Ring { Z, F2 };

/// Mod-2 intersection form on the basis mu_1..mu_g, nu_1..nu_{p-1}: the
/// identity on the mu block and zero on the nu block.
struct IntersectionForm {
  int dim = 0;
  F2Vector diagonal = 0;

  int operator()(F2Vector v, F2Vector w) const { return formValue(v, w, diagonal); }
  /// M^T Q M == Q.
  bool preservedBy(const F2Matrix& m) const;
};

/// Result of comparing two words in one representation.
struct IdentityCheck {
  Verdict verdict = Verdict::Undecided;
  /// Signs applied to the twist letters of the right-hand side (Z only).
  std::vector<int> signPlan;
  std::string message;
};

/// Homology representations of Mod(N_{g,p}) over Z and over F2. The F2
/// matrices are computed from their own formulas (transvections for the
/// intersection form), not by reducing the Z matrices, so the two layers
/// check each other.
class Representation {
 public:
  explicit Representation(const Model& model);

  const Model& model() const { return model_; }
  int dim() const { return model_.rank(); }
  const IntersectionForm& form() const { return form_; }

  /// x -> x + exp * <x, c> c. Throws Error(OneSidedCurve).
  ZMatrix twistMatrixZ(const CurveClass& c, int exp = 1) const;
  /// x -> x + Q(x, c) c. Throws Error(OneSidedCurve).
  F2Matrix twistMatrixF2(const CurveClass& c) const;

  /// Matrices of a generator and of its inverse. T is evaluated as rho2 rho1.
  ZMatrix generatorZ(const Generator& gen, int exp = 1) const;
  F2Matrix generatorF2(const Generator& gen, int exp = 1) const;

  /// Product in functional order: the rightmost letter acts first.
  ZMatrix evalZ(const Word& w) const;
  F2Matrix evalF2(const Word& w) const;

  IdentityCheck checkF2(const Word& lhs, const Word& rhs) const;
  /// With `plan` unset, searches sign plans over the twist letters of `rhs`
  /// (up to kMaxSignSearch letters) and reports the first that works.
  IdentityCheck checkZ(const Word& lhs, const Word& rhs,
                       const std::optional<std::vector<int>>& plan = std::nullopt) const;

  static constexpr int kMaxSignSearch = 12;

 private:
  struct Cached {
    ZMatrix z, zInverse;
    F2Matrix f2, f2Inverse;
  };
  Cached compute(const Generator& gen) const;
  const Cached& lookup(const Generator& gen, Cached& scratch) const;

  Model model_;
  IntersectionForm form_;
  // Every generator of the alphabet, filled at construction.
  std::map<Generator, Cached> table_;
};

/// Class of the image of `base` under `w`, with the co-orientation carried
/// along: coefficients M c and pairing <., c> o M^-1.
CurveClass derivedCurveClass(const Representation& rep, const Word& w, const CurveSymbol& base);

/// Applies a sign plan to the twist letters of `w` in order.
Word applySignPlan(const Word& w, const std::vector<int>& plan);

}  // namespace crosscap
