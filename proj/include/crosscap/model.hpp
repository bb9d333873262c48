#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/curve.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/zmatrix.hpp"

namespace crosscap {

/// Homology data of a catalog curve over the basis mu_1..mu_g, nu_1..nu_{p-1}.
///
/// For a two-sided curve `pairing` is the functional x -> <x, c> fixed by the
/// chosen co-orientation; it vanishes on the class itself and reduces mod 2
/// to the intersection form against the class. The Dehn twist acts as
/// x -> x + <x, c> c.
struct CurveClass {
  ZVector coefficients;
  ZVector pairing;
  bool oneSided = false;
  /// Crosscaps the curve passes through, when the curve is known by its
  /// support (sorted, 1-based). Unset for curves defined only by transport.
  std::optional<std::vector<int>> support;
  /// +1 for the reference co-orientation, -1 when the curve was obtained by
  /// transporting the reversed co-orientation of its source.
  int orientationTag = 1;
};

/// A reflection-type symmetry of the model: crosscap i goes to crosscap
/// `crosscaps[i-1]` and puncture k to `punctures[k-1]`; the induced map on
/// homology is mu_i -> sign * mu_{pi(i)}, nu_k -> sign * nu_{sigma(k)}.
struct Symmetry {
  std::vector<int> crosscaps;
  std::vector<int> punctures;
  int sign = -1;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

Symmetry compose(const Symmetry& outer, const Symmetry& inner);

/// The figure-level choices that the homology model is built from.
struct Convention {
  SurfaceParams params;
  /// rho_1 .. rho_4.
  std::vector<Symmetry> reflections;
  /// First crosscap of gamma_1; gamma_j runs through four consecutive
  /// crosscaps starting at gammaOrigin + j - 1 (cyclically).
  int gammaOrigin = 1;

  friend bool operator==(const Convention&, const Convention&) = default;
};

Convention defaultConvention(const SurfaceParams& params);

/// Text form of a convention. The derived curve classes are listed after the
/// defining data so that the text (and its hash) pins the whole model.
std::string serialize(const Convention& conv);

/// Reads the defining lines of `serialize` output. Class lines, if present,
/// must agree with the classes the data derives. Throws Error(ConventionFormat).
Convention parseConvention(std::string_view text);

/// FNV-1a 64-bit hash of the serialized convention, as 16 hex digits.
std::string conventionHash(const Convention& conv);

/// Transvection x -> x + exp * <x, c> c (exp = +1 or -1).
ZMatrix transvection(const ZVector& cls, const ZVector& pairing, int exp = 1);

class Model {
 public:
  explicit Model(const SurfaceParams& params);
  explicit Model(const Convention& conv);

  const SurfaceParams& params() const { return conv_.params; }
  const Convention& convention() const { return conv_; }
  int rank() const { return conv_.params.rank(); }

  /// Throws Error(UnknownCurve) for out-of-range symbols.
  CurveClass curve(const CurveSymbol& sym) const;

  /// Geometric intersection number under the convention table, or nullopt
  /// when the table has no entry for the pair.
  std::optional<int> intersection(const CurveSymbol& s1, const CurveSymbol& s2) const;

  /// Crosscap support of a catalog curve if the convention fixes one.
  std::optional<std::vector<int>> support(const CurveSymbol& sym) const;

  const Symmetry& reflection(int k) const { return conv_.reflections.at(k - 1); }
  /// T = rho_2 rho_1.
  Symmetry rotation() const { return compose(reflection(2), reflection(1)); }

  ZMatrix symmetryMatrix(const Symmetry& s) const;
  /// Integral crosscap slide y at crosscaps (i, i+1).
  ZMatrix slideMatrix(int i) const;
  /// Integral puncture slide v_{i,j}.
  ZMatrix punctureSlideMatrix(int i, int j) const;

  /// Every valid symbol of the catalog, in a fixed order.
  std::vector<CurveSymbol> catalog() const;

  /// Brings a vector over mu_1..mu_g, nu_1..nu_p into the basis by
  /// eliminating nu_p.
  ZVector reduce(const ZVector& extended) const;

 private:
  void buildDerivedClasses();
  CurveClass transported(const CurveClass& src, const ZMatrix& m, const ZMatrix& mInverse,
                         bool reversed) const;
  CurveClass supportedClass(const std::vector<int>& crosscaps) const;

  Convention conv_;
  std::vector<CurveClass> d1_, d2_, f_, e_;
};

}  // namespace crosscap
