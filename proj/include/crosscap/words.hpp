#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/curve.hpp"
#include "crosscap/index_expr.hpp"
#include "crosscap/surface.hpp"

namespace crosscap {

enum class GenKind {
  Twist,                  // right-handed Dehn twist about a catalog curve
  CrosscapSlide,          // y (Y-homeomorphism) on crosscaps i, i+1
  CrosscapTransposition,  // u_i
  PunctureSlide,          // v_{i,j}: puncture j around crosscap i
  Reflection,             // rho_1 .. rho_4
  Rotation,               // T = rho_2 rho_1, kept primitive in the alphabet
};

struct Generator {
  GenKind kind = GenKind::Rotation;
  CurveSymbol curve{};
  int i = 0;
  int j = 0;

  static Generator twist(CurveSymbol c) { return {GenKind::Twist, c, 0, 0}; }
  static Generator slide(int pos = 1) { return {GenKind::CrosscapSlide, {}, pos, 0}; }
  static Generator transposition(int i) { return {GenKind::CrosscapTransposition, {}, i, 0}; }
  static Generator punctureSlide(int crosscap, int puncture) {
    return {GenKind::PunctureSlide, {}, crosscap, puncture};
  }
  static Generator reflection(int k) { return {GenKind::Reflection, {}, k, 0}; }
  static Generator rotation() { return {GenKind::Rotation, {}, 0, 0}; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string toString(const Generator& gen);

/// Throws Error(UnknownGenerator) when an index is out of range for `params`.
/// Cyclic families (alpha, Gamma) are normalised into [1, g].
Generator validate(const SurfaceParams& params, Generator gen);

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Composition is functional: in `f * g` the right
/// factor acts first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(const Generator& gen, int exp = 1) : Word(std::vector<Letter>{{gen, exp}}) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(long n) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Cancels adjacent letter/inverse pairs until none remain.
std::vector<Letter> freelyReduce(std::vector<Letter> letters);

Word invert(const Word& w);
/// f g f^-1, written g^f.
Word conjugate(const Word& g, const Word& f);

/// Space-separated letters, `^-1` for inverses, `1` for the identity.
std::string toString(const Word& w);

struct ParseContext {
  /// When set, generator indices are validated against the surface and
  /// `r`, `g`, `p` are bound for symbolic subscripts.
  std::optional<SurfaceParams> params;
  /// Extra bindings (family variables such as `i`, `k`).
  Bindings vars;
  /// Named abbreviations, e.g. G1 -> "Gamma5 B1 u{r+5}". Expanded in the
  /// context of the use site.
  std::map<std::string, std::string, std::less<>> abbreviations;
};

/// Parses the word grammar: juxtaposition or `*` composes (right factor
/// first), `^-1` inverts, `^n` / `^{expr}` powers, `^(w)` conjugates by w,
/// parentheses group and `1` is the identity.
Word parse(std::string_view text, const ParseContext& ctx = {});

}  // namespace crosscap
