#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/curve.hpp"
#include "crosscap/model.hpp"
#include "crosscap/verdict.hpp"
#include "crosscap/words.hpp"

namespace crosscap {

/// Image of a curve under a generator; `reversed` records that the
/// generator reverses the co-orientation (reflections do).
struct AxiomImage {
  CurveSymbol curve;
  bool reversed = false;
};

/// Partial curve map of one generator, keyed by canonical symbols.
using AxiomMap = std::map<CurveSymbol, AxiomImage>;

/// The curve currently tracked: pending[0] pending[1] ... applied to `curve`
/// (pending twists not yet resolved into a catalog curve).
struct ActionState {
  CurveSymbol curve;
  std::vector<Letter> pending;

  friend bool operator==(const ActionState&, const ActionState&) = default;
};

std::string toString(const ActionState& state);

struct TraceStep {
  std::string rule;  // R1..R4, or "cancel"
  Letter letter;
  ActionState before;
  ActionState after;
  std::string justification;
};

struct DerivationTrace {
  std::vector<TraceStep> steps;
};

struct ActionResult {
  /// Unset when no rule applies (the engine never guesses).
  std::optional<CurveSymbol> image;
  bool reversed = false;
  DerivationTrace trace;
  std::string reason;
};

struct TupleCheck {
  Verdict verdict = Verdict::Undecided;
  std::vector<ActionResult> results;
  std::string message;
};

/// Structured-text form of a trace, one step per line.
std::string toString(const DerivationTrace& trace);

/// Symbolic curve action: images of catalog curves under words, derived from
/// the convention's axiom table with the rules
///   R1 a twist fixes curves it is disjoint from (and commutes past pending
///      twists it is disjoint from),
///   R2 braid move t_a t_b (a) = b when a and b meet once,
///   R3 generator axioms,
///   R4 transport of pending twists through a generator with known images.
class ActionEngine {
 public:
  explicit ActionEngine(const Model& model);

  const Model& model() const { return model_; }

  ActionResult apply(const Word& w, const CurveSymbol& c) const;
  TupleCheck checkTuple(const Word& w, const std::vector<CurveSymbol>& inputs,
                        const std::vector<CurveSymbol>& outputs) const;

  /// One letter of the action; unset when no rule fires.
  std::optional<TraceStep> step(const ActionState& state, const Letter& letter) const;

  /// Re-runs every step of `trace` from `c` and checks it lands where the
  /// trace says.
  bool replay(const Word& w, const CurveSymbol& c, const DerivationTrace& trace) const;

  /// Axiom image of `c` under `gen` (exp = +1) or its inverse (exp = -1).
  std::optional<AxiomImage> axiom(const Generator& gen, int exp, const CurveSymbol& c) const;

  const std::map<Generator, AxiomMap>& axioms() const { return forward_; }

  /// Canonical name of a curve, with aliases between families resolved.
  CurveSymbol name(const CurveSymbol& c) const;

 private:
  void addSupportAxioms(const Generator& gen, const Symmetry& s, bool reversed);
  void addFixingAxioms(const Generator& gen, const std::vector<int>& avoid);

  Model model_;
  std::map<Generator, AxiomMap> forward_;
  std::map<Generator, AxiomMap> backward_;
  std::map<CurveSymbol, CurveSymbol> aliases_;
};

}  // namespace crosscap
