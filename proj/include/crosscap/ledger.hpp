#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/curve.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/words.hpp"

namespace crosscap {

enum class Layer { Action, HomZ, HomF2, Perm };

std::string_view toString(Layer layer);
/// Accepts `action`, `homZ`, `homF2`, `perm`. Throws Error(LedgerFormat).
Layer parseLayer(std::string_view text);

/// A family variable and its inclusive range, e.g. `i=1..r-2`.
struct FamilyRange {
  std::string var;
  std::string lo;
  std::string hi;
};

/// `WORD : in1, in2 -> out1, out2`
struct CurveTupleSpec {
  std::string word;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// One line of a ledger file, still symbolic in r, g, p and family variables.
struct LedgerLine {
  std::string id;
  std::vector<FamilyRange> ranges;
  /// Each condition is `even`, `odd`, or a comparison `expr OP expr`.
  std::vector<std::string> conditions;
  std::vector<Layer> layers;
  std::string lhs;
  std::string rhs;
  /// Unset means "search" for the integral layer.
  std::optional<std::vector<int>> signPlan;
  std::string anchor;
  std::optional<CurveTupleSpec> curves;
  int lineNumber = 0;
};

struct Ledger {
  std::map<std::string, std::string, std::less<>> abbreviations;
  std::vector<LedgerLine> lines;
};

/// Line format:
///   define NAME = WORD
///   ID[{var=lo..hi, ...}][?cond&cond] | layers | lhs | rhs | signs | anchor [| curves]
/// `#` starts a comment line. Throws Error(LedgerFormat) with the line number.
Ledger parseLedger(std::string_view text);

/// The ledger compiled into the library.
std::string_view defaultLedgerText();

struct ResolvedCurves {
  Word word;
  std::vector<CurveSymbol> inputs;
  std::vector<CurveSymbol> outputs;
};

/// A ledger line instantiated for one surface and one value of its family
/// variables. `error` is set instead of the words when resolution failed.
struct ResolvedEntry {
  std::string id;
  std::vector<Layer> layers;
  Word lhs;
  Word rhs;
  std::optional<std::vector<int>> signPlan;
  std::string anchor;
  std::optional<ResolvedCurves> curves;
  std::string error;
};

/// Expands families, drops lines whose conditions fail, and parses words.
/// Per-entry problems are recorded in `error` and never abort the batch.
std::vector<ResolvedEntry> resolve(const Ledger& ledger, const SurfaceParams& params);

}  // namespace crosscap
