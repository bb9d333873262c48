#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/ledger.hpp"
#include "crosscap/model.hpp"
#include "crosscap/verdict.hpp"
#include "crosscap/words.hpp"

namespace crosscap {

struct EntryVerdict {
  std::string id;
  Layer layer = Layer::HomF2;
  Verdict verdict = Verdict::Undecided;
  std::string anchor;
  /// F2: hex rows of the common matrix; homZ: sign plan and rows;
  /// perm: cycle notation; action: the derivation trace.
  std::string witness;
  std::string message;
};

struct MembershipLine {
  std::string generator;
  bool member = false;
};

struct GenerationReport {
  bool symP = false;
  bool mod2Equal = false;
  std::string orderFive;       // decimal
  std::string orderReference;  // decimal
  std::vector<MembershipLine> fiveInReference;
  std::vector<MembershipLine> referenceInFive;
};

struct Report {
  SurfaceParams params;
  std::string conventionHash;
  std::vector<Layer> layers;
  std::vector<EntryVerdict> entries;
  std::optional<GenerationReport> generation;
  /// Wall-clock seconds per phase; excluded from the deterministic output.
  std::map<std::string, double> timings;
};

/// Runs every resolved entry on the requested layers that the entry
/// declares. Resolution or evaluation errors become Fail verdicts with a
/// message; they never stop the batch.
Report runLedger(const Model& model, const Ledger& ledger, const std::vector<Layer>& layers);

/// The five-element set {T, rho3, rho4, Gamma5 B1 u_{r+5}, v_{r+3,p}}.
std::vector<std::pair<std::string, Word>> fiveElementSet(const SurfaceParams& params);
/// Twists about a_i, b_i, f_i, c_j, e_k, the slide y and the puncture slides
/// v_{g,i} (and v_{g-1,i} for even g), together with rho1, rho3, rho4.
std::vector<std::pair<std::string, Word>> referenceSet(const SurfaceParams& params);

/// Sym_p surjection of {rho3 rho4, rho1} and mod-2 equality of the images of
/// the five-element and reference sets. Throws Error(TooLarge) when the
/// homology rank exceeds the group engine's bound.
GenerationReport genCompare(const Model& model, std::uint64_t seed = 1);

/// Explanatory header stating what the report does not establish.
std::vector<std::string> reportScope();

/// Sorted-key JSON. Timings are included only when asked for so that the
/// rest of the report is byte-for-byte reproducible.
std::string toJson(const Report& report, bool includeTimings);

struct VerdictSummary {
  int pass = 0;
  int fail = 0;
  int undecided = 0;
};

VerdictSummary summarize(const Report& report);

/// 0 all Pass, 1 any Fail, 2 Undecided without Fail.
int exitCode(const Report& report);

}  // namespace crosscap
