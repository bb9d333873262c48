#include "crosscap/verify.hpp"

#include <chrono>
#include <json.hpp>

#include "crosscap/action.hpp"
#include "crosscap/error.hpp"
#include "crosscap/groupcheck.hpp"
#include "crosscap/homrep.hpp"
#include "crosscap/permrep.hpp"

namespace crosscap {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string joinHex(const F2Matrix& m) {
  std::string out;
  for (const auto& row : m.toHexRows()) {
    if (!out.empty()) out += ' ';
    out += row;
  }
  return out;
}

std::string signString(const std::vector<int>& plan) {
  std::string out;
  for (int s : plan) out += s > 0 ? '+' : '-';
  return out.empty() ? "none" : out;
}

Word word(std::string_view text, const SurfaceParams& params) {
  ParseContext ctx;
  ctx.params = params;
  return parse(text, ctx);
}

}  // namespace

Report runLedger(const Model& model, const Ledger& ledger, const std::vector<Layer>& layers) {
  Report report;
  report.params = model.params();
  report.conventionHash = conventionHash(model.convention());
  report.layers = layers;

  auto start = Clock::now();
  const Representation rep(model);
  const ActionEngine engine(model);
  const auto entries = resolve(ledger, model.params());
  report.timings["setup"] = secondsSince(start);

  for (const auto& entry : entries) {
    for (Layer layer : layers) {
      bool declared = false;
      for (Layer l : entry.layers) declared = declared || l == layer;
      if (!declared) continue;

      start = Clock::now();
      EntryVerdict v;
      v.id = entry.id;
      v.layer = layer;
      v.anchor = entry.anchor;
      if (!entry.error.empty()) {
        v.verdict = Verdict::Fail;
        v.message = entry.error;
        report.entries.push_back(std::move(v));
        continue;
      }
      try {
        switch (layer) {
          case Layer::HomF2: {
            const auto check = rep.checkF2(entry.lhs, entry.rhs);
            v.verdict = check.verdict;
            v.message = check.message;
            if (check.verdict == Verdict::Pass) v.witness = joinHex(rep.evalF2(entry.lhs));
            break;
          }
          case Layer::HomZ: {
            const auto check = rep.checkZ(entry.lhs, entry.rhs, entry.signPlan);
            v.verdict = check.verdict;
            v.message = check.message;
            if (check.verdict == Verdict::Pass) v.witness = "signs " + signString(check.signPlan);
            break;
          }
          case Layer::Perm: {
            const auto a = perm(model, entry.lhs);
            const auto b = perm(model, entry.rhs);
            v.verdict = a == b ? Verdict::Pass : Verdict::Fail;
            v.witness = toString(a);
            if (!(a == b)) v.message = "right-hand side gives " + toString(b);
            break;
          }
          case Layer::Action: {
            const auto check =
                engine.checkTuple(entry.curves->word, entry.curves->inputs, entry.curves->outputs);
            v.verdict = check.verdict;
            v.message = check.message;
            for (const auto& res : check.results) v.witness += toString(res.trace);
            break;
          }
        }
      } catch (const Error& e) {
        v.verdict = Verdict::Fail;
        v.message = e.what();
      }
      report.timings[std::string(toString(layer))] += secondsSince(start);
      report.entries.push_back(std::move(v));
    }
  }
  return report;
}

std::vector<std::pair<std::string, Word>> fiveElementSet(const SurfaceParams& params) {
  std::vector<std::pair<std::string, Word>> out;
  for (const char* text : {"T", "rho3", "rho4", "Gamma5 B1 u{r+5}", "v{r+3,p}"})
    out.emplace_back(toString(word(text, params)), word(text, params));
  return out;
}

std::vector<std::pair<std::string, Word>> referenceSet(const SurfaceParams& params) {
  std::vector<std::pair<std::string, Word>> out;
  auto add = [&](const Generator& gen) {
    const Word w(gen);
    out.emplace_back(toString(w), w);
  };
  const int r = params.r;
  for (int i = 1; i <= r; ++i) add(Generator::twist({Family::A, i}));
  for (int i = 1; i <= r; ++i) add(Generator::twist({Family::B, i}));
  for (int j = 1; j <= (params.even() ? r : r - 1); ++j) add(Generator::twist({Family::C, j}));
  for (int i = 1; i <= r; ++i) add(Generator::twist({Family::F, i}));
  for (int k = 1; k < params.p; ++k) add(Generator::twist({Family::E, k}));
  add(Generator::slide(1));
  for (int i = 1; i <= params.p; ++i) add(Generator::punctureSlide(params.g, i));
  if (params.even())
    for (int i = 1; i <= params.p; ++i) add(Generator::punctureSlide(params.g - 1, i));
  for (int k : {1, 3, 4}) add(Generator::reflection(k));
  return out;
}

GenerationReport genCompare(const Model& model, std::uint64_t seed) {
  const auto& params = model.params();
  if (model.rank() > kMaxGroupDim)
    throw Error(ErrorKind::TooLarge, "homology rank " + std::to_string(model.rank()) +
                                         " exceeds the group engine bound " +
                                         std::to_string(kMaxGroupDim));
  GenerationReport out;
  out.symP = generatesSym(model, {word("rho3 rho4", params), word("rho1", params)});

  const Representation rep(model);
  const auto five = fiveElementSet(params);
  const auto reference = referenceSet(params);
  std::vector<F2Matrix> a;
  std::vector<F2Matrix> b;
  for (const auto& [name, w] : five) a.push_back(rep.evalF2(w));
  for (const auto& [name, w] : reference) b.push_back(rep.evalF2(w));
  const auto cmp = sameSubgroup(a, b, seed);
  out.mod2Equal = cmp.equal;
  out.orderFive = cmp.orderA.str();
  out.orderReference = cmp.orderB.str();
  for (std::size_t k = 0; k < five.size(); ++k)
    out.fiveInReference.push_back({five[k].first, cmp.aInB[k]});
  for (std::size_t k = 0; k < reference.size(); ++k)
    out.referenceInFive.push_back({reference[k].first, cmp.bInA[k]});
  return out;
}

std::vector<std::string> reportScope() {
  return {
      "minimality of the generator counts (five elements, six involutions) is not checked",
      "mapping classes are compared only through homology and the puncture permutation; "
      "these representations are not faithful, so a Pass is a necessary condition, not "
      "isotopy-level equality",
  };
}

VerdictSummary summarize(const Report& report) {
  VerdictSummary s;
  for (const auto& e : report.entries) {
    switch (e.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Undecided: ++s.undecided; break;
    }
  }
  if (report.generation) {
    for (bool ok : {report.generation->symP, report.generation->mod2Equal}) {
      if (ok) ++s.pass;
      else ++s.fail;
    }
  }
  return s;
}

int exitCode(const Report& report) {
  const auto s = summarize(report);
  if (s.fail > 0) return 1;
  if (s.undecided > 0) return 2;
  return 0;
}

std::string toJson(const Report& report, bool includeTimings) {
  using nlohmann::json;
  json j;
  j["header"] = {{"scope", "identities checked in the mod-2 and integral homology "
                           "representations, the puncture permutation, and a symbolic "
                           "curve-action calculus"},
                 {"notReproducible", reportScope()}};
  j["params"] = {{"g", report.params.g},
                 {"p", report.params.p},
                 {"r", report.params.r},
                 {"parity", toString(report.params.parity)}};
  j["conventionHash"] = report.conventionHash;
  json layers = json::array();
  for (Layer l : report.layers) layers.push_back(std::string(toString(l)));
  j["layers"] = layers;
  json entries = json::array();
  for (const auto& e : report.entries) {
    json row{{"id", e.id},
             {"layer", std::string(toString(e.layer))},
             {"verdict", std::string(toString(e.verdict))},
             {"anchor", e.anchor}};
    if (!e.witness.empty()) row["witness"] = e.witness;
    if (!e.message.empty()) row["message"] = e.message;
    entries.push_back(row);
  }
  j["entries"] = entries;
  if (report.generation) {
    const auto& g = *report.generation;
    auto lines = [](const std::vector<MembershipLine>& ls) {
      json out = json::array();
      for (const auto& l : ls) out.push_back({{"generator", l.generator}, {"member", l.member}});
      return out;
    };
    j["generation"] = {{"symP", g.symP},
                       {"mod2Equal", g.mod2Equal},
                       {"orders", {{"five", g.orderFive}, {"reference", g.orderReference}}},
                       {"fiveInReference", lines(g.fiveInReference)},
                       {"referenceInFive", lines(g.referenceInFive)}};
  } else {
    j["generation"] = nullptr;
  }
  const auto s = summarize(report);
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"undecided", s.undecided}};
  if (includeTimings) j["timings"] = report.timings;
  return j.dump(2) + "\n";
}

}  // namespace crosscap
