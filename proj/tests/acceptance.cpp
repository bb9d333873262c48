// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>

#include "crosscap/error.hpp"
#include "crosscap/groupcheck.hpp"
#include "crosscap/homrep.hpp"
#include "crosscap/ledger.hpp"
#include "crosscap/permrep.hpp"
#include "crosscap/verify.hpp"
#include "support.hpp"

using namespace crosscap;
using testing_support::kSurfaces;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kVerifySeconds = 5.0;
constexpr double kGenCompareSeconds = 300.0;
constexpr int kMinEntries = 45;
constexpr int kRandomWords = 1000;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Outcome criterion1() {
  Outcome out;
  const Ledger ledger = parseLedger(defaultLedgerText());
  double worst = 0;
  for (const auto& [g, p] : kSurfaces) {
    const auto t = Clock::now();
    const Report report = runLedger(Model(build(g, p)), ledger, {Layer::HomF2, Layer::Perm, Layer::Action});
    const double secs = since(t);
    worst = std::max(worst, secs);
    const auto s = summarize(report);
    int undecidedAlgebraic = 0;
    for (const auto& e : report.entries)
      if (e.verdict == Verdict::Undecided && e.layer != Layer::Action) ++undecidedAlgebraic;
    const std::string at = "(" + std::to_string(g) + "," + std::to_string(p) + ")";
    out.require(exitCode(report) == 0, at + " exit " + std::to_string(exitCode(report)));
    out.require(static_cast<int>(report.entries.size()) >= kMinEntries, at + " too few entries");
    out.require(undecidedAlgebraic == 0, at + " undecided homF2/perm rows");
    out.require(secs < kVerifySeconds, at + " took " + std::to_string(secs) + " s");
    if (out.ok) out.detail += at + " " + std::to_string(s.pass) + " rows; ";
  }
  if (out.ok) out.detail += "slowest " + std::to_string(worst) + " s";
  return out;
}

Outcome criterion2() {
  Outcome out;
  for (auto [g, p] : std::vector<std::pair<int, int>>{{14, 1}, {15, 2}}) {
    const auto t = Clock::now();
    const GenerationReport rep = genCompare(Model(build(g, p)), 1);
    const double secs = since(t);
    bool mutual = true;
    for (const auto& l : rep.fiveInReference) mutual = mutual && l.member;
    for (const auto& l : rep.referenceInFive) mutual = mutual && l.member;
    const std::string at = "(" + std::to_string(g) + "," + std::to_string(p) + ")";
    out.require(rep.mod2Equal && mutual, at + " subgroups differ mod 2");
    out.require(rep.orderFive == rep.orderReference, at + " orders differ");
    out.require(secs < kGenCompareSeconds, at + " took " + std::to_string(secs) + " s");
    if (out.ok) out.detail += at + " order " + rep.orderFive + " in " + std::to_string(secs) + " s; ";
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (int p = 1; p <= 6; ++p) {
    const Model model(build(15, p));
    const bool ok = generatesSym(model, {testing_support::word(model, "rho3 rho4"),
                                         testing_support::word(model, "rho1")});
    out.require(ok, "p=" + std::to_string(p));
  }
  if (out.ok) out.detail = "g=15, p=1..6";
  return out;
}

Outcome criterion4() {
  Outcome out;
  const std::vector<std::string> involutions{"rho1", "rho2", "rho3", "rho4",
                                             "rho3 Gamma5 B1 u{r+5}", "rho1 v{r+3,p}"};
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    for (const auto& text : involutions) {
      const Word w = testing_support::word(model, text);
      const std::string at = text + " at (" + std::to_string(g) + "," + std::to_string(p) + ")";
      out.require((rep.evalF2(w) * rep.evalF2(w)).isIdentity(), at + " in F2");
      out.require((perm(model, w) * perm(model, w)).isIdentity(), at + " in perm");
    }
  }
  if (out.ok) out.detail = "6 involutions x 6 surfaces";
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (const auto& [g, p] : kSurfaces) {
    const Model model(build(g, p));
    const Representation rep(model);
    const auto gens = testing_support::alphabet(model);
    std::mt19937_64 rng(static_cast<std::uint64_t>(g) * 7919 + p);
    const std::string at = "(" + std::to_string(g) + "," + std::to_string(p) + ")";
    for (int n = 0; n < kRandomWords && out.ok; ++n) {
      const Word a = testing_support::randomWord(gens, rng, 5);
      const Word b = testing_support::randomWord(gens, rng, 5);
      try {
        const ZMatrix za = rep.evalZ(a);
        const F2Matrix fa = rep.evalF2(a);
        out.require(rep.evalZ(a * b) == za * rep.evalZ(b), at + " Z homomorphism " + toString(a));
        out.require(rep.evalF2(a * b) == fa * rep.evalF2(b), at + " F2 homomorphism " + toString(a));
        out.require(za.mod2() == fa, at + " Z mod 2 differs from F2 for " + toString(a));
        out.require(rep.form().preservedBy(fa), at + " form not preserved by " + toString(a));
      } catch (const Error& e) {
        out.require(false, at + " " + e.what());
      }
    }
    for (const auto& gen : gens) {
      if (gen.kind != GenKind::Twist) continue;
      ZMatrix d = rep.generatorZ(gen);
      for (int i = 0; i < d.dim(); ++i) d(i, i) -= 1;
      out.require(d * d == ZMatrix(d.dim()), at + " twist " + toString(gen) + " not unipotent");
    }
  }
  if (out.ok) out.detail = std::to_string(kRandomWords) + " word pairs per surface";
  return out;
}

Outcome criterion6() {
  Outcome out;
  for (int n = 2; n <= 4; ++n) {
    std::vector<F2Matrix> all;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      F2Matrix m(n);
      for (int i = 0; i < n; ++i) m.setRow(i, static_cast<std::uint32_t>((code >> (i * n)) & ((1u << n) - 1)));
      if (m.isInvertible()) all.push_back(m);
    }
    F2Matrix e = F2Matrix::identity(n);
    e.set(0, 1, true);
    F2Matrix c(n);
    for (int i = 0; i < n; ++i) c.set((i + 1) % n, i, true);
    const BSGS full = schreierSims({e, c});
    out.require(full.order() == BigInt(all.size()), "GL(" + std::to_string(n) + ",2) order");
    if (n > 3) continue;

    // Membership in <e, e^T> (a copy of GL(2,2) or a smaller group) against closure.
    const F2Matrix et = e.transpose();
    std::unordered_set<F2Matrix> group{F2Matrix::identity(n)};
    std::vector<F2Matrix> frontier{F2Matrix::identity(n)};
    while (!frontier.empty()) {
      std::vector<F2Matrix> next;
      for (const auto& x : frontier)
        for (const auto& s : {e, et})
          if (group.insert(x * s).second) next.push_back(x * s);
      frontier = std::move(next);
    }
    const BSGS sub = schreierSims({e, et});
    for (const auto& m : all)
      out.require(sub.contains(m).has_value() == (group.count(m) == 1),
                  "membership mismatch in dimension " + std::to_string(n));
    out.require(sub.order() == BigInt(group.size()), "subgroup order in dimension " + std::to_string(n));
  }
  if (out.ok) out.detail = "orders 6, 168, 20160; membership exhaustive for n=2,3";
  return out;
}

Outcome criterion7() {
  Outcome out;
  Report report;
  report.params = build(15, 2);
  const std::string json = toJson(report, false);
  out.require(json.find("notReproducible") != std::string::npos, "header lacks the scope note");
  out.require(!reportScope().empty(), "empty scope list");
  out.detail = std::to_string(reportScope().size()) + " scope notes";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 verify homF2,perm,action on six surfaces", criterion1},
      {"2 generating sets agree mod 2", criterion2},
      {"3 Sym_p surjection at g=15", criterion3},
      {"4 involutions", criterion4},
      {"5 random-word representation laws", criterion5},
      {"6 Schreier-Sims against brute force", criterion6},
      {"7 report header scope", criterion7},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    if (!o.ok) ++failures;
    std::printf("criterion %s: %s  %s\n", name.c_str(), o.ok ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
