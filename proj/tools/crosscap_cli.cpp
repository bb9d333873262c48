#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crosscap/action.hpp"
#include "crosscap/error.hpp"
#include "crosscap/homrep.hpp"
#include "crosscap/ledger.hpp"
#include "crosscap/model.hpp"
#include "crosscap/permrep.hpp"
#include "crosscap/verify.hpp"

namespace {

using namespace crosscap;

constexpr int kUsageError = 3;

struct Options {
  int g = 15;
  int p = 2;
  std::string rep;
  std::string layers = "homF2,perm,action";
  std::string ledgerPath;
  std::string outPath;
  std::string conventionPath;
  std::uint64_t seed = 1;
  bool json = false;
  std::string word;
  std::vector<std::string> words;
  std::vector<std::string> curves;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::OutOfRange, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Model makeModel(const Options& opt) {
  const SurfaceParams params = build(opt.g, opt.p);
  if (opt.conventionPath.empty()) return Model(params);
  Convention conv = parseConvention(readFile(opt.conventionPath));
  if (!(conv.params == params))
    throw Error(ErrorKind::ConventionFormat, "convention file is for a different (g, p)");
  return Model(conv);
}

Word parseWord(const std::string& text, const SurfaceParams& params) {
  ParseContext ctx;
  ctx.params = params;
  return parse(text, ctx);
}

void writeOutput(const Options& opt, const std::string& text) {
  if (opt.outPath.empty()) return;
  std::ofstream out(opt.outPath);
  if (!out) throw Error(ErrorKind::OutOfRange, "cannot write " + opt.outPath);
  out << text;
}

std::string matrixText(const ZMatrix& m) {
  std::string out;
  for (const auto& row : m.toRows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += '\n';
  }
  return out;
}

int runEval(const Options& opt) {
  const Model model = makeModel(opt);
  const Word w = parseWord(opt.word, model.params());
  const std::string rep = opt.rep.empty() ? "homF2" : opt.rep;
  std::string text;
  if (rep == "perm") {
    text = toString(perm(model, w)) + "\n";
  } else if (rep == "homF2") {
    const Representation r(model);
    const F2Matrix m = r.evalF2(w);
    if (opt.json) {
      for (const auto& row : m.toHexRows()) text += row + "\n";
    } else {
      text = m.toString();
    }
  } else if (rep == "homZ") {
    const Representation r(model);
    text = matrixText(r.evalZ(w));
  } else {
    throw CLI::ValidationError("--rep", "expected homZ, homF2 or perm");
  }
  std::cout << text;
  writeOutput(opt, text);
  return 0;
}

int runAct(const Options& opt) {
  const Model model = makeModel(opt);
  const ActionEngine engine(model);
  const Word w = parseWord(opt.word, model.params());
  bool allKnown = true;
  std::string text;
  for (const auto& name : opt.curves) {
    const CurveSymbol c = validate(model.params(), parseCurve(name));
    const ActionResult res = engine.apply(w, c);
    text += toString(res.trace);
    if (res.image) {
      text += toString(c) + " -> " + toString(*res.image) + (res.reversed ? " (reversed)" : "") + "\n";
    } else {
      allKnown = false;
      text += toString(c) + " -> unknown: " + res.reason + "\n";
    }
  }
  std::cout << text;
  writeOutput(opt, text);
  return allKnown ? 0 : 2;
}

int runCheck(const Options& opt) {
  const Model model = makeModel(opt);
  const Word lhs = parseWord(opt.words.at(0), model.params());
  const Word rhs = parseWord(opt.words.at(1), model.params());
  std::vector<std::string> reps;
  if (opt.rep.empty()) reps = {"homF2", "perm"};
  else reps = {opt.rep};
  const Representation rep(model);
  bool fail = false;
  bool undecided = false;
  for (const auto& name : reps) {
    Verdict v = Verdict::Undecided;
    std::string note;
    if (name == "homF2") {
      const auto c = rep.checkF2(lhs, rhs);
      v = c.verdict;
      note = c.message;
    } else if (name == "homZ") {
      const auto c = rep.checkZ(lhs, rhs);
      v = c.verdict;
      note = c.message;
      if (v == Verdict::Pass) {
        note = "signs ";
        for (int s : c.signPlan) note += s > 0 ? '+' : '-';
      }
    } else if (name == "perm") {
      v = perm(model, lhs) == perm(model, rhs) ? Verdict::Pass : Verdict::Fail;
    } else {
      throw CLI::ValidationError("--rep", "expected homZ, homF2 or perm");
    }
    fail = fail || v == Verdict::Fail;
    undecided = undecided || v == Verdict::Undecided;
    std::cout << name << ": " << toString(v) << (note.empty() ? "" : "  " + note) << "\n";
  }
  return fail ? 1 : undecided ? 2 : 0;
}

int runVerify(const Options& opt) {
  const Model model = makeModel(opt);
  const std::string text = opt.ledgerPath.empty() ? std::string(defaultLedgerText())
                                                  : readFile(opt.ledgerPath);
  const Ledger ledger = parseLedger(text);
  std::vector<Layer> layers;
  bool gens = false;
  std::stringstream list(opt.layers);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item == "gens") gens = true;
    else layers.push_back(parseLayer(item));
  }
  Report report = runLedger(model, ledger, layers);
  if (gens) report.generation = genCompare(model, opt.seed);
  const std::string json = toJson(report, false);
  writeOutput(opt, json);
  if (opt.json) {
    std::cout << json;
  } else {
    for (const auto& e : report.entries)
      if (e.verdict != Verdict::Pass)
        std::cout << toString(e.verdict) << " " << e.id << " [" << toString(e.layer) << "] "
                  << e.message << "\n";
    const auto s = summarize(report);
    std::cout << "g=" << report.params.g << " p=" << report.params.p << " convention "
              << report.conventionHash << ": " << s.pass << " pass, " << s.fail << " fail, "
              << s.undecided << " undecided\n";
  }
  return exitCode(report);
}

int runGensCompare(const Options& opt) {
  const Model model = makeModel(opt);
  Report report;
  report.params = model.params();
  report.conventionHash = conventionHash(model.convention());
  report.generation = genCompare(model, opt.seed);
  const std::string json = toJson(report, false);
  writeOutput(opt, json);
  if (opt.json) {
    std::cout << json;
  } else {
    const auto& g = *report.generation;
    std::cout << "Sym_p surjection: " << (g.symP ? "yes" : "no") << "\n"
              << "mod-2 images equal: " << (g.mod2Equal ? "yes" : "no") << "\n"
              << "order (five-element set): " << g.orderFive << "\n"
              << "order (reference set): " << g.orderReference << "\n";
  }
  return exitCode(report);
}

int runConvention(const Options& opt) {
  const Model model = makeModel(opt);
  const std::string text = serialize(model.convention());
  std::cout << text;
  writeOutput(opt, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks generating-set identities in mapping class groups of punctured nonorientable surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--g", opt.g, "number of crosscaps")->capture_default_str();
    cmd->add_option("--p", opt.p, "number of punctures")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "seed for the randomized stabilizer chain")->capture_default_str();
    cmd->add_option("--out", opt.outPath, "also write the output to this file");
    cmd->add_option("--convention", opt.conventionPath, "convention file to build the model from");
    cmd->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a word in a representation");
  common(eval);
  eval->add_option("--rep", opt.rep, "homZ, homF2 or perm");
  eval->add_option("word", opt.word, "word")->required();

  auto* act = app.add_subcommand("act", "images of curves under a word");
  common(act);
  act->add_option("word", opt.word, "word")->required();
  act->add_option("curves", opt.curves, "curve names")->required();

  auto* check = app.add_subcommand("check", "compare two words");
  common(check);
  check->add_option("--rep", opt.rep, "homZ, homF2 or perm (default: homF2 and perm)");
  check->add_option("words", opt.words, "left and right words")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "run the identity ledger");
  common(verify);
  verify->add_option("--layers", opt.layers, "comma list of action, homZ, homF2, perm, gens")
      ->capture_default_str();
  verify->add_option("--ledger", opt.ledgerPath, "ledger file (default: built in)");

  auto* gens = app.add_subcommand("gens-compare", "compare generated subgroups mod 2");
  common(gens);

  auto* conv = app.add_subcommand("convention", "print the model convention");
  common(conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (eval->parsed()) return runEval(opt);
    if (act->parsed()) return runAct(opt);
    if (check->parsed()) return runCheck(opt);
    if (verify->parsed()) return runVerify(opt);
    if (gens->parsed()) return runGensCompare(opt);
    if (conv->parsed()) return runConvention(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
