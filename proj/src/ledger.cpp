#include "crosscap/ledger.hpp"

#include <set>
#include <sstream>

#include "crosscap/error.hpp"
#include "crosscap/index_expr.hpp"

namespace crosscap {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::LedgerFormat, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> splitCurves(std::string_view s) {
  std::vector<std::string> out;
  for (auto& piece : split(s, ','))
    if (!piece.empty()) out.push_back(piece);
  return out;
}

bool evalCondition(const std::string& cond, const SurfaceParams& params, const Bindings& vars) {
  if (cond == "even") return params.even();
  if (cond == "odd") return !params.even();
  static const std::vector<std::string> ops{">=", "<=", "==", "!=", ">", "<"};
  for (const auto& op : ops) {
    const auto pos = cond.find(op);
    if (pos == std::string::npos) continue;
    const long a = evalIndexExpr(cond.substr(0, pos), vars);
    const long b = evalIndexExpr(cond.substr(pos + op.size()), vars);
    if (op == ">=") return a >= b;
    if (op == "<=") return a <= b;
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == ">") return a > b;
    return a < b;
  }
  throw Error(ErrorKind::LedgerFormat, "bad condition '" + cond + "'");
}

}  // namespace

std::string_view toString(Layer layer) {
  switch (layer) {
    case Layer::Action: return "action";
    case Layer::HomZ: return "homZ";
    case Layer::HomF2: return "homF2";
    case Layer::Perm: return "perm";
  }
  return "?";
}

Layer parseLayer(std::string_view text) {
  for (Layer l : {Layer::Action, Layer::HomZ, Layer::HomF2, Layer::Perm})
    if (toString(l) == text) return l;
  throw Error(ErrorKind::LedgerFormat, "unknown layer '" + std::string(text) + "'");
}

Ledger parseLedger(std::string_view text) {
  Ledger ledger;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineNumber = 0;
  std::set<std::string> ids;
  while (std::getline(in, raw)) {
    ++lineNumber;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("define ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail(lineNumber, "define needs '='");
      const std::string name = trim(std::string_view(line).substr(7, eq - 7));
      if (name.empty()) fail(lineNumber, "define needs a name");
      ledger.abbreviations[name] = trim(std::string_view(line).substr(eq + 1));
      continue;
    }

    const auto fields = split(line, '|');
    if (fields.size() != 6 && fields.size() != 7)
      fail(lineNumber, "expected 6 or 7 '|'-separated fields, got " + std::to_string(fields.size()));

    LedgerLine entry;
    entry.lineNumber = lineNumber;
    std::string head = fields[0];
    if (const auto q = head.find('?'); q != std::string::npos) {
      for (auto& c : split(std::string_view(head).substr(q + 1), '&')) entry.conditions.push_back(c);
      head = trim(std::string_view(head).substr(0, q));
    }
    if (const auto brace = head.find('{'); brace != std::string::npos) {
      if (head.back() != '}') fail(lineNumber, "unterminated family range");
      for (auto& range : split(std::string_view(head).substr(brace + 1, head.size() - brace - 2), ',')) {
        const auto eq = range.find('=');
        const auto dots = range.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
          fail(lineNumber, "family range must look like var=lo..hi");
        entry.ranges.push_back({trim(std::string_view(range).substr(0, eq)),
                                trim(std::string_view(range).substr(eq + 1, dots - eq - 1)),
                                trim(std::string_view(range).substr(dots + 2))});
      }
      head = trim(std::string_view(head).substr(0, brace));
    }
    if (head.empty()) fail(lineNumber, "missing id");
    if (!ids.insert(head).second) fail(lineNumber, "duplicate id " + head);
    entry.id = head;

    try {
      for (auto& l : split(fields[1], ',')) entry.layers.push_back(parseLayer(l));
    } catch (const Error& e) {
      fail(lineNumber, e.what());
    }
    entry.lhs = fields[2];
    entry.rhs = fields[3];
    if (entry.lhs.empty() || entry.rhs.empty()) fail(lineNumber, "empty word");

    const std::string& signs = fields[4];
    if (signs == "none") {
      entry.signPlan = std::vector<int>{};
    } else if (signs != "auto") {
      std::vector<int> plan;
      for (char c : signs) {
        if (c == '+') plan.push_back(1);
        else if (c == '-') plan.push_back(-1);
        else if (c != ' ') fail(lineNumber, "sign plan must be auto, none, or a string of + and -");
      }
      entry.signPlan = plan;
    }
    entry.anchor = fields[5];
    if (entry.anchor.empty()) fail(lineNumber, "missing anchor");

    if (fields.size() == 7) {
      const std::string& spec = fields[6];
      const auto colon = spec.find(':');
      const auto arrow = spec.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        fail(lineNumber, "curve tuple must look like WORD : ins -> outs");
      CurveTupleSpec tuple;
      tuple.word = trim(std::string_view(spec).substr(0, colon));
      tuple.inputs = splitCurves(std::string_view(spec).substr(colon + 1, arrow - colon - 1));
      tuple.outputs = splitCurves(std::string_view(spec).substr(arrow + 2));
      if (tuple.inputs.size() != tuple.outputs.size() || tuple.inputs.empty())
        fail(lineNumber, "curve tuple sides differ in length");
      entry.curves = tuple;
    }
    bool wantsAction = false;
    for (Layer l : entry.layers) wantsAction = wantsAction || l == Layer::Action;
    if (wantsAction && !entry.curves) fail(lineNumber, "the action layer needs a curve tuple");
    ledger.lines.push_back(std::move(entry));
  }
  return ledger;
}

std::vector<ResolvedEntry> resolve(const Ledger& ledger, const SurfaceParams& params) {
  std::vector<ResolvedEntry> out;
  for (const auto& line : ledger.lines) {
    // Enumerate the cartesian product of the family ranges.
    std::vector<Bindings> assignments{params.bindings()};
    std::string rangeError;
    for (const auto& range : line.ranges) {
      std::vector<Bindings> next;
      for (const auto& vars : assignments) {
        long lo = 0;
        long hi = -1;
        try {
          lo = evalIndexExpr(range.lo, vars);
          hi = evalIndexExpr(range.hi, vars);
        } catch (const Error& e) {
          rangeError = e.what();
        }
        for (long v = lo; v <= hi; ++v) {
          Bindings b = vars;
          b[range.var] = v;
          next.push_back(std::move(b));
        }
      }
      assignments = std::move(next);
    }
    if (!rangeError.empty()) {
      ResolvedEntry failed;
      failed.id = line.id;
      failed.layers = line.layers;
      failed.anchor = line.anchor;
      failed.error = rangeError;
      out.push_back(std::move(failed));
      continue;
    }

    for (const auto& vars : assignments) {
      ResolvedEntry entry;
      entry.id = line.id;
      if (!line.ranges.empty()) {
        entry.id += "[";
        for (std::size_t k = 0; k < line.ranges.size(); ++k) {
          if (k) entry.id += ",";
          entry.id += line.ranges[k].var + "=" + std::to_string(vars.at(line.ranges[k].var));
        }
        entry.id += "]";
      }
      entry.layers = line.layers;
      entry.anchor = line.anchor;
      entry.signPlan = line.signPlan;
      try {
        bool applies = true;
        for (const auto& cond : line.conditions) applies = applies && evalCondition(cond, params, vars);
        if (!applies) continue;
        ParseContext ctx;
        ctx.params = params;
        ctx.vars = vars;
        ctx.abbreviations = ledger.abbreviations;
        entry.lhs = parse(line.lhs, ctx);
        entry.rhs = parse(line.rhs, ctx);
        if (line.curves) {
          ResolvedCurves curves;
          curves.word = parse(line.curves->word, ctx);
          for (const auto& c : line.curves->inputs)
            curves.inputs.push_back(validate(params, parseCurve(c, vars)));
          for (const auto& c : line.curves->outputs)
            curves.outputs.push_back(validate(params, parseCurve(c, vars)));
          entry.curves = std::move(curves);
        }
      } catch (const Error& e) {
        entry.error = e.what();
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace crosscap
