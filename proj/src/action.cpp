#include "crosscap/action.hpp"

#include <algorithm>
#include <set>

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

int wrap(int l, int g) { return ((l - 1) % g + g) % g + 1; }

bool familyHasReliableSupport(Family f) {
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::Alpha:
    case Family::Gamma:
    case Family::Delta: return true;
    default: return false;
  }
}

}  // namespace

std::string toString(const ActionState& state) {
  std::string out;
  for (const Letter& l : state.pending) {
    out += toString(l.gen);
    if (l.exp < 0) out += "^-1";
    out += ' ';
  }
  return out + toString(state.curve);
}

std::string toString(const DerivationTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    out += s.rule + " " + toString(Word(s.letter.gen, s.letter.exp)) + ": " + toString(s.before) +
           " -> " + toString(s.after) + " (" + s.justification + ")\n";
  }
  return out;
}

ActionEngine::ActionEngine(const Model& model) : model_(model) {
  const auto& params = model_.params();
  const int g = params.g;
  const int p = params.p;
  const int r = params.r;

  // Curves of different families with identical classes and supports are
  // the same curve (a_2 = gamma_1 under the default convention).
  for (const auto& sym : model_.catalog()) {
    if (sym.family != Family::A || sym.index < 2) continue;
    const CurveClass c = model_.curve(sym);
    for (int j = 1; j <= g; ++j) {
      const CurveClass gamma = model_.curve({Family::Gamma, j});
      if (gamma.coefficients == c.coefficients && gamma.pairing == c.pairing &&
          gamma.support == c.support)
        aliases_[sym] = {Family::Gamma, j};
    }
  }

  addSupportAxioms(Generator::rotation(), model_.rotation(), false);
  addSupportAxioms(Generator::reflection(1), model_.reflection(1), true);
  addSupportAxioms(Generator::reflection(2), model_.reflection(2), true);

  auto pair = [&](int k, CurveSymbol a, CurveSymbol b) {
    const Generator gen = Generator::reflection(k);
    a = name(a);
    b = name(b);
    forward_[gen][a] = {b, true};
    forward_[gen][b] = {a, true};
  };
  // rho3 fixes gamma_5, b_1 and alpha_{r+5}; it carries a_1 to f_1.
  pair(3, {Family::Gamma, 5}, {Family::Gamma, 5});
  pair(3, {Family::B, 1}, {Family::B, 1});
  pair(3, {Family::Alpha, r + 5}, {Family::Alpha, r + 5});
  pair(3, {Family::A, 1}, {Family::F, 1});
  // rho4 carries a_i to f_i (i >= 2) and a_1 to e_{p-1}.
  for (int i = 2; i <= r; ++i) pair(4, {Family::A, i}, {Family::F, i});
  if (p >= 2) {
    pair(4, {Family::A, 1}, {Family::E, p - 1});
    // The ladder e_{p-1} -> e_1 -> e_{p-2} -> e_2 -> ... alternates rho3, rho4.
    int idx = p - 1;
    int next = 3;
    for (int count = 1; count < p - 1; ++count) {
      const int target = next == 3 ? p - idx : p - 1 - idx;
      pair(next, {Family::E, idx}, {Family::E, target});
      idx = target;
      next = next == 3 ? 4 : 3;
    }
  }

  for (int i = 1; i < g; ++i) {
    const Generator u = Generator::transposition(i);
    const Generator y = Generator::slide(i);
    addFixingAxioms(u, {i, i + 1});
    addFixingAxioms(y, {i, i + 1});
    const CurveSymbol alpha = name({Family::Alpha, i});
    forward_[u][alpha] = {alpha, false};
    forward_[y][alpha] = {alpha, false};
    // u_i interchanges the crosscaps i and i+1.
    forward_[u][{Family::Delta, i}] = {{Family::Delta, i + 1}, false};
    forward_[u][{Family::Delta, i + 1}] = {{Family::Delta, i}, false};
  }
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= p; ++j) addFixingAxioms(Generator::punctureSlide(i, j), {i});

  for (const auto& [gen, map] : forward_)
    for (const auto& [from, to] : map) backward_[gen][to.curve] = {from, to.reversed};
}

void ActionEngine::addSupportAxioms(const Generator& gen, const Symmetry& s, bool reversed) {
  const auto& params = model_.params();
  const int g = params.g;
  auto& table = forward_[gen];
  for (int l = 1; l <= g; ++l) {
    table[{Family::Delta, l}] = {{Family::Delta, s.crosscaps[l - 1]}, reversed};
    // alpha_l runs through crosscaps l, l+1; its image runs through the
    // images, which are again adjacent for a rotation or reflection.
    const int a = s.crosscaps[l - 1];
    const int b = s.crosscaps[wrap(l + 1, g) - 1];
    std::optional<int> alpha;
    if (b == wrap(a + 1, g)) alpha = a;
    else if (a == wrap(b + 1, g)) alpha = b;
    if (alpha) table[{Family::Alpha, l}] = {{Family::Alpha, *alpha}, reversed};

    std::set<int> image;
    for (int t = 0; t < 4; ++t) image.insert(s.crosscaps[wrap(l + t, g) - 1]);
    for (int start = 1; start <= g; ++start) {
      std::set<int> run;
      for (int t = 0; t < 4; ++t) run.insert(wrap(start + t, g));
      if (run == image) {
        const int origin = model_.convention().gammaOrigin;
        table[{Family::Gamma, wrap(l - origin + 1, g)}] = {
            {Family::Gamma, wrap(start - origin + 1, g)}, reversed};
        break;
      }
    }
  }
}

void ActionEngine::addFixingAxioms(const Generator& gen, const std::vector<int>& avoid) {
  auto& table = forward_[gen];
  for (const auto& sym : model_.catalog()) {
    if (!familyHasReliableSupport(sym.family)) continue;
    const auto sup = model_.support(sym);
    if (!sup) continue;
    const bool disjoint = std::none_of(sup->begin(), sup->end(), [&](int c) {
      return std::find(avoid.begin(), avoid.end(), c) != avoid.end();
    });
    const CurveSymbol key = name(sym);
    if (disjoint) table[key] = {key, false};
  }
}

CurveSymbol ActionEngine::name(const CurveSymbol& c) const {
  const CurveSymbol sym = canonical(validate(model_.params(), c));
  const auto it = aliases_.find(sym);
  return it == aliases_.end() ? sym : it->second;
}

std::optional<AxiomImage> ActionEngine::axiom(const Generator& genIn, int exp,
                                              const CurveSymbol& c) const {
  const Generator gen = validate(model_.params(), genIn);
  const auto& tables = exp > 0 ? forward_ : backward_;
  // Reflections are involutions: their inverse has the same table.
  const auto it = tables.find(gen);
  if (it == tables.end()) return std::nullopt;
  const auto found = it->second.find(name(c));
  if (found == it->second.end()) return std::nullopt;
  return found->second;
}

std::optional<TraceStep> ActionEngine::step(const ActionState& state, const Letter& letterIn) const {
  const auto& params = model_.params();
  Letter letter = letterIn;
  letter.gen = validate(params, letter.gen);
  TraceStep out{"", letter, state, state, ""};

  if (letter.gen.kind == GenKind::Twist) {
    const CurveSymbol x = name(letter.gen.curve);
    if (!state.pending.empty()) {
      const Letter& outer = state.pending.front();
      if (outer.gen.kind == GenKind::Twist && name(outer.gen.curve) == x &&
          outer.exp == -letter.exp) {
        out.rule = "cancel";
        out.after.pending.erase(out.after.pending.begin());
        out.justification = "free cancellation against pending twist";
        return out;
      }
      if (state.pending.size() == 1 && x == state.curve) {
        const CurveSymbol b = name(outer.gen.curve);
        if (model_.intersection(b, x) == 1) {
          out.rule = "R2";
          out.after = {b, {}};
          out.justification = "braid move: " + toString(x) + " and " + toString(b) + " meet once";
          if (outer.exp != letter.exp) out.justification += " (signs differ)";
          return out;
        }
      }
    }
    const auto meet = model_.intersection(x, state.curve);
    if (!meet) return std::nullopt;
    bool clear = *meet == 0;
    for (const Letter& l : state.pending) {
      if (!clear) break;
      clear = model_.intersection(x, l.gen.curve) == 0;
    }
    if (clear) {
      out.rule = "R1";
      out.justification = toString(x) + " is disjoint from the tracked curves";
      return out;
    }
    if (state.pending.empty() && *meet == 1) {
      out.rule = "R2";
      out.after.pending.insert(out.after.pending.begin(), letter);
      out.justification = toString(x) + " meets " + toString(state.curve) + " once; twist kept pending";
      return out;
    }
    return std::nullopt;
  }

  const auto image = axiom(letter.gen, letter.exp, state.curve);
  if (!image) return std::nullopt;
  out.after.curve = image->curve;
  for (Letter& l : out.after.pending) {
    const auto moved = axiom(letter.gen, letter.exp, l.gen.curve);
    if (!moved) return std::nullopt;
    l.gen.curve = moved->curve;
    if (moved->reversed) l.exp = -l.exp;
  }
  out.rule = state.pending.empty() ? "R3" : "R4";
  out.justification = "axiom " + toString(letter.gen) + (letter.exp < 0 ? "^-1" : "") + "(" +
                      toString(state.curve) + ") = " + toString(image->curve);
  if (!state.pending.empty()) out.justification += ", pending twists transported";
  return out;
}

ActionResult ActionEngine::apply(const Word& w, const CurveSymbol& c) const {
  ActionResult result;
  ActionState state{name(c), {}};
  bool reversed = false;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto s = step(state, *it);
    if (!s) {
      result.reason = "no rule applies to " + toString(Word(it->gen, it->exp)) + " at " +
                      toString(state);
      return result;
    }
    if (s->rule == "R3" || s->rule == "R4") {
      const auto image = axiom(it->gen, it->exp, state.curve);
      if (image && image->reversed) reversed = !reversed;
    }
    state = s->after;
    result.trace.steps.push_back(*s);
  }
  if (!state.pending.empty()) {
    result.reason = "image " + toString(state) + " is not a catalog curve";
    return result;
  }
  result.image = state.curve;
  result.reversed = reversed;
  return result;
}

TupleCheck ActionEngine::checkTuple(const Word& w, const std::vector<CurveSymbol>& inputs,
                                    const std::vector<CurveSymbol>& outputs) const {
  if (inputs.size() != outputs.size())
    throw Error(ErrorKind::LedgerFormat, "curve tuples differ in length");
  TupleCheck out;
  bool unknown = false;
  bool mismatch = false;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    out.results.push_back(apply(w, inputs[k]));
    const auto& res = out.results.back();
    const CurveSymbol expected = name(outputs[k]);
    if (!res.image) {
      unknown = true;
      if (out.message.empty()) out.message = toString(inputs[k]) + ": " + res.reason;
    } else if (*res.image != expected) {
      mismatch = true;
      out.message = toString(inputs[k]) + " goes to " + toString(*res.image) + ", expected " +
                    toString(outputs[k]);
    }
  }
  out.verdict = mismatch ? Verdict::Fail : unknown ? Verdict::Undecided : Verdict::Pass;
  return out;
}

bool ActionEngine::replay(const Word& w, const CurveSymbol& c, const DerivationTrace& trace) const {
  const auto& letters = w.letters();
  if (trace.steps.size() > letters.size()) return false;
  ActionState state{name(c), {}};
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const Letter& letter = letters[letters.size() - 1 - k];
    const auto& recorded = trace.steps[k];
    if (!(recorded.before == state) || !(recorded.letter.gen == validate(model_.params(), letter.gen)) ||
        recorded.letter.exp != letter.exp)
      return false;
    const auto s = step(state, letter);
    if (!s || !(s->after == recorded.after) || s->rule != recorded.rule) return false;
    state = s->after;
  }
  return true;
}

}  // namespace crosscap
