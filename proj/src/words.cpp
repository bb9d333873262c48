#include "crosscap/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "crosscap/error.hpp"

namespace crosscap {

std::string toString(const Generator& gen) {
  switch (gen.kind) {
    case GenKind::Twist: return twistName(gen.curve);
    case GenKind::CrosscapSlide: return gen.i == 1 ? "y" : "y" + std::to_string(gen.i);
    case GenKind::CrosscapTransposition: return "u" + std::to_string(gen.i);
    case GenKind::PunctureSlide: return "v{" + std::to_string(gen.i) + "," + std::to_string(gen.j) + "}";
    case GenKind::Reflection: return "rho" + std::to_string(gen.i);
    case GenKind::Rotation: return "T";
  }
  return "?";
}

Generator validate(const SurfaceParams& params, Generator gen) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::UnknownGenerator, toString(gen) + ": " + why);
  };
  switch (gen.kind) {
    case GenKind::Twist:
      if (gen.curve.sidedness() == Sidedness::OneSided) fail("twists need a two-sided curve");
      try {
        gen.curve = validate(params, gen.curve);
      } catch (const Error& e) {
        fail(e.what());
      }
      break;
    case GenKind::CrosscapSlide:
    case GenKind::CrosscapTransposition:
      if (gen.i < 1 || gen.i > params.g - 1) fail("crosscap index outside [1, g-1]");
      break;
    case GenKind::PunctureSlide:
      if (gen.i < 1 || gen.i > params.g) fail("crosscap index outside [1, g]");
      if (gen.j < 1 || gen.j > params.p) fail("puncture index outside [1, p]");
      break;
    case GenKind::Reflection:
      if (gen.i < 1 || gen.i > 4) fail("reflections are rho1..rho4");
      break;
    case GenKind::Rotation: break;
  }
  return gen;
}

std::vector<Letter> freelyReduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(freelyReduce(std::move(letters))) {}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(long n) const {
  const Word base = n < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (long k = 0; k < std::abs(n); ++k)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word invert(const Word& w) { return w.inverse(); }

Word conjugate(const Word& g, const Word& f) { return f * g * f.inverse(); }

std::string toString(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += toString(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

namespace {

enum class Ident { A, B, C, D, E, F, K, Gamma, Alpha, Rho, T, U, V, Y };

struct IdentName {
  std::string_view text;
  Ident ident;
};

// Longest spellings first so that prefix matching is unambiguous.
constexpr std::array<IdentName, 14> kIdents{{
    {"Gamma", Ident::Gamma},
    {"alpha", Ident::Alpha},
    {"rho", Ident::Rho},
    {"A", Ident::A},
    {"B", Ident::B},
    {"C", Ident::C},
    {"D", Ident::D},
    {"E", Ident::E},
    {"F", Ident::F},
    {"K", Ident::K},
    {"T", Ident::T},
    {"u", Ident::U},
    {"v", Ident::V},
    {"y", Ident::Y},
}};

constexpr int kMaxAbbreviationDepth = 32;

class WordParser {
 public:
  WordParser(std::string_view text, const ParseContext& ctx, int depth)
      : text_(text), ctx_(ctx), depth_(depth) {
    if (ctx_.params) {
      vars_ = ctx_.params->bindings();
    }
    for (const auto& [k, v] : ctx_.vars) vars_[k] = v;
  }

  Word parseAll() {
    Word w = parseSequence();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool atFactorStart() {
    skipSpace();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
  }

  Word parseSequence() {
    if (!atFactorStart()) fail("expected a word");
    Word w = parseFactor();
    for (;;) {
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        w = w * parseFactor();
      } else if (atFactorStart()) {
        w = w * parseFactor();
      } else {
        return w;
      }
    }
  }

  Word parseFactor() {
    Word base = parsePrimary();
    for (;;) {
      skipSpace();
      if (pos_ >= text_.size() || text_[pos_] != '^') return base;
      ++pos_;
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Word by = parseSequence();
        skipSpace();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' after conjugator");
        ++pos_;
        base = conjugate(base, by);
      } else {
        base = base.power(parseExponent());
      }
    }
  }

  long parseExponent() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    long value = 0;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      value = braced();
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = digits();
    } else {
      fail("expected exponent");
    }
    return negative ? -value : value;
  }

  long digits() {
    long value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      if (pos_ - start > 9) fail("integer too large");
    }
    return value;
  }

  std::string_view bracedText() {
    const std::size_t open = pos_;
    const auto close = text_.find('}', pos_);
    if (close == std::string_view::npos) fail("unterminated '{'");
    pos_ = close + 1;
    return text_.substr(open + 1, close - open - 1);
  }

  long evalExpr(std::string_view expr, std::size_t at) {
    try {
      return evalIndexExpr(expr, vars_);
    } catch (const SyntaxError& e) {
      throw SyntaxError(at, e.what());
    }
  }

  long braced() {
    const std::size_t at = pos_;
    return evalExpr(bracedText(), at);
  }

  std::pair<long, long> bracedPair() {
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '{') fail("expected '{i,j}' subscript");
    const auto inner = bracedText();
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
      pos_ = at;
      fail("expected two subscripts");
    }
    return {evalExpr(inner.substr(0, comma), at), evalExpr(inner.substr(comma + 1), at)};
  }

  std::optional<long> optionalIndex() {
    if (pos_ < text_.size() && text_[pos_] == '{') return braced();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return digits();
    return std::nullopt;
  }

  long requiredIndex() {
    auto idx = optionalIndex();
    if (!idx) fail("missing subscript");
    return *idx;
  }

  Word parsePrimary() {
    skipSpace();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = parseSequence();
      skipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      if (digits() != 1) {
        pos_ = at;
        fail("only '1' (the identity) may stand alone as a number");
      }
      return Word();
    }
    if (auto w = tryAbbreviation()) return *w;
    return Word(parseGenerator());
  }

  std::optional<Word> tryAbbreviation() {
    const std::string* best = nullptr;
    std::size_t bestLen = 0;
    for (const auto& [name, body] : ctx_.abbreviations) {
      if (name.size() > bestLen && text_.substr(pos_, name.size()) == name) {
        best = &body;
        bestLen = name.size();
      }
    }
    if (!best) return std::nullopt;
    if (depth_ >= kMaxAbbreviationDepth) fail("abbreviations nest too deeply");
    const std::size_t at = pos_;
    pos_ += bestLen;
    ParseContext inner = ctx_;
    inner.vars = vars_;
    try {
      return WordParser(*best, inner, depth_ + 1).parseAll();
    } catch (const SyntaxError& e) {
      throw SyntaxError(at, "in abbreviation '" + std::string(text_.substr(at, bestLen)) + "': " + e.what());
    }
  }

  Generator parseGenerator() {
    const std::size_t at = pos_;
    const IdentName* match = nullptr;
    for (const auto& entry : kIdents)
      if (text_.substr(pos_, entry.text.size()) == entry.text) {
        match = &entry;
        break;
      }
    if (!match) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown generator '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += match->text.size();

    Generator gen;
    auto twist = [&](Family f) {
      return Generator::twist({f, static_cast<int>(requiredIndex())});
    };
    switch (match->ident) {
      case Ident::A: gen = twist(Family::A); break;
      case Ident::B: gen = twist(Family::B); break;
      case Ident::C: gen = twist(Family::C); break;
      case Ident::E: gen = twist(Family::E); break;
      case Ident::F: gen = twist(Family::F); break;
      case Ident::K: gen = twist(Family::Boundary); break;
      case Ident::Gamma: gen = twist(Family::Gamma); break;
      case Ident::Alpha: gen = twist(Family::Alpha); break;
      case Ident::D: {
        auto [which, i] = bracedPair();
        if (which != 1 && which != 2) {
          pos_ = at;
          fail("D{k,i} needs k in {1,2}");
        }
        gen = Generator::twist({which == 1 ? Family::D1 : Family::D2, static_cast<int>(i)});
        break;
      }
      case Ident::Rho: gen = Generator::reflection(static_cast<int>(requiredIndex())); break;
      case Ident::T: gen = Generator::rotation(); break;
      case Ident::U: gen = Generator::transposition(static_cast<int>(requiredIndex())); break;
      case Ident::Y: gen = Generator::slide(static_cast<int>(optionalIndex().value_or(1))); break;
      case Ident::V: {
        auto [i, j] = bracedPair();
        gen = Generator::punctureSlide(static_cast<int>(i), static_cast<int>(j));
        break;
      }
    }
    if (ctx_.params) return validate(*ctx_.params, gen);
    if (gen.kind == GenKind::Reflection && (gen.i < 1 || gen.i > 4))
      throw Error(ErrorKind::UnknownGenerator, "reflections are rho1..rho4");
    return gen;
  }

  std::string_view text_;
  const ParseContext& ctx_;
  int depth_;
  Bindings vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse(std::string_view text, const ParseContext& ctx) {
  return WordParser(text, ctx, 0).parseAll();
}

}  // namespace crosscap
