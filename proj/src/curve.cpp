#include "crosscap/curve.hpp"

#include <array>
#include <cctype>

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

struct FamilyName {
  Family family;
  std::string_view curve;
  std::string_view twist;
};

constexpr std::array<FamilyName, 11> kFamilies{{
    {Family::A, "a", "A"},
    {Family::B, "b", "B"},
    {Family::C, "c", "C"},
    {Family::F, "f", "F"},
    {Family::E, "e", "E"},
    {Family::Alpha, "alpha", "alpha"},
    {Family::Gamma, "gamma", "Gamma"},
    {Family::Delta, "delta", "delta"},
    {Family::D1, "d", "D"},
    {Family::D2, "d", "D"},
    {Family::Boundary, "K", "K"},
}};

const FamilyName& nameOf(Family f) {
  for (const auto& entry : kFamilies)
    if (entry.family == f) return entry;
  return kFamilies[0];
}

std::string subscript(const CurveSymbol& sym) {
  if (sym.family == Family::D1) return "{1," + std::to_string(sym.index) + "}";
  if (sym.family == Family::D2) return "{2," + std::to_string(sym.index) + "}";
  return std::to_string(sym.index);
}

}  // namespace

std::string toString(const CurveSymbol& sym) {
  return std::string(nameOf(sym.family).curve) + subscript(sym);
}

std::string twistName(const CurveSymbol& sym) {
  return std::string(nameOf(sym.family).twist) + subscript(sym);
}

CurveSymbol validate(const SurfaceParams& params, CurveSymbol sym) {
  auto inRange = [&](int lo, int hi) { return sym.index >= lo && sym.index <= hi; };
  bool ok = false;
  switch (sym.family) {
    case Family::A:
    case Family::B:
    case Family::F: ok = inRange(1, params.r); break;
    case Family::C: ok = inRange(1, params.even() ? params.r : params.r - 1); break;
    case Family::E: ok = inRange(1, params.p - 1); break;
    case Family::Alpha:
    case Family::Gamma:
      sym.index = ((sym.index - 1) % params.g + params.g) % params.g + 1;
      ok = true;
      break;
    case Family::Delta: ok = inRange(1, params.g); break;
    case Family::D1:
    case Family::D2: ok = inRange(1, params.r - 2); break;
    case Family::Boundary: ok = inRange(1, params.g - 1); break;
  }
  if (!ok)
    throw Error(ErrorKind::UnknownCurve, toString(sym) + " is not a curve of N(" +
                                             std::to_string(params.g) + "," +
                                             std::to_string(params.p) + ")");
  return sym;
}

bool isValid(const SurfaceParams& params, const CurveSymbol& sym) {
  try {
    validate(params, sym);
    return true;
  } catch (const Error&) {
    return false;
  }
}

CurveSymbol canonical(const CurveSymbol& sym) {
  switch (sym.family) {
    case Family::A:
      if (sym.index == 1) return {Family::Alpha, 1};
      return sym;
    case Family::B: return {Family::Alpha, 2 * sym.index};
    case Family::C: return {Family::Alpha, 2 * sym.index + 1};
    default: return sym;
  }
}

CurveSymbol parseCurve(std::string_view text, const Bindings& vars) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t start = pos;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  const auto word = text.substr(start, pos - start);

  std::optional<Family> family;
  for (const auto& entry : kFamilies)
    if (entry.curve == word) {
      family = entry.family;
      break;
    }
  if (!family) throw SyntaxError(start, "unknown curve family '" + std::string(word) + "'");

  auto rest = text.substr(pos);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
    rest.remove_suffix(1);
  if (rest.empty()) throw SyntaxError(pos, "missing subscript");

  CurveSymbol sym{*family, 0};
  if (rest.front() == '{') {
    if (rest.back() != '}') throw SyntaxError(pos, "unterminated subscript");
    auto inner = rest.substr(1, rest.size() - 2);
    const auto comma = inner.find(',');
    if (*family == Family::D1) {
      if (comma == std::string_view::npos) throw SyntaxError(pos, "d needs two subscripts");
      const long which = evalIndexExpr(inner.substr(0, comma), vars);
      if (which != 1 && which != 2) throw SyntaxError(pos, "d{k,i} needs k in {1,2}");
      sym.family = which == 1 ? Family::D1 : Family::D2;
      sym.index = static_cast<int>(evalIndexExpr(inner.substr(comma + 1), vars));
    } else {
      if (comma != std::string_view::npos) throw SyntaxError(pos, "unexpected second subscript");
      sym.index = static_cast<int>(evalIndexExpr(inner, vars));
    }
  } else {
    if (*family == Family::D1) throw SyntaxError(pos, "d needs subscripts {k,i}");
    for (char ch : rest)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw SyntaxError(pos, "bad subscript '" + std::string(rest) + "'");
    sym.index = std::stoi(std::string(rest));
  }
  return sym;
}

}  // namespace crosscap
