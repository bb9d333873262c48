#include "crosscap/model.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

int wrap(int l, int g) { return ((l - 1) % g + g) % g + 1; }

std::vector<int> identityPerm(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

void swapEntries(std::vector<int>& perm, int a, int b) { std::swap(perm[a - 1], perm[b - 1]); }

bool isPermutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

ZVector rowTimes(const ZVector& row, const ZMatrix& m) {
  ZVector out(row.size(), 0);
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i) out[j] += row[i] * m(i, j);
  return out;
}

std::string joinInts(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string joinInts(const std::vector<int>& v) {
  return joinInts(std::vector<std::int64_t>(v.begin(), v.end()));
}

}  // namespace

Symmetry compose(const Symmetry& outer, const Symmetry& inner) {
  Symmetry out;
  out.crosscaps.resize(inner.crosscaps.size());
  for (std::size_t i = 0; i < inner.crosscaps.size(); ++i)
    out.crosscaps[i] = outer.crosscaps[inner.crosscaps[i] - 1];
  out.punctures.resize(inner.punctures.size());
  for (std::size_t k = 0; k < inner.punctures.size(); ++k)
    out.punctures[k] = outer.punctures[inner.punctures[k] - 1];
  out.sign = outer.sign * inner.sign;
  return out;
}

Convention defaultConvention(const SurfaceParams& params) {
  const int g = params.g;
  const int p = params.p;
  const int r = params.r;
  Convention conv;
  conv.params = params;
  conv.gammaOrigin = 1;

  // rho1 reflects the circle of crosscaps through crosscap r+3, rho2 through
  // the gap after it, so that rho2 rho1 is the rotation l -> l+1.
  Symmetry rho1{identityPerm(g), identityPerm(p), -1};
  Symmetry rho2{identityPerm(g), identityPerm(p), -1};
  for (int l = 1; l <= g; ++l) {
    rho1.crosscaps[l - 1] = wrap(2 * (r + 3) - l, g);
    rho2.crosscaps[l - 1] = wrap(2 * (r + 3) - l + 1, g);
  }
  if (p >= 2) swapEntries(rho1.punctures, 1, 2);

  // rho3 fixes gamma_5, b_1 and alpha_{r+5} setwise; rho4 reverses the
  // first 2r crosscaps. On punctures rho3 rho4 is the cycle (1 2 ... p).
  Symmetry rho3{identityPerm(g), identityPerm(p), -1};
  swapEntries(rho3.crosscaps, 2, 3);
  swapEntries(rho3.crosscaps, 5, 8);
  swapEntries(rho3.crosscaps, 6, 7);
  swapEntries(rho3.crosscaps, r + 5, r + 6);
  for (int k = 1; k <= p; ++k) rho3.punctures[k - 1] = p + 1 - k;

  Symmetry rho4{identityPerm(g), identityPerm(p), -1};
  for (int i = 1; i <= 2 * r; ++i) rho4.crosscaps[i - 1] = 2 * r + 1 - i;
  for (int k = 1; k < p; ++k) rho4.punctures[k - 1] = p - k;

  conv.reflections = {rho1, rho2, rho3, rho4};
  return conv;
}

ZMatrix transvection(const ZVector& cls, const ZVector& pairing, int exp) {
  const int n = static_cast<int>(cls.size());
  ZMatrix m = ZMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) += exp * cls[i] * pairing[j];
  return m;
}

Model::Model(const SurfaceParams& params) : Model(defaultConvention(params)) {}

Model::Model(const Convention& conv) : conv_(conv) {
  const auto& params = conv_.params;
  if (conv_.reflections.size() != 4)
    throw Error(ErrorKind::ConventionFormat, "expected four reflections");
  for (const auto& s : conv_.reflections) {
    if (!isPermutation(s.crosscaps, params.g) || !isPermutation(s.punctures, params.p) ||
        (s.sign != 1 && s.sign != -1))
      throw Error(ErrorKind::ConventionFormat, "reflection data is not a signed permutation");
  }
  if (conv_.gammaOrigin < 1 || conv_.gammaOrigin > params.g)
    throw Error(ErrorKind::ConventionFormat, "gamma origin outside [1, g]");
  buildDerivedClasses();
}

ZVector Model::reduce(const ZVector& extended) const {
  const int g = params().g;
  const int p = params().p;
  ZVector out(rank(), 0);
  for (int i = 0; i < g + p - 1; ++i) out[i] = extended[i];
  const std::int64_t last = extended[g + p - 1];
  if (last != 0) {
    // nu_p = -2 (mu_1 + ... + mu_g) - (nu_1 + ... + nu_{p-1})
    for (int i = 0; i < g; ++i) out[i] -= 2 * last;
    for (int k = 0; k < p - 1; ++k) out[g + k] -= last;
  }
  return out;
}

ZMatrix Model::symmetryMatrix(const Symmetry& s) const {
  const int g = params().g;
  const int p = params().p;
  ZMatrix m(rank());
  for (int i = 1; i <= g; ++i) {
    ZVector ext(g + p, 0);
    ext[s.crosscaps[i - 1] - 1] = s.sign;
    m.setColumn(i - 1, reduce(ext));
  }
  for (int k = 1; k < p; ++k) {
    ZVector ext(g + p, 0);
    ext[g + s.punctures[k - 1] - 1] = s.sign;
    m.setColumn(g + k - 1, reduce(ext));
  }
  return m;
}

ZMatrix Model::slideMatrix(int i) const {
  ZMatrix m = ZMatrix::identity(rank());
  m(i - 1, i - 1) = -1;
  m(i - 1, i) = 2;
  return m;
}

ZMatrix Model::punctureSlideMatrix(int i, int j) const {
  const int g = params().g;
  const int p = params().p;
  ZMatrix m = ZMatrix::identity(rank());
  ZVector ext(g + p, 0);
  ext[i - 1] = 1;
  ext[g + j - 1] = 1;
  m.setColumn(i - 1, reduce(ext));
  if (j < p) m(g + j - 1, g + j - 1) = -1;
  return m;
}

CurveClass Model::supportedClass(const std::vector<int>& crosscaps) const {
  CurveClass out;
  out.coefficients.assign(rank(), 0);
  out.pairing.assign(rank(), 0);
  int sign = 1;
  for (int c : crosscaps) {
    out.coefficients[c - 1] += 1;
    out.pairing[c - 1] += sign;
    sign = -sign;
  }
  std::vector<int> sorted = crosscaps;
  std::sort(sorted.begin(), sorted.end());
  out.support = sorted;
  return out;
}

CurveClass Model::transported(const CurveClass& src, const ZMatrix& m, const ZMatrix& mInverse,
                              bool reversed) const {
  CurveClass out;
  out.coefficients = m.apply(src.coefficients);
  out.pairing = rowTimes(src.pairing, mInverse);
  if (reversed) out.pairing = -out.pairing;
  out.orientationTag = reversed ? -src.orientationTag : src.orientationTag;
  return out;
}

void Model::buildDerivedClasses() {
  const auto& params = conv_.params;
  const int r = params.r;
  const int p = params.p;
  auto base = [&](Family f, int i) { return curve({f, i}); };

  auto twist = [&](Family f, int i, int exp) {
    const CurveClass c = base(f, i);
    return transvection(c.coefficients, c.pairing, exp);
  };
  // Product of factors (X_a Y_b^-1) applied right to left; returns M and M^-1.
  auto fourStep = [&](std::pair<Family, int> x, const std::vector<std::pair<Family, int>>& ys) {
    ZMatrix m = ZMatrix::identity(rank());
    ZMatrix inv = ZMatrix::identity(rank());
    for (const auto& y : ys) {
      m = m * twist(x.first, x.second, 1) * twist(y.first, y.second, -1);
      inv = twist(y.first, y.second, 1) * twist(x.first, x.second, -1) * inv;
    }
    return std::pair{m, inv};
  };

  d1_.clear();
  d2_.clear();
  for (int i = 1; i + 2 <= r; ++i) {
    const auto [w, wInv] = fourStep({Family::A, i}, {{Family::B, i + 1},
                                                     {Family::C, i},
                                                     {Family::C, i + 1},
                                                     {Family::B, i + 1}});
    d2_.push_back(transported(base(Family::A, i + 1), w, wInv, false));
    const auto [w2, w2Inv] = fourStep({Family::C, i + 1}, {{Family::B, i},
                                                           {Family::A, i},
                                                           {Family::C, i},
                                                           {Family::B, i}});
    d1_.push_back(transported(d2_.back(), w2, w2Inv, false));
  }

  auto mapSupport = [](const Symmetry& s, const std::optional<std::vector<int>>& support) {
    std::optional<std::vector<int>> out;
    if (!support) return out;
    std::vector<int> mapped;
    for (int c : *support) mapped.push_back(s.crosscaps[c - 1]);
    std::sort(mapped.begin(), mapped.end());
    out = mapped;
    return out;
  };
  auto reflect = [&](int k, const CurveClass& src) {
    const ZMatrix m = symmetryMatrix(reflection(k));
    CurveClass out = transported(src, m, m, true);
    out.support = mapSupport(reflection(k), src.support);
    return out;
  };

  f_.clear();
  f_.push_back(reflect(3, base(Family::A, 1)));
  for (int i = 2; i <= r; ++i) f_.push_back(reflect(4, base(Family::A, i)));

  // e_{p-1} = rho4(a_1), then alternately rho3 and rho4:
  // e_{p-1} -> e_1 -> e_{p-2} -> e_2 -> ...
  e_.assign(std::max(p - 1, 0), CurveClass{});
  if (p >= 2) {
    std::vector<bool> done(p, false);
    int idx = p - 1;
    e_[idx - 1] = reflect(4, base(Family::A, 1));
    done[idx] = true;
    int next = 3;
    for (int count = 1; count < p - 1; ++count) {
      const int target = next == 3 ? p - idx : p - 1 - idx;
      e_[target - 1] = reflect(next, e_[idx - 1]);
      done[target] = true;
      idx = target;
      next = next == 3 ? 4 : 3;
    }
  }
}

CurveClass Model::curve(const CurveSymbol& symIn) const {
  const auto& params = conv_.params;
  const CurveSymbol sym = canonical(validate(params, symIn));
  const int g = params.g;
  switch (sym.family) {
    case Family::Alpha: return supportedClass({sym.index, wrap(sym.index + 1, g)});
    case Family::A: {
      std::vector<int> path;
      for (int c = 1; c <= 2 * sym.index; ++c) path.push_back(c);
      return supportedClass(path);
    }
    case Family::Gamma: {
      std::vector<int> path;
      for (int t = 0; t < 4; ++t) path.push_back(wrap(conv_.gammaOrigin + sym.index - 1 + t, g));
      return supportedClass(path);
    }
    case Family::Delta: {
      CurveClass out;
      out.coefficients.assign(rank(), 0);
      out.coefficients[sym.index - 1] = 1;
      out.pairing = out.coefficients;
      out.oneSided = true;
      out.support = std::vector<int>{sym.index};
      return out;
    }
    case Family::Boundary: {
      CurveClass out;
      out.coefficients.assign(rank(), 0);
      out.coefficients[sym.index - 1] = 2;
      out.coefficients[sym.index] = 2;
      out.pairing.assign(rank(), 0);
      return out;
    }
    case Family::D1: return d1_.at(sym.index - 1);
    case Family::D2: return d2_.at(sym.index - 1);
    case Family::F: return f_.at(sym.index - 1);
    case Family::E: return e_.at(sym.index - 1);
    case Family::B:
    case Family::C: break;
  }
  throw Error(ErrorKind::UnknownCurve, toString(symIn));
}

std::optional<std::vector<int>> Model::support(const CurveSymbol& sym) const {
  return curve(sym).support;
}

std::optional<int> Model::intersection(const CurveSymbol& s1, const CurveSymbol& s2) const {
  const CurveSymbol c1 = canonical(validate(params(), s1));
  const CurveSymbol c2 = canonical(validate(params(), s2));
  if (c1 == c2 && c1.sidedness() == Sidedness::TwoSided) return 0;
  const auto sup1 = support(c1);
  const auto sup2 = support(c2);
  if (!sup1 || !sup2) return std::nullopt;
  std::vector<int> common;
  std::set_intersection(sup1->begin(), sup1->end(), sup2->begin(), sup2->end(),
                        std::back_inserter(common));
  return static_cast<int>(common.size() % 2);
}

std::vector<CurveSymbol> Model::catalog() const {
  std::vector<CurveSymbol> out;
  const auto& params = conv_.params;
  for (Family f : {Family::A, Family::B, Family::C, Family::F, Family::E, Family::Alpha,
                   Family::Gamma, Family::Delta, Family::D1, Family::D2, Family::Boundary})
    for (int i = 1; i <= params.g; ++i)
      if (isValid(params, {f, i})) out.push_back({f, i});
  return out;
}

std::string serialize(const Convention& conv) {
  std::ostringstream out;
  out << "crosscap-convention 1\n";
  out << "g " << conv.params.g << "\n";
  out << "p " << conv.params.p << "\n";
  const int g = conv.params.g;
  const int p = conv.params.p;
  out << "basis mu1..mu" << g;
  if (p > 1) out << " nu1..nu" << p - 1;
  out << "; nu" << p << " = -2(mu1+...+mu" << g << ")";
  if (p > 1) out << " - (nu1+...+nu" << p - 1 << ")";
  out << "\n";
  out << "gamma-origin " << conv.gammaOrigin << "\n";
  for (std::size_t k = 0; k < conv.reflections.size(); ++k) {
    const auto& s = conv.reflections[k];
    out << "rho" << k + 1 << " sign " << s.sign << " crosscaps " << joinInts(s.crosscaps)
        << " punctures " << joinInts(s.punctures) << "\n";
  }
  out << "intersection shared-support-parity; unknown for d and K curves\n";
  const Model model(conv);
  for (const auto& sym : model.catalog()) {
    const CurveClass c = model.curve(sym);
    out << "class " << toString(sym) << " coefficients " << joinInts(c.coefficients)
        << " pairing " << joinInts(c.pairing) << " tag " << c.orientationTag
        << (c.oneSided ? " one-sided" : " two-sided") << "\n";
  }
  return out.str();
}

Convention parseConvention(std::string_view text) {
  auto fail = [](const std::string& why) -> void { throw Error(ErrorKind::ConventionFormat, why); };
  std::istringstream in{std::string(text)};
  std::string line;
  int g = 0;
  int p = 0;
  int gammaOrigin = 1;
  std::vector<Symmetry> reflections(4);
  std::vector<bool> haveReflection(4, false);
  std::set<std::string> classLines;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string key;
    words >> key;
    if (key == "crosscap-convention") {
      int version = 0;
      words >> version;
      if (version != 1) fail("unsupported convention version");
      header = true;
    } else if (key == "g") {
      words >> g;
    } else if (key == "p") {
      words >> p;
    } else if (key == "gamma-origin") {
      words >> gammaOrigin;
    } else if (key.rfind("rho", 0) == 0 && key.size() == 4) {
      const int k = key[3] - '0';
      if (k < 1 || k > 4) fail("unknown reflection " + key);
      Symmetry s;
      std::string tok;
      std::vector<int>* target = nullptr;
      while (words >> tok) {
        if (tok == "sign") {
          words >> s.sign;
        } else if (tok == "crosscaps") {
          target = &s.crosscaps;
        } else if (tok == "punctures") {
          target = &s.punctures;
        } else if (target) {
          try {
            target->push_back(std::stoi(tok));
          } catch (const std::exception&) {
            fail("bad integer '" + tok + "' in " + key);
          }
        } else {
          fail("unexpected token '" + tok + "' in " + key);
        }
      }
      reflections[k - 1] = s;
      haveReflection[k - 1] = true;
    } else if (key == "class") {
      classLines.insert(line);
    } else if (key == "basis" || key == "intersection") {
      // Descriptive lines; fixed by the implementation.
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!header) fail("missing crosscap-convention header");
  for (bool have : haveReflection)
    if (!have) fail("all four reflections must be given");
  Convention conv;
  try {
    conv.params = build(g, p);
  } catch (const Error& e) {
    fail(e.what());
  }
  conv.reflections = reflections;
  conv.gammaOrigin = gammaOrigin;
  if (!classLines.empty()) {
    std::istringstream derived(serialize(conv));
    std::set<std::string> expected;
    while (std::getline(derived, line))
      if (line.rfind("class ", 0) == 0) expected.insert(line);
    for (const auto& given : classLines)
      if (!expected.count(given)) fail("class line disagrees with the derived model: " + given);
  }
  return conv;
}

std::string conventionHash(const Convention& conv) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize(conv)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace crosscap
