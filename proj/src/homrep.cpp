#include "crosscap/homrep.hpp"

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

Symmetry inverse(const Symmetry& s) {
  Symmetry out = s;
  for (std::size_t i = 0; i < s.crosscaps.size(); ++i) out.crosscaps[s.crosscaps[i] - 1] = static_cast<int>(i) + 1;
  for (std::size_t k = 0; k < s.punctures.size(); ++k) out.punctures[s.punctures[k] - 1] = static_cast<int>(k) + 1;
  return out;
}

Generator normalize(const SurfaceParams& params, const Generator& gen) {
  Generator out = validate(params, gen);
  if (out.kind == GenKind::Twist) out.curve = canonical(out.curve);
  return out;
}

}  // namespace

bool IntersectionForm::preservedBy(const F2Matrix& m) const {
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const int before = (*this)(F2Vector{1} << i, F2Vector{1} << j);
      if ((*this)(m.column(i), m.column(j)) != before) return false;
    }
  return true;
}

Representation::Representation(const Model& model) : model_(model) {
  const auto& params = model_.params();
  form_.dim = model_.rank();
  form_.diagonal = (F2Vector{1} << params.g) - 1;

  std::vector<Generator> alphabet;
  for (const auto& sym : model_.catalog())
    if (sym.sidedness() == Sidedness::TwoSided) alphabet.push_back(Generator::twist(canonical(sym)));
  for (int i = 1; i < params.g; ++i) {
    alphabet.push_back(Generator::slide(i));
    alphabet.push_back(Generator::transposition(i));
  }
  for (int i = 1; i <= params.g; ++i)
    for (int j = 1; j <= params.p; ++j) alphabet.push_back(Generator::punctureSlide(i, j));
  for (int k = 1; k <= 4; ++k) alphabet.push_back(Generator::reflection(k));
  alphabet.push_back(Generator::rotation());
  for (const auto& gen : alphabet) table_.emplace(gen, compute(gen));
}

ZMatrix Representation::twistMatrixZ(const CurveClass& c, int exp) const {
  if (c.oneSided) throw Error(ErrorKind::OneSidedCurve, "no Dehn twist about a one-sided curve");
  return transvection(c.coefficients, c.pairing, exp);
}

F2Matrix Representation::twistMatrixF2(const CurveClass& c) const {
  if (c.oneSided) throw Error(ErrorKind::OneSidedCurve, "no Dehn twist about a one-sided curve");
  const F2Vector cls = mod2(c.coefficients);
  F2Matrix m(dim());
  for (int j = 0; j < dim(); ++j) {
    F2Vector col = F2Vector{1} << j;
    if (form_(col, cls)) col ^= cls;
    for (int i = 0; i < dim(); ++i) m.set(i, j, (col >> i) & 1u);
  }
  return m;
}

Representation::Cached Representation::compute(const Generator& genIn) const {
  const auto& params = model_.params();
  const int g = params.g;
  const int p = params.p;
  const int n = dim();
  const Generator gen = normalize(params, genIn);

  // F2 image of a signed crosscap/puncture permutation (signs vanish).
  auto permutationF2 = [&](const Symmetry& s) {
    F2Vector allNu = 0;
    for (int k = 0; k < p - 1; ++k) allNu |= F2Vector{1} << (g + k);
    auto nuBit = [&](int k) { return k == p ? allNu : F2Vector{1} << (g + k - 1); };
    F2Matrix m(n);
    auto setColumn = [&](int j, F2Vector col) {
      for (int i = 0; i < n; ++i) m.set(i, j, (col >> i) & 1u);
    };
    for (int i = 1; i <= g; ++i) setColumn(i - 1, F2Vector{1} << (s.crosscaps[i - 1] - 1));
    for (int k = 1; k < p; ++k) setColumn(g + k - 1, nuBit(s.punctures[k - 1]));
    return m;
  };

  Cached out;
  switch (gen.kind) {
    case GenKind::Twist: {
      const CurveClass c = model_.curve(gen.curve);
      out.z = twistMatrixZ(c, 1);
      out.zInverse = twistMatrixZ(c, -1);
      out.f2 = twistMatrixF2(c);
      out.f2Inverse = out.f2.inverse();
      break;
    }
    case GenKind::Reflection:
    case GenKind::Rotation: {
      const Symmetry s = gen.kind == GenKind::Rotation ? model_.rotation() : model_.reflection(gen.i);
      if (gen.kind == GenKind::Rotation) {
        // Evaluated as the product rho2 rho1.
        const Cached r1 = compute(Generator::reflection(1));
        const Cached r2 = compute(Generator::reflection(2));
        out.z = r2.z * r1.z;
        out.zInverse = r1.zInverse * r2.zInverse;
        out.f2 = r2.f2 * r1.f2;
        out.f2Inverse = r1.f2Inverse * r2.f2Inverse;
      } else {
        out.z = model_.symmetryMatrix(s);
        out.zInverse = model_.symmetryMatrix(inverse(s));
        out.f2 = permutationF2(s);
        out.f2Inverse = permutationF2(inverse(s));
      }
      break;
    }
    case GenKind::CrosscapSlide: {
      // y^2 is the twist about the boundary of the Klein bottle, which is
      // trivial on homology, so y is its own inverse here.
      out.z = model_.slideMatrix(gen.i);
      out.zInverse = out.z;
      out.f2 = F2Matrix::identity(n);
      out.f2Inverse = out.f2;
      break;
    }
    case GenKind::CrosscapTransposition: {
      // u = A^-1 y with A the twist about alpha_i.
      const CurveClass a = model_.curve({Family::Alpha, gen.i});
      const ZMatrix y = model_.slideMatrix(gen.i);
      out.z = twistMatrixZ(a, -1) * y;
      out.zInverse = y * twistMatrixZ(a, 1);
      Symmetry swap{{}, {}, 1};
      for (int i = 1; i <= g; ++i) swap.crosscaps.push_back(i);
      for (int k = 1; k <= p; ++k) swap.punctures.push_back(k);
      std::swap(swap.crosscaps[gen.i - 1], swap.crosscaps[gen.i]);
      out.f2 = permutationF2(swap);
      out.f2Inverse = out.f2;
      break;
    }
    case GenKind::PunctureSlide: {
      out.z = model_.punctureSlideMatrix(gen.i, gen.j);
      out.zInverse = out.z;
      // x -> x + Q(x, mu_i) nu_j, where nu_p = nu_1 + ... + nu_{p-1} mod 2.
      F2Vector nu = 0;
      if (gen.j < p) nu = F2Vector{1} << (g + gen.j - 1);
      else
        for (int k = 0; k < p - 1; ++k) nu |= F2Vector{1} << (g + k);
      out.f2 = F2Matrix::identity(n);
      if (nu != 0)
        for (int i = 0; i < n; ++i)
          if ((nu >> i) & 1u) out.f2.set(i, gen.i - 1, true);
      out.f2Inverse = out.f2;
      break;
    }
  }
  return out;
}

const Representation::Cached& Representation::lookup(const Generator& gen, Cached& scratch) const {
  const Generator key = normalize(model_.params(), gen);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  scratch = compute(key);
  return scratch;
}

ZMatrix Representation::generatorZ(const Generator& gen, int exp) const {
  Cached scratch;
  const Cached& c = lookup(gen, scratch);
  return exp > 0 ? c.z : c.zInverse;
}

F2Matrix Representation::generatorF2(const Generator& gen, int exp) const {
  Cached scratch;
  const Cached& c = lookup(gen, scratch);
  return exp > 0 ? c.f2 : c.f2Inverse;
}

ZMatrix Representation::evalZ(const Word& w) const {
  ZMatrix m = ZMatrix::identity(dim());
  Cached scratch;
  for (const Letter& l : w.letters()) {
    const Cached& c = lookup(l.gen, scratch);
    m = m * (l.exp > 0 ? c.z : c.zInverse);
  }
  return m;
}

F2Matrix Representation::evalF2(const Word& w) const {
  F2Matrix m = F2Matrix::identity(dim());
  Cached scratch;
  for (const Letter& l : w.letters()) {
    const Cached& c = lookup(l.gen, scratch);
    m = m * (l.exp > 0 ? c.f2 : c.f2Inverse);
  }
  return m;
}

IdentityCheck Representation::checkF2(const Word& lhs, const Word& rhs) const {
  const F2Matrix a = evalF2(lhs);
  const F2Matrix b = evalF2(rhs);
  IdentityCheck out;
  if (a == b) {
    out.verdict = Verdict::Pass;
    return out;
  }
  out.verdict = Verdict::Fail;
  for (int j = 0; j < dim(); ++j)
    if (a.column(j) != b.column(j)) {
      out.message = "images of basis vector " + std::to_string(j + 1) + " differ";
      break;
    }
  return out;
}

Word applySignPlan(const Word& w, const std::vector<int>& plan) {
  std::vector<Letter> letters = w.letters();
  std::size_t next = 0;
  for (Letter& l : letters) {
    if (l.gen.kind != GenKind::Twist) continue;
    if (next < plan.size() && plan[next] < 0) l.exp = -l.exp;
    ++next;
  }
  return Word(std::move(letters));
}

IdentityCheck Representation::checkZ(const Word& lhs, const Word& rhs,
                                     const std::optional<std::vector<int>>& plan) const {
  IdentityCheck out;
  int twists = 0;
  for (const Letter& l : rhs.letters())
    if (l.gen.kind == GenKind::Twist) ++twists;
  try {
    const ZMatrix target = evalZ(lhs);
    if (plan) {
      if (!plan->empty() && static_cast<int>(plan->size()) != twists)
        throw Error(ErrorKind::LedgerFormat, "sign plan has " + std::to_string(plan->size()) +
                                                 " signs for " + std::to_string(twists) +
                                                 " twist letters");
      out.signPlan = *plan;
      out.verdict = evalZ(applySignPlan(rhs, *plan)) == target ? Verdict::Pass : Verdict::Fail;
      return out;
    }
    const int searched = twists <= kMaxSignSearch ? twists : 0;
    for (long mask = 0; mask < (1L << searched); ++mask) {
      std::vector<int> signs(twists, 1);
      for (int t = 0; t < searched; ++t)
        if ((mask >> t) & 1) signs[t] = -1;
      if (evalZ(applySignPlan(rhs, signs)) == target) {
        out.verdict = Verdict::Pass;
        out.signPlan = signs;
        return out;
      }
    }
    if (searched < twists) {
      out.verdict = Verdict::Undecided;
      out.message = "too many twist letters for an exhaustive sign search";
    } else {
      out.verdict = Verdict::Fail;
      out.message = "no sign plan makes the integral matrices agree";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    out.verdict = Verdict::Undecided;
    out.message = e.what();
  }
  return out;
}

CurveClass derivedCurveClass(const Representation& rep, const Word& w, const CurveSymbol& base) {
  const CurveClass src = rep.model().curve(base);
  const ZMatrix m = rep.evalZ(w);
  const ZMatrix mInverse = rep.evalZ(w.inverse());
  CurveClass out;
  out.coefficients = m.apply(src.coefficients);
  out.pairing.assign(src.pairing.size(), 0);
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i) out.pairing[j] += src.pairing[i] * mInverse(i, j);
  out.oneSided = src.oneSided;
  out.orientationTag = src.orientationTag;
  return out;
}

}  // namespace crosscap
