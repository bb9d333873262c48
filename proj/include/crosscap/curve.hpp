#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "crosscap/index_expr.hpp"
#include "crosscap/surface.hpp"

namespace crosscap {

enum class Family { A, B, C, F, E, Alpha, Gamma, Delta, D1, D2, Boundary };

enum class Sidedness { OneSided, TwoSided };

/// A named curve of the catalog. `index` is the single subscript; for the
/// lantern curves d_{1,i} and d_{2,i} the family carries the first subscript.
struct CurveSymbol {
  Family family = Family::A;
  int index = 1;

  Sidedness sidedness() const {
    return family == Family::Delta ? Sidedness::OneSided : Sidedness::TwoSided;
  }

  friend auto operator<=>(const CurveSymbol&, const CurveSymbol&) = default;
};

/// `a1`, `alpha5`, `d{1,2}`, `K3`, ...
std::string toString(const CurveSymbol& sym);

/// Twist-letter spelling of the curve: `A1`, `Gamma5`, `D{1,2}`, `K3`.
std::string twistName(const CurveSymbol& sym);

/// Checks the index range for the given surface; alpha/gamma indices are
/// reduced cyclically first. Throws Error(UnknownCurve).
CurveSymbol validate(const SurfaceParams& params, CurveSymbol sym);

bool isValid(const SurfaceParams& params, const CurveSymbol& sym);

/// Chain names are aliases: a_1 = alpha_1, b_i = alpha_{2i}, c_j = alpha_{2j+1}.
/// Returns the symbol under which the catalog stores the curve.
CurveSymbol canonical(const CurveSymbol& sym);

/// Parses a curve name such as `b{i+1}` or `gamma5`; subscripts may use
/// bound variables. Throws SyntaxError.
CurveSymbol parseCurve(std::string_view text, const Bindings& vars = {});

}  // namespace crosscap
