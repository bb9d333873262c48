#pragma once

#include <string>

#include "crosscap/index_expr.hpp"

namespace crosscap {

enum class Parity { Odd, Even };

/// A punctured nonorientable surface: a sphere with `g` crosscaps and `p`
/// punctures, restricted to the range where the five-element generating set
/// is valid (odd g = 2r+1 >= 15, even g = 2r+2 >= 14, p >= 1).
struct SurfaceParams {
  int g = 0;
  int p = 0;
  int r = 0;
  Parity parity = Parity::Odd;

  /// Rank of first homology: crosscap cores plus p-1 puncture loops.
  int rank() const { return g + p - 1; }
  bool even() const { return parity == Parity::Even; }

  /// `{g, p, r}` for symbolic index resolution.
  Bindings bindings() const;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// Throws Error(OutOfRange) when (g, p) is outside the valid window.
SurfaceParams build(int g, int p);

/// As above, but also rejects a g whose parity differs from `requested`.
SurfaceParams build(int g, int p, Parity requested);

std::string toString(Parity parity);

}  // namespace crosscap
