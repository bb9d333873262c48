#include "crosscap/surface.hpp"

#include "crosscap/error.hpp"

namespace crosscap {

SurfaceParams build(int g, int p) {
  if (p < 1) throw Error(ErrorKind::OutOfRange, "p must be at least 1 (got " + std::to_string(p) + ")");
  if (g < 14)
    throw Error(ErrorKind::OutOfRange, "g must be at least 14 (got " + std::to_string(g) + ")");
  SurfaceParams params;
  params.g = g;
  params.p = p;
  if (g % 2 == 1) {
    // g = 13 would be the first odd case, which is already excluded above.
    params.parity = Parity::Odd;
    params.r = (g - 1) / 2;
  } else {
    params.parity = Parity::Even;
    params.r = (g - 2) / 2;
  }
  return params;
}

SurfaceParams build(int g, int p, Parity requested) {
  SurfaceParams params = build(g, p);
  if (params.parity != requested)
    throw Error(ErrorKind::OutOfRange, "g = " + std::to_string(g) + " is not of " +
                                           toString(requested) + " type");
  return params;
}

Bindings SurfaceParams::bindings() const { return {{"g", g}, {"p", p}, {"r", r}}; }

std::string toString(Parity parity) { return parity == Parity::Odd ? "odd" : "even"; }

}  // namespace crosscap
