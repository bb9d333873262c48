#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace crosscap {

/// Column vector over F2; bit j is coordinate j.
using F2Vector = std::uint32_t;

inline constexpr int kMaxF2Dim = 32;

/// Square matrix over F2 packed as one machine word per row (bit j of row i
/// is entry (i, j)). Dimension is limited to 32.
class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(int n);

  static F2Matrix identity(int n);
  static F2Matrix fromRows(const std::vector<std::vector<int>>& rows);

  int dim() const { return n_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool bit) {
    if (bit) rows_[i] |= (1u << j);
    else rows_[i] &= ~(1u << j);
  }
  std::uint32_t row(int i) const { return rows_[i]; }
  void setRow(int i, std::uint32_t bits) { rows_[i] = bits; }

  F2Vector apply(F2Vector v) const {
    F2Vector out = 0;
    for (int i = 0; i < n_; ++i) out |= static_cast<F2Vector>(std::popcount(rows_[i] & v) & 1) << i;
    return out;
  }

  /// Image of basis vector e_j, i.e. column j.
  F2Vector column(int j) const {
    F2Vector out = 0;
    for (int i = 0; i < n_; ++i) out |= static_cast<F2Vector>((rows_[i] >> j) & 1u) << i;
    return out;
  }

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix out(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t bits = a.rows_[i]; bits != 0; bits &= bits - 1)
        acc ^= b.rows_[std::countr_zero(bits)];
      out.rows_[i] = acc;
    }
    return out;
  }

  F2Matrix transpose() const;
  bool isIdentity() const;
  bool isInvertible() const;
  /// Throws Error(SingularMatrix).
  F2Matrix inverse() const;

  /// One hex string per row, most significant digit first; bit j of the
  /// row value is column j.
  std::vector<std::string> toHexRows() const;
  std::string toString() const;

  std::size_t hash() const;

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxF2Dim> rows_{};
};

/// Bilinear form value v^T Q w for the diagonal form with `diagMask`
/// selecting the coordinates where Q has a 1.
inline int formValue(F2Vector v, F2Vector w, F2Vector diagMask) {
  return std::popcount(v & w & diagMask) & 1;
}

}  // namespace crosscap

template <>
struct std::hash<crosscap::F2Matrix> {
  std::size_t operator()(const crosscap::F2Matrix& m) const noexcept { return m.hash(); }
};
