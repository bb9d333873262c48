#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/f2.hpp"

namespace crosscap {

using ZVector = std::vector<std::int64_t>;

/// Dense exact integer matrix. Products are overflow-checked and throw
/// Error(Overflow) rather than wrapping.
class ZMatrix {
 public:
  ZMatrix() = default;
  explicit ZMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  static ZMatrix identity(int n);

  int dim() const { return n_; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  ZVector apply(const ZVector& v) const;
  ZVector column(int j) const;
  void setColumn(int j, const ZVector& v);

  ZMatrix operator*(const ZMatrix& rhs) const;
  bool isIdentity() const;
  F2Matrix mod2() const;

  /// Rows as nested arrays, for reports.
  std::vector<std::vector<std::int64_t>> toRows() const;

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t dot(const ZVector& a, const ZVector& b);
ZVector operator+(const ZVector& a, const ZVector& b);
ZVector operator-(const ZVector& a, const ZVector& b);
ZVector operator*(std::int64_t s, const ZVector& v);
ZVector operator-(const ZVector& v);
/// Reduction of an integer vector to its F2 bitmask.
F2Vector mod2(const ZVector& v);

}  // namespace crosscap
