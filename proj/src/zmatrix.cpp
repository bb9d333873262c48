#include "crosscap/zmatrix.hpp"

#include "crosscap/error.hpp"

namespace crosscap {

namespace {

std::int64_t checkedMulAdd(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw Error(ErrorKind::Overflow, "integer matrix entry exceeds 64 bits");
  return sum;
}

}  // namespace

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZVector ZMatrix::apply(const ZVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  ZVector out(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] = checkedMulAdd(out[i], (*this)(i, j), v[j]);
  return out;
}

ZVector ZMatrix::column(int j) const {
  ZVector out(n_);
  for (int i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

void ZMatrix::setColumn(int j, const ZVector& v) {
  for (int i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

ZMatrix ZMatrix::operator*(const ZMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  ZMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j)
        if (rhs(k, j) != 0) out(i, j) = checkedMulAdd(out(i, j), a, rhs(k, j));
    }
  return out;
}

bool ZMatrix::isIdentity() const { return *this == identity(n_); }

F2Matrix ZMatrix::mod2() const {
  F2Matrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, ((*this)(i, j) & 1) != 0);
  return out;
}

std::vector<std::vector<std::int64_t>> ZMatrix::toRows() const {
  std::vector<std::vector<std::int64_t>> rows(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

std::int64_t dot(const ZVector& a, const ZVector& b) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = checkedMulAdd(acc, a[i], b[i]);
  return acc;
}

ZVector operator+(const ZVector& a, const ZVector& b) {
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ZVector operator-(const ZVector& a, const ZVector& b) {
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ZVector operator*(std::int64_t s, const ZVector& v) {
  ZVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checkedMulAdd(0, s, v[i]);
  return out;
}

ZVector operator-(const ZVector& v) { return -1 * v; }

F2Vector mod2(const ZVector& v) {
  F2Vector out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) out |= F2Vector{1} << i;
  return out;
}

}  // namespace crosscap
