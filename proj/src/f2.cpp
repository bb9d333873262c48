#include "crosscap/f2.hpp"

#include <cstdio>

#include "crosscap/error.hpp"

namespace crosscap {

F2Matrix::F2Matrix(int n) : n_(n) {
  if (n < 0 || n > kMaxF2Dim)
    throw Error(ErrorKind::TooLarge, "F2 matrices are limited to dimension " +
                                         std::to_string(kMaxF2Dim) + " (got " + std::to_string(n) + ")");
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
  return m;
}

F2Matrix F2Matrix::fromRows(const std::vector<std::vector<int>>& rows) {
  F2Matrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n_)
      throw Error(ErrorKind::DimensionMismatch, "matrix rows must have length " + std::to_string(m.n_));
    for (int j = 0; j < m.n_; ++j) m.set(i, j, rows[i][j] & 1);
  }
  return m;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(n_);
  for (int j = 0; j < n_; ++j) t.rows_[j] = column(j);
  return t;
}

bool F2Matrix::isIdentity() const {
  for (int i = 0; i < n_; ++i)
    if (rows_[i] != (1u << i)) return false;
  return true;
}

bool F2Matrix::isInvertible() const {
  std::array<std::uint32_t, kMaxF2Dim> work = rows_;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int i = col; i < n_; ++i)
      if ((work[i] >> col) & 1u) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    std::swap(work[col], work[pivot]);
    for (int i = col + 1; i < n_; ++i)
      if ((work[i] >> col) & 1u) work[i] ^= work[col];
  }
  return true;
}

F2Matrix F2Matrix::inverse() const {
  std::array<std::uint32_t, kMaxF2Dim> work = rows_;
  F2Matrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int i = col; i < n_; ++i)
      if ((work[i] >> col) & 1u) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over F2");
    std::swap(work[col], work[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (int i = 0; i < n_; ++i)
      if (i != col && ((work[i] >> col) & 1u)) {
        work[i] ^= work[col];
        inv.rows_[i] ^= inv.rows_[col];
      }
  }
  return inv;
}

std::vector<std::string> F2Matrix::toHexRows() const {
  const int digits = n_ == 0 ? 1 : (n_ + 3) / 4;
  std::vector<std::string> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*x", digits, rows_[i]);
    out.emplace_back(buf);
  }
  return out;
}

std::string F2Matrix::toString() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out += get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::size_t F2Matrix::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= rows_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace crosscap
