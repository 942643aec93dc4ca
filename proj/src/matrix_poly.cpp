#include "gldiff/matrix_poly.hpp"

#include <string>

#include "gldiff/errors.hpp"

namespace gldiff {

namespace {

void require_same_size(const SquareMatrixPoly& a, const SquareMatrixPoly& b) {
  if (a.size() != b.size())
    throw DimensionError("matrix size mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
}

}  // namespace

SquareMatrixPoly::SquareMatrixPoly(int size) : size_(size) {
  if (size < 1) throw DimensionError("matrix size must be positive");
  entries_.resize(static_cast<std::size_t>(size) * size);
}

SquareMatrixPoly SquareMatrixPoly::identity(int size) {
  SquareMatrixPoly m(size);
  for (int k = 0; k < size; ++k) m.at(k, k) = Poly(1);
  return m;
}

SquareMatrixPoly SquareMatrixPoly::unit(int size, int p, int q) {
  if (p < 1 || p > size || q < 1 || q > size)
    throw DimensionError("E[" + std::to_string(p) + "," + std::to_string(q) +
                         "] outside gl_" + std::to_string(size));
  SquareMatrixPoly m(size);
  m.at(p - 1, q - 1) = Poly(1);
  return m;
}

const Poly& SquareMatrixPoly::at(int row, int col) const {
  if (row < 0 || row >= size_ || col < 0 || col >= size_)
    throw DimensionError("matrix index out of range");
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

Poly& SquareMatrixPoly::at(int row, int col) {
  if (row < 0 || row >= size_ || col < 0 || col >= size_)
    throw DimensionError("matrix index out of range");
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

SquareMatrixPoly SquareMatrixPoly::transpose() const {
  SquareMatrixPoly t(size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Poly SquareMatrixPoly::trace() const {
  Poly s;
  for (int k = 0; k < size_; ++k) s += at(k, k);
  return s;
}

SquareMatrixPoly operator+(const SquareMatrixPoly& a,
                           const SquareMatrixPoly& b) {
  require_same_size(a, b);
  SquareMatrixPoly r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k)
    r.entries_[k] += b.entries_[k];
  return r;
}

SquareMatrixPoly operator*(const SquareMatrixPoly& a,
                           const SquareMatrixPoly& b) {
  require_same_size(a, b);
  const int n = a.size();
  SquareMatrixPoly r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Poly& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

SquareMatrixPoly operator*(const Poly& s, const SquareMatrixPoly& a) {
  SquareMatrixPoly r = a;
  for (auto& e : r.entries_) e = s * e;
  return r;
}

}  // namespace gldiff
