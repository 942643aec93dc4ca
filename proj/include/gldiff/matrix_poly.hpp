#pragma once

#include <vector>

#include "gldiff/poly.hpp"

namespace gldiff {

/// Square matrix with Poly entries. Row and column indices are 0-based in
/// `at`; the `unit` factory takes the 1-based (p, q) used for E_{p,q}.
class SquareMatrixPoly {
 public:
  explicit SquareMatrixPoly(int size);

  static SquareMatrixPoly identity(int size);
  /// E_{p,q}: 1 at row p, column q (1-based).
  static SquareMatrixPoly unit(int size, int p, int q);

  int size() const { return size_; }
  const Poly& at(int row, int col) const;
  Poly& at(int row, int col);

  SquareMatrixPoly transpose() const;
  Poly trace() const;

  friend SquareMatrixPoly operator+(const SquareMatrixPoly& a,
                                    const SquareMatrixPoly& b);
  friend SquareMatrixPoly operator*(const SquareMatrixPoly& a,
                                    const SquareMatrixPoly& b);
  friend SquareMatrixPoly operator*(const Poly& s, const SquareMatrixPoly& a);
  friend bool operator==(const SquareMatrixPoly& a,
                         const SquareMatrixPoly& b) = default;

 private:
  int size_;
  std::vector<Poly> entries_;
};

}  // namespace gldiff
