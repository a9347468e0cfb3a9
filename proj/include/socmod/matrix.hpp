#pragma once

#include <string>
#include <vector>

#include "socmod/ring.hpp"

namespace socmod {

// Dense matrix of polynomials over a presented ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::vector<std::vector<Poly>> entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  FreeElement column(std::size_t j) const;
  static PolyMatrix from_columns(const Ring& ring, std::size_t rows, const std::vector<FreeElement>& cols);

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool is_zero() const;
  // Every entry reduced modulo the ring relations is zero.
  bool is_zero_mod_relations() const;
  bool entries_in_max_ideal() const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

// All t x t minors, reduced mod J, zeros and duplicates removed.
// Laplace expansion memoized on (row set, column set).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t t);

// Determinant of a square matrix by the same expansion.
Poly determinant(const PolyMatrix& m);

}  // namespace socmod
