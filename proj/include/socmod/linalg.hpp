#pragma once

#include <optional>
#include <vector>

#include "socmod/field.hpp"

namespace socmod {

using DenseVec = std::vector<Scalar>;

// Row echelon form of a growing set of vectors in k^n.
// Over GF(p) rows are kept monic (plain Gaussian elimination). Over QQ rows
// are kept as primitive integer vectors and insertion is fraction-free.
class Echelon {
 public:
  Echelon(Field field, std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<DenseVec>& rows() const { return rows_; }
  const Field& field() const { return field_; }

  // Adds v to the span; returns false when v was already in it.
  bool insert(DenseVec v);
  bool contains(const DenseVec& v) const;

  // Linear remainder: v minus the unique combination of rows that clears
  // every pivot column.
  DenseVec remainder(DenseVec v) const;

  bool spans_same(const Echelon& other) const;

 private:
  // Pivot-by-pivot elimination. For insert, stops at the first non-pivot
  // nonzero column and returns it (or -1 if v reduced to zero).
  long reduce_for_insert(DenseVec& v) const;
  void make_primitive(DenseVec& v) const;

  Field field_;
  std::size_t ncols_;
  std::vector<DenseVec> rows_;
  std::vector<long> row_of_col_;
};

// Kernel of the map k^m -> k^n sending e_j to images[j]; basis vectors of k^m.
std::vector<DenseVec> kernel(const Field& field, const std::vector<DenseVec>& images, std::size_t ncols);

// Some c with sum_j c_j images[j] = target, free coordinates set to zero.
std::optional<DenseVec> solve(const Field& field, const std::vector<DenseVec>& images, const DenseVec& target);

}  // namespace socmod
