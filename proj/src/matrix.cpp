#include "socmod/matrix.hpp"

#include <cstdint>
#include <map>

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"

namespace socmod {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_->zero()) {}

PolyMatrix::PolyMatrix(Ring ring, std::vector<std::vector<Poly>> entries) : ring_(std::move(ring)) {
  rows_ = entries.size();
  cols_ = rows_ ? entries[0].size() : 0;
  data_.reserve(rows_ * cols_);
  for (auto& row : entries) {
    if (row.size() != cols_) throw StructuralError("ragged matrix rows");
    for (auto& p : row) {
      common_ring(p, ring_->zero());
      data_.push_back(std::move(p));
    }
  }
}

FreeElement PolyMatrix::column(std::size_t j) const {
  std::vector<Poly> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return FreeElement({static_cast<int>(rows_), 1}, std::move(c));
}

PolyMatrix PolyMatrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<FreeElement>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<std::size_t>(cols[j].rank()) != rows) throw StructuralError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product dimension mismatch");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly s = a.ring_->zero();
      for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = std::move(s);
    }
  }
  return c;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_zero_mod_relations() const {
  for (const auto& p : data_) {
    if (!reduce_mod_relations(ring_, p).is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::entries_in_max_ideal() const {
  for (const auto& p : data_) {
    if (!p.in_max_ideal()) return false;
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

class MinorCache {
 public:
  explicit MinorCache(const PolyMatrix& m) : m_(m) {
    if (m.rows() > 64 || m.cols() > 64) throw ResourceError("matrix too large for minor expansion");
  }

  // Determinant of the submatrix on the given rows and columns (equal popcounts).
  const Poly& det(std::uint64_t rows, std::uint64_t cols) {
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly result = m_.ring()->zero();
    if (rows == 0) {
      result = m_.ring()->one();
    } else {
      // Expand along the lowest selected row.
      int r = __builtin_ctzll(rows);
      std::uint64_t rest_rows = rows & (rows - 1);
      int sign = 1;
      for (std::uint64_t c = cols; c; c &= c - 1) {
        int j = __builtin_ctzll(c);
        const Poly& entry = m_.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
        if (!entry.is_zero()) {
          const Poly& sub = det(rest_rows, cols & ~(std::uint64_t{1} << j));
          if (!sub.is_zero()) {
            Poly term = entry * sub;
            result = sign > 0 ? result + term : result - term;
          }
        }
        sign = -sign;
      }
      result = reduce_mod_relations(m_.ring(), result);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Poly> memo_;
};

void subsets(std::size_t n, std::size_t t, std::size_t start, std::uint64_t acc, std::vector<std::uint64_t>& out) {
  if (t == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + t <= n; ++i) subsets(n, t - 1, i + 1, acc | (std::uint64_t{1} << i), out);
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, std::size_t t) {
  if (t < 1 || t > std::min(m.rows(), m.cols())) {
    throw StructuralError("minor size " + std::to_string(t) + " out of range for a " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + " matrix");
  }
  MinorCache cache(m);
  std::vector<std::uint64_t> row_sets, col_sets;
  subsets(m.rows(), t, 0, 0, row_sets);
  subsets(m.cols(), t, 0, 0, col_sets);
  std::vector<Poly> out;
  for (auto rs : row_sets) {
    for (auto cs : col_sets) {
      Poly d = cache.det(rs, cs);
      if (d.is_zero()) continue;
      bool dup = false;
      for (const auto& e : out) {
        if (e == d || e == -d) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(std::move(d));
    }
  }
  return out;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  if (m.rows() == 0) return m.ring()->one();
  MinorCache cache(m);
  std::uint64_t all = m.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.rows()) - 1;
  return cache.det(all, all);
}

}  // namespace socmod
