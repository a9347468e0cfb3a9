#include "socmod/linalg.hpp"

#include "socmod/errors.hpp"

namespace socmod {

Echelon::Echelon(Field field, std::size_t ncols) : field_(field), ncols_(ncols), row_of_col_(ncols, -1) {}

void Echelon::make_primitive(DenseVec& v) const {
  if (!field_.is_rationals()) {
    // Monic: scale so the first nonzero entry is 1.
    for (const auto& x : v) {
      if (x != 0) {
        Scalar s = field_.inv(x);
        for (auto& y : v) {
          if (y != 0) y = field_.mul(y, s);
        }
        return;
      }
    }
    return;
  }
  mpz_class den = 1, g = 0;
  for (const auto& x : v) {
    if (x != 0) den = lcm(den, x.get_den());
  }
  for (auto& x : v) {
    if (x == 0) continue;
    x *= den;
    x.canonicalize();
    g = gcd(g, x.get_num());
  }
  if (g > 1) {
    for (auto& x : v) {
      if (x != 0) x /= g;
    }
  }
}

long Echelon::reduce_for_insert(DenseVec& v) const {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (v[c] == 0) continue;
    long r = row_of_col_[c];
    if (r < 0) return static_cast<long>(c);
    const DenseVec& row = rows_[static_cast<std::size_t>(r)];
    if (field_.is_rationals()) {
      // v <- row[c] * v - v[c] * row, entries stay integral.
      Scalar a = row[c], b = v[c];
      for (std::size_t k = c; k < ncols_; ++k) {
        if (v[k] == 0 && row[k] == 0) continue;
        v[k] = a * v[k] - b * row[k];
      }
      make_primitive(v);
    } else {
      Scalar b = v[c];
      for (std::size_t k = c; k < ncols_; ++k) {
        if (row[k] != 0) v[k] = field_.sub(v[k], field_.mul(b, row[k]));
      }
    }
  }
  return -1;
}

bool Echelon::insert(DenseVec v) {
  if (v.size() != ncols_) throw StructuralError("vector length does not match echelon width");
  make_primitive(v);
  long c = reduce_for_insert(v);
  if (c < 0) return false;
  row_of_col_[static_cast<std::size_t>(c)] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

DenseVec Echelon::remainder(DenseVec v) const {
  if (v.size() != ncols_) throw StructuralError("vector length does not match echelon width");
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (v[c] == 0) continue;
    long r = row_of_col_[c];
    if (r < 0) continue;
    const DenseVec& row = rows_[static_cast<std::size_t>(r)];
    Scalar f = field_.div(v[c], row[c]);
    for (std::size_t k = c; k < ncols_; ++k) {
      if (row[k] != 0) v[k] = field_.sub(v[k], field_.mul(f, row[k]));
    }
  }
  return v;
}

bool Echelon::contains(const DenseVec& v) const {
  DenseVec r = remainder(v);
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool Echelon::spans_same(const Echelon& other) const {
  if (rank() != other.rank() || ncols_ != other.ncols_) return false;
  for (const auto& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

namespace {

// Rows [images[j] | e_j] in echelon form over k^(n+m).
Echelon augmented(const Field& field, const std::vector<DenseVec>& images, std::size_t n) {
  const std::size_t m = images.size();
  Echelon e(field, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    if (images[j].size() != n) throw StructuralError("image vectors have inconsistent length");
    DenseVec row(n + m);
    for (std::size_t k = 0; k < n; ++k) row[k] = images[j][k];
    row[n + j] = 1;
    e.insert(std::move(row));
  }
  return e;
}

}  // namespace

std::vector<DenseVec> kernel(const Field& field, const std::vector<DenseVec>& images, std::size_t n) {
  Echelon e = augmented(field, images, n);
  std::vector<DenseVec> out;
  for (const auto& row : e.rows()) {
    bool left_zero = true;
    for (std::size_t k = 0; k < n && left_zero; ++k) left_zero = row[k] == 0;
    if (!left_zero) continue;
    out.emplace_back(row.begin() + static_cast<long>(n), row.end());
  }
  return out;
}

std::optional<DenseVec> solve(const Field& field, const std::vector<DenseVec>& images, const DenseVec& target) {
  const std::size_t n = target.size();
  const std::size_t m = images.size();
  Echelon e = augmented(field, images, n);
  DenseVec t(n + m);
  for (std::size_t k = 0; k < n; ++k) t[k] = target[k];
  DenseVec r = e.remainder(std::move(t));
  // r = (target | 0) - sum c_j (images[j] | e_j) = (0 | -c)
  for (std::size_t k = 0; k < n; ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  DenseVec c(m);
  for (std::size_t j = 0; j < m; ++j) c[j] = field.neg(r[n + j]);
  return c;
}

}  // namespace socmod
