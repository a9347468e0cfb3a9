#include "socmod/homology.hpp"

#include <algorithm>

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"

namespace socmod {

bool ChainComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i].cols() == 0 || maps[i + 1].cols() == 0) continue;
    if (!(maps[i] * maps[i + 1]).is_zero_mod_relations()) return false;
  }
  return true;
}

std::vector<FreeElement> ChainComplex::nonzero_homology_witnesses(std::size_t i) const {
  if (i == 0 || i >= ranks.size()) throw StructuralError("homology index out of range");
  std::vector<FreeElement> out;
  const PolyMatrix& d = maps[i - 1];
  if (ranks[i] == 0) return out;
  std::vector<FreeElement> cols;
  for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(d.column(j));
  auto cycles = syzygies(ring, {ranks[i - 1], 1}, cols);
  std::vector<FreeElement> boundaries;
  if (i < maps.size()) {
    for (std::size_t j = 0; j < maps[i].cols(); ++j) boundaries.push_back(maps[i].column(j));
  }
  for (const auto& z : cycles.generators) {
    if (!locally_member(ring, z, boundaries)) out.push_back(z);
  }
  return out;
}

bool ChainComplex::homology_vanishes_locally(std::size_t i) const { return nonzero_homology_witnesses(i).empty(); }

std::vector<std::vector<int>> exterior_basis(int n, int i) {
  std::vector<std::vector<int>> out;
  if (i < 0 || i > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == i) {
      out.push_back(cur);
      return;
    }
    for (int s = start; s < n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ChainComplex koszul_complex(const Ring& ring, const std::vector<Poly>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 1) throw DomainError("Koszul complex needs at least one element");
  ChainComplex c{ring, {}, {}};
  for (int i = 0; i <= n; ++i) c.ranks.push_back(static_cast<int>(binomial(n, i)));
  for (int i = 1; i <= n; ++i) {
    auto src = exterior_basis(n, i);
    auto dst = exterior_basis(n, i - 1);
    PolyMatrix d(ring, dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& s = src[col];
      for (std::size_t p = 0; p < s.size(); ++p) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(p));
        auto row = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), rest) - dst.begin());
        d.at(row, col) = p % 2 == 0 ? seq[static_cast<std::size_t>(s[p])] : -seq[static_cast<std::size_t>(s[p])];
      }
    }
    c.maps.push_back(std::move(d));
  }
  return c;
}

ChainComplex koszul_graded_piece(const Ring& ring, const std::vector<FreeElement>& c) {
  const std::size_t n = c.size();
  if (n < 1) throw DomainError("graded Koszul piece needs at least one element");
  const int r = c[0].ambient().rank_f;
  for (const auto& ci : c) {
    if (ci.ambient().sym_degree != 1 || ci.ambient().rank_f != r) {
      throw DomainError("graded Koszul piece needs elements of S_1 = F");
    }
  }
  const std::size_t ru = static_cast<std::size_t>(r);
  const int s2 = Ambient{r, 2}.rank();
  ChainComplex k{ring, {s2, static_cast<int>(n * ru), static_cast<int>(binomial(static_cast<long>(n), 2))}, {}};
  // d1(e_i ⊗ t_k) = t_k c_i in S_2.
  PolyMatrix d1(ring, static_cast<std::size_t>(s2), n * ru);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t kk = 0; kk < ru; ++kk) {
      FreeElement t = FreeElement::basis_vector(ring, {r, 1}, static_cast<int>(kk));
      FreeElement prod = sym_product(t, c[i]);
      for (int row = 0; row < s2; ++row) d1.at(static_cast<std::size_t>(row), i * ru + kk) = prod[static_cast<std::size_t>(row)];
    }
  }
  // d2(e_i ∧ e_j) = e_j ⊗ c_i - e_i ⊗ c_j.
  auto pairs = exterior_basis(static_cast<int>(n), 2);
  PolyMatrix d2(ring, n * ru, pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    std::size_t i = static_cast<std::size_t>(pairs[col][0]), j = static_cast<std::size_t>(pairs[col][1]);
    for (std::size_t kk = 0; kk < ru; ++kk) {
      d2.at(j * ru + kk, col) = c[i][kk];
      d2.at(i * ru + kk, col) = -c[j][kk];
    }
  }
  k.maps.push_back(std::move(d1));
  k.maps.push_back(std::move(d2));
  return k;
}

int grade(const Ring& ring, const std::vector<Poly>& gens) {
  if (ideal_has_unit(gens)) throw DomainError("improper ideal");
  std::vector<Poly> g;
  for (const auto& p : gens) {
    Poly r = reduce_mod_relations(ring, p);
    if (!r.is_zero()) g.push_back(std::move(r));
  }
  if (g.empty()) return 0;
  if (ring->cohen_macaulay() && locally_finite_colength(ring, g)) return krull_dimension(ring);
  ChainComplex k = koszul_complex(ring, g);
  const int s = static_cast<int>(g.size());
  for (int i = s; i >= 1; --i) {
    if (!k.homology_vanishes_locally(static_cast<std::size_t>(i))) return s - i;
  }
  return s;
}

PerfectReport is_perfect_matrix(const PolyMatrix& mat) {
  if (mat.cols() < mat.rows()) throw DomainError("perfect matrices need n >= r");
  PerfectReport rep;
  const std::size_t r = mat.rows();
  rep.bound = static_cast<int>(mat.cols() - r + 1);
  auto ir = minors(mat, r);
  rep.proper = !ideal_has_unit(ir);
  if (!rep.proper) return rep;
  rep.grade = grade(mat.ring(), ir);
  rep.perfect = rep.grade == rep.bound;
  return rep;
}

namespace {

PolyMatrix drop(const PolyMatrix& m, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  PolyMatrix out(m.ring(), m.rows() - (row ? 1 : 0), m.cols() - (col ? 1 : 0));
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (row && i == *row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (col && j == *col) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

PolyMatrix drop_zero_columns(const PolyMatrix& m) {
  std::vector<FreeElement> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    FreeElement c = m.column(j);
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = c[i].is_zero();
    if (!zero) keep.push_back(std::move(c));
  }
  return PolyMatrix::from_columns(m.ring(), m.rows(), keep);
}

PolyMatrix reduced(const PolyMatrix& m) {
  PolyMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = reduce_mod_relations(m.ring(), m.at(i, j));
  }
  return out;
}

}  // namespace

void minimalize_at(ChainComplex& c, std::size_t i) {
  for (;;) {
    PolyMatrix& d = c.maps[i];
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t a = 0; a < d.rows() && !pivot; ++a) {
      for (std::size_t b = 0; b < d.cols(); ++b) {
        if (!d.at(a, b).in_max_ideal()) {
          pivot = {a, b};
          break;
        }
      }
    }
    if (!pivot) break;
    auto [a, b] = *pivot;
    const Poly u = d.at(a, b);
    PolyMatrix next(c.ring, d.rows() - 1, d.cols() - 1);
    for (std::size_t k = 0, ok = 0; k < d.rows(); ++k) {
      if (k == a) continue;
      for (std::size_t j = 0, oj = 0; j < d.cols(); ++j) {
        if (j == b) continue;
        next.at(ok, oj++) = reduce_mod_relations(c.ring, u * d.at(k, j) - d.at(a, j) * d.at(k, b));
      }
      ++ok;
    }
    d = drop_zero_columns(next);
    // Basis vector a of F_i is now a boundary: the map out of F_i loses column a.
    if (i > 0) c.maps[i - 1] = drop(c.maps[i - 1], std::nullopt, a);
    c.ranks[i] = static_cast<int>(d.rows());
    c.ranks[i + 1] = static_cast<int>(d.cols());
  }
}

Resolution minimal_free_resolution(const PolyMatrix& presentation, int max_length) {
  const Ring& ring = presentation.ring();
  Resolution res;
  res.complex.ring = ring;
  res.complex.ranks = {static_cast<int>(presentation.rows()), static_cast<int>(presentation.cols())};
  res.complex.maps.push_back(drop_zero_columns(reduced(presentation)));
  res.complex.ranks[1] = static_cast<int>(res.complex.maps[0].cols());
  minimalize_at(res.complex, 0);
  for (;;) {
    std::size_t i = res.complex.maps.size() - 1;
    const PolyMatrix& d = res.complex.maps[i];
    if (d.cols() == 0) break;
    std::vector<FreeElement> cols;
    for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(d.column(j));
    auto syz = syzygies(ring, {static_cast<int>(d.rows()), 1}, cols);
    if (syz.generators.empty()) break;
    if (static_cast<int>(res.complex.maps.size()) >= max_length) {
      res.partial = true;
      break;
    }
    PolyMatrix next = PolyMatrix::from_columns(ring, d.cols(), syz.generators);
    res.complex.maps.push_back(drop_zero_columns(reduced(next)));
    res.complex.ranks.push_back(static_cast<int>(res.complex.maps.back().cols()));
    minimalize_at(res.complex, i + 1);
  }
  // Trailing zero modules are not part of the table.
  while (res.complex.maps.size() > 0 && res.complex.maps.back().cols() == 0) {
    res.complex.maps.pop_back();
    res.complex.ranks.pop_back();
  }
  res.betti = res.complex.ranks;
  return res;
}

DualImageReport dual_image_module(const Ring& ring, const std::vector<Poly>& ideal) {
  if (!locally_finite_colength(ring, ideal) || ideal_has_unit(ideal)) throw DomainError("ideal is not m-primary");
  DualImageReport rep;
  PolyMatrix row(ring, 1, ideal.size());
  for (std::size_t j = 0; j < ideal.size(); ++j) row.at(0, j) = ideal[j];
  rep.resolution = minimal_free_resolution(row);
  const auto& b = rep.resolution.betti;
  if (b.size() != 3 || b[0] != 1 || b[2] != b[1] - 1) {
    throw DomainError("resolution of A/I is not of Hilbert-Burch shape 1, n, n-1");
  }
  rep.n_gens = b[1];
  rep.below_three = rep.n_gens < 3;
  rep.phi = rep.resolution.complex.maps[1];
  PolyMatrix dual = rep.phi.transpose();
  rep.n = columns_to_module(dual);
  rep.parameter = is_parameter_module(*rep.n);
  return rep;
}

}  // namespace socmod
