#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "socmod/groebner.hpp"
#include "socmod/linalg.hpp"
#include "socmod/submodule.hpp"

namespace socmod {

// A/(J + m^K) as a finite-dimensional k-algebra on its standard monomials.
class TruncatedAlgebra {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  static std::shared_ptr<const TruncatedAlgebra> get(const Ring& ring, int level);
  TruncatedAlgebra(Ring ring, int level);

  const Ring& ring() const { return ring_; }
  int level() const { return level_; }
  std::size_t dim() const { return basis_.size(); }
  // Ascending degree, grevlex-descending within a degree.
  const std::vector<Monomial>& basis() const { return basis_; }

  Sparse coords(const Poly& f) const;
  Poly lift(const DenseVec& v, std::size_t offset = 0) const;

  // Coordinates in (A/(J + m^K))^R, position-major: index = pos * dim + b.
  DenseVec embed(const FreeElement& f) const;
  FreeElement lift(const DenseVec& v, Ambient ambient) const;
  DenseVec times_var(std::size_t var, const DenseVec& v) const;
  DenseVec times(const Poly& f, const DenseVec& v) const;

 private:
  Ring ring_;
  int level_;
  GroebnerPtr gb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<Sparse>> mult_;  // mult_[var][b] = x_var * basis[b]
};

using Algebra = std::shared_ptr<const TruncatedAlgebra>;

// Process-wide truncation policy: automatic certified level, or a fixed
// level that must not undercut the certificate.
struct TruncPolicy {
  std::optional<int> fixed_level;
  int cap = 64;
};
void set_trunc_policy(TruncPolicy policy);
TruncPolicy trunc_policy();

// Smallest K >= min_level with every degree-K monomial in C + J + m^(K+1),
// so m^K ⊆ C in the local ring. Throws DomainError("not m-primary") if C A_m
// has infinite colength and ResourceError past the cap.
int certificate_level(const Ring& ring, std::span<const Poly> ideal, int min_level = 1);

// Level certified by I(N)^2, searched from 2: exact for every comparison in
// Sym^2(F) built from N and modules between N and F.
int certify_truncation(const Submodule& n);

// Level at which linear algebra is exact for this module.
int working_level(const Submodule& n);

// k-span of the image of the module in the truncated free module.
std::shared_ptr<const Echelon> truncated_span(const Submodule& n, int level);
// Span of m * N at the given level.
Echelon truncated_span_max_ideal_times(const Submodule& n, int level);

long colength_trunc(const Submodule& n);
Module colon_socle_trunc(const Submodule& n);
bool member_trunc(const FreeElement& f, const Submodule& v);
bool contained_trunc(const Submodule& u, const Submodule& v);
bool subspace_equal(const Submodule& u, const Submodule& v);

}  // namespace socmod
