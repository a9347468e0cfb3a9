#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "socmod/ring.hpp"

namespace socmod {

// Term c * x^mono * e_pos of a free module over S.
struct ModTerm {
  std::size_t pos;
  Monomial mono;
  Scalar coeff;
};

// Vector of module terms, sorted descending under a MonomialOrder.
using ModVec = std::vector<ModTerm>;

// Reduced Groebner basis of a submodule of S^R (R = ambient.rank()), taken
// together with J * e_i for the first `relation_positions` basis vectors.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, Ambient ambient, MonomialOrder order, std::vector<ModVec> elements);

  const Ring& ring() const { return ring_; }
  const Ambient& ambient() const { return ambient_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<ModVec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<FreeElement> generators() const;
  FreeElement normal_form(const FreeElement& f) const;
  Poly normal_form(const Poly& f) const;  // rank-one ambient only
  bool reduces_to_zero(const FreeElement& f) const { return normal_form(f).is_zero(); }

  // Independent re-check of Buchberger's criterion: every S-pair of
  // generators with a common lead position reduces to zero.
  bool spairs_reduce_to_zero() const;

  // For a rank-one basis: the lead-term ideal contains a power of every
  // variable, i.e. S/(ideal) is finite-dimensional.
  bool zero_dimensional() const;

  std::string to_string() const;

 private:
  Ring ring_;
  Ambient ambient_;
  MonomialOrder order_;
  std::vector<ModVec> elements_;
};

using GroebnerPtr = std::shared_ptr<const GroebnerBasis>;

// Buchberger's algorithm, normal selection strategy (smallest lcm degree,
// then smallest lcm, then pair index). Results are cached by content.
// `relation_positions` < 0 appends J * e_i for every position.
GroebnerPtr buchberger(const Ring& ring, Ambient ambient, std::span<const FreeElement> gens,
                       MonomialOrder order = {}, int relation_positions = -1);

GroebnerPtr ideal_basis(const Ring& ring, std::span<const Poly> gens);

// Reduced representative modulo J.
Poly reduce_mod_relations(const Ring& ring, const Poly& f);

// Global membership in the submodule generated by gens (plus J * ambient).
bool member(const Ring& ring, const FreeElement& f, std::span<const FreeElement> gens);
bool ideal_member(const Ring& ring, const Poly& f, std::span<const Poly> gens);

// Generators of the relations among gens_1..gens_n over A, as elements of
// G = A^n. Every generator s satisfies sum s_i * gens_i = 0 in A.
struct SyzygyModule {
  int ambient_rank = 0;
  std::vector<FreeElement> generators;
};
SyzygyModule syzygies(const Ring& ring, Ambient ambient, std::span<const FreeElement> gens);
SyzygyModule ideal_syzygies(const Ring& ring, std::span<const Poly> gens);

// (U :_A f) = { a in A : a f in U }, as ideal generators (empty = zero ideal).
std::vector<Poly> module_quotient(const Ring& ring, std::span<const FreeElement> u_gens, const FreeElement& f);
std::vector<Poly> ideal_quotient(const Ring& ring, std::span<const Poly> ideal, const Poly& f);
// (I : m) for the maximal ideal m = (x_1..x_d).
std::vector<Poly> quotient_by_max_ideal(const Ring& ring, std::span<const Poly> ideal);

// True when some generator has a nonzero constant term (ideal not in m).
bool ideal_has_unit(std::span<const Poly> gens);

// Membership in the localization at m: f in U_m iff (U : f) is not inside m.
bool locally_member(const Ring& ring, const FreeElement& f, std::span<const FreeElement> gens);

// C A_m is m-primary or the unit ideal (finite colength in the local ring).
// Decided exactly via the saturation C : m^infinity.
bool locally_finite_colength(const Ring& ring, std::span<const Poly> ideal);

// Krull dimension from the lead-term ideal of J. Exact for homogeneous J.
int krull_dimension(const Ring& ring);

// Content-addressed on-disk cache for Groebner bases (off by default).
void set_groebner_cache_directory(std::filesystem::path dir);
void clear_groebner_cache();
std::size_t groebner_cache_size();

}  // namespace socmod
