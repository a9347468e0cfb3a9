#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socmod/matrix.hpp"
#include "socmod/module_ops.hpp"

namespace socmod {

// Finite complex of free A-modules F_0 <- F_1 <- ... ; maps[i] is the matrix
// of d_{i+1}: F_{i+1} -> F_i (rank F_i rows, rank F_{i+1} columns).
struct ChainComplex {
  Ring ring;
  std::vector<int> ranks;
  std::vector<PolyMatrix> maps;

  // d_i ∘ d_{i+1} = 0 modulo J for every i.
  bool is_complex() const;
  // H_i vanishes after localizing at m (i >= 1 and i < ranks.size()).
  bool homology_vanishes_locally(std::size_t i) const;
  // Cycle generators of H_i not in the boundaries locally (empty when H_i = 0).
  std::vector<FreeElement> nonzero_homology_witnesses(std::size_t i) const;
};

// Koszul complex K(c_1..c_n; A) on ∧G, basis of ∧^i G = sorted index sets,
// d(e_S) = Σ_p (-1)^p c_{s_p} e_{S - s_p}.
ChainComplex koszul_complex(const Ring& ring, const std::vector<Poly>& seq);
// Exterior-power basis used above.
std::vector<std::vector<int>> exterior_basis(int n, int i);

// Degree-2 piece ∧²G⊗S_0 -> G⊗S_1 -> S_2 of the Koszul complex of
// c_1..c_n ∈ S_1 = F over S = Sym(F). Index of e_i ⊗ t_k is i*r + k.
ChainComplex koszul_graded_piece(const Ring& ring, const std::vector<FreeElement>& c);

// Grade of the ideal generated by gens, locally at m.
int grade(const Ring& ring, const std::vector<Poly>& gens);

struct PerfectReport {
  bool proper = false;
  int grade = 0;
  int bound = 0;  // n - r + 1
  bool perfect = false;
};
PerfectReport is_perfect_matrix(const PolyMatrix& mat);

struct Resolution {
  ChainComplex complex;
  std::vector<int> betti;
  bool partial = false;
};
// Minimal free resolution of coker(presentation) over the local ring.
Resolution minimal_free_resolution(const PolyMatrix& presentation, int max_length = 16);

// Unit-pivot minimalization of d = maps[i]; also trims the previous map.
void minimalize_at(ChainComplex& c, std::size_t i);

struct DualImageReport {
  Resolution resolution;
  PolyMatrix phi;
  Module n;
  int n_gens = 0;
  bool below_three = false;  // fewer than three generators
  ParameterReport parameter;
};
DualImageReport dual_image_module(const Ring& ring, const std::vector<Poly>& ideal);

}  // namespace socmod
