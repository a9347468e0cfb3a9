#pragma once

#include <optional>

#include "socmod/artinian.hpp"
#include "socmod/matrix.hpp"
#include "socmod/submodule.hpp"

namespace socmod {

// Submodule of A^rows generated by the nonzero columns.
Module columns_to_module(const PolyMatrix& mat);

// Free module F = A^r and mF.
Module free_module(const Ring& ring, int r);
Module max_ideal_times_free(const Ring& ring, int r);
// m * N, generated by x_i * g.
Module max_ideal_times(const Submodule& n);

// Products inside Sym(F).
Module module_product(const Submodule& u, const Submodule& v);
Module module_power(const Module& m, int s);

// Ideal of t x t minors.
Module fitting_ideal(const PolyMatrix& mat, std::size_t t);

// ℓ(ambient / N); nullopt when infinite.
std::optional<long> colength(const Submodule& n);

// μ_A(N) = dim_k N / mN.
long mingens(const Submodule& n);

struct ParameterReport {
  std::optional<long> colength;
  long mu = 0;
  int d = 0;
  int r = 0;
  int bound = 0;  // d + r - 1
  std::optional<int> analytic_spread;
  bool is_parameter = false;
};
ParameterReport is_parameter_module(const Submodule& n);

// dim_k Soc(F/N) = ℓ(M/N) for M = N :_F m.
long soc_dim(const Submodule& n);

}  // namespace socmod
