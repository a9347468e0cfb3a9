#include "socmod/module_ops.hpp"

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"

namespace socmod {

Module columns_to_module(const PolyMatrix& mat) {
  std::vector<FreeElement> cols;
  for (std::size_t j = 0; j < mat.cols(); ++j) cols.push_back(mat.column(j));
  return make_module(mat.ring(), {static_cast<int>(mat.rows()), 1}, std::move(cols));
}

Module free_module(const Ring& ring, int r) {
  Ambient amb{r, 1};
  std::vector<FreeElement> gens;
  for (int i = 0; i < r; ++i) gens.push_back(FreeElement::basis_vector(ring, amb, i));
  return make_module(ring, amb, std::move(gens), std::vector<Poly>{ring->one()});
}

Module max_ideal_times_free(const Ring& ring, int r) {
  Ambient amb{r, 1};
  std::vector<FreeElement> gens;
  std::vector<Poly> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(ring->var(v));
  for (int i = 0; i < r; ++i) {
    for (const auto& x : vars) gens.push_back(FreeElement::basis_vector(ring, amb, i).scaled(x));
  }
  return make_module(ring, amb, std::move(gens), vars);
}

Module max_ideal_times(const Submodule& n) {
  std::vector<FreeElement> gens;
  for (const auto& g : n.generators()) {
    for (std::size_t v = 0; v < n.ring()->nvars(); ++v) gens.push_back(g.scaled(n.ring()->var(v)));
  }
  // m * C annihilates the quotient by mN as well.
  std::vector<Poly> cert;
  for (const auto& c : n.certificate()) {
    for (std::size_t v = 0; v < n.ring()->nvars(); ++v) cert.push_back(c * n.ring()->var(v));
  }
  return make_module(n.ring(), n.ambient(), std::move(gens), std::move(cert));
}

Module module_product(const Submodule& u, const Submodule& v) {
  if (u.ambient().rank_f != v.ambient().rank_f) throw StructuralError("product of modules over different free modules");
  Ambient amb{u.ambient().rank_f, u.ambient().sym_degree + v.ambient().sym_degree};
  std::vector<FreeElement> gens;
  for (const auto& a : u.generators()) {
    for (const auto& b : v.generators()) gens.push_back(sym_product(a, b));
  }
  std::vector<Poly> cert;
  for (const auto& a : u.certificate()) {
    for (const auto& b : v.certificate()) cert.push_back(reduce_mod_relations(u.ring(), a * b));
  }
  return make_module(u.ring(), amb, std::move(gens), std::move(cert));
}

Module module_power(const Module& m, int s) {
  if (s < 0) throw DomainError("negative module power");
  if (s == 0) return unit_module(m->ring(), m->ambient().rank_f);
  Module acc = m;
  for (int i = 1; i < s; ++i) acc = module_product(*acc, *m);
  return acc;
}

Module fitting_ideal(const PolyMatrix& mat, std::size_t t) { return make_ideal(mat.ring(), minors(mat, t)); }

std::optional<long> colength(const Submodule& n) {
  if (!locally_finite_colength(n.ring(), n.certificate())) {
    // The certificate may be smaller than Fitt_0; decide with the exact one.
    if (n.generators().size() < static_cast<std::size_t>(n.rank())) return std::nullopt;
    auto fitt = minors(n.matrix(), static_cast<std::size_t>(n.rank()));
    if (!locally_finite_colength(n.ring(), fitt)) return std::nullopt;
    return colength_trunc(*make_module(n.ring(), n.ambient(), n.generators(), fitt));
  }
  return colength_trunc(n);
}

namespace {

bool relations_homogeneous(const Ring& ring) {
  for (const auto& r : ring->relations()) {
    if (!r.is_homogeneous()) return false;
  }
  return true;
}

long rank_difference(const Submodule& n, int level) {
  auto span = truncated_span(n, level);
  Echelon m_span = truncated_span_max_ideal_times(n, level);
  return static_cast<long>(span->rank() - m_span.rank());
}

}  // namespace

long mingens(const Submodule& n) {
  if (n.is_zero()) return 0;
  std::optional<int> level;
  try {
    level = working_level(n) + 1;
  } catch (const DomainError&) {
    level.reset();
  }
  if (level) return rank_difference(n, *level);
  // Graded fallback: N/mN sits in degrees up to the top generator degree.
  bool graded = relations_homogeneous(n.ring());
  int top = 0;
  for (const auto& g : n.generators()) {
    graded = graded && g.is_homogeneous();
    top = std::max(top, g.degree());
  }
  if (!graded) throw DomainError("minimal generators need a finite-colength or graded module");
  return rank_difference(n, top + 2);
}

ParameterReport is_parameter_module(const Submodule& n) {
  ParameterReport rep;
  rep.d = krull_dimension(n.ring());
  rep.r = n.ambient().rank_f;
  rep.bound = rep.d + rep.r - 1;
  rep.colength = colength(n);
  rep.mu = mingens(n);
  if (rep.colength) rep.analytic_spread = rep.bound;
  rep.is_parameter = rep.colength.has_value() && rep.mu == rep.bound;
  return rep;
}

long soc_dim(const Submodule& n) {
  auto len = colength(n);
  if (!len) throw DomainError("socle dimension needs finite colength");
  Module m = colon_socle_trunc(n);
  return *len - colength_trunc(*m);
}

}  // namespace socmod
