#include "socmod/submodule.hpp"

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"

namespace socmod {

Submodule::Submodule(Ring ring, Ambient ambient, std::vector<FreeElement> gens,
                     std::optional<std::vector<Poly>> certificate)
    : ring_(std::move(ring)), ambient_(ambient), caches_(std::make_unique<Caches>()) {
  for (auto& g : gens) {
    if (!(g.ambient() == ambient_)) throw StructuralError("generator " + g.to_string() + " lies in a different free module");
    bool zero = true;
    for (const auto& c : g.components()) {
      if (!reduce_mod_relations(ring_, c).is_zero()) {
        zero = false;
        break;
      }
    }
    if (!zero) gens_.push_back(std::move(g));
  }
  if (certificate) {
    cert_ = std::move(*certificate);
    cert_given_ = true;
  }
}

PolyMatrix Submodule::matrix() const {
  return PolyMatrix::from_columns(ring_, static_cast<std::size_t>(rank()), gens_);
}

std::vector<Poly> Submodule::ideal_generators() const {
  if (rank() != 1) throw StructuralError("module is not an ideal");
  std::vector<Poly> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

const std::vector<Poly>& Submodule::certificate() const {
  std::call_once(cert_once_, [this] {
    if (cert_given_) return;
    const std::size_t r = static_cast<std::size_t>(rank());
    if (gens_.size() >= r) cert_ = minors(matrix(), r);
  });
  return cert_;
}

std::string Submodule::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += rank() == 1 ? gens_[i][0].to_string() : gens_[i].to_string();
  }
  return s + ">";
}

Module make_module(const Ring& ring, Ambient ambient, std::vector<FreeElement> gens,
                   std::optional<std::vector<Poly>> certificate) {
  return std::make_shared<const Submodule>(ring, ambient, std::move(gens), std::move(certificate));
}

Module make_ideal(const Ring& ring, std::vector<Poly> gens) {
  std::vector<FreeElement> v;
  for (auto& g : gens) v.push_back(FreeElement::from_poly(std::move(g)));
  return make_module(ring, {1, 1}, std::move(v));
}

Module unit_module(const Ring& ring, int rank_f) {
  Ambient amb{rank_f, 0};
  return make_module(ring, amb, {FreeElement::basis_vector(ring, amb, 0)}, std::vector<Poly>{ring->one()});
}

}  // namespace socmod
