#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socmod/linalg.hpp"
#include "socmod/matrix.hpp"
#include "socmod/ring.hpp"

namespace socmod {

class Submodule;
using Module = std::shared_ptr<const Submodule>;

// Submodule of a free module Sym^s(A^r) given by generators.
//
// The certificate ideal C satisfies C * ambient ⊆ module. It defaults to the
// zeroth Fitting ideal of the generator matrix; products and colons supply
// cheaper ones. When C is m-primary it bounds the truncation level at which
// linear algebra over A/(J + m^K) is exact for this module.
class Submodule {
 public:
  Submodule(Ring ring, Ambient ambient, std::vector<FreeElement> gens,
            std::optional<std::vector<Poly>> certificate = std::nullopt);

  const Ring& ring() const { return ring_; }
  const Ambient& ambient() const { return ambient_; }
  int rank() const { return ambient_.rank(); }
  const std::vector<FreeElement>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_ideal() const { return ambient_ == Ambient{1, 1}; }

  // Generators as columns of a rank x n matrix.
  PolyMatrix matrix() const;
  std::vector<Poly> ideal_generators() const;  // rank-one ambient only

  const std::vector<Poly>& certificate() const;

  std::string to_string() const;

  // Caches filled by the truncation backend.
  struct Caches {
    std::mutex mu;
    std::optional<int> level;
    std::map<int, std::shared_ptr<const Echelon>> spans;
  };
  Caches& caches() const { return *caches_; }

 private:
  Ring ring_;
  Ambient ambient_;
  std::vector<FreeElement> gens_;
  mutable std::once_flag cert_once_;
  mutable std::vector<Poly> cert_;
  bool cert_given_ = false;
  std::unique_ptr<Caches> caches_;
};

Module make_module(const Ring& ring, Ambient ambient, std::vector<FreeElement> gens,
                   std::optional<std::vector<Poly>> certificate = std::nullopt);
Module make_ideal(const Ring& ring, std::vector<Poly> gens);
// A^0-graded unit module: Sym^0(F) = A generated by 1.
Module unit_module(const Ring& ring, int rank_f);

}  // namespace socmod
