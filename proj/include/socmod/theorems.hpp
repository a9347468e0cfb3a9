#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "socmod/homology.hpp"
#include "socmod/module_ops.hpp"

namespace socmod {

enum class Verdict { holds, fails, hypothesis_not_met, undecided, computed, error };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ClaimReport {
  std::string claim;
  Verdict verdict = Verdict::undecided;
  // {"K", "colengths", "mu", "witnesses"}; only the relevant keys are set.
  nlohmann::json certificates = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> notes;
};

// M^2 = NM in Sym^2(F). M defaults to N :_F m.
ClaimReport check_rn1(const Module& n, std::optional<Module> m = std::nullopt);

// Coefficients of relations Σ h_i c_i = 0 in S_2 lie in the deleted-generator modules.
ClaimReport check_prop23(const Module& n, int samples = 8, unsigned seed = 1);

// ℓ(NF/N^2) = n ℓ(F/N).
ClaimReport check_cor25(const Module& n);

// mM = mN for M = N :_F m over a non-regular CM ring with pd N finite.
ClaimReport check_socle_multiplier(const Module& n);

struct SocleWitness {
  FreeElement delta;
  std::vector<Poly> b;
};
// b_i x_j = δ_ij Δ in W = F/U over an Artinian ring. Empty delta picks the
// first socle basis vector.
ClaimReport lemma43_witness(const Module& u, const std::vector<FreeElement>& xs,
                            std::optional<FreeElement> delta = std::nullopt, SocleWitness* out = nullptr);

struct NewtonEdge {
  long p, q, c;  // p a + q b >= c
};
// Integral closure of an m-primary monomial ideal of k[x,y].
std::vector<Poly> monomial_integral_closure(const Ring& ring, const std::vector<Poly>& gens,
                                            std::vector<NewtonEdge>* edges = nullptr);

// Integral closedness; nullopt outside rank-one monomial ideals of a
// two-dimensional regular ring.
std::optional<bool> integrally_closed(const Submodule& n, std::string* reason = nullptr);
ClaimReport check_integrally_closed(const Module& n);

// Cohen-Macaulayness of the Rees algebra is never tested directly.
ClaimReport check_rees_cm(const Module& n);

ClaimReport theorem51_report(const Module& n);

// Hilbert-Burch dual of an m-primary ideal, with the rn1 check on the dual.
ClaimReport cor53_report(const Ring& ring, const std::vector<Poly>& ideal);

nlohmann::json to_json(const ClaimReport& r);

}  // namespace socmod
