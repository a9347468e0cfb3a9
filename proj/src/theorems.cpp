#include "socmod/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"

namespace socmod {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::undecided: return "undecided";
    case Verdict::computed: return "computed";
    case Verdict::error: return "error";
  }
  return "error";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::hypothesis_not_met, Verdict::undecided, Verdict::computed,
                    Verdict::error}) {
    if (to_string(v) == s) return v;
  }
  throw DomainError("unknown verdict '" + s + "'");
}

json to_json(const ClaimReport& r) {
  json j;
  j["claim"] = r.claim;
  j["verdict"] = to_string(r.verdict);
  j["certificates"] = r.certificates;
  j["result"] = r.result;
  j["notes"] = r.notes;
  return j;
}

namespace {

ClaimReport not_met(ClaimReport rep, std::string why) {
  rep.verdict = Verdict::hypothesis_not_met;
  rep.notes.push_back(std::move(why));
  return rep;
}

ClaimReport report(std::string claim) {
  ClaimReport r;
  r.claim = std::move(claim);
  return r;
}

std::vector<std::string> strings(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

// First generator of u outside v (both certified for v).
std::optional<FreeElement> first_outside(const Submodule& u, const Submodule& v) {
  int k = working_level(v);
  auto alg = TruncatedAlgebra::get(v.ring(), k);
  auto span = truncated_span(v, k);
  for (const auto& g : u.generators()) {
    if (!span->contains(alg->embed(g))) return g;
  }
  return std::nullopt;
}

bool is_monomial_ideal(const Submodule& n) {
  for (const auto& g : n.generators()) {
    if (!g[0].is_monomial()) return false;
  }
  return true;
}

}  // namespace

ClaimReport check_rn1(const Module& n, std::optional<Module> m) {
  ClaimReport rep = report("rn1");
  if (n->ambient().sym_degree != 1) return not_met(rep, "N must be a submodule of F = S_1");
  auto len = colength(*n);
  if (!len) return not_met(rep, "F/N has infinite length");
  Module mm = m ? *m : colon_socle_trunc(*n);
  if (!(mm->ambient() == n->ambient())) return not_met(rep, "M must lie in the same free module as N");
  if (!contained_trunc(*n, *mm)) return not_met(rep, "N is not contained in M");
  Module m2 = module_power(mm, 2);
  Module nm = module_product(*n, *mm);
  // NM ⊆ M^2 always; equality is the reverse inclusion.
  auto outside = first_outside(*m2, *nm);
  bool equal = !outside;
  rep.certificates["K"] = certify_truncation(*n);
  rep.certificates["colengths"] = {{"F/N", *len},
                                   {"F/M", colength_trunc(*mm)},
                                   {"S2/M^2", colength_trunc(*m2)},
                                   {"S2/NM", colength_trunc(*nm)}};
  rep.certificates["mu"] = {{"N", mingens(*n)}, {"M", mingens(*mm)}};
  rep.certificates["witnesses"] = outside ? json::array({outside->to_string()}) : json::array();
  rep.result["equal"] = equal;
  rep.result["M"] = mm->to_string();
  rep.verdict = equal ? Verdict::holds : Verdict::fails;
  return rep;
}

ClaimReport check_prop23(const Module& n, int samples, unsigned seed) {
  ClaimReport rep = report("prop23");
  const Ring& ring = n->ring();
  if (n->ambient().sym_degree != 1) return not_met(rep, "N must be a submodule of F = S_1");
  const auto& gens = n->generators();
  const std::size_t ng = gens.size();
  const std::size_t r = static_cast<std::size_t>(n->ambient().rank_f);
  rep.result["n"] = ng;
  rep.result["r"] = r;
  std::vector<std::string> gaps;
  if (ng < 1) return not_met(rep, "N has no generators");
  if (ng < r) {
    gaps.push_back("n < r: the matrix cannot be perfect");
  } else {
    auto perf = is_perfect_matrix(n->matrix());
    rep.result["perfect"] = perf.perfect;
    rep.result["grade"] = perf.grade;
    if (!perf.perfect) gaps.push_back("the matrix of N is not perfect");
  }
  if (ng <= r) gaps.push_back("n = " + std::to_string(ng) + " is not larger than r = " + std::to_string(r));

  ChainComplex piece = koszul_graded_piece(ring, gens);
  std::vector<FreeElement> d1_cols;
  for (std::size_t j = 0; j < piece.maps[0].cols(); ++j) d1_cols.push_back(piece.maps[0].column(j));
  auto rel = syzygies(ring, {piece.ranks[0], 1}, d1_cols);
  std::vector<FreeElement> relations = rel.generators;
  // Raw mt19937 output is portable; the standard distributions are not.
  std::mt19937 rng(seed);
  auto coeff = [](std::mt19937& g) { return static_cast<long>(g() % 7) - 3; };
  auto var = [&](std::mt19937& g) { return static_cast<std::size_t>(g() % ring->nvars()); };
  for (int s = 0; s < samples && !rel.generators.empty(); ++s) {
    FreeElement acc = FreeElement::zero(ring, {piece.ranks[1], 1});
    for (const auto& g : rel.generators) {
      long c0 = coeff(rng);
      std::size_t v = var(rng);
      long c1 = coeff(rng);
      Poly c = ring->constant(c0) + ring->var(v).scaled(ring->field().from(c1));
      acc = acc + g.scaled(c);
    }
    relations.push_back(acc);
  }
  json violations = json::array();
  for (const auto& h : relations) {
    for (std::size_t i = 0; i < ng; ++i) {
      std::vector<Poly> hi;
      for (std::size_t k = 0; k < r; ++k) hi.push_back(h[i * r + k]);
      FreeElement hvec(n->ambient(), hi);
      std::vector<FreeElement> deleted;
      for (std::size_t j = 0; j < ng; ++j) {
        if (j != i) deleted.push_back(gens[j]);
      }
      if (locally_member(ring, hvec, deleted)) continue;
      std::vector<std::string> coeffs;
      for (std::size_t j = 0; j < ng; ++j) {
        std::vector<Poly> hj;
        for (std::size_t k = 0; k < r; ++k) hj.push_back(h[j * r + k]);
        coeffs.push_back(FreeElement(n->ambient(), hj).to_string());
      }
      violations.push_back({{"relation", coeffs}, {"index", i + 1}, {"coefficient", hvec.to_string()}});
      break;
    }
  }
  rep.result["relations_checked"] = relations.size();
  rep.result["violations"] = violations.size();
  rep.certificates["witnesses"] = violations;
  if (!gaps.empty()) {
    for (auto& g : gaps) rep.notes.push_back(g);
    if (!violations.empty()) rep.notes.push_back("the conclusion fails for this input");
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }
  rep.verdict = violations.empty() ? Verdict::holds : Verdict::fails;
  return rep;
}

ClaimReport check_cor25(const Module& n) {
  ClaimReport rep = report("cor25");
  if (n->ambient().sym_degree != 1) return not_met(rep, "N must be a submodule of F = S_1");
  const std::size_t ng = n->generators().size();
  const std::size_t r = static_cast<std::size_t>(n->ambient().rank_f);
  if (ng <= r) return not_met(rep, "n = " + std::to_string(ng) + " is not larger than r = " + std::to_string(r));
  auto perf = is_perfect_matrix(n->matrix());
  if (!perf.perfect) return not_met(rep, "the matrix of N is not perfect");
  auto len = colength(*n);
  if (!len) return not_met(rep, "F/N has infinite length");
  Module f = free_module(n->ring(), static_cast<int>(r));
  Module nf = module_product(*n, *f);
  Module n2 = module_power(n, 2);
  long l_n2 = colength_trunc(*n2);
  long l_nf = colength_trunc(*nf);
  long lhs = l_n2 - l_nf;
  long rhs = static_cast<long>(ng) * *len;
  rep.certificates["K"] = certify_truncation(*n);
  rep.certificates["colengths"] = {{"F/N", *len}, {"S2/N^2", l_n2}, {"S2/NF", l_nf}, {"NF/N^2", lhs}};
  rep.result["lhs"] = lhs;
  rep.result["rhs"] = rhs;
  rep.verdict = lhs == rhs ? Verdict::holds : Verdict::fails;
  return rep;
}

ClaimReport check_socle_multiplier(const Module& n) {
  ClaimReport rep = report("socle-mult");
  const Ring& ring = n->ring();
  if (n->ambient().sym_degree != 1) return not_met(rep, "N must be a submodule of F = S_1");
  auto len = colength(*n);
  if (!len) return not_met(rep, "F/N has infinite length");
  Module m = colon_socle_trunc(*n);
  Module mm = max_ideal_times(*m);
  Module mn = max_ideal_times(*n);
  auto outside = first_outside(*mm, *mn);
  bool equal = !outside;
  rep.result["equal"] = equal;
  rep.result["regular"] = ring->is_regular_presentation();
  rep.certificates["colengths"] = {{"F/N", *len}, {"F/M", colength_trunc(*m)}, {"F/mN", colength_trunc(*mn)},
                                   {"F/mM", colength_trunc(*mm)}};
  rep.certificates["witnesses"] = outside ? json::array({outside->to_string()}) : json::array();
  if (ring->is_regular_presentation()) {
    rep.notes.push_back("consistent-with-regularity: over a regular ring either outcome is allowed");
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }
  if (!ring->cohen_macaulay()) return not_met(rep, "the ring is not declared Cohen-Macaulay");
  int d = krull_dimension(ring);
  if (d < 1) return not_met(rep, "depth A > 0 needs dimension at least one");
  auto res = minimal_free_resolution(n->matrix(), d + 2);
  rep.result["betti"] = res.betti;
  if (res.partial) return not_met(rep, "pd F/N is infinite: the resolution does not stop by length " + std::to_string(d + 1));
  rep.verdict = equal ? Verdict::holds : Verdict::fails;
  return rep;
}

ClaimReport lemma43_witness(const Module& u, const std::vector<FreeElement>& xs, std::optional<FreeElement> delta,
                            SocleWitness* out) {
  ClaimReport rep = report("lemma43");
  const Ring& ring = u->ring();
  const Ambient amb = u->ambient();
  if (xs.empty()) return not_met(rep, "V needs at least one generator");
  int k;
  try {
    k = working_level(*u);
  } catch (const DomainError&) {
    return not_met(rep, "W = F/U does not have finite length");
  }
  long soc = soc_dim(*u);
  rep.result["soc_dim"] = soc;
  if (soc != 1) return not_met(rep, "dim Soc(W) = " + std::to_string(soc) + ", expected 1");

  std::vector<FreeElement> vg = u->generators(), mvg = u->generators();
  for (const auto& x : xs) {
    vg.push_back(x);
    for (std::size_t v = 0; v < ring->nvars(); ++v) mvg.push_back(x.scaled(ring->var(v)));
  }
  auto vmod = make_module(ring, amb, vg, u->certificate());
  auto mvmod = make_module(ring, amb, mvg, u->certificate());
  long mu = static_cast<long>(truncated_span(*vmod, k)->rank() - truncated_span(*mvmod, k)->rank());
  rep.result["ell"] = xs.size();
  rep.result["mu"] = mu;
  if (mu != static_cast<long>(xs.size())) return not_met(rep, "x_1..x_l is not a minimal generating set of V");

  Module m = colon_socle_trunc(*u);
  FreeElement d;
  if (delta) {
    d = *delta;
    if (!member_trunc(d, *m) || member_trunc(d, *u)) return not_met(rep, "Delta is not a nonzero socle element");
  } else {
    d = m->generators().at(u->generators().size());
  }

  auto alg = TruncatedAlgebra::get(ring, k);
  auto span = truncated_span(*u, k);
  const std::size_t ell = xs.size();
  std::vector<DenseVec> xv;
  for (const auto& x : xs) xv.push_back(alg->embed(x));
  std::vector<DenseVec> images;
  for (const auto& mono : alg->basis()) {
    Poly p = Poly::monomial(ring->poly_ring(), mono, 1);
    DenseVec img;
    for (const auto& x : xv) {
      DenseVec r = span->remainder(alg->times(p, x));
      img.insert(img.end(), r.begin(), r.end());
    }
    images.push_back(std::move(img));
  }
  DenseVec dv = span->remainder(alg->embed(d));
  std::vector<Poly> bs;
  bool ok = true;
  for (std::size_t i = 0; i < ell && ok; ++i) {
    DenseVec target(ell * dv.size());
    std::copy(dv.begin(), dv.end(), target.begin() + static_cast<long>(i * dv.size()));
    auto sol = solve(ring->field(), images, target);
    if (!sol) {
      ok = false;
      break;
    }
    bs.push_back(alg->lift(*sol));
  }
  // Independent recheck of b_i x_j = δ_ij Δ modulo U.
  for (std::size_t i = 0; i < bs.size() && ok; ++i) {
    for (std::size_t j = 0; j < ell && ok; ++j) {
      FreeElement lhs = xs[j].scaled(bs[i]);
      if (i == j) lhs = lhs - d;
      ok = member_trunc(lhs, *u);
    }
  }
  rep.certificates["K"] = k;
  rep.result["delta"] = d.to_string();
  rep.result["b"] = strings(bs);
  rep.certificates["witnesses"] = strings(bs);
  if (out) *out = {d, bs};
  rep.verdict = ok ? Verdict::holds : Verdict::fails;
  return rep;
}

std::vector<Poly> monomial_integral_closure(const Ring& ring, const std::vector<Poly>& gens,
                                            std::vector<NewtonEdge>* edges) {
  if (!ring->is_regular_presentation() || ring->nvars() != 2) {
    throw DomainError("oracle limited to monomial ideals of a two-dimensional regular ring");
  }
  std::vector<std::pair<long, long>> pts;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) throw DomainError("oracle limited to monomial ideals");
    const auto& m = g.leading().mono;
    pts.emplace_back(m[0], m[1]);
  }
  auto mono = [&](long a, long b) { return Poly::monomial(ring->poly_ring(), Monomial{int(a), int(b)}, 1); };
  for (const auto& [a, b] : pts) {
    if (a == 0 && b == 0) return {ring->one()};
  }
  long amax = -1, bmax = -1;
  for (const auto& [a, b] : pts) {
    if (b == 0 && (amax < 0 || a < amax)) amax = a;
    if (a == 0 && (bmax < 0 || b < bmax)) bmax = b;
  }
  if (amax < 0 || bmax < 0) throw DomainError("oracle needs an m-primary monomial ideal");
  std::sort(pts.begin(), pts.end());
  // Lower convex hull, a ascending.
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && hull.back().first == p.first) continue;  // sorted: keep smallest b
    while (hull.size() >= 2) {
      auto [a1, b1] = hull[hull.size() - 2];
      auto [a2, b2] = hull.back();
      // Drop the middle point if it is on or above the chord.
      long cross = (a2 - a1) * (p.second - b1) - (b2 - b1) * (p.first - a1);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  // The hull ends at (amax, 0); points beyond it are dominated.
  while (!hull.empty() && hull.back().first > amax) hull.pop_back();
  if (edges) {
    edges->clear();
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      auto [a1, b1] = hull[i];
      auto [a2, b2] = hull[i + 1];
      long p = b1 - b2, q = a2 - a1, c = p * a1 + q * b1;
      long g = std::gcd(std::gcd(p, q), c);
      edges->push_back({p / g, q / g, c / g});
    }
  }
  std::vector<Poly> out;
  long prev = -1;
  for (long a = 0; a <= amax; ++a) {
    mpq_class f = 0;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      auto [a1, b1] = hull[i];
      auto [a2, b2] = hull[i + 1];
      if (a >= a1 && a <= a2) {
        f = mpq_class(b1) + mpq_class(b2 - b1, a2 - a1) * (a - a1);
        f.canonicalize();
        break;
      }
    }
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
    long b = c.get_si();
    if (prev < 0 || b < prev) out.push_back(mono(a, b));
    prev = b;
  }
  std::reverse(out.begin(), out.end());  // grevlex-descending: x^amax first
  return out;
}

std::optional<bool> integrally_closed(const Submodule& n, std::string* reason) {
  auto why = [&](const char* s) {
    if (reason) *reason = s;
    return std::optional<bool>();
  };
  if (n.ambient().rank_f != 1 || n.ambient().sym_degree != 1) {
    return why("integral closedness of modules of rank at least two is not decided");
  }
  if (!n.ring()->is_regular_presentation() || n.ring()->nvars() != 2) {
    return why("integral closedness is decided only over a two-dimensional regular ring");
  }
  if (!is_monomial_ideal(n)) return why("integral closedness is decided only for monomial ideals");
  auto gens = n.ideal_generators();
  std::vector<Poly> closure;
  try {
    closure = monomial_integral_closure(n.ring(), gens);
  } catch (const DomainError&) {
    return why("integral closedness is decided only for m-primary monomial ideals");
  }
  for (const auto& c : closure) {
    if (!ideal_member(n.ring(), c, gens)) return false;
  }
  return true;
}

ClaimReport check_integrally_closed(const Module& n) {
  ClaimReport rep = report("closed");
  std::string reason;
  auto closed = integrally_closed(*n, &reason);
  if (!closed) {
    rep.verdict = Verdict::undecided;
    rep.notes.push_back(reason);
    return rep;
  }
  std::vector<NewtonEdge> edges;
  auto closure = monomial_integral_closure(n->ring(), n->ideal_generators(), &edges);
  rep.result["closed"] = *closed;
  rep.result["closure"] = strings(closure);
  json e = json::array();
  for (const auto& ed : edges) e.push_back({ed.p, ed.q, ed.c});
  rep.certificates["witnesses"] = e;
  rep.verdict = Verdict::computed;
  return rep;
}

ClaimReport check_rees_cm(const Module& n) {
  ClaimReport rep = report("rees-cm");
  rep.verdict = Verdict::undecided;
  rep.notes.push_back("Cohen-Macaulayness of the Rees algebra is not tested directly");
  try {
    auto rn1 = check_rn1(n);
    if (rn1.verdict == Verdict::holds || rn1.verdict == Verdict::fails) {
      rep.result["rn1"] = rn1.result["equal"];
      if (rn1.verdict == Verdict::holds) {
        rep.notes.push_back("inferred: M^2 = NM, which gives a Cohen-Macaulay Rees algebra under the reduction-number criterion");
      }
    }
  } catch (const Error& e) {
    rep.notes.push_back(std::string("rn1 not available: ") + e.what());
  }
  return rep;
}

ClaimReport theorem51_report(const Module& n) {
  ClaimReport rep = report("thm51");
  const Ring& ring = n->ring();
  if (n->ambient().sym_degree != 1) return not_met(rep, "N must be a submodule of F = S_1");
  if (!ring->cohen_macaulay()) return not_met(rep, "the ring is not declared Cohen-Macaulay");
  for (const auto& g : n->generators()) {
    if (!g.in_max_ideal_times_ambient()) return not_met(rep, "N is not contained in mF");
  }
  auto par = is_parameter_module(*n);
  rep.result["d"] = par.d;
  rep.result["r"] = par.r;
  rep.result["mu"] = par.mu;
  if (!par.is_parameter) return not_met(rep, "N is not a parameter module");
  auto rn1 = check_rn1(n);
  rep.certificates = rn1.certificates;
  bool equal = rn1.result["equal"].get<bool>();
  rep.result["rn1"] = equal;
  const bool regular = ring->is_regular_presentation();
  std::string reason;
  auto closed = integrally_closed(*n, &reason);
  rep.result["integrally_closed"] = closed ? json(*closed) : json("undecided");
  if (par.d != 2) {
    rep.verdict = Verdict::undecided;
    rep.notes.push_back("exploratory: the equivalence is only claimed in dimension two");
    return rep;
  }
  if (regular && par.r == 1) {
    if (!closed) {
      rep.verdict = Verdict::undecided;
      rep.notes.push_back(reason);
      return rep;
    }
    // M^2 != NM exactly when N is integrally closed.
    rep.verdict = (!equal) == *closed ? Verdict::holds : Verdict::fails;
    return rep;
  }
  rep.notes.push_back("N is not an ideal of a regular ring, so M^2 = NM is predicted");
  if (!closed) rep.notes.push_back(reason);
  rep.verdict = equal ? Verdict::holds : Verdict::fails;
  return rep;
}

ClaimReport cor53_report(const Ring& ring, const std::vector<Poly>& ideal) {
  ClaimReport rep = report("cor53");
  if (!ring->is_regular_presentation() || krull_dimension(ring) != 2) {
    return not_met(rep, "needs a two-dimensional regular ring");
  }
  DualImageReport dual;
  try {
    dual = dual_image_module(ring, ideal);
  } catch (const DomainError& e) {
    return not_met(rep, e.what());
  }
  rep.result["betti"] = dual.resolution.betti;
  rep.result["n"] = dual.n_gens;
  rep.result["phi"] = dual.phi.to_string();
  rep.result["N"] = dual.n->to_string();
  rep.result["mu"] = dual.parameter.mu;
  rep.result["parameter"] = dual.parameter.is_parameter;
  auto rn1 = check_rn1(dual.n);
  rep.certificates = rn1.certificates;
  bool equal = rn1.result["equal"].get<bool>();
  rep.result["rn1"] = equal;
  if (dual.below_three) return not_met(rep, "n < 3");
  if (!dual.parameter.is_parameter) return not_met(rep, "the dual image is not a parameter module");
  rep.verdict = equal ? Verdict::holds : Verdict::fails;
  return rep;
}

}  // namespace socmod
