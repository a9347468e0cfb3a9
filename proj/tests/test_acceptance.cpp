// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "socmod/artinian.hpp"
#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"
#include "socmod/homology.hpp"
#include "socmod/linalg.hpp"
#include "socmod/script.hpp"
#include "socmod/session.hpp"
#include "socmod/theorems.hpp"

using namespace socmod;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  std::string info;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Ring qq(std::vector<std::string> vars, std::vector<std::string> rel = {}, bool cm = false) {
  return make_ring(Field::rationals(), std::move(vars), std::move(rel), cm);
}

std::vector<Poly> polys(const Ring& A, std::initializer_list<const char*> text) {
  std::vector<Poly> out;
  for (const char* t : text) out.push_back(A->parse(t));
  return out;
}

Module columns(const Ring& A, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Poly>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (const char* t : r) e.back().push_back(A->parse(t));
  }
  return columns_to_module(PolyMatrix(A, e));
}

FreeElement vec(const Ring& A, std::initializer_list<const char*> comps) {
  std::vector<Poly> p;
  for (const char* t : comps) p.push_back(A->parse(t));
  Ambient amb{static_cast<int>(p.size()), 1};
  return FreeElement(amb, std::move(p));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nvars == 0) return {Monomial(std::size_t{0})};
  rec(0, d);
  return out;
}

// ℓ(F/(N + m^K F)) from standard monomials of a module Groebner basis.
long gb_colength(const Submodule& n, int k) {
  const Ring& ring = n.ring();
  const Ambient amb = n.ambient();
  std::vector<FreeElement> gens = n.generators();
  const std::size_t nv = ring->nvars();
  for (int j = 0; j < amb.rank(); ++j) {
    for (const auto& m : monomials_of_degree(nv, k)) {
      gens.push_back(FreeElement::basis_vector(ring, amb, j).scaled(Poly::monomial(ring->poly_ring(), m, 1)));
    }
  }
  auto gb = buchberger(ring, amb, gens);
  long count = 0;
  for (int j = 0; j < amb.rank(); ++j) {
    for (int d = 0; d < k; ++d) {
      for (const auto& m : monomials_of_degree(nv, d)) {
        bool standard = true;
        for (const auto& e : gb->elements()) {
          if (e.front().pos == static_cast<std::size_t>(j) && e.front().mono.divides(m)) {
            standard = false;
            break;
          }
        }
        count += standard ? 1 : 0;
      }
    }
  }
  return count;
}

Poly random_poly(std::mt19937& rng, const Ring& A, int terms, int max_exp, bool constant) {
  Poly p = A->zero();
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(A->nvars());
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
    Monomial m(e);
    if (!constant && m.is_one()) continue;
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    p = p + Poly::monomial(A->poly_ring(), m, A->field().from(c));
  }
  return p;
}

void report(int id, const char* what, const Check& c, long ms) {
  std::printf("[%s] criterion %d: %s; %s (%ld ms)%s%s\n", c.ok ? "PASS" : "FAIL", id, what, c.info.c_str(), ms,
              c.ok ? "" : " : ", c.detail.c_str());
}

template <class F>
bool run(int id, const char* what, F body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  report(id, what, c, ms);
  return c.ok;
}

void criterion1(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto S = qq({"x", "y", "z"});
  auto n = columns(S, {{"x", "y", "z", "0"}, {"0", "x", "y", "z"}});
  c.require(soc_dim(*n) == 2, "soc_dim != 2");
  auto m = colon_socle_trunc(*n);
  auto mm = make_module(S, {2, 1},
                        {vec(S, {"x", "0"}), vec(S, {"y", "0"}), vec(S, {"z", "0"}), vec(S, {"0", "x"}),
                         vec(S, {"0", "y"}), vec(S, {"0", "z"})});
  c.require(contained_trunc(*m, *mm) && contained_trunc(*mm, *m), "M != m+m");
  c.require(check_rn1(n).verdict == Verdict::holds, "rn1 does not hold");
  auto res = minimal_free_resolution(n->matrix());
  c.require(res.betti == std::vector<int>{2, 4, 4, 2} && !res.partial, "betti != 2 4 4 2");
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  c.require(ms < 10000, "slower than 10 s");
}

void criterion2(Check& c) {
  auto X = qq({"X"});
  auto n = columns(X, {{"X", "0"}, {"0", "X"}});
  auto r = check_prop23(n);
  c.require(r.verdict == Verdict::hypothesis_not_met, "verdict is not hypothesis-not-met");
  c.require(r.result["n"] == 2 && r.result["r"] == 2, "n != r");
  c.require(!r.certificates["witnesses"].empty(), "no violation exhibited");
  if (r.certificates["witnesses"].empty()) return;
  auto rel = r.certificates["witnesses"][0]["relation"];
  bool wv = rel == nlohmann::json({"(0, 1)", "(-1, 0)"}) || rel == nlohmann::json({"(0, -1)", "(1, 0)"});
  c.require(wv, "relation is not (w, -v)");
  // w is not in (Xw): the deleted-generator module for c_1 = Xv.
  c.require(!locally_member(X, vec(X, {"0", "1"}), std::vector<FreeElement>{vec(X, {"0", "X"})}), "w in (Xw)");
  // And the relation really is one: w(Xv) - v(Xw) = 0 in S_2.
  FreeElement v = vec(X, {"1", "0"}), w = vec(X, {"0", "1"});
  c.require((sym_product(w, vec(X, {"X", "0"})) - sym_product(v, vec(X, {"0", "X"}))).is_zero(), "not a relation");
}

void criterion3(Check& c) {
  auto A = qq({"x", "y"});
  auto n = columns(A, {{"x", "y", "0"}, {"0", "x", "y"}});
  auto p = is_perfect_matrix(n->matrix());
  c.require(p.perfect && p.grade == 2 && p.bound == 2, "not perfect of grade 2");
  c.require(check_prop23(n).verdict == Verdict::holds, "prop23 verdict");

  // Every relation with entries of degree <= 1: a basis of that k-space.
  auto piece = koszul_graded_piece(A, n->generators());
  const PolyMatrix& d1 = piece.maps[0];
  std::vector<Poly> coeffs = polys(A, {"1", "x", "y"});
  std::vector<std::pair<std::size_t, Poly>> cand;  // (column, coefficient)
  for (std::size_t j = 0; j < d1.cols(); ++j) {
    for (const auto& co : coeffs) cand.emplace_back(j, co);
  }
  // Coordinates of images in S_2 over monomials of degree <= 2.
  std::vector<Monomial> mons;
  for (int d = 0; d <= 2; ++d) {
    for (const auto& m : monomials_of_degree(2, d)) mons.push_back(m);
  }
  const std::size_t rows = d1.rows();
  std::vector<DenseVec> images;
  for (const auto& [j, co] : cand) {
    DenseVec img(rows * mons.size(), Scalar(0));
    for (std::size_t r = 0; r < rows; ++r) {
      Poly e = d1.at(r, j) * co;
      for (const auto& t : e.terms()) {
        for (std::size_t k = 0; k < mons.size(); ++k) {
          if (mons[k] == t.mono) img[r * mons.size() + k] = t.coeff;
        }
      }
    }
    images.push_back(std::move(img));
  }
  auto ker = kernel(A->field(), images, rows * mons.size());
  c.require(!ker.empty(), "no degree <= 1 relations");
  c.info = std::to_string(ker.size()) + " relations";
  const auto& gens = n->generators();
  for (const auto& kv : ker) {
    std::vector<Poly> h(d1.cols(), A->zero());
    for (std::size_t t = 0; t < cand.size(); ++t) {
      if (kv[t] != 0) h[cand[t].first] = h[cand[t].first] + cand[t].second.scaled(kv[t]);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      FreeElement hi(Ambient{2, 1}, {h[i * 2], h[i * 2 + 1]});
      std::vector<FreeElement> deleted;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i) deleted.push_back(gens[j]);
      }
      c.require(locally_member(A, hi, deleted), "a coefficient escapes its deleted-generator module");
    }
  }
  auto cor = check_cor25(n);
  c.require(cor.verdict == Verdict::holds, "cor25 verdict");
  c.require(cor.result["lhs"] == 3 * *colength(*n), "l(NF/N^2) != 3 l(F/N)");
}

void criterion4(Check& c) {
  auto A = qq({"x", "y"});
  std::vector<std::pair<int, int>> cases{{1, 1}};
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) cases.emplace_back(a, b);
  }
  c.require(cases.size() == 17, "instance count");
  int agree = 0;
  for (auto [a, b] : cases) {
    std::vector<Poly> gens{A->parse("x^" + std::to_string(a)), A->parse("y^" + std::to_string(b))};
    bool equal = check_rn1(make_ideal(A, gens)).result["equal"].get<bool>();
    auto closure = monomial_integral_closure(A, gens);
    bool differs = false;
    for (const auto& g : closure) differs = differs || !ideal_member(A, g, gens);
    if (equal == differs) ++agree;
    c.require(equal == differs, "disagreement at a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  c.require(agree == 17, "agreement count");
  c.info = std::to_string(agree) + " agree";
}

void criterion5(Check& c) {
  auto B = qq({"x", "y", "z"}, {"z^2 - x*y"}, true);
  auto n = make_ideal(B, polys(B, {"x", "y"}));
  c.require(check_rn1(n).verdict == Verdict::holds, "rn1");
  auto s = check_socle_multiplier(n);
  c.require(s.verdict == Verdict::holds && s.result["equal"] == true, "mM != mN");
}

void criterion6(Check& c) {
  auto A = qq({"x", "y"});
  auto r = cor53_report(A, polys(A, {"x^2", "x*y", "y^2"}));
  c.require(r.result["betti"] == nlohmann::json({1, 3, 2}), "betti != 1 3 2");
  c.require(r.result["parameter"] == true && r.result["mu"] == 3, "dual image not a parameter module with mu 3");
  c.require(r.result["rn1"] == true && r.verdict == Verdict::holds, "rn1 on the dual image");
  auto e = cor53_report(A, polys(A, {"x", "y"}));
  c.require(e.result["n"] == 2 && e.verdict == Verdict::hypothesis_not_met, "n < 3 not flagged");
  c.require(e.result["rn1"] == false, "rn1 does not fail for n = 2");
}

void criterion7(Check& c) {
  int modules = 0;
  for (const auto& [file, text] : bundled_corpus()) {
    auto decls = declared_modules(script::parse_script(text), {});
    for (const auto& [name, n] : decls) {
      std::string where = file + ":" + name;
      if (n->ambient().sym_degree != 1 || !colength(*n)) continue;
      ++modules;
      const Ring& ring = n->ring();
      int k = working_level(*n);
      long lt = colength_trunc(*n);
      c.require(lt == gb_colength(*n, k) && lt == gb_colength(*n, k + 1), where + " colength");
      Module m = colon_socle_trunc(*n);
      long lm = colength_trunc(*m);
      c.require(lm == gb_colength(*m, k), where + " colon colength");
      std::vector<FreeElement> probes = m->generators();
      for (int j = 0; j < n->ambient().rank(); ++j) {
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
          probes.push_back(FreeElement::basis_vector(ring, n->ambient(), j).scaled(ring->var(v)));
        }
      }
      for (const auto& g : m->generators()) {
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
          FreeElement xg = g.scaled(ring->var(v));
          probes.push_back(xg);
          c.require(locally_member(ring, xg, n->generators()), where + " colon: m*M not in N");
        }
      }
      std::vector<bool> at_k;
      for (const auto& f : probes) {
        bool t = member_trunc(f, *n);
        at_k.push_back(t);
        c.require(t == locally_member(ring, f, n->generators()), where + " membership");
      }
      // K -> K+1.
      TruncPolicy saved = trunc_policy();
      set_trunc_policy({k + 1, saved.cap});
      c.require(colength_trunc(*n) == lt, where + " colength unstable");
      for (std::size_t i = 0; i < probes.size(); ++i) {
        c.require(member_trunc(probes[i], *n) == at_k[i], where + " membership unstable");
      }
      Module m1 = colon_socle_trunc(*n);
      set_trunc_policy(saved);
      c.require(contained_trunc(*m1, *m) && contained_trunc(*m, *m1), where + " colon unstable");
    }
  }
  c.info = std::to_string(modules) + " modules";
  c.require(modules >= 20, "fewer corpus modules than expected: " + std::to_string(modules));
}

void criterion8(Check& c) {
  std::mt19937 rng(8);
  auto S = qq({"x", "y", "z"});
  auto B = qq({"x", "y", "z"}, {"z^2 - x*y"}, true);
  for (int t = 0; t < 20; ++t) {
    std::vector<Poly> seq;
    int len = 2 + t % 3;
    for (int i = 0; i < len; ++i) seq.push_back(random_poly(rng, S, 3, 2, true));
    c.require(koszul_complex(S, seq).is_complex(), "Koszul d*d != 0");
    c.require(ideal_basis(S, seq)->spairs_reduce_to_zero(), "S-pair does not reduce");
  }
  for (int t = 0; t < 12; ++t) {
    const Ring& R = t % 2 ? B : S;
    std::vector<FreeElement> gens;
    for (int i = 0; i < 3; ++i) {
      gens.push_back(FreeElement(Ambient{2, 1}, {random_poly(rng, R, 2, 2, false), random_poly(rng, R, 2, 2, false)}));
    }
    c.require(buchberger(R, {2, 1}, gens)->spairs_reduce_to_zero(), "module S-pair does not reduce");
    auto syz = syzygies(R, {2, 1}, gens);
    for (const auto& s : syz.generators) {
      FreeElement sum = FreeElement::zero(R, {2, 1});
      for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + gens[i].scaled(s[i]);
      c.require(reduce_mod_relations(R, sum[0]).is_zero() && reduce_mod_relations(R, sum[1]).is_zero(),
                "syzygy does not vanish");
    }
  }
  // Socle witnesses over random complete intersections.
  int found = 0;
  for (int t = 0; t < 12; ++t) {
    auto A = qq({"x", "y"});
    int a = 2 + static_cast<int>(rng() % 3), b = 2 + static_cast<int>(rng() % 3);
    long co = static_cast<long>(rng() % 5) - 2;
    auto u = make_ideal(A, {A->parse("x^" + std::to_string(a) + " + " + std::to_string(co) + "*x*y"),
                            A->parse("y^" + std::to_string(b))});
    SocleWitness w;
    std::vector<FreeElement> xs{vec(A, {"x"}), vec(A, {"y"})};
    if (lemma43_witness(u, xs, std::nullopt, &w).verdict != Verdict::holds) continue;
    bool ok = true;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        FreeElement lhs = xs[j].scaled(w.b[i]);
        if (i == j) lhs = lhs - w.delta;
        ok = ok && member(A, lhs, u->generators());
      }
    }
    found += ok ? 1 : 0;
  }
  c.info = std::to_string(found) + " socle witnesses";
  c.require(found >= 10, "socle witnesses found on " + std::to_string(found) + " instances");
  for (const auto& [file, text] : bundled_corpus()) {
    auto ast = script::parse_script(text);
    c.require(script::parse_script(script::print_script(ast)) == ast, file + " round trip");
  }
}

void criterion9(Check& c) {
  auto A = qq({"x", "y"});
  auto p = make_ideal(A, polys(A, {"x^2", "y^2"}));
  auto rees = check_rees_cm(p);
  c.require(rees.verdict == Verdict::undecided, "Rees Cohen-Macaulayness was decided");
  c.require(check_rn1(p).verdict == Verdict::holds, "rn1 premise");
  auto n2 = columns(A, {{"x", "y", "0"}, {"0", "x", "y"}});
  c.require(!integrally_closed(*n2).has_value(), "rank two closedness was decided");
  c.require(check_integrally_closed(n2).verdict == Verdict::undecided, "closed verdict");
  c.require(theorem51_report(n2).result["integrally_closed"] == "undecided", "thm51 closedness field");
  auto S = qq({"x", "y", "z"});
  auto ex = columns(S, {{"x", "y", "z", "0"}, {"0", "x", "y", "z"}});
  c.require(check_integrally_closed(ex).verdict == Verdict::undecided, "rank two closedness in dimension three");
  c.require(check_rees_cm(ex).verdict == Verdict::undecided, "Rees in dimension three");
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "rank-two banded module over QQ[x,y,z]", criterion1);
  failed += !run(2, "square perfect matrix violates the deleted-generator property", criterion2);
  failed += !run(3, "banded perfect matrix: grade, relations of degree <= 1, colength identity", criterion3);
  failed += !run(4, "rn1 agrees with the monomial closure oracle on 17 ideals", criterion4);
  failed += !run(5, "non-regular hypersurface: rn1 and mM = mN", criterion5);
  failed += !run(6, "dual image pipeline for m^2 and (x, y)", criterion6);
  failed += !run(7, "Groebner and truncation backends agree on the corpus, stable at K+1", criterion7);
  failed += !run(8, "property suites", criterion8);
  failed += !run(9, "Rees Cohen-Macaulayness and rank >= 2 closedness are refused", criterion9);
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
