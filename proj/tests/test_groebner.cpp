#include <doctest.h>

#include "socmod/errors.hpp"
#include "socmod/groebner.hpp"
#include "test_support.hpp"

using namespace socmod;
using socmod::testing::polys;
using socmod::testing::random_poly;
using socmod::testing::vec;

namespace {

Poly combine(const FreeElement& s, std::span<const Poly> gens) {
  Poly acc = gens[0].ring() ? Poly(gens[0].ring()) : Poly();
  for (std::size_t i = 0; i < gens.size(); ++i) acc += s[i] * gens[i];
  return acc;
}

FreeElement combine(const FreeElement& s, std::span<const FreeElement> gens) {
  FreeElement acc = gens[0].scaled(s[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) acc = acc + gens[i].scaled(s[i]);
  return acc;
}

}  // namespace

TEST_CASE("ideal bases") {
  auto A = make_ring(Field::rationals(), {"x", "y"});
  auto g1 = polys(A, {"x", "y"});
  auto gb = ideal_basis(A, g1);
  CHECK(gb->size() == 2);
  CHECK(gb->spairs_reduce_to_zero());
  CHECK(gb->zero_dimensional());

  auto g2 = polys(A, {"x^2 - y", "y^2"});
  auto gb2 = ideal_basis(A, g2);
  CHECK(gb2->spairs_reduce_to_zero());
  CHECK(gb2->zero_dimensional());
  // x^2 - y has lead x^2 and together with y^2 the leads are coprime.
  CHECK(gb2->size() == 2);
  CHECK(gb2->normal_form(A->parse("x^4")).is_zero());
  CHECK(gb2->normal_form(A->parse("x^3")) == A->parse("x*y"));

  auto g3 = polys(A, {"x^2", "y^2"});
  auto gb3 = ideal_basis(A, g3);
  CHECK(gb3->normal_form(A->parse("x^3 + x*y^2 + x*y")) == A->parse("x*y"));
  CHECK(!ideal_basis(A, polys(A, {"x^2"}))->zero_dimensional());
}

TEST_CASE("bases are reduced and stable under recomputation") {
  auto A = make_ring(Field::rationals(), {"x", "y", "z"});
  auto g = polys(A, {"x*y - z^2", "x^2 - y*z", "y^2 - x*z"});
  auto gb = ideal_basis(A, g);
  CHECK(gb->spairs_reduce_to_zero());
  std::vector<Poly> again;
  for (const auto& e : gb->generators()) again.push_back(e[0]);
  auto gb_again = ideal_basis(A, again);
  CHECK(gb_again->to_string() == gb->to_string());
  for (const auto& f : g) CHECK(gb->normal_form(f).is_zero());
  for (const auto& e : gb->generators()) CHECK(e[0].leading().coeff == 1);
}

TEST_CASE("module basis") {
  auto A = make_ring(Field::rationals(), {"x", "y"});
  std::vector<FreeElement> gens{vec(A, {"x", "y"}), vec(A, {"y", "0"}), vec(A, {"0", "x"})};
  auto gb = buchberger(A, {2, 1}, gens);
  CHECK(gb->spairs_reduce_to_zero());
  for (const auto& g : gens) CHECK(gb->reduces_to_zero(g));
  CHECK(member(A, vec(A, {"x*y", "x*y"}), gens));
  CHECK(!member(A, vec(A, {"x", "0"}), gens));
  CHECK(member(A, vec(A, {"x^2", "y^2"}), gens));
}

TEST_CASE("membership modulo relations") {
  auto B = make_ring(Field::rationals(), {"x", "y", "z"}, {"z^2 - x*y"});
  auto I = polys(B, {"x", "y"});
  CHECK(ideal_member(B, B->parse("z^2"), I));
  CHECK(!ideal_member(B, B->parse("z"), I));
  // Lead of z^2 - x*y is x*y, so x*y*z rewrites to z^3.
  CHECK(reduce_mod_relations(B, B->parse("x*y*z")) == B->parse("z^3"));
}

TEST_CASE("syzygies") {
  auto A = make_ring(Field::rationals(), {"x", "y"});
  auto xy = polys(A, {"x", "y"});
  auto s = ideal_syzygies(A, xy);
  REQUIRE(s.generators.size() == 1);
  const auto& z = s.generators[0];
  // Up to sign: (y, -x).
  CHECK((z == vec(A, {"y", "-x"}) || z == vec(A, {"-y", "x"})));

  auto m2 = polys(A, {"x^2", "x*y", "y^2"});
  auto s2 = ideal_syzygies(A, m2);
  CHECK(s2.generators.size() == 2);
  for (const auto& g : s2.generators) CHECK(combine(g, m2).is_zero());
  CHECK(member(A, vec(A, {"y", "-x", "0"}), s2.generators));
  CHECK(member(A, vec(A, {"0", "y", "-x"}), s2.generators));
  CHECK(member(A, vec(A, {"y^2", "0", "-x^2"}), s2.generators));

  std::vector<FreeElement> std_basis{vec(A, {"1", "0"}), vec(A, {"0", "1"})};
  CHECK(syzygies(A, {2, 1}, std_basis).generators.empty());
}

TEST_CASE("syzygies over a quotient ring") {
  auto B = make_ring(Field::rationals(), {"x", "y"}, {"x^2", "y^2"});
  auto g = polys(B, {"x", "y"});
  auto s = ideal_syzygies(B, g);
  for (const auto& z : s.generators) CHECK(reduce_mod_relations(B, combine(z, g)).is_zero());
  // x kills x, so (x, 0) is a relation.
  CHECK(member(B, vec(B, {"x", "0"}), s.generators));
  CHECK(member(B, vec(B, {"0", "y"}), s.generators));
  CHECK(member(B, vec(B, {"y", "-x"}), s.generators));
}

TEST_CASE("random syzygies annihilate their generators") {
  for (auto field : {Field::rationals(), Field::prime(32003)}) {
    auto A = make_ring(field, {"x", "y", "z"});
    std::mt19937 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<FreeElement> gens;
      for (int j = 0; j < 3; ++j) {
        gens.push_back(FreeElement({2, 1}, {random_poly(rng, A, 3, 2, false), random_poly(rng, A, 3, 2, false)}));
      }
      auto s = syzygies(A, {2, 1}, gens);
      for (const auto& z : s.generators) CHECK(combine(z, gens).is_zero());
    }
  }
}

TEST_CASE("quotients and local tests") {
  auto A = make_ring(Field::rationals(), {"x", "y"});
  auto I = polys(A, {"x^2", "y^2"});
  auto q = quotient_by_max_ideal(A, I);
  // (x^2, y^2) : m = (x^2, y^2, x y)
  CHECK(ideal_member(A, A->parse("x*y"), q));
  CHECK(!ideal_member(A, A->parse("x"), q));

  auto q2 = ideal_quotient(A, polys(A, {"x*y"}), A->parse("x"));
  CHECK(ideal_member(A, A->parse("y"), q2));

  CHECK(ideal_has_unit(polys(A, {"x", "1 + y"})));
  CHECK(!ideal_has_unit(polys(A, {"x", "y"})));

  // x (1 + y) generates the same ideal as x after localizing.
  std::vector<FreeElement> u{vec(A, {"x + x*y"})};
  CHECK(locally_member(A, vec(A, {"x"}), u));
  CHECK(!member(A, vec(A, {"x"}), u));
  CHECK(!locally_member(A, vec(A, {"y"}), u));

  CHECK(locally_finite_colength(A, I));
  CHECK(!locally_finite_colength(A, polys(A, {"x^2"})));
  // Away from the origin the extra component does not matter.
  CHECK(locally_finite_colength(A, polys(A, {"x*(x - 1)", "y"})));
  CHECK(!locally_finite_colength(A, polys(A, {"x*y", "y*(y - 1)"})));
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(make_ring(Field::rationals(), {"x", "y", "z"})) == 3);
  CHECK(krull_dimension(make_ring(Field::rationals(), {"x", "y", "z"}, {"z^2 - x*y"})) == 2);
  CHECK(krull_dimension(make_ring(Field::rationals(), {"x", "y"}, {"x^2", "y^2"})) == 0);
}

TEST_CASE("cache returns the same basis") {
  auto A = make_ring(Field::rationals(), {"x", "y"});
  auto g = polys(A, {"x^3 - y", "x*y"});
  auto a = ideal_basis(A, g);
  auto b = ideal_basis(A, g);
  CHECK(a.get() == b.get());
  CHECK(groebner_cache_size() > 0);
}
