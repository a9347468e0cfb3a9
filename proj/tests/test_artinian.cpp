#include <doctest.h>

#include "socmod/artinian.hpp"
#include "socmod/errors.hpp"
#include "socmod/module_ops.hpp"
#include "test_support.hpp"

using namespace socmod;
using socmod::testing::mat;
using socmod::testing::polys;
using socmod::testing::vec;

namespace {

struct PolicyGuard {
  TruncPolicy saved = trunc_policy();
  ~PolicyGuard() { set_trunc_policy(saved); }
};

Ring plane() { return make_ring(Field::rationals(), {"x", "y"}); }
Ring space() { return make_ring(Field::rationals(), {"x", "y", "z"}); }
Ring cone() { return make_ring(Field::rationals(), {"x", "y", "z"}, {"z^2 - x*y"}); }

Module banded3(const Ring& A) { return columns_to_module(mat(A, {{"x", "y", "z", "0"}, {"0", "x", "y", "z"}})); }

}  // namespace

TEST_CASE("truncated algebras") {
  auto a = TruncatedAlgebra::get(plane(), 2);
  CHECK(a->dim() == 3);
  CHECK(a->basis()[0] == Monomial{0, 0});
  CHECK(a->basis()[1] == Monomial{1, 0});
  CHECK(a->basis()[2] == Monomial{0, 1});
  CHECK(TruncatedAlgebra::get(cone(), 2)->dim() == 4);
  CHECK(TruncatedAlgebra::get(space(), 1)->dim() == 1);
  CHECK(TruncatedAlgebra::get(cone(), 1)->dim() == 1);
  // k[x,y,z]/(z^2 - xy) has Hilbert function 1, 3, 5, 7, ...
  CHECK(TruncatedAlgebra::get(cone(), 4)->dim() == 1 + 3 + 5 + 7);
  // Multiplication by a variable matches polynomial multiplication.
  auto t = TruncatedAlgebra::get(cone(), 4);
  auto B = cone();
  FreeElement f = FreeElement::from_poly(B->parse("x + z^2 - 3*y*z"));
  CHECK(t->times_var(2, t->embed(f)) == t->embed(FreeElement::from_poly(B->parse("x*z + z^3 - 3*y*z^2"))));
}

TEST_CASE("truncation certificates") {
  auto A = plane();
  CHECK(certify_truncation(*make_ideal(A, polys(A, {"x^2", "y^2"}))) == 5);
  CHECK(certify_truncation(*make_ideal(A, polys(A, {"x", "y"}))) == 2);
  // I(N) = m^2 for the 2x4 matrix, so I(N)^2 = m^4.
  CHECK(certify_truncation(*banded3(space())) == 4);
  CHECK_THROWS_AS(certify_truncation(*make_ideal(A, polys(A, {"x"}))), DomainError);

  // Degree 4 fails for (x^2, y^2): x^3 y is outside I^2 + m^5.
  PolicyGuard guard;
  set_trunc_policy({std::nullopt, 4});
  CHECK_THROWS_AS(certify_truncation(*make_ideal(A, polys(A, {"x^2", "y^2"}))), ResourceError);
}

TEST_CASE("colengths") {
  auto A = plane();
  CHECK(colength_trunc(*make_ideal(A, polys(A, {"x^2", "y^2"}))) == 4);
  CHECK(colength_trunc(*make_ideal(A, polys(A, {"x", "y"}))) == 1);
  auto B = cone();
  CHECK(colength_trunc(*make_ideal(B, polys(B, {"x", "y"}))) == 2);
  CHECK(colength_trunc(*max_ideal_times_free(A, 2)) == 2);
  // Units are invisible after localizing: (x (1 + y), y) = (x, y) locally.
  CHECK(colength_trunc(*make_ideal(A, polys(A, {"x + x*y", "y"}))) == 1);
  CHECK(colength_trunc(*make_ideal(A, polys(A, {"1 + x"}))) == 0);
}

TEST_CASE("socle colon") {
  auto A = plane();
  auto n = make_ideal(A, polys(A, {"x^2", "y^2"}));
  auto m = colon_socle_trunc(*n);
  CHECK(subspace_equal(*m, *make_ideal(A, polys(A, {"x^2", "y^2", "x*y"}))));
  CHECK(subspace_equal(*colon_socle_trunc(*make_ideal(A, polys(A, {"x", "y"}))), *free_module(A, 1)));

  auto S = space();
  auto mb = colon_socle_trunc(*banded3(S));
  CHECK(subspace_equal(*mb, *max_ideal_times_free(S, 2)));
}

TEST_CASE("membership agrees with the Groebner path") {
  auto A = plane();
  auto n = make_ideal(A, polys(A, {"x^2 - x*y", "y^3"}));
  std::mt19937 rng(3);
  int k = working_level(*n);
  std::vector<FreeElement> gens = n->generators();
  for (int trial = 0; trial < 40; ++trial) {
    Poly f = socmod::testing::random_poly(rng, A, 3, k - 1);
    if (f.degree() >= k) continue;
    CHECK(member_trunc(FreeElement::from_poly(f), *n) == locally_member(A, FreeElement::from_poly(f), gens));
  }
}

TEST_CASE("answers are stable one level up") {
  PolicyGuard guard;
  auto S = space();
  auto n = banded3(S);
  long len = colength_trunc(*n);
  int k = working_level(*n);
  set_trunc_policy({k + 1, 64});
  auto n2 = banded3(S);
  CHECK(colength_trunc(*n2) == len);
  CHECK(subspace_equal(*colon_socle_trunc(*n2), *max_ideal_times_free(S, 2)));
  set_trunc_policy({k - 1, 64});
  auto n3 = banded3(S);
  if (k > 1) CHECK_THROWS_AS(colength_trunc(*n3), DomainError);
}

TEST_CASE("echelon and linear solves") {
  Field q = Field::rationals();
  Echelon e(q, 3);
  CHECK(e.insert({1, 2, 3}));
  CHECK(e.insert({2, 4, 7}));
  CHECK(!e.insert({3, 6, 10}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({0, 0, 5}));
  CHECK(!e.contains({0, 1, 0}));

  std::vector<DenseVec> images{{1, 0}, {0, 1}, {1, 1}};
  auto ker = kernel(q, images, 2);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == ker[0][1]);
  CHECK(ker[0][2] == -ker[0][0]);
  auto sol = solve(q, images, {mpq_class(1, 2), 3});
  REQUIRE(sol);
  CHECK((*sol)[0] + (*sol)[2] == mpq_class(1, 2));
  CHECK((*sol)[1] + (*sol)[2] == 3);
  CHECK(!solve(q, {{1, 1}}, {1, 0}));

  Field p = Field::prime(7);
  Echelon g(p, 2);
  CHECK(g.insert({3, 1}));
  CHECK(!g.insert({6, 2}));
  CHECK(!g.insert({1, 5}));  // 5 * (3, 1) = (1, 5) mod 7
}
