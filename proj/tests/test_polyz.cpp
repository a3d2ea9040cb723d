#include "doctest.h"
#include "recgcd/polyz.hpp"

using namespace recgcd;

namespace {
PolyZ make(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return PolyZ(std::move(v));
}
}  // namespace

TEST_CASE("arithmetic and evaluation") {
  PolyZ f = make({-1, -1, 1});  // X^2 - X - 1
  CHECK(f.eval(2) == 1);
  CHECK(f.eval(-1) == 1);
  CHECK((f * f).degree() == 4);
  CHECK((f - f).is_zero());
  CHECK(f.derivative() == make({-1, 2}));
  CHECK(f.compose_affine(1, 1) == make({-1, 1, 1}));  // (X+1)^2-(X+1)-1
}

TEST_CASE("divrem by monic divisor") {
  PolyZ f = make({-1, 0, 0, 0, 1});  // X^4 - 1
  auto [q, r] = f.divrem_monic(make({-1, 1}));
  CHECK(r.is_zero());
  CHECK(q == make({1, 1, 1, 1}));
}

TEST_CASE("content and primitive part") {
  PolyZ f = make({6, -9, 12});
  CHECK(f.content() == 3);
  CHECK(f.primitive_part() == make({2, -3, 4}));
  CHECK(make({-2, 0, -4}).primitive_part() == make({1, 0, 2}));  // sign normalized
}

TEST_CASE("gcd and squarefree part") {
  PolyZ f = make({-1, 1});          // X - 1
  PolyZ g = make({1, -2, 1});       // (X-1)^2
  CHECK(poly_gcd(f, g) == f);
  CHECK(squarefree_part(g) == f);
  PolyZ h = make({0, 0, 1}) * make({-3, 1});  // X^2 (X-3)
  PolyZ sf = squarefree_part(h);
  CHECK(sf == make({0, 1}) * make({-3, 1}));
}

TEST_CASE("resultant") {
  // res(X-a, X-b) = b - a
  CHECK(resultant(make({-2, 1}), make({-5, 1})) == -3);
  // res(X^2+1, X^2-2) has the classical value 9
  CHECK(resultant(make({1, 0, 1}), make({-2, 0, 1})) == 9);
  // shared root => 0
  CHECK(resultant(make({-1, 1}), make({-1, 0, 1})) == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == make({-1, 1}));
  CHECK(cyclotomic(2) == make({1, 1}));
  CHECK(cyclotomic(3) == make({1, 1, 1}));
  CHECK(cyclotomic(4) == make({1, 0, 1}));
  CHECK(cyclotomic(6) == make({1, -1, 1}));
  CHECK(cyclotomic(12) == make({1, 0, -1, 0, 1}));
  // product over divisors of 12 reassembles X^12 - 1
  PolyZ prod = PolyZ::constant(1);
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod = prod * cyclotomic(d);
  std::vector<Int> x12(13, Int(0));
  x12[0] = -1;
  x12[12] = 1;
  CHECK(prod == PolyZ(std::move(x12)));
}

TEST_CASE("eval_scaled detects rational roots") {
  PolyZ f = make({2, 9, 9});  // 9X^2+9X+2 = (3X+1)(3X+2)
  CHECK(f.eval_scaled(-1, 3) == 0);
  CHECK(f.eval_scaled(-2, 3) == 0);
  CHECK(f.eval_scaled(1, 3) != 0);
}
