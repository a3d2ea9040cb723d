#include <random>

#include "doctest.h"
#include "recgcd/intpoly.hpp"

using namespace recgcd;

namespace {
IntValuedPoly half(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntValuedPoly(PolyZ(std::move(v)), 2);
}
const IntValuedPoly kXX1 = IntValuedPoly::parse("1; 0,1,1");        // X(X+1)
const IntValuedPoly kG1 = IntValuedPoly::parse("2; 2,9,9");         // (9X^2+9X+2)/2
const IntValuedPoly kG2 = IntValuedPoly::parse("2; 6,15,9");        // (9X^2+15X+6)/2
}  // namespace

TEST_CASE("evaluation") {
  CHECK(kXX1.eval(3) == 12);
  CHECK(kG1.eval(0) == 1);
  CHECK(kG2.eval(1) == 15);
  CHECK(IntValuedPoly::identity().eval(-4) == -4);
}

TEST_CASE("integer-valuedness is enforced and half-integer polys accepted") {
  CHECK_THROWS_AS(IntValuedPoly(PolyZ({1, 1, 1}), 2), domain_error);  // (X^2+X+1)/2
  CHECK_NOTHROW(half({0, 1, 1}));                                    // X(X+1)/2
  // 200 scattered integer inputs give exact integers
  std::mt19937_64 rng(5);
  auto binom3 = IntValuedPoly(PolyZ({0, 2, -3, 1}), 6);  // C(X,3) = X(X-1)(X-2)/6
  for (int t = 0; t < 200; ++t) {
    long n = static_cast<long>(rng() % 2001) - 1000;
    Int num = binom3.numerator().eval(n);
    CHECK(num % binom3.denominator() == 0);
  }
}

TEST_CASE("reduction to lowest terms") {
  auto g = IntValuedPoly(PolyZ({2, 4}), 2);  // (4X+2)/2 = 2X+1
  CHECK(g.denominator() == 1);
  CHECK(g.numerator() == PolyZ({1, 2}));
}

TEST_CASE("fixed divisors match the worked examples") {
  CHECK(fixed_divisor(kXX1) == 2);
  CHECK(fixed_divisor(kG1) == 1);
  CHECK(fixed_divisor(kG2) == 3);
  CHECK_THROWS_AS(fixed_divisor(IntValuedPoly(PolyZ(), 1)), domain_error);
}

TEST_CASE("fixed divisor divides every value") {
  for (const auto& g : {kXX1, kG1, kG2, IntValuedPoly(PolyZ({0, 2, -3, 1}), 6)}) {
    Int d = fixed_divisor(g);
    for (long n = -1000; n <= 1000; n += 7) CHECK(g.eval(n) % d == 0);
  }
}

TEST_CASE("splits_over_Q") {
  auto sp = splits_over_Q(kXX1);
  REQUIRE(sp.splits);
  REQUIRE(sp.roots.size() == 2);
  CHECK(((sp.roots[0].first == 0 && sp.roots[1].first == -1) ||
         (sp.roots[0].first == -1 && sp.roots[1].first == 0)));

  CHECK_FALSE(splits_over_Q(IntValuedPoly::parse("1; 1,0,1")).splits);  // X^2 + 1

  sp = splits_over_Q(kG1);
  REQUIRE(sp.splits);
  bool ok_third = false, ok_two_thirds = false;
  for (auto& [r, m] : sp.roots) {
    if (r == Rat(-1, 3)) ok_third = true;
    if (r == Rat(-2, 3)) ok_two_thirds = true;
  }
  CHECK(ok_third);
  CHECK(ok_two_thirds);

  // multiplicity
  sp = splits_over_Q(IntValuedPoly::parse("1; 1,2,1"));  // (X+1)^2
  REQUIRE(sp.splits);
  REQUIRE(sp.roots.size() == 1);
  CHECK(sp.roots[0].second == 2);
}

TEST_CASE("split factors multiply back") {
  for (const auto& g : {kXX1, kG1, kG2}) {
    auto sp = splits_over_Q(g);
    REQUIRE(sp.splits);
    PolyZ prod = PolyZ::constant(1);
    for (auto& [root, mult] : sp.roots) {
      PolyZ lin({-root.get_num(), root.get_den()});
      for (unsigned i = 0; i < mult; ++i) prod = prod * lin;
    }
    // product of primitive linear factors equals the numerator up to content
    CHECK(prod.primitive_part() == g.numerator().primitive_part());
  }
}

TEST_CASE("rho examples") {
  CHECK(rho(kXX1, 2) == 2);
  CHECK(rho(kXX1, 5) == 2);
  CHECK(rho(kG1, 2) == 1);  // B = 2: count mod 4, divided by 2
  CHECK(rho(IntValuedPoly::identity(), 7) == 1);
}

TEST_CASE("roots_mod_p") {
  CHECK(roots_mod_p(kXX1, 7) == std::vector<u64>{0, 6});
  CHECK(roots_mod_p(IntValuedPoly::parse("1; 1,0,1"), 5) == std::vector<u64>{2, 3});
  CHECK(roots_mod_p(IntValuedPoly::parse("1; 1,0,1"), 7).empty());
  CHECK_THROWS_AS(roots_mod_p(kG1, 2), domain_error);  // p | B
  // root count bounded by the degree for good primes
  for (u64 p : {11ull, 13ull, 101ull})
    CHECK(roots_mod_p(kG2, p).size() <= 2);
}

TEST_CASE("sieve product") {
  CHECK(sieve_lower_bound(IntValuedPoly::identity(), 10) == Rat(8, 35));
  CHECK_THROWS_WITH_AS(sieve_lower_bound(kXX1, 2), "fixed divisor present", domain_error);
  CHECK(sieve_lower_bound(kG1, 2) == Rat(1, 2));
}

TEST_CASE("serialization round-trip") {
  for (const char* s : {"1; 0,1", "2; 2,9,9", "6; 0,2,-3,1", "1; -5"}) {
    auto g = IntValuedPoly::parse(s);
    CHECK(IntValuedPoly::parse(g.to_string()) == g);
  }
}
