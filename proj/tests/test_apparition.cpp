#include <cstdio>

#include "doctest.h"
#include "recgcd/apparition.hpp"

using namespace recgcd;

TEST_CASE("z_of examples") {
  auto fib = LucasParams::fibonacci();
  CHECK(z_of(fib, 1) == 1);
  CHECK(z_of(fib, 7) == 8);
  CHECK(z_of(fib, 10) == 15);
  CHECK(z_of_bruteforce(fib, 2) == 3);
  CHECK(z_of_bruteforce(fib, 11) == 10);
  CHECK(z_of_bruteforce(fib, 5) == 5);
}

TEST_CASE("prime power lifting handles the q = 2 jump") {
  auto fib = LucasParams::fibonacci();
  CHECK(z_of(fib, 4) == 6);
  CHECK(z_of(fib, 8) == 6);   // F(6) = 8: the exponent jumps by 2 here
  CHECK(z_of(fib, 16) == 12);
  CHECK(z_of(fib, 32) == 24);
}

TEST_CASE("z_of equals the brute-force oracle across three sequences") {
  auto fib = LucasParams::fibonacci();
  LucasParams pell(2, 1), alt(1, -2);
  for (u64 m = 1; m <= 600; ++m) {
    CHECK(z_of(fib, m) == z_of_bruteforce(fib, m));
    CHECK(z_of(pell, m) == z_of_bruteforce(pell, m));
    if (m % 2 == 1) CHECK(z_of(alt, m) == z_of_bruteforce(alt, m));
  }
}

TEST_CASE("divisibility law: m | F(n) iff z(m) | n") {
  auto fib = LucasParams::fibonacci();
  auto rec = fib.rec();
  for (u64 m = 2; m <= 100; ++m) {
    u64 z = z_of(fib, m);
    auto vals = rec.eval_range_mod(1000, m);
    for (u64 n = 1; n <= 1000; ++n) CHECK((vals[n] == 0) == (n % z == 0));
  }
}

TEST_CASE("z(p) divides p - chi(p) and is at most p + 1") {
  auto fib = LucasParams::fibonacci();
  for (u32 p : primes_upto(500)) {
    if (p == 5) {
      CHECK(z_of(fib, p) == 5);
      continue;
    }
    u64 z = z_of(fib, p);
    CHECK(z <= p + 1);
    int chi = kronecker(5, p);  // Kronecker handles p = 2: (5|2) = -1, z(2) = 3
    CHECK((p - chi) % z == 0);
  }
}

TEST_CASE("coprimality preconditions surface as errors") {
  LucasParams bad(2, 2);  // gcd = 2
  CHECK_THROWS_AS(z_of(bad, 3), domain_error);
  LucasParams alt(1, -2);
  CHECK_THROWS_AS(z_of(alt, 6), domain_error);  // gcd(m, a_2) = 2
  CHECK_THROWS_AS(z_of_bruteforce(alt, 4), domain_error);
}

TEST_CASE("mobius sieve") {
  auto mu = mobius_sieve(10000);
  CHECK(mu[1] == 1);
  CHECK(mu[6] == 1);
  CHECK(mu[12] == 0);
  CHECK(mu[2] == -1);
  CHECK(mu[30] == -1);
  // against direct factorization
  for (u64 n = 1; n <= 10000; ++n) {
    auto fs = factor_trial_u64(n);
    bool sqfree = true;
    for (auto [q, e] : fs)
      if (e > 1) sqfree = false;
    int expect = !sqfree ? 0 : (fs.size() % 2 == 0 ? 1 : -1);
    CHECK(mu[n] == expect);
  }
}

TEST_CASE("density formula partial sums") {
  auto fib = LucasParams::fibonacci();
  auto r1 = density_formula(fib, 1, 1);
  CHECK(r1.partial_sum == 1);
  auto r2 = density_formula(fib, 1, 2);
  CHECK(r2.partial_sum == Rat(5, 6));
  auto r3 = density_formula(fib, 1, 3);
  CHECK(r3.partial_sum == Rat(3, 4));
  // partial sums stay in [0, 1] out to D = 50
  for (u64 d = 1; d <= 50; ++d) {
    auto r = density_formula(fib, 1, d);
    CHECK(r.partial_sum >= 0);
    CHECK(r.partial_sum <= 1);
  }
}

TEST_CASE("nonempty criterion") {
  auto fib = LucasParams::fibonacci();
  auto r = nonempty_criterion(fib, 1);
  CHECK(r.nonempty);
  CHECK(r.ell == 1);
  r = nonempty_criterion(fib, 2);
  CHECK(r.nonempty);
  CHECK(r.ell == 6);
  CHECK(r.gcd_value == 2);
  r = nonempty_criterion(fib, 3);
  CHECK_FALSE(r.nonempty);
  CHECK(r.ell == 12);
  CHECK(r.gcd_value == 12);
}

TEST_CASE("z-cache load, merge, save") {
  auto fib = LucasParams::fibonacci();
  std::string path = "zcache_test_tmp.txt";
  {
    ZCache cache;
    CHECK(z_of(fib, 100, &cache) == z_of_bruteforce(fib, 100));
    cache.save_atomic(path);
  }
  {
    ZCache cache;
    cache.load(path);
    u64 z = 0;
    CHECK(cache.lookup(100, z));
    CHECK(z == z_of_bruteforce(fib, 100));
    cache.store(9999, 1234);  // merge a synthetic entry and rewrite
    cache.save_atomic(path);
  }
  {
    ZCache cache;
    cache.load(path);
    u64 z = 0;
    CHECK(cache.lookup(9999, z));
    CHECK(z == 1234);
    CHECK(cache.lookup(100, z));
  }
  std::remove(path.c_str());
}
