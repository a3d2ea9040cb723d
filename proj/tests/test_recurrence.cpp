#include <random>

#include "doctest.h"
#include "recgcd/recurrence.hpp"

using namespace recgcd;

namespace {
LinearRecurrence geometric(long a1, long f0) { return LinearRecurrence({Int(a1)}, {Int(f0)}); }
}  // namespace

TEST_CASE("eval: defining recurrence") {
  auto fib = LinearRecurrence::fibonacci();
  CHECK(fib.eval(12) == 144);
  CHECK(fib.eval(0) == 0);
  CHECK(geometric(5, 1).eval(4) == 625);
  auto r = fib.eval_range(12);
  CHECK(r[12] == 144);
  CHECK(r[11] == 89);
}

TEST_CASE("eval_mod examples") {
  auto fib = LinearRecurrence::fibonacci();
  CHECK(fib.eval_mod(1000000000, 10) == 5);
  CHECK(fib.eval_mod(12, 1) == 0);
  CHECK(fib.eval_mod(12, 1000) == 144);
}

TEST_CASE("eval_mod agrees with eval, both limb paths") {
  std::mt19937_64 rng(7);
  std::vector<LinearRecurrence> battery = {
      LinearRecurrence::fibonacci(), geometric(2, 1), geometric(-3, 2),
      LinearRecurrence({1, 2, 3}, {0, 1, 1}), LinearRecurrence({0, 0, 8}, {1, -1, 5})};
  const Int big61 = Int(Int(1) << 61) + 1;
  for (const auto& rec : battery) {
    auto vals = rec.eval_range(300);
    for (Int m : {Int(2), Int(9), Int(97), Int(1000), Int("1180591620717411303449"), big61}) {
      for (int trial = 0; trial < 40; ++trial) {
        u64 n = rng() % 301;
        CHECK(rec.eval_mod(n, m) == mod_floor(vals[n], m));
      }
    }
  }
}

TEST_CASE("eval_range_mod matches eval_mod") {
  auto rec = LinearRecurrence({1, 2, 3}, {0, 1, 1});
  auto t = rec.eval_range_mod(200, 97);
  for (u64 n = 0; n <= 200; n += 13) CHECK(Int(t[n]) == rec.eval_mod(n, 97));
}

TEST_CASE("eventual period examples") {
  auto fib = LinearRecurrence::fibonacci();
  auto ep = fib.eventual_period_mod(10);
  CHECK(ep.preperiod == 0);
  CHECK(ep.period == 60);  // Pisano period of 10
  ep = geometric(2, 1).eventual_period_mod(8);
  CHECK(ep.preperiod == 3);  // 1, 2, 4, 0, 0, ...
  CHECK(ep.period == 1);
  ep = fib.eventual_period_mod(2);
  CHECK(ep.preperiod == 0);
  CHECK(ep.period == 3);
}

TEST_CASE("eventual period is minimal") {
  auto rec = LinearRecurrence({3, 1}, {2, 5});
  for (Int m : {Int(4), Int(9), Int(30)}) {
    auto ep = rec.eventual_period_mod(m);
    auto t = rec.eval_range_mod(ep.preperiod + 3 * ep.period + 5, to_u64(m));
    for (u64 n = ep.preperiod; n + ep.period < t.size(); ++n)
      CHECK(t[n] == t[n + ep.period]);
    // no smaller period works on the scanned window
    for (u64 lam = 1; lam < ep.period; ++lam) {
      bool all = true;
      for (u64 n = ep.preperiod; n + lam < t.size() && all; ++n) all = (t[n] == t[n + lam]);
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("char_poly") {
  CHECK(LinearRecurrence::fibonacci().char_poly() == PolyZ({-1, -1, 1}));
  CHECK(geometric(3, 1).char_poly() == PolyZ({-3, 1}));
  CHECK(LinearRecurrence({0, 0, 8}, {0, 0, 1}).char_poly() == PolyZ({-8, 0, 0, 1}));
}

TEST_CASE("subsequence examples") {
  auto fib = LinearRecurrence::fibonacci();
  CHECK(subsequence(fib, 1, 0) == fib);
  auto even = subsequence(fib, 2, 0);
  CHECK(even.char_poly() == PolyZ({1, -3, 1}));  // X^2 - 3X + 1
  CHECK(even.initial_terms() == std::vector<Int>{0, 1});
  auto geo = subsequence(geometric(2, 1), 3, 1);
  CHECK(geo.order() == 1);
  CHECK(geo.coefficients() == std::vector<Int>{8});
  CHECK(geo.initial_terms() == std::vector<Int>{2});
}

TEST_CASE("subsequence composition property") {
  std::mt19937_64 rng(11);
  std::vector<LinearRecurrence> battery = {LinearRecurrence::fibonacci(),
                                           LinearRecurrence({1, 2, 3}, {0, 1, 1}),
                                           LinearRecurrence({0, -1}, {0, 1})};
  for (const auto& rec : battery) {
    for (int trial = 0; trial < 5; ++trial) {
      u64 a = rng() % 4 + 1, b = rng() % 3, c = rng() % 4 + 1, d = rng() % 3;
      auto lhs = subsequence(subsequence(rec, a, b), c, d);
      auto rhs = subsequence(rec, a * c, a * d + b);
      CHECK(lhs.eval_range(50) == rhs.eval_range(50));
    }
  }
}

TEST_CASE("subsequence hits the defining identity out to 2k") {
  auto rec = LinearRecurrence({1, 2, 3}, {0, 1, 1});
  auto sub = subsequence(rec, 5, 2);
  auto full = rec.eval_range(5 * (2 * 3) + 2);
  for (u64 m = 0; m <= 2 * 3; ++m) CHECK(sub.eval(m) == full[5 * m + 2]);
}

TEST_CASE("minimal order reduction") {
  // order-3 recurrence that actually generates 2^n
  auto padded = LinearRecurrence({2, 1, -2}, {1, 2, 4});
  auto red = minimal_order(padded);
  CHECK(red.order() == 1);
  CHECK(red.coefficients() == std::vector<Int>{2});
  // identically zero in disguise
  auto zero = LinearRecurrence({5, 3}, {0, 0});
  CHECK(minimal_order(zero).is_zero_sequence());
  CHECK(minimal_order(zero).order() == 1);
}

TEST_CASE("divide_exact") {
  auto fib = LinearRecurrence::fibonacci();
  CHECK(divide_exact(fib, 1) == fib);
  auto doubled = LinearRecurrence({3, -1}, {0, 2});
  auto halved = divide_exact(doubled, 2);
  CHECK(halved.initial_terms() == std::vector<Int>{0, 1});
  CHECK(halved.coefficients() == doubled.coefficients());
  CHECK_THROWS_WITH_AS(divide_exact(fib, 2), "not divisible", domain_error);
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned k = rng() % 4 + 1;
    std::vector<Int> a(k), f(k);
    for (auto& v : a) v = Int(static_cast<long>(rng() % 19) - 9);
    if (a.back() == 0) a.back() = 1;
    for (auto& v : f) v = Int(static_cast<long>(rng() % 19) - 9);
    LinearRecurrence rec(a, f);
    CHECK(LinearRecurrence::parse(rec.to_string()) == rec);
  }
  CHECK(LinearRecurrence::parse("2; 1,1; 0,1") == LinearRecurrence::fibonacci());
  CHECK_THROWS_AS(LinearRecurrence::parse("2; 1,0; 0,1"), domain_error);  // a_k = 0
  CHECK_THROWS_AS(LinearRecurrence::parse("3; 1,1; 0,1"), domain_error);
}

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(LinearRecurrence({}, {}), domain_error);
  CHECK_THROWS_AS(LinearRecurrence({1, 0}, {0, 1}), domain_error);
  CHECK_THROWS_AS(LinearRecurrence({1, 1}, {0}), domain_error);
}
