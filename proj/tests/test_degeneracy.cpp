#include "doctest.h"
#include "recgcd/degeneracy.hpp"

using namespace recgcd;

TEST_CASE("degeneracy witnesses") {
  // psi = X^2 + 1: ratio i/(-i) = -1, order 2
  auto rot4 = LinearRecurrence({0, -1}, {0, 1});
  auto w = is_degenerate(rot4);
  REQUIRE(w.has_value());
  CHECK(*w == 2);

  CHECK_FALSE(is_degenerate(LinearRecurrence::fibonacci()).has_value());

  // psi = X^2 + 2X + 4: roots 2 e^{+-2 pi i/3}, ratio a primitive cube root
  auto rot3 = LinearRecurrence({-2, -4}, {0, 1});
  w = is_degenerate(rot3);
  REQUIRE(w.has_value());
  CHECK(*w == 3);
}

TEST_CASE("degeneracy depends only on psi_F") {
  // scaling the initial terms by a non-zero constant changes nothing
  auto a = LinearRecurrence({0, -1}, {0, 1});
  auto b = LinearRecurrence({0, -1}, {0, -7});
  CHECK(is_degenerate(a) == is_degenerate(b));
  auto c = LinearRecurrence({1, 1}, {0, 5});
  CHECK(is_degenerate(c) == is_degenerate(LinearRecurrence::fibonacci()));
}

TEST_CASE("repeated roots do not make F degenerate") {
  // psi = (X - 2)^2: single distinct root
  auto rep = LinearRecurrence({4, -4}, {1, 2});
  CHECK_FALSE(is_degenerate(rep).has_value());
}

TEST_CASE("decompose_nondegenerate") {
  auto fib = LinearRecurrence::fibonacci();
  auto dec = decompose_nondegenerate(fib);
  CHECK(dec.stride == 1);
  CHECK(dec.parts.size() == 1);
  CHECK(dec.parts[0].eval_range(10) == fib.eval_range(10));

  // 0, 1, 0, -1, ... : the stride-2 parts are 0 and (-1)^m, both fine
  auto rot4 = LinearRecurrence({0, -1}, {0, 1});
  dec = decompose_nondegenerate(rot4);
  CHECK(dec.stride == 2);
  CHECK(dec.parts[0].is_zero_sequence());
  CHECK(dec.parts[1].eval(0) == 1);
  CHECK(dec.parts[1].eval(1) == -1);
  CHECK(dec.parts[1].eval(2) == 1);

  // cube-root ratio forces stride 3
  auto rot3 = LinearRecurrence({-2, -4}, {0, 1});
  dec = decompose_nondegenerate(rot3);
  CHECK(dec.stride == 3);
  auto full = rot3.eval_range(3 * 12);
  for (u64 j = 0; j < 3; ++j) {
    CHECK((dec.parts[j].is_zero_sequence() || !is_degenerate(dec.parts[j])));
    for (u64 m = 0; m <= 10; ++m) CHECK(dec.parts[j].eval(m) == full[3 * m + j]);
  }
}

TEST_CASE("decomposition parts reproduce the sequence") {
  auto rec = LinearRecurrence({0, 0, 0, 16}, {1, 2, 3, 4});  // roots 2 i^t: ratios are 4th roots
  auto dec = decompose_nondegenerate(rec);
  CHECK(dec.stride == 4);
  auto full = rec.eval_range(4 * 10 + 3);
  for (u64 j = 0; j < dec.stride; ++j)
    for (u64 m = 0; m <= 8; ++m) CHECK(dec.parts[j].eval(m) == full[dec.stride * m + j]);
}

TEST_CASE("padded characteristic polynomial, constant sequence") {
  // psi = X^2 - 1 has the ratio -1, but the sequence is identically 1;
  // minimal-order parts expose the true root set and c = 1 suffices
  auto rec = LinearRecurrence({0, 1}, {1, 1});
  REQUIRE(is_degenerate(rec).has_value());  // judged from psi_F alone
  auto dec = decompose_nondegenerate(rec);
  CHECK(dec.stride == 1);
  CHECK(dec.parts[0].order() == 1);
  CHECK_FALSE(is_degenerate(dec.parts[0]).has_value());
}
