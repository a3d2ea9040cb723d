#pragma once

// Deterministic Miller-Rabin for 64-bit, Brent's variant of Pollard rho
// (seedable), and integer factorization with a bit budget for the census.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "recgcd/util.hpp"

namespace recgcd {

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic base set for all 64-bit integers
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline u64 pollard_rho_u64(u64 n, u64 seed) {
  if ((n & 1) == 0) return 2;
  std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ull));
  for (;;) {
    u64 c = rng() % (n - 1) + 1;
    u64 x = rng() % n, y = x, d = 1;
    u64 count = 0;
    while (d == 1) {
      x = (mulmod_u64(x, x, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      d = gcd_u64(x > y ? x - y : y - x, n);
      if (++count > (1ull << 22)) break;
    }
    if (d != 1 && d != n) return d;
  }
}

inline void factor_u64_into(u64 n, u64 seed, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho_u64(n, seed);
  factor_u64_into(d, seed + 1, out);
  factor_u64_into(n / d, seed + 1, out);
}

inline std::vector<std::pair<u64, unsigned>> factor_u64(u64 n, u64 seed = 0) {
  std::vector<u64> ps;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % q == 0) {
      ps.push_back(q);
      n /= q;
    }
    if (n == 1) break;
  }
  factor_u64_into(n, seed, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<u64, unsigned>> fs;
  for (u64 p : ps) {
    if (!fs.empty() && fs.back().first == p)
      ++fs.back().second;
    else
      fs.emplace_back(p, 1);
  }
  return fs;
}

// Factorization of |n| with a 128-bit budget (census values are small).
inline std::vector<std::pair<Int, unsigned>> factor_int(const Int& value, u64 seed = 0) {
  Int n = abs(value);
  if (n <= 1) return {};
  std::vector<std::pair<Int, unsigned>> fs;
  for (u64 q = 2; q < 1000; q += (q == 2) ? 1 : 2) {
    if (n % q == 0) {
      unsigned e = 0;
      while (n % q == 0) n /= q, ++e;
      fs.emplace_back(Int(q), e);
    }
    if (n == 1) return fs;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 128)
    throw domain_error("value too large to factor");
  if (fits_u64(n)) {
    for (auto [p, e] : factor_u64(to_u64(n), seed)) fs.emplace_back(Int(p), e);
    return fs;
  }
  // 65..128 bit leftover: mpz Brent rho
  std::vector<Int> stack{n};
  std::vector<Int> primes;
  gmp_randclass rnd(gmp_randinit_default);
  rnd.seed(seed + 1);
  while (!stack.empty()) {
    Int v = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (mpz_probab_prime_p(v.get_mpz_t(), 40)) {
      primes.push_back(v);
      continue;
    }
    Int d = 1;
    while (d == 1 || d == v) {
      Int c = rnd.get_z_range(v - 1) + 1;
      Int x = rnd.get_z_range(v), y = x;
      d = 1;
      while (d == 1) {
        x = mod_floor(x * x + c, v);
        y = mod_floor(y * y + c, v);
        y = mod_floor(y * y + c, v);
        d = int_gcd(abs(x - y), v);
      }
    }
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!fs.empty() && fs.back().first == p)
      ++fs.back().second;
    else
      fs.emplace_back(p, 1);
  }
  return fs;
}

inline std::vector<Int> divisors_of(const Int& n, u64 seed = 0) {
  std::vector<Int> ds{1};
  for (auto& [p, e] : factor_int(n, seed)) {
    size_t sz = ds.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace recgcd
