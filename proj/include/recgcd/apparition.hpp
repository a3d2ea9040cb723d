#pragma once

// Lucas sequences F(0)=0, F(1)=1, F(n) = a_1 F(n-1) + a_2 F(n-2):
// rank of apparition z(m) (fast + brute-force oracle), Mobius sieve,
// the Mobius density formula for A_{F,I,h}, and its nonemptiness criterion.

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "recgcd/recurrence.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

struct LucasParams {
  Int a1;
  Int a2;
  bool coprime;

  LucasParams(Int a1_, Int a2_) : a1(std::move(a1_)), a2(std::move(a2_)) {
    if (a2 == 0) throw domain_error("a_2 must be non-zero");
    coprime = (int_gcd(a1, a2) == 1);
  }
  static LucasParams fibonacci() { return LucasParams(1, 1); }

  LinearRecurrence rec() const { return LinearRecurrence({a1, a2}, {0, 1}); }
  Int discriminant() const { return a1 * a1 + 4 * a2; }
};

namespace detail {

inline void require_coprime(const LucasParams& lp, u64 m) {
  if (!lp.coprime) throw domain_error("not coprime: gcd(a_1, a_2) != 1");
  if (int_gcd(Int(m), lp.a2) != 1) throw domain_error("not coprime: gcd(m, a_2) != 1");
}

// -1, 0, +1 as the quadratic character of a mod odd prime q
inline int legendre(const Int& a, u64 q) {
  u64 r = powmod_u64(to_u64(mod_floor(a, Int(q))), (q - 1) / 2, q);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace detail

// Linear scan n = 1, 2, ... of F(n) mod m until zero; the independent oracle.
inline u64 z_of_bruteforce(const LucasParams& lp, u64 m) {
  if (m < 1) throw domain_error("m must be >= 1");
  if (m == 1) return 1;
  detail::require_coprime(lp, m);
  Int mm = static_cast<unsigned long>(m);
  u64 a1 = to_u64(mod_floor(lp.a1, mm)), a2 = to_u64(mod_floor(lp.a2, mm));
  u64 prev = 0, cur = 1 % m;
  u64 cap = m * m + 2;
  for (u64 n = 1; n <= cap; ++n) {
    if (cur == 0) return n;
    u64 next = (mulmod_u64(a1, cur, m) + mulmod_u64(a2, prev, m)) % m;
    prev = cur;
    cur = next;
  }
  throw domain_error("no apparition within cap");
}

// Cache of (m, z(m)) pairs for one sequence; plain "m z" text lines.
class ZCache {
 public:
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // missing cache file is an empty cache
    u64 m, z;
    while (in >> m >> z) map_.emplace(m, z);
  }
  void save_atomic(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw domain_error("cannot write cache file: " + tmp);
      for (const auto& [m, z] : map_) out << m << " " << z << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
      throw domain_error("cannot rename cache file into place");
  }
  bool lookup(u64 m, u64& z) const {
    auto it = map_.find(m);
    if (it == map_.end()) return false;
    z = it->second;
    return true;
  }
  void store(u64 m, u64 z) { map_[m] = z; }
  size_t size() const { return map_.size(); }

 private:
  std::map<u64, u64> map_;
};

namespace detail {

// z(q) for a prime q: the minimal divisor d of q - chi(q) with q | F(d),
// via modular evaluation; direct scan when q = 2 or q | disc.
inline u64 z_of_prime(const LucasParams& lp, u64 q) {
  Int disc = lp.discriminant();
  if (q == 2 || mod_floor(disc, Int(q)) == 0) return z_of_bruteforce(lp, q);
  LinearRecurrence rec = lp.rec();
  int chi = legendre(disc, q);
  u64 target = chi == 1 ? q - 1 : q + 1;
  for (u64 d : divisors_sorted(target))
    if (rec.eval_mod(d, Int(q)) == 0) return d;
  // unreachable for gcd(a1,a2)=1, q coprime to 2 a2 disc
  return z_of_bruteforce(lp, q);
}

// z(q^e) by stepwise lifting: z(q^{j+1}) is z(q^j) or q z(q^j).
inline u64 z_of_prime_power(const LucasParams& lp, u64 q, unsigned e) {
  LinearRecurrence rec = lp.rec();
  u64 z = z_of_prime(lp, q);
  Int qj = static_cast<unsigned long>(q);
  for (unsigned j = 2; j <= e; ++j) {
    qj *= q;
    if (rec.eval_mod(z, qj) != 0) z *= q;
  }
  return z;
}

}  // namespace detail

// Rank of apparition z(m): least n >= 1 with m | F(n). Computed from the
// factorization of m; cross-checkable against z_of_bruteforce.
inline u64 z_of(const LucasParams& lp, u64 m, ZCache* cache = nullptr) {
  if (m < 1) throw domain_error("m must be >= 1");
  if (m == 1) return 1;
  detail::require_coprime(lp, m);
  if (cache) {
    u64 z;
    if (cache->lookup(m, z)) return z;
  }
  u64 z = 1;
  for (auto [q, e] : factor_trial_u64(m)) {
    u64 zq;
    if (cache && cache->lookup(int_pow_ui(q, e).get_ui(), zq)) {
      // cached prime-power entry
    } else {
      zq = detail::z_of_prime_power(lp, q, e);
      if (cache) cache->store(to_u64(int_pow_ui(q, e)), zq);
    }
    z = lcm_u64(z, zq);
  }
  if (cache) cache->store(m, z);
  return z;
}

// mu(1..N); index 0 unused.
inline std::vector<int> mobius_sieve(u64 n) {
  if (n < 1) throw domain_error("N must be >= 1");
  std::vector<int> mu(n + 1, 0);
  std::vector<char> comp(n + 1, 0);
  std::vector<u64> primes;
  mu[1] = 1;
  for (u64 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (u64 p : primes) {
      if (i * p > n) break;
      comp[i * p] = 1;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

struct DensityFormulaResult {
  Int h = 1;
  u64 truncation = 0;           // D
  Rat partial_sum = 0;          // exact
  double partial_sum_d = 0;     // double shadow
  double last_term_magnitude = 0;  // 1/lcm(dh, z(dh)) of the last included d
  u64 skipped_noncoprime = 0;   // d with gcd(dh, a_2) > 1
  bool nonempty = false;
};

struct NonemptyResult {
  bool nonempty = false;
  u64 ell = 0;
  Int gcd_value = 0;
};

// The Sanna-Tron criterion: A_{F,I,h} is non-empty (equivalently has positive
// density) iff h = gcd(l, F(l)) with l = lcm(h, z(h)).
inline NonemptyResult nonempty_criterion(const LucasParams& lp, u64 h) {
  if (h < 1) throw domain_error("h must be >= 1");
  detail::require_coprime(lp, h);
  u64 z = z_of(lp, h);
  u64 ell = lcm_u64(h, z);
  Int g = int_gcd(lp.rec().eval_mod(ell, Int(ell)), Int(ell));
  return {g == h, ell, g};
}

// Truncation of sum_{d>=1} mu(d) / lcm(dh, z(dh)).
inline DensityFormulaResult density_formula(const LucasParams& lp, u64 h, u64 truncation,
                                            ZCache* cache = nullptr) {
  if (h < 1) throw domain_error("h must be >= 1");
  if (truncation < 1) throw domain_error("truncation D must be >= 1");
  detail::require_coprime(lp, h);
  DensityFormulaResult out;
  out.h = static_cast<unsigned long>(h);
  out.truncation = truncation;
  auto mu = mobius_sieve(truncation);
  for (u64 d = 1; d <= truncation; ++d) {
    if (mu[d] == 0) continue;
    u64 dh = d * h;
    if (int_gcd(Int(dh), lp.a2) != 1) {
      ++out.skipped_noncoprime;
      continue;
    }
    u64 z = z_of(lp, dh, cache);
    u64 l = lcm_u64(dh, z);
    Rat term = Rat(mu[d]) / Rat(static_cast<unsigned long>(l));
    term.canonicalize();
    out.partial_sum += term;
    out.last_term_magnitude = 1.0 / static_cast<double>(l);
  }
  out.partial_sum.canonicalize();
  out.partial_sum_d = out.partial_sum.get_d();
  if (out.partial_sum < -1 || out.partial_sum > 2)
    throw domain_error("partial sum escaped sanity window [-1, 2]");
  out.nonempty = nonempty_criterion(lp, h).nonempty;
  return out;
}

}  // namespace recgcd
