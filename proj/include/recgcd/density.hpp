#pragma once

// Empirical and exact densities for A_{F,G,h}: gcd terms without ever
// materializing F(n), parallel counting with deterministic results, the
// small-prime progression sets C^- and their exact density delta_y, the
// a^n-1 / b^n-1 coprimality enumeration, and the large-prime census.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "recgcd/decomposition.hpp"
#include "recgcd/factorize.hpp"
#include "recgcd/intpoly.hpp"
#include "recgcd/progression.hpp"
#include "recgcd/recurrence.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

// gcd(F(n), G(n)) with gcd(F(n), 0) = |F(n)|; F(n) is only ever touched
// modulo |G(n)|.
inline Int gcd_term(const LinearRecurrence& f, const IntValuedPoly& g, u64 n) {
  Int gv = abs(g.eval(Int(n)));
  if (gv == 0) return abs(f.eval(n));
  return int_gcd(f.eval_mod(n, gv), gv);
}

namespace detail {

// deterministic chunked parallel count of n in [lo, hi] satisfying pred
template <class Pred>
inline u64 parallel_count(u64 lo, u64 hi, unsigned threads, Pred&& pred) {
  if (hi < lo) return 0;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  constexpr u64 kChunk = 2048;
  std::atomic<u64> next{lo};
  std::atomic<u64> total{0};
  auto worker = [&]() {
    u64 local = 0;
    for (;;) {
      u64 start = next.fetch_add(kChunk);
      if (start > hi) break;
      u64 end = std::min(hi, start + kChunk - 1);
      for (u64 n = start; n <= end; ++n)
        if (pred(n)) ++local;
    }
    total.fetch_add(local);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return total.load();
}

}  // namespace detail

inline u64 empirical_count(const LinearRecurrence& f, const IntValuedPoly& g, const Int& h, u64 x,
                           unsigned threads = 1) {
  if (x < 1) throw domain_error("x must be >= 1");
  return detail::parallel_count(1, x, threads,
                                [&](u64 n) { return gcd_term(f, g, n) == h; });
}

// Per-prime progression pieces of C^-_{F,G,y}: for each p <= y, the residues
// (mod lcm of the period of F mod p and p^(1+v_p(B))) where p divides both.
inline std::vector<PrimePart> c_minus_prime_parts(const LinearRecurrence& f,
                                                  const IntValuedPoly& g, u64 y) {
  if (y < 2) throw domain_error("cutoff y must be >= 2");
  std::vector<PrimePart> parts;
  for (u32 p : primes_upto(static_cast<u32>(y))) {
    auto ep = f.eventual_period_mod(Int(p));
    u64 rho = ep.preperiod, lam = ep.period;
    auto fv = f.eval_range_mod(rho + lam - 1, p);
    std::vector<char> fzero(lam, 0);
    for (u64 n = rho; n < rho + lam; ++n)
      if (fv[n] == 0) fzero[n % lam] = 1;
    unsigned v = 0;
    Int b = g.denominator();
    while (b % p == 0) {
      b /= p;
      ++v;
    }
    u64 gmod = to_u64(int_pow_ui(p, v + 1));
    std::vector<char> gzero(gmod, 0);
    for (u64 n = 0; n < gmod; ++n)
      if (mod_floor(g.numerator().eval(Int(n)), int_pow_ui(p, v + 1)) == 0) gzero[n] = 1;
    u64 lp = lcm_u64(lam, gmod);
    PrimePart part;
    part.prime = p;
    part.modulus = lp;
    part.preperiod = rho;
    for (u64 r = 0; r < lp; ++r)
      if (fzero[r % lam] && gzero[r % gmod]) part.residues.push_back(r);
    for (u64 n = 0; n < rho; ++n)
      if (fv[n] == 0 && gzero[n % gmod]) part.exceptional.push_back(n);
    parts.push_back(std::move(part));
  }
  return parts;
}

// Explicit residue-set form of C^-_{F,G,y}; errors out when the combined
// modulus exceeds the cap (callers then fall back to union_density or an
// empirical estimate).
inline ProgressionSet c_minus_progressions(const LinearRecurrence& f, const IntValuedPoly& g,
                                           u64 y, u64 modulus_cap = 100'000'000) {
  auto parts = c_minus_prime_parts(f, g, y);
  Int big = 1;
  for (const auto& part : parts) {
    big = int_lcm(big, Int(part.modulus));
    if (big > modulus_cap) throw domain_error("modulus cap exceeded");
  }
  ProgressionSet out;
  out.modulus = to_u64(big);
  out.residue_bits.assign(out.modulus, false);
  for (const auto& part : parts) {
    out.preperiod = std::max(out.preperiod, part.preperiod);
    for (u64 r : part.residues)
      for (u64 n = r; n < out.modulus; n += part.modulus) out.residue_bits[n] = true;
  }
  out.residue_count = 0;
  for (bool bit : out.residue_bits)
    if (bit) ++out.residue_count;
  for (u64 n = 0; n < out.preperiod; ++n)
    for (const auto& part : parts)
      if (part.contains(n)) {
        out.exceptional.push_back(n);
        break;
      }
  return out;
}

// delta_y = d(C^-_{F,G,y}), exact, via inclusion-exclusion; no combined
// modulus is ever materialized.
inline std::optional<Rat> delta_y_exact(const LinearRecurrence& f, const IntValuedPoly& g, u64 y,
                                        u64 work_cap = 20'000'000) {
  return union_density(c_minus_prime_parts(f, g, y), work_cap);
}

struct DensityReport {
  u64 x = 0;
  u64 count = 0;
  double empirical = 0;
  u64 y = 0;
  Rat delta_y = 0;
  double delta_y_d = 0;
  bool delta_estimated = false;
  double gap = 0;  // |(1 - empirical) - delta_y|
  std::string f_spec;
  std::string g_spec;
  Int h = 1;

  std::string csv_line() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%llu, %llu, %.9f, %llu, %.9f, %.9f, %d",
                  static_cast<unsigned long long>(x), static_cast<unsigned long long>(count),
                  empirical, static_cast<unsigned long long>(y), delta_y_d, gap,
                  delta_estimated ? 1 : 0);
    return buf;
  }
  static std::string csv_header() { return "x, count, density, y, delta_y, gap, estimated_flag"; }
};

namespace detail {

// does some prime <= y divide v?
inline bool has_small_prime_factor(const Int& v, const std::vector<u32>& primes) {
  for (u32 p : primes)
    if (v % p == 0) return true;
  return false;
}

// estimated delta_y over [1, range]: the fraction of n whose gcd term has a
// prime factor <= y
inline double delta_y_estimate(const LinearRecurrence& f, const IntValuedPoly& g, u64 y,
                               u64 range, unsigned threads) {
  auto primes = primes_upto(static_cast<u32>(y));
  u64 c = parallel_count(1, range, threads, [&](u64 n) {
    Int t = gcd_term(f, g, n);
    return t != 1 && has_small_prime_factor(t, primes);
  });
  return static_cast<double>(c) / static_cast<double>(range);
}

}  // namespace detail

// Combined empirical count and exact delta_y; for h > 1 the computation is
// routed through the class decomposition, each member-bearing class
// contributing (1/a) d(A_part) and every other class counting fully toward
// the complement.
inline DensityReport density_report(const LinearRecurrence& f, const IntValuedPoly& g,
                                    const Int& h, u64 x, u64 y, unsigned threads = 1,
                                    u64 work_cap = 20'000'000) {
  DensityReport rep;
  rep.x = x;
  rep.y = y;
  rep.h = h;
  rep.f_spec = f.to_string();
  rep.g_spec = g.to_string();
  rep.count = empirical_count(f, g, h, x, threads);
  rep.empirical = static_cast<double>(rep.count) / static_cast<double>(x);
  if (h == 1) {
    auto exact = delta_y_exact(f, g, y, work_cap);
    if (exact) {
      rep.delta_y = *exact;
      rep.delta_y_d = exact->get_d();
    } else {
      rep.delta_estimated = true;
      rep.delta_y_d = detail::delta_y_estimate(f, g, y, std::min<u64>(x, 10'000'000), threads);
      rep.delta_y = Rat(rep.delta_y_d);
    }
  } else {
    auto dec = decompose_gcd_set(f, g, h);
    u64 a = dec.stride;
    Rat agg = 0;
    u64 bearing = 0;
    bool estimated = false;
    for (const auto& part : dec.parts) {
      if (!part.bearing) continue;
      ++bearing;
      auto exact = delta_y_exact(part.rec_part, part.poly_part, y, work_cap);
      if (exact) {
        agg += *exact / Rat(static_cast<unsigned long>(a));
      } else {
        estimated = true;
        double est = detail::delta_y_estimate(part.rec_part, part.poly_part, y,
                                              std::min<u64>(x / a + 1, 1'000'000), threads);
        agg += Rat(est) / Rat(static_cast<unsigned long>(a));
      }
    }
    agg += Rat(Int(a - bearing)) / Rat(Int(a));
    agg.canonicalize();
    rep.delta_y = agg;
    rep.delta_y_d = agg.get_d();
    rep.delta_estimated = estimated;
  }
  rep.gap = std::fabs((1.0 - rep.empirical) - rep.delta_y_d);
  return rep;
}

// Which of the three classes n falls in, for h = 1: A (gcd 1), C^- (a prime
// factor <= y), or C^+ (all prime factors > y).
enum class PartitionClass { A, CMinus, CPlus };

inline PartitionClass partition_class(const LinearRecurrence& f, const IntValuedPoly& g, u64 n,
                                      const std::vector<u32>& primes_le_y) {
  Int t = gcd_term(f, g, n);
  if (t == 1) return PartitionClass::A;
  return detail::has_small_prime_factor(t, primes_le_y) ? PartitionClass::CMinus
                                                        : PartitionClass::CPlus;
}

struct AilonRudnickResult {
  u64 count = 0;
  std::vector<u64> members;  // n with gcd(a^n - 1, b^n - 1) = 1
};

namespace detail {

// strip perfect powers: the minimal c with n = c^k for some k >= 1
inline Int primitive_base(Int n) {
  while (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        n = root;
        break;
      }
      if (Int(1) << k > n) break;  // no exact root beyond log2(n)
    }
  }
  return n;
}

}  // namespace detail

// Enumeration for the a^n - 1 vs b^n - 1 coprimality conjecture; the
// hypotheses (gcd(a-1, b-1) = 1, multiplicative independence) are checked.
inline AilonRudnickResult ailon_rudnick(const Int& a, const Int& b, u64 x) {
  if (a < 2 || b < 2) throw domain_error("need a, b >= 2");
  if (x < 1) throw domain_error("x must be >= 1");
  if (x > 5000) throw domain_error("x capped at 5000: b^n - 1 grows too fast");
  if (int_gcd(a - 1, b - 1) != 1) throw domain_error("hypothesis violated: gcd(a-1, b-1) != 1");
  if (detail::primitive_base(a) == detail::primitive_base(b))
    throw domain_error("hypothesis violated: a and b are multiplicatively dependent");
  AilonRudnickResult out;
  for (u64 n = 1; n <= x; ++n) {
    Int bn = int_pow(b, n) - 1;
    Int an;
    if (bn == 1) {
      an = 0;
    } else {
      mpz_powm_ui(an.get_mpz_t(), a.get_mpz_t(), n, bn.get_mpz_t());
      an = mod_floor(an - 1, bn);
    }
    if (int_gcd(an, bn) == 1) {
      ++out.count;
      out.members.push_back(n);
    }
  }
  return out;
}

struct CensusReport {
  u64 count = 0;          // n <= x with a prime > x dividing gcd(F(n), G(n))
  Int max_prime = 0;      // largest such prime observed
  double max_p_over_x = 0;
};

// #{n <= x : some p > x divides gcd(F(n), G(n))}: strip all prime factors
// <= x by trial division, then primality-check / rho-split the survivor.
inline CensusReport large_prime_census(const LinearRecurrence& f, const IntValuedPoly& g, u64 x,
                                       u64 seed = 0) {
  if (x < 1 || x > 100'000) throw domain_error("census bound x must be in [1, 10^5]");
  auto primes = primes_upto(static_cast<u32>(x));
  CensusReport out;
  for (u64 n = 1; n <= x; ++n) {
    Int v = gcd_term(f, g, n);
    for (u32 q : primes) {
      if (Int(q) * q > v) break;
      while (v % q == 0) v /= q;
    }
    if (v > 1 && v <= x) continue;  // remaining prime <= x
    if (v <= 1) continue;
    // v > x: every prime factor of v exceeds x
    ++out.count;
    for (const auto& [p, e] : factor_int(v, seed)) {
      (void)e;
      if (p > out.max_prime) out.max_prime = p;
    }
  }
  if (out.max_prime > 0) {
    Rat ratio = Rat(out.max_prime) / Rat(Int(x));
    ratio.canonicalize();
    out.max_p_over_x = ratio.get_d();
  }
  return out;
}

}  // namespace recgcd
