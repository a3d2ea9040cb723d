#pragma once

// Shared basics: GMP typedefs, the error type used for violated preconditions,
// 64-bit modular arithmetic, prime sieves, and string helpers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recgcd {

using Int = mpz_class;
using Rat = mpq_class;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Thrown when an operation's precondition is violated; the message names
// the precondition so the CLI can surface it verbatim (exit code 1).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_pow_ui(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Canonical residue in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool fits_u64(const Int& a) { return a >= 0 && mpz_sizeinbase(a.get_mpz_t(), 2) <= 63; }

// Kronecker symbol (a|b); the quadratic character with the right p = 2 rules.
inline int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

inline u64 to_u64(const Int& a) {
  if (!fits_u64(a)) throw domain_error("value does not fit in 64 bits");
  return static_cast<u64>(mpz_get_ui(a.get_mpz_t()));
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod_u64(u64 base, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

inline std::vector<u32> primes_upto(u32 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u32> ps;
  for (u32 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (u64 j = static_cast<u64>(i) * i; j <= n; j += i) comp[j] = true;
    }
  }
  return ps;
}

// Smallest prime factor table; spf[0] = spf[1] = 0.
inline std::vector<u32> spf_upto(u32 n) {
  std::vector<u32> spf(n + 1, 0);
  for (u32 i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      for (u64 j = i; j <= n; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

// Prime-power factorization of a small integer via trial division.
inline std::vector<std::pair<u64, unsigned>> factor_trial_u64(u64 n) {
  std::vector<std::pair<u64, unsigned>> fs;
  for (u64 q = 2; q * q <= n; q += (q == 2) ? 1 : 2) {
    if (n % q == 0) {
      unsigned e = 0;
      while (n % q == 0) n /= q, ++e;
      fs.emplace_back(q, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

inline std::vector<u64> divisors_sorted(u64 n) {
  auto fs = factor_trial_u64(n);
  std::vector<u64> ds{1};
  for (auto [q, e] : fs) {
    size_t sz = ds.size();
    u64 qe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      qe *= q;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * qe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline unsigned euler_phi_u32(u32 n) {
  unsigned r = n;
  for (u32 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      r -= r / q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Int parse_int(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw domain_error("empty integer field");
  Int v;
  if (mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
    throw domain_error("malformed integer: " + t);
  return v;
}

}  // namespace recgcd
