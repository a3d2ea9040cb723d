#pragma once

// Finite unions of arithmetic progressions with a preperiod: the explicit
// residue-set form (capped modulus) and an exact union-density routine that
// never materializes residues modulo the combined modulus.

#include <optional>
#include <vector>

#include "recgcd/util.hpp"

namespace recgcd {

// Membership of n >= preperiod depends only on n mod modulus; density is
// residue_count / modulus (the exceptional set below the preperiod has
// density zero).
struct ProgressionSet {
  u64 modulus = 1;
  std::vector<bool> residue_bits;  // size modulus
  u64 residue_count = 0;
  u64 preperiod = 0;
  std::vector<u64> exceptional;  // sorted members below preperiod

  bool contains(u64 n) const {
    if (n < preperiod)
      return std::binary_search(exceptional.begin(), exceptional.end(), n);
    return residue_bits[n % modulus];
  }
  Rat density() const {
    Rat d = Rat(Int(residue_count)) / Rat(Int(modulus));
    d.canonicalize();
    return d;
  }
};

// One prime's contribution: residues mod `modulus` (valid from `preperiod`
// on) plus explicit members below the preperiod.
struct PrimePart {
  u64 prime = 2;
  u64 modulus = 1;
  std::vector<u64> residues;  // sorted
  u64 preperiod = 0;
  std::vector<u64> exceptional;  // sorted members below preperiod

  bool contains(u64 n) const {
    if (n < preperiod)
      return std::binary_search(exceptional.begin(), exceptional.end(), n);
    return std::binary_search(residues.begin(), residues.end(), n % modulus);
  }
};

// Exact density of the union of the periodic parts, by inclusion-exclusion
// over subsets with CRT-compatible residue combinations (a system n = r_i
// mod m_i is solvable iff pairwise compatible, and then pins one class mod
// lcm). Returns nullopt when the enumeration exceeds work_cap nodes.
inline std::optional<Rat> union_density(const std::vector<PrimePart>& parts,
                                        u64 work_cap = 20'000'000) {
  Rat acc = 0;
  u64 work = 0;
  // DFS over (subset, residue combination); sign alternates with subset size
  auto rec = [&](auto&& self, size_t idx, const Int& mod, const Int& res, int sign) -> bool {
    for (size_t i = idx; i < parts.size(); ++i) {
      for (u64 r : parts[i].residues) {
        if (++work > work_cap) return false;
        Int m2 = static_cast<unsigned long>(parts[i].modulus);
        Int g = int_gcd(mod, m2);
        Int diff = Int(r) - res;
        if (mod_floor(diff, g) != 0) continue;
        Int lcm = mod / g * m2;
        // res' = res + mod * t with t = (diff/g) * inv(mod/g) mod (m2/g)
        Int mg = mod / g, m2g = m2 / g;
        Int t;
        if (m2g == 1) {
          t = 0;
        } else {
          Int inv;
          if (mpz_invert(inv.get_mpz_t(), Int(mod_floor(mg, m2g)).get_mpz_t(), m2g.get_mpz_t()) == 0)
            throw domain_error("CRT inverse failed");
          t = mod_floor((diff / g) * inv, m2g);
        }
        Int res2 = res + mod * t;
        Rat term = Rat(sign) / Rat(lcm);
        term.canonicalize();
        acc += term;
        if (!self(self, i + 1, lcm, res2, -sign)) return false;
      }
    }
    return true;
  };
  if (!rec(rec, 0, Int(1), Int(0), +1)) return std::nullopt;
  acc.canonicalize();
  return acc;
}

}  // namespace recgcd
