#pragma once

// T_F(p): the greatest T >= 0 such that p divides no norm N_K(D_F(0, x_2..x_r))
// over exponent tuples in [1, T]^(r-1), where D_F(x_1..x_r) = det(alpha_i^{x_j})
// over the distinct roots of psi_F.
//
// p | N_K(D) iff D lies in a prime ideal over p iff the determinant of the
// reduced root matrix vanishes in F_{p^s} (checked together with its s
// Frobenius twists). Tuples with a repeated coordinate have D = 0 identically
// and count as max(1, |N(D)|) = 1, so they are skipped. A characteristic-zero
// vanishing at distinct exponents (conceivable only for r >= 3) stops the
// scan like any other vanishing.

#include <cmath>
#include <string>
#include <vector>

#include "recgcd/degeneracy.hpp"
#include "recgcd/fq.hpp"
#include "recgcd/intpoly.hpp"
#include "recgcd/recurrence.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

enum class TfpKind { Finite, Infinite, AtLeast };

struct TfpFlags {
  bool divides_ak = false;
  bool repeated_roots = false;  // p divides disc(psi*), i.e. repeated roots mod p
  bool any() const { return divides_ak || repeated_roots; }
  std::string to_string() const {
    if (divides_ak && repeated_roots) return "divides_ak|repeated_roots";
    if (divides_ak) return "divides_ak";
    if (repeated_roots) return "repeated_roots";
    return "-";
  }
};

struct TfpResult {
  u64 p = 0;
  TfpKind kind = TfpKind::Finite;
  u64 value = 0;       // T when Finite; the exhausted bound when AtLeast
  unsigned s = 1;      // embedding degree used
  TfpFlags flags;

  std::string value_string() const {
    switch (kind) {
      case TfpKind::Infinite: return "inf";
      case TfpKind::AtLeast: return ">=" + std::to_string(value);
      default: return std::to_string(value);
    }
  }
};

inline constexpr u64 kDefaultTmax = 10000;

namespace detail {

// sorted distinct exponent tuples (x_2 < .. < x_r) with max coordinate = T;
// zero-ness of the determinant is invariant under column order
template <class Fn>
inline bool for_each_frontier_tuple(unsigned r, u64 T, Fn&& fn) {
  std::vector<u64> x(r - 1);
  x[r - 2] = T;
  if (r == 2) return fn(x);
  // choose x_2 < ... < x_{r-1} from [1, T-1]
  if (T < r - 1) return true;  // not enough distinct values
  unsigned m = r - 2;
  for (unsigned i = 0; i < m; ++i) x[i] = i + 1;
  for (;;) {
    if (!fn(x)) return false;
    // next combination
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] == T - (m - static_cast<unsigned>(i))) --i;
    if (i < 0) return true;
    ++x[static_cast<size_t>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) x[j] = x[j - 1] + 1;
  }
}

}  // namespace detail

// Finite-field route. Preconditions: p does not divide a_k (error), and the
// reduction of psi* mod p has distinct roots - otherwise every tuple's
// determinant has two equal rows, T_F(p) = 0, and the result carries the
// repeated_roots flag.
inline TfpResult t_f_p(const LinearRecurrence& rec, u64 p, u64 t_max = kDefaultTmax) {
  TfpResult res;
  res.p = p;
  if (rec.coefficients().back() % Int(p) == 0) throw domain_error("p divides a_k");
  PolyZ psf = squarefree_part(rec.char_poly());
  unsigned r = static_cast<unsigned>(psf.degree());
  if (r > 4) throw domain_error("r > 4 not supported at desk scale");
  if (r == 1) {
    res.kind = TfpKind::Infinite;
    return res;
  }
  auto factors = factor_mod_p(psf, p);
  bool repeated = false;
  for (const auto& f : factors)
    if (f.multiplicity > 1) repeated = true;
  if (repeated) {
    res.kind = TfpKind::Finite;
    res.value = 0;
    res.flags.repeated_roots = true;
    return res;
  }
  unsigned s = 1;
  for (const auto& f : factors) s = static_cast<unsigned>(lcm_u64(s, static_cast<u64>(f.factor.degree())));
  res.s = s;
  auto ctx = fq_context(p, s);
  auto roots = roots_in_Fq(psf, ctx);
  if (roots.size() != r) throw domain_error("root count mismatch in F_q");

  // power tables, grown one exponent per step
  std::vector<std::vector<FqElement>> pw(r);
  for (unsigned i = 0; i < r; ++i) pw[i].push_back(FqElement::one(ctx));
  for (u64 T = 1; T <= t_max; ++T) {
    for (unsigned i = 0; i < r; ++i) pw[i].push_back(pw[i].back() * roots[i].root);
    bool ok = detail::for_each_frontier_tuple(r, T, [&](const std::vector<u64>& xs) {
      std::vector<std::vector<FqElement>> m(r, std::vector<FqElement>(r, FqElement::one(ctx)));
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j + 1 < r; ++j) m[i][j + 1] = pw[i][xs[j]];
      FqElement d = det_fq(std::move(m), ctx);
      for (unsigned t = 0; t < s; ++t) {
        if (d.is_zero()) return false;
        d = d.frobenius();
      }
      return true;
    });
    if (!ok) {
      res.kind = TfpKind::Finite;
      res.value = T - 1;
      return res;
    }
  }
  res.kind = TfpKind::AtLeast;
  res.value = t_max;
  return res;
}

// Exact-integer oracle for recurrences whose psi* splits over Q (monic, so
// the roots are integers and N_K is the determinant itself).
inline TfpResult t_f_p_oracle_split(const LinearRecurrence& rec, u64 p,
                                    u64 t_max = kDefaultTmax) {
  TfpResult res;
  res.p = p;
  if (rec.coefficients().back() % Int(p) == 0) throw domain_error("p divides a_k");
  PolyZ psf = squarefree_part(rec.char_poly());
  unsigned r = static_cast<unsigned>(psf.degree());
  if (r > 4) throw domain_error("r > 4 not supported at desk scale");
  if (r == 1) {
    res.kind = TfpKind::Infinite;
    return res;
  }
  auto sp = splits_over_Q(IntValuedPoly::from_intpoly(psf));
  if (!sp.splits) throw domain_error("does not split");
  std::vector<Int> roots;
  for (const auto& [root, mult] : sp.roots) {
    if (root.get_den() != 1) throw domain_error("does not split");  // cannot happen: monic
    for (unsigned i = 0; i < mult; ++i) roots.push_back(root.get_num());
  }
  if (roots.size() != r) throw domain_error("root multiset size mismatch");

  std::vector<std::vector<Int>> pw(r);
  for (unsigned i = 0; i < r; ++i) pw[i].push_back(1);
  Int pz = static_cast<unsigned long>(p);
  for (u64 T = 1; T <= t_max; ++T) {
    for (unsigned i = 0; i < r; ++i) pw[i].push_back(pw[i].back() * roots[i]);
    bool ok = detail::for_each_frontier_tuple(r, T, [&](const std::vector<u64>& xs) {
      std::vector<std::vector<Int>> m(r, std::vector<Int>(r, Int(1)));
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j + 1 < r; ++j) m[i][j + 1] = pw[i][xs[j]];
      Int d = detail::bareiss_det(std::move(m));
      if (d == 0) return true;  // max(1, |N(D)|) = 1: not a vanishing
      return mod_floor(d, pz) != 0;
    });
    if (!ok) {
      res.kind = TfpKind::Finite;
      res.value = T - 1;
      return res;
    }
  }
  res.kind = TfpKind::AtLeast;
  res.value = t_max;
  return res;
}

struct CensusResult {
  u64 count = 0;
  std::vector<u64> members;                           // primes with T_F(p) < p^gamma
  std::vector<std::pair<u64, TfpFlags>> flagged;      // flagged primes, reported separately
  std::vector<TfpResult> rows;                        // one per enumerated prime
};

// P_{F,gamma}(x): primes p <= x with T_F(p) < p^gamma. Primes with p | a_k
// are skipped and reported; repeated-root primes have a known T = 0 and are
// both counted and reported as flagged.
inline CensusResult census_P_F_gamma(const LinearRecurrence& rec, double gamma, u64 x) {
  unsigned r = static_cast<unsigned>(squarefree_part(rec.char_poly()).degree());
  if (gamma <= 0) throw domain_error("gamma must be positive");
  if (r >= 1 && gamma > 1.0 / r + 1e-12) throw domain_error("gamma must be <= 1/r");
  CensusResult out;
  for (u32 p : primes_upto(static_cast<u32>(x))) {
    if (rec.coefficients().back() % Int(p) == 0) {
      TfpFlags f;
      f.divides_ak = true;
      out.flagged.emplace_back(p, f);
      TfpResult skip;
      skip.p = p;
      skip.flags = f;
      out.rows.push_back(skip);
      continue;
    }
    long double bound = powl(static_cast<long double>(p), static_cast<long double>(gamma));
    u64 t_max = static_cast<u64>(bound) + 2;
    TfpResult t = t_f_p(rec, p, t_max);
    out.rows.push_back(t);
    if (t.flags.any()) out.flagged.emplace_back(p, t.flags);
    bool in = false;
    if (t.kind == TfpKind::Finite && static_cast<long double>(t.value) < bound) in = true;
    if (t.kind == TfpKind::Infinite || t.kind == TfpKind::AtLeast) in = false;
    if (in) {
      ++out.count;
      out.members.push_back(p);
    }
  }
  return out;
}

struct TailSumResult {
  Rat exact = 0;
  double value = 0;
  unsigned flagged = 0;       // flagged primes skipped
  unsigned unresolved = 0;    // primes where T hit the search bound (term used 1/(p*bound))
};

// sum over primes y < p <= P_max of 1/(p T_F(p)); infinite T contributes 0,
// flagged primes are skipped and counted.
inline TailSumResult tail_sum(const LinearRecurrence& rec, u64 y, u64 p_max,
                              u64 t_max = kDefaultTmax) {
  if (y >= p_max) throw domain_error("need y < P_max");
  TailSumResult out;
  for (u32 p : primes_upto(static_cast<u32>(p_max))) {
    if (p <= y) continue;
    if (rec.coefficients().back() % Int(p) == 0) {
      ++out.flagged;
      continue;
    }
    TfpResult t = t_f_p(rec, p, t_max);
    if (t.flags.any()) {
      ++out.flagged;
      continue;
    }
    if (t.kind == TfpKind::Infinite) continue;
    u64 tv = t.value;
    if (t.kind == TfpKind::AtLeast) ++out.unresolved;
    if (tv == 0) {
      ++out.flagged;  // cannot form 1/(p*0); excluded like a flagged prime
      continue;
    }
    Rat term = Rat(1) / Rat(Int(p) * Int(tv));
    term.canonicalize();
    out.exact += term;
  }
  out.exact.canonicalize();
  out.value = out.exact.get_d();
  return out;
}

// Number of m in [0, x] with F(p m + ell) = 0 mod p, via one eventual period
// of F mod p rather than x modular evaluations.
inline u64 congruence_count(const LinearRecurrence& rec, u64 p, u64 ell, u64 x) {
  if (p < 2) throw domain_error("p must be a prime >= 2");
  auto ep = rec.eventual_period_mod(Int(p));
  u64 rho = ep.preperiod, lam = ep.period;
  // zero residues of F mod p on the periodic range
  std::vector<char> zero_at(lam, 0);
  {
    auto vals = rec.eval_range(rho + lam - 1);
    for (u64 n = rho; n < rho + lam; ++n)
      if (mod_floor(vals[n], Int(p)) == 0) zero_at[n % lam] = 1;
  }
  u64 count = 0;
  // below the preperiod: check directly
  u64 m_start = (ell >= rho) ? 0 : (rho - ell + p - 1) / p;
  for (u64 m = 0; m < m_start && m <= x; ++m)
    if (rec.eval_mod(p * m + ell, Int(p)) == 0) ++count;
  if (m_start > x) return count;
  // periodic range: p m + ell = z (mod lam) for each zero residue z
  u64 pm = p % lam;
  u64 g = gcd_u64(pm, lam);  // gcd(0, lam) = lam
  u64 lam_g = lam / g;
  u64 inv = 1;
  if (lam_g > 1) {
    u64 pg = (pm / g) % lam_g;
    long long t0 = 0, t1 = 1;
    long long r0 = static_cast<long long>(lam_g), r1 = static_cast<long long>(pg);
    while (r1 != 0) {
      long long q = r0 / r1;
      long long tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
    }
    inv = static_cast<u64>((t0 % static_cast<long long>(lam_g) + static_cast<long long>(lam_g)) %
                           static_cast<long long>(lam_g));
  }
  for (u64 z = 0; z < lam; ++z) {
    if (!zero_at[z]) continue;
    // solve p m = z - ell (mod lam)
    u64 rhs = ((z + lam) - (ell % lam)) % lam;
    if (rhs % g != 0) continue;
    u64 m0 = (lam_g == 1) ? 0 : mulmod_u64((rhs / g) % lam_g, inv, lam_g);
    // count m in [m_start, x] with m = m0 (mod lam_g)
    u64 first = m0;
    if (first < m_start) first = m0 + (m_start - m0 + lam_g - 1) / lam_g * lam_g;
    if (first <= x) count += (x - first) / lam_g + 1;
  }
  return count;
}

}  // namespace recgcd
