#pragma once

// Constructive form of the disjoint-union decomposition: A_{F,G,h} splits
// into a finite exceptional set plus classes n = a m + b on which F mod h
// and G mod h are constant. Classes where h divides both carry the reduced
// pair (F(am+b)/h, G(am+b)/h) and A-membership reduces to coprimality of the
// reduced pair; the remaining classes contain no members but still carry
// their per-sequence forced divisors (this is exactly the fixed-divisor
// reduction of the worked Fibonacci/n(n+1) example).

#include <vector>

#include "recgcd/degeneracy.hpp"
#include "recgcd/intpoly.hpp"
#include "recgcd/recurrence.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

struct DecompositionPart {
  u64 stride;   // a
  u64 offset;   // b; the class is {a m + b : m >= 0}
  LinearRecurrence rec_part;   // F(a m + b) / f_divisor
  IntValuedPoly poly_part;     // G(a m + b) / g_divisor
  Int f_divisor;               // gcd(h, constant value of F mod h on the class)
  Int g_divisor;
  bool bearing;                // h | gcd(F(n), G(n)) for every n in the class
};

struct GcdSetDecomposition {
  Int h = 1;
  u64 stride = 1;
  u64 preperiod = 0;
  std::vector<u64> exceptional;          // n < preperiod with gcd(F(n), G(n)) = h
  std::vector<DecompositionPart> parts;  // indexed by n mod stride

  // membership in A_{F,G,h} through the decomposition only
  bool member(u64 n) const {
    if (n < preperiod)
      return std::binary_search(exceptional.begin(), exceptional.end(), n);
    const DecompositionPart& part = parts[n % stride];
    if (!part.bearing) return false;
    u64 m = (n - part.offset) / part.stride;
    Int gv = abs(part.poly_part.eval(Int(m)));
    if (gv == 0) return abs(part.rec_part.eval(m)) == 1;
    return int_gcd(part.rec_part.eval_mod(m, gv), gv) == 1;
  }
};

namespace detail {

// minimal period t (dividing h*B) of n -> G(n) mod h, via the binomial basis
inline u64 minimal_poly_period_mod(const IntValuedPoly& g, const Int& h) {
  if (h == 1) return 1;
  Int hb = h * g.denominator();
  if (!fits_u64(hb)) throw domain_error("modulus too large for polynomial period");
  const PolyZ& num = g.numerator();
  for (u64 t : divisors_sorted(to_u64(hb))) {
    PolyZ diff = num.compose_affine(1, Int(t)) - num;
    // diff(n) = 0 mod h*B for all n iff all finite differences at 0 are
    int d = diff.degree();
    std::vector<Int> vals;
    for (int i = 0; i <= std::max(d, 0); ++i) vals.push_back(diff.eval(i));
    bool ok = true;
    for (size_t round = 0; round < vals.size() && ok; ++round) {
      if (mod_floor(vals[0], hb) != 0) ok = false;
      for (size_t i = 0; i + round + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    }
    if (ok) return t;
  }
  return to_u64(hb);
}

}  // namespace detail

inline GcdSetDecomposition decompose_gcd_set(const LinearRecurrence& f, const IntValuedPoly& g,
                                             const Int& h) {
  if (f.is_zero_sequence()) throw domain_error("zero sequence");
  if (h < 1) throw domain_error("h must be >= 1");
  GcdSetDecomposition out;
  out.h = h;
  u64 c = decompose_nondegenerate(f).stride;
  u64 lam_f = 1, rho_f = 0;
  if (h > 1) {
    auto ep = f.eventual_period_mod(h);
    lam_f = ep.period;
    rho_f = ep.preperiod;
  }
  u64 lam_g = detail::minimal_poly_period_mod(g, h);
  u64 a = lcm_u64(lcm_u64(c, lam_f), lam_g);
  out.stride = a;
  out.preperiod = rho_f;
  for (u64 b = 0; b < a; ++b) {
    u64 n0 = b;
    if (n0 < rho_f) n0 = b + (rho_f - b + a - 1) / a * a;
    Int cf = f.eval_mod(n0, h);
    Int cg = mod_floor(g.eval(Int(n0)), h);
    Int df = int_gcd(h, cf);  // = h when cf = 0
    Int dg = int_gcd(h, cg);
    out.parts.push_back(DecompositionPart{
        a, n0, divide_exact(subsequence(f, a, n0), df),
        g.compose_affine(Int(a), Int(n0)).divide_values(dg), df, dg,
        cf == 0 && cg == 0});
  }
  for (u64 n = 0; n < rho_f; ++n) {
    Int gv = abs(g.eval(Int(n)));
    Int gc = (gv == 0) ? abs(f.eval(n)) : int_gcd(f.eval_mod(n, gv), gv);
    if (gc == h) out.exceptional.push_back(n);
  }
  return out;
}

}  // namespace recgcd
