#pragma once

// Integer-valued polynomials G = N/B with N = B*G in Z[X]: evaluation,
// fixed divisors, rational-root splitting, rho_G(p), and the sieve product.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "recgcd/factorize.hpp"
#include "recgcd/polyz.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

class IntValuedPoly {
 public:
  // numerator = B*G, denominator = B > 0. Integer-valuedness is verified via
  // the binomial basis: all finite differences Delta^i G(0) must be integers.
  IntValuedPoly(PolyZ numerator, Int denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) throw domain_error("denominator B must be positive");
    for (const Int& d : numerator_differences_at_zero())
      if (d % den_ != 0) throw domain_error("polynomial is not integer-valued");
    reduce();
  }

  static IntValuedPoly from_intpoly(PolyZ p) { return IntValuedPoly(std::move(p), 1); }
  static IntValuedPoly identity() { return from_intpoly(PolyZ::x()); }

  const PolyZ& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }

  Int eval(const Int& n) const {
    Int v = num_.eval(n);
    assert(v % den_ == 0);
    return v / den_;
  }

  // G(aX + b), still integer-valued
  IntValuedPoly compose_affine(const Int& a, const Int& b) const {
    return IntValuedPoly(num_.compose_affine(a, b), den_);
  }

  // G / h for a positive integer h dividing every value
  IntValuedPoly divide_values(const Int& h) const {
    if (h < 1) throw domain_error("divisor must be >= 1");
    return IntValuedPoly(num_, den_ * h);
  }

  // "B; c_0,..,c_d"
  std::string to_string() const {
    std::string s = den_.get_str() + "; ";
    if (num_.is_zero()) return s + "0";
    for (int i = 0; i <= num_.degree(); ++i)
      s += (i ? "," : "") + num_.coeff(static_cast<size_t>(i)).get_str();
    return s;
  }

  static IntValuedPoly parse(const std::string& text) {
    auto fields = split(text, ';');
    if (fields.size() != 2) throw domain_error("polynomial spec needs 2 ';'-separated fields");
    Int den = parse_int(fields[0]);
    std::vector<Int> cs;
    for (auto& t : split(fields[1], ',')) cs.push_back(parse_int(t));
    return IntValuedPoly(PolyZ(std::move(cs)), den);
  }

  friend bool operator==(const IntValuedPoly& a, const IntValuedPoly& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Delta^i (B*G)(0) for i = 0..deg
  std::vector<Int> numerator_differences_at_zero() const {
    int d = num_.degree();
    if (d < 0) return {Int(0)};
    std::vector<Int> vals(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) vals[static_cast<size_t>(i)] = num_.eval(i);
    std::vector<Int> out;
    out.reserve(vals.size());
    for (size_t round = 0; round < vals.size(); ++round) {
      out.push_back(vals[0]);
      for (size_t i = 0; i + round + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    }
    return out;
  }

 private:
  void reduce() {
    Int g = int_gcd(num_.content(), den_);
    if (g > 1) {
      num_ = num_.divexact_scalar(g);
      den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
  }

  PolyZ num_;
  Int den_;
};

// gcd of all values G(n) = gcd of the binomial-basis coefficients Delta^i G(0).
inline Int fixed_divisor(const IntValuedPoly& g) {
  if (g.is_zero()) throw domain_error("zero polynomial");
  Int d = 0;
  for (const Int& v : g.numerator_differences_at_zero()) d = int_gcd(d, v / g.denominator());
  return d;
}

struct SplitResult {
  bool splits = false;
  std::vector<std::pair<Rat, unsigned>> roots;  // root, multiplicity
};

// Whether B*G factors into linear factors over Q, by repeated rational-root
// extraction with exact deflation.
inline SplitResult splits_over_Q(const IntValuedPoly& g) {
  if (g.is_zero()) throw domain_error("zero polynomial");
  SplitResult res;
  PolyZ p = g.numerator().primitive_part();
  if (p.degree() == 0) {
    res.splits = true;
    return res;
  }
  auto push_root = [&res](const Rat& r) {
    for (auto& [root, mult] : res.roots)
      if (root == r) {
        ++mult;
        return;
      }
    res.roots.emplace_back(r, 1);
  };
  // zero roots first
  while (p.degree() >= 1 && p.coeff(0) == 0) {
    push_root(Rat(0));
    std::vector<Int> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = PolyZ(std::move(shifted));
  }
  while (p.degree() >= 1) {
    bool found = false;
    for (const Int& pn : divisors_of(p.coeff(0))) {
      for (const Int& qd : divisors_of(p.lead())) {
        if (int_gcd(pn, qd) != 1) continue;
        for (int s : {1, -1}) {
          Int pp = s * pn;
          if (p.eval_scaled(pp, qd) != 0) continue;
          push_root(Rat(pp) / Rat(qd));
          // deflate by (qd X - pp), primitive, exact by Gauss's lemma
          std::vector<Int> q(static_cast<size_t>(p.degree()), Int(0));
          Int carry = 0;
          for (int i = p.degree(); i >= 1; --i) {
            Int top = p.coeff(static_cast<size_t>(i)) + carry;
            assert(top % qd == 0);
            q[static_cast<size_t>(i - 1)] = top / qd;
            carry = q[static_cast<size_t>(i - 1)] * pp;
          }
          assert(p.coeff(0) + carry == 0);
          p = PolyZ(std::move(q)).primitive_part();
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return res;  // res.splits stays false, partial roots returned
  }
  res.splits = true;
  return res;
}

// rho_G(p): solutions of B*G(z) = 0 mod p^(1+v_p(B)) for z in [1, p^(1+v)],
// divided by p^v_p(B). Exact rational; non-integral only when p | B.
inline Rat rho(const IntValuedPoly& g, u64 p) {
  unsigned v = 0;
  Int b = g.denominator();
  while (b % p == 0) {
    b /= p;
    ++v;
  }
  Int mod = int_pow_ui(p, v + 1);
  u64 m = to_u64(mod);
  u64 count = 0;
  for (u64 z = 1; z <= m; ++z)
    if (mod_floor(g.numerator().eval(Int(z)), mod) == 0) ++count;
  Rat r = Rat(Int(count)) / Rat(int_pow_ui(p, v));
  r.canonicalize();
  return r;
}

// Residues l in [0, p) with G(l) = 0 mod p, for primes not dividing B.
inline std::vector<u64> roots_mod_p(const IntValuedPoly& g, u64 p) {
  if (g.denominator() % p == 0)
    throw domain_error("small prime: p divides the denominator B");
  std::vector<u64> out;
  for (u64 l = 0; l < p; ++l)
    if (mod_floor(g.numerator().eval(Int(l)), Int(p)) == 0) out.push_back(l);
  if (Int(p) > g.degree() && g.numerator().lead() % p != 0)
    assert(out.size() <= static_cast<size_t>(g.degree()));
  return out;
}

// prod_{p <= y} (1 - rho_G(p)/p), the main term of the small-prime sieve.
inline Rat sieve_lower_bound(const IntValuedPoly& g, double y) {
  if (y < 2) throw domain_error("cutoff y must be >= 2");
  Rat prod = 1;
  for (u32 p : primes_upto(static_cast<u32>(y))) {
    Rat rp = rho(g, p);
    if (rp >= p) throw domain_error("fixed divisor present");
    Rat term = Rat(1) - rp / Rat(static_cast<unsigned long>(p));
    term.canonicalize();
    prod *= term;
  }
  prod.canonicalize();
  return prod;
}

}  // namespace recgcd
