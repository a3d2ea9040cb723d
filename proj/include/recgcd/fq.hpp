#pragma once

// Arithmetic over F_p and F_{p^s}: univariate factorization mod p
// (squarefree + distinct-degree + equal-degree splitting), canonical
// extension contexts, root finding in extensions, Frobenius, determinants.

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "recgcd/polyz.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

namespace fp {

using Poly = std::vector<u64>;  // coefficients mod p, no trailing zeros

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline u64 inv_mod(u64 a, u64 p) { return powmod_u64(a % p, p - 2, p); }

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v >= p ? v - p : v;
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
    r[i] = av >= bv ? av - bv : av + p - bv;
  }
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a);
  for (auto& v : r) v = mulmod_u64(v, c, p);
  trim(r);
  return r;
}

inline Poly monic(const Poly& a, u64 p) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

inline Poly rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  assert(!b.empty() && b.back() != 0);
  u64 linv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    u64 c = mulmod_u64(a.back(), linv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      u64 s = mulmod_u64(c, b[i], p);
      u64& t = a[shift + i];
      t = t >= s ? t - s : t + p - s;
    }
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

inline Poly powmod(Poly base, const Int& e, const Poly& mod, u64 p) {
  Poly r{1};
  base = rem(std::move(base), mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), mod, p);
  }
  return r;
}

inline Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod_u64(f[i], i % p, p);
  trim(r);
  return r;
}

inline u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (mulmod_u64(acc, x, p) + f[i]) % p;
  return acc;
}

inline Poly from_polyz(const PolyZ& f, u64 p) {
  Poly r(static_cast<size_t>(f.degree() + 1));
  for (size_t i = 0; i < r.size(); ++i) r[i] = to_u64(mod_floor(f.coeff(i), Int(p)));
  trim(r);
  return r;
}

inline PolyZ to_polyz(const Poly& f) {
  std::vector<Int> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Int(f[i]);
  return PolyZ(std::move(c));
}

// f(X) = g(X^p) -> g, using a^(1/p) = a in F_p
inline Poly pth_root(const Poly& f, u64 p) {
  Poly g;
  for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
  trim(g);
  return g;
}

}  // namespace fp

struct FpFactor {
  PolyZ factor;  // monic, coefficients in [0, p)
  unsigned multiplicity;
};

namespace detail {

// squarefree decomposition in characteristic p: list of (g_i, i) with
// f = prod g_i^i, each g_i squarefree, pairwise coprime
inline void squarefree_decompose(fp::Poly f, u64 p, unsigned outer,
                                 std::vector<std::pair<fp::Poly, unsigned>>& out) {
  using namespace fp;
  f = monic(f, p);
  Poly d = derivative(f, p);
  if (d.empty()) {
    // f = g(X^p)
    if (deg(f) == 0) return;
    squarefree_decompose(pth_root(f, p), p, outer * static_cast<unsigned>(p), out);
    return;
  }
  Poly c = gcd(f, d, p);
  Poly w;
  {
    // w = f / c, division exact
    Poly q;
    Poly r = f;
    u64 linv = inv_mod(c.back(), p);
    q.assign(r.size() - c.size() + 1, 0);
    while (deg(r) >= deg(c)) {
      u64 cc = mulmod_u64(r.back(), linv, p);
      size_t shift = r.size() - c.size();
      q[shift] = cc;
      for (size_t i = 0; i < c.size(); ++i) {
        u64 s = mulmod_u64(cc, c[i], p);
        u64& t = r[shift + i];
        t = t >= s ? t - s : t + p - s;
      }
      trim(r);
    }
    assert(r.empty());
    trim(q);
    w = std::move(q);
  }
  unsigned i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(w, c, p);
    // z = w / y carries the factors of multiplicity exactly i
    Poly z;
    {
      Poly r = w, q(w.size() - y.size() + 1, 0);
      u64 linv = inv_mod(y.back(), p);
      while (deg(r) >= deg(y)) {
        u64 cc = mulmod_u64(r.back(), linv, p);
        size_t shift = r.size() - y.size();
        q[shift] = cc;
        for (size_t t2 = 0; t2 < y.size(); ++t2) {
          u64 s = mulmod_u64(cc, y[t2], p);
          u64& t = r[shift + t2];
          t = t >= s ? t - s : t + p - s;
        }
        trim(r);
      }
      assert(r.empty());
      trim(q);
      z = std::move(q);
    }
    if (deg(z) > 0) out.emplace_back(monic(z, p), outer * i);
    // c = c / y
    {
      Poly r = c, q(c.size() - y.size() + 1, 0);
      u64 linv = inv_mod(y.back(), p);
      while (deg(r) >= deg(y)) {
        u64 cc = mulmod_u64(r.back(), linv, p);
        size_t shift = r.size() - y.size();
        q[shift] = cc;
        for (size_t t2 = 0; t2 < y.size(); ++t2) {
          u64 s = mulmod_u64(cc, y[t2], p);
          u64& t = r[shift + t2];
          t = t >= s ? t - s : t + p - s;
        }
        trim(r);
      }
      assert(r.empty());
      trim(q);
      c = std::move(q);
    }
    w = std::move(y);
    ++i;
  }
  if (deg(c) > 0) squarefree_decompose(pth_root(c, p), p, outer * static_cast<unsigned>(p), out);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
inline void equal_degree_split(const fp::Poly& f, unsigned d, u64 p, std::mt19937_64& rng,
                               std::vector<fp::Poly>& out) {
  using namespace fp;
  if (deg(f) == static_cast<int>(d)) {
    out.push_back(monic(f, p));
    return;
  }
  Poly g;
  for (;;) {
    Poly r(static_cast<size_t>(deg(f)), 0);
    for (auto& v : r) v = rng() % p;
    trim(r);
    if (r.empty()) continue;
    if (p == 2) {
      // trace map sum r^(2^i), i < d
      Poly t = r, acc = r;
      for (unsigned i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      g = gcd(acc, f, p);
    } else {
      Int e = (int_pow_ui(p, d) - 1) / 2;
      Poly w = powmod(r, e, f, p);
      if (w.empty()) continue;
      w[0] = (w[0] + p - 1) % p;
      trim(w);
      g = gcd(w, f, p);
    }
    if (deg(g) > 0 && deg(g) < deg(f)) break;
  }
  // f / g
  Poly r2 = f, q(f.size() - g.size() + 1, 0);
  u64 linv = inv_mod(g.back(), p);
  while (deg(r2) >= deg(g)) {
    u64 cc = mulmod_u64(r2.back(), linv, p);
    size_t shift = r2.size() - g.size();
    q[shift] = cc;
    for (size_t i = 0; i < g.size(); ++i) {
      u64 s = mulmod_u64(cc, g[i], p);
      u64& t = r2[shift + i];
      t = t >= s ? t - s : t + p - s;
    }
    trim(r2);
  }
  trim(q);
  equal_degree_split(g, d, p, rng, out);
  equal_degree_split(q, d, p, rng, out);
}

}  // namespace detail

// Complete factorization of an integer polynomial modulo p. Factors are
// monic; the product of factor^multiplicity times the (mod-p) leading
// coefficient of f reproduces f mod p. Randomized equal-degree splitting is
// seeded for reproducibility.
inline std::vector<FpFactor> factor_mod_p(const PolyZ& f, u64 p, u64 seed = 0) {
  using namespace fp;
  if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
  if (f.lead() % Int(p) == 0) throw domain_error("bad leading coefficient");
  Poly fm = from_polyz(f, p);
  std::vector<FpFactor> result;
  if (deg(fm) == 0) return result;
  std::vector<std::pair<Poly, unsigned>> sqf;
  detail::squarefree_decompose(fm, p, 1, sqf);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + p);
  for (auto& [part, mult] : sqf) {
    // distinct-degree splitting of the squarefree part
    Poly rest = part;
    Poly h{0, 1};  // X
    unsigned d = 0;
    std::vector<std::pair<Poly, unsigned>> byDeg;
    while (deg(rest) > 0) {
      ++d;
      if (2 * d > static_cast<unsigned>(deg(rest))) {
        byDeg.emplace_back(rest, static_cast<unsigned>(deg(rest)));
        break;
      }
      h = powmod(std::move(h), Int(static_cast<unsigned long>(p)), rest, p);
      Poly hx = sub(h, Poly{0, 1}, p);
      Poly g = gcd(hx, rest, p);
      if (deg(g) > 0) {
        byDeg.emplace_back(g, d);
        // rest /= g
        Poly r2 = rest, q(rest.size() - g.size() + 1, 0);
        u64 linv = inv_mod(g.back(), p);
        while (deg(r2) >= deg(g)) {
          u64 cc = mulmod_u64(r2.back(), linv, p);
          size_t shift = r2.size() - g.size();
          q[shift] = cc;
          for (size_t i = 0; i < g.size(); ++i) {
            u64 s = mulmod_u64(cc, g[i], p);
            u64& t = r2[shift + i];
            t = t >= s ? t - s : t + p - s;
          }
          trim(r2);
        }
        trim(q);
        rest = std::move(q);
        h = rem(std::move(h), rest, p);
      }
    }
    for (auto& [prod, dd] : byDeg) {
      std::vector<Poly> irr;
      detail::equal_degree_split(prod, dd, p, rng, irr);
      for (auto& g : irr) result.push_back({to_polyz(g), mult});
    }
  }
  std::sort(result.begin(), result.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      const Int &x = a.factor.coeff(static_cast<size_t>(i)), &y = b.factor.coeff(static_cast<size_t>(i));
      if (x != y) return x < y;
    }
    return false;
  });
  return result;
}

// "p; factor:mult; ..." fixture line for a factorization
inline std::string factorization_line(u64 p, const std::vector<FpFactor>& fs) {
  std::string s = std::to_string(p);
  for (const auto& [f, mult] : fs) s += "; " + f.to_string() + ":" + std::to_string(mult);
  return s;
}

// ---------------------------------------------------------------------------
// Extension fields
// ---------------------------------------------------------------------------

struct FqContext {
  u64 p;
  unsigned s;
  fp::Poly modulus;  // monic irreducible of degree s over F_p

  Int order() const { return int_pow_ui(p, s); }
};

namespace detail {

inline bool is_irreducible(const fp::Poly& f, u64 p) {
  using namespace fp;
  unsigned s = static_cast<unsigned>(deg(f));
  if (s == 0) return false;
  if (s == 1) return true;
  Poly x{0, 1};
  Poly xq = powmod(x, int_pow_ui(p, s), f, p);
  if (sub(xq, x, p) != Poly{}) return false;
  for (auto [q, e] : factor_trial_u64(s)) {
    (void)e;
    Poly xt = powmod(x, int_pow_ui(p, s / static_cast<unsigned>(q)), f, p);
    if (deg(gcd(sub(xt, x, p), f, p)) != 0) return false;
  }
  return true;
}

}  // namespace detail

// Deterministic canonical modulus: the monic irreducible of degree s whose
// coefficient vector, read as a base-p integer, is smallest.
inline fp::Poly find_irreducible(u64 p, unsigned s) {
  if (s == 1) return fp::Poly{0, 1};  // X
  for (u64 v = 0;; ++v) {
    fp::Poly f(s + 1, 0);
    u64 t = v;
    for (unsigned i = 0; i < s && t; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (t) throw domain_error("no irreducible found in enumeration range");
    f[s] = 1;
    if (detail::is_irreducible(f, p)) return f;
  }
}

inline std::shared_ptr<const FqContext> fq_context(u64 p, unsigned s) {
  static std::mutex mtx;
  static std::map<std::pair<u64, unsigned>, std::shared_ptr<const FqContext>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(p, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<FqContext>(FqContext{p, s, find_irreducible(p, s)});
  cache.emplace(key, ctx);
  return ctx;
}

class FqElement {
 public:
  FqElement() = default;
  FqElement(std::shared_ptr<const FqContext> ctx, fp::Poly coeffs)
      : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    c_ = fp::rem(std::move(c_), ctx_->modulus, ctx_->p);
  }
  static FqElement from_u64(std::shared_ptr<const FqContext> ctx, u64 v) {
    return FqElement(std::move(ctx), fp::Poly{v});
  }
  static FqElement zero(std::shared_ptr<const FqContext> ctx) {
    return FqElement(std::move(ctx), {});
  }
  static FqElement one(std::shared_ptr<const FqContext> ctx) {
    return FqElement(std::move(ctx), {1});
  }

  const std::shared_ptr<const FqContext>& context() const { return ctx_; }
  const fp::Poly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend FqElement operator+(const FqElement& a, const FqElement& b) {
    return FqElement(a.ctx_, fp::add(a.c_, b.c_, a.ctx_->p));
  }
  friend FqElement operator-(const FqElement& a, const FqElement& b) {
    return FqElement(a.ctx_, fp::sub(a.c_, b.c_, a.ctx_->p));
  }
  friend FqElement operator*(const FqElement& a, const FqElement& b) {
    return FqElement(a.ctx_, fp::rem(fp::mul(a.c_, b.c_, a.ctx_->p), a.ctx_->modulus, a.ctx_->p));
  }
  friend bool operator==(const FqElement& a, const FqElement& b) { return a.c_ == b.c_; }

  FqElement pow(const Int& e) const {
    FqElement r = one(ctx_);
    if (e == 0) return r;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = r * r;
      if (mpz_tstbit(e.get_mpz_t(), i)) r = r * (*this);
    }
    return r;
  }

  FqElement inverse() const {
    if (is_zero()) throw domain_error("inverse of zero in F_q");
    // extended Euclid over F_p[X]
    u64 p = ctx_->p;
    fp::Poly r0 = ctx_->modulus, r1 = c_;
    fp::Poly t0, t1{1};
    while (!r1.empty()) {
      // quotient of r0 by r1
      fp::Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      fp::Poly r = r0;
      u64 linv = fp::inv_mod(r1.back(), p);
      while (fp::deg(r) >= fp::deg(r1)) {
        u64 cc = mulmod_u64(r.back(), linv, p);
        size_t shift = r.size() - r1.size();
        q[shift] = cc;
        for (size_t i = 0; i < r1.size(); ++i) {
          u64 s = mulmod_u64(cc, r1[i], p);
          u64& t = r[shift + i];
          t = t >= s ? t - s : t + p - s;
        }
        fp::trim(r);
      }
      fp::trim(q);
      fp::Poly t2 = fp::sub(t0, fp::rem(fp::mul(q, t1, p), ctx_->modulus, p), p);
      t0 = std::move(t1);
      t1 = std::move(t2);
      r0 = std::move(r1);
      r1 = std::move(r);
    }
    // r0 is a non-zero constant
    assert(fp::deg(r0) == 0);
    return FqElement(ctx_, fp::scale(t0, fp::inv_mod(r0[0], p), p));
  }

  // x -> x^p
  FqElement frobenius() const { return pow(Int(static_cast<unsigned long>(ctx_->p))); }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!s.empty()) s += " + ";
      if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
      if (i >= 1) {
        if (c_[i] != 1) s += "*";
        s += "t";
        if (i >= 2) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  std::shared_ptr<const FqContext> ctx_;
  fp::Poly c_;
};

namespace detail {

using FqPoly = std::vector<FqElement>;  // dense, may carry leading zeros before trim

inline void fq_trim(FqPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline FqPoly fq_rem(FqPoly a, const FqPoly& b) {
  fq_trim(a);
  FqElement linv = b.back().inverse();
  while (a.size() >= b.size()) {
    FqElement c = a.back() * linv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    fq_trim(a);
  }
  return a;
}

inline FqPoly fq_mul(const FqPoly& a, const FqPoly& b,
                     const std::shared_ptr<const FqContext>& ctx) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, FqElement::zero(ctx));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  fq_trim(r);
  return r;
}

inline FqPoly fq_gcd(FqPoly a, FqPoly b) {
  fq_trim(a);
  fq_trim(b);
  while (!b.empty()) {
    FqPoly r = fq_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FqElement linv = a.back().inverse();
    for (auto& v : a) v = v * linv;
  }
  return a;
}

inline FqPoly fq_powmod(FqPoly base, const Int& e, const FqPoly& mod,
                        const std::shared_ptr<const FqContext>& ctx) {
  FqPoly r{FqElement::one(ctx)};
  if (e == 0) return r;
  base = fq_rem(std::move(base), mod);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fq_rem(fq_mul(r, r, ctx), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fq_rem(fq_mul(r, base, ctx), mod);
  }
  return r;
}

// all roots of a completely-split squarefree monic FqPoly
inline void fq_roots_split(const FqPoly& f, const std::shared_ptr<const FqContext>& ctx,
                           std::mt19937_64& rng, std::vector<FqElement>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(FqElement::zero(ctx) - f[0] * f[1].inverse());
    return;
  }
  u64 p = ctx->p;
  FqPoly g;
  for (;;) {
    // random polynomial of degree < deg f; an affine shift is not enough
    // here, since conjugate roots share their trace and their square class
    // is Frobenius-stable over F_p
    FqPoly rp;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      fp::Poly rc(ctx->s, 0);
      for (auto& v : rc) v = rng() % p;
      rp.emplace_back(ctx, std::move(rc));
    }
    fq_trim(rp);
    if (rp.empty()) continue;
    if (p == 2) {
      // trace map: sum rp^(2^i) mod f, i < s
      FqPoly t = fq_rem(rp, f), acc = t;
      for (unsigned i = 1; i < ctx->s; ++i) {
        t = fq_rem(fq_mul(t, t, ctx), f);
        for (size_t j = 0; j < t.size(); ++j) {
          if (acc.size() <= j) acc.resize(j + 1, FqElement::zero(ctx));
          acc[j] = acc[j] + t[j];
        }
        fq_trim(acc);
      }
      g = fq_gcd(acc, f);
    } else {
      Int e = (ctx->order() - 1) / 2;
      FqPoly w = fq_powmod(rp, e, f, ctx);
      if (w.empty()) continue;
      w[0] = w[0] - FqElement::one(ctx);
      fq_trim(w);
      g = fq_gcd(w, f);
    }
    if (!g.empty() && g.size() > 1 && g.size() < f.size()) break;
  }
  // f / g
  FqPoly q(f.size() - g.size() + 1, FqElement::zero(ctx));
  FqPoly r = f;
  FqElement linv = g.back().inverse();
  while (r.size() >= g.size()) {
    FqElement c = r.back() * linv;
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) r[shift + i] = r[shift + i] - c * g[i];
    fq_trim(r);
  }
  fq_trim(q);
  fq_roots_split(g, ctx, rng, out);
  fq_roots_split(q, ctx, rng, out);
}

}  // namespace detail

struct FqRoot {
  FqElement root;
  unsigned multiplicity;
};

// All roots of an integer polynomial in F_{p^s}, each listed once with its
// multiplicity, validated by re-evaluation.
inline std::vector<FqRoot> roots_in_Fq(const PolyZ& f, const std::shared_ptr<const FqContext>& ctx,
                                       u64 seed = 0) {
  if (f.is_zero()) throw domain_error("cannot take roots of the zero polynomial");
  if (f.lead() % Int(ctx->p) == 0) throw domain_error("bad leading coefficient");
  std::vector<FqRoot> out;
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + ctx->p + ctx->s);
  for (const auto& [factor, mult] : factor_mod_p(f, ctx->p, seed)) {
    unsigned d = static_cast<unsigned>(factor.degree());
    if (ctx->s % d != 0) continue;  // no roots of this factor in F_{p^s}
    detail::FqPoly lift;
    for (int i = 0; i <= factor.degree(); ++i)
      lift.push_back(FqElement::from_u64(ctx, to_u64(factor.coeff(static_cast<size_t>(i)))));
    std::vector<FqElement> roots;
    detail::fq_roots_split(lift, ctx, rng, roots);
    for (auto& r : roots) out.push_back({std::move(r), mult});
  }
  // validate
  for (const auto& [root, mult] : out) {
    FqElement acc = FqElement::zero(ctx);
    for (int i = f.degree(); i >= 0; --i)
      acc = acc * root + FqElement::from_u64(ctx, to_u64(mod_floor(f.coeff(static_cast<size_t>(i)),
                                                                   Int(ctx->p))));
    if (!acc.is_zero()) throw domain_error("root validation failed");
  }
  return out;
}

// Determinant over F_{p^s} by Gaussian elimination; first non-zero pivot in
// column order.
inline FqElement det_fq(std::vector<std::vector<FqElement>> m,
                        const std::shared_ptr<const FqContext>& ctx) {
  size_t n = m.size();
  if (n == 0) return FqElement::one(ctx);
  for (const auto& row : m)
    if (row.size() != n) throw domain_error("matrix must be square");
  FqElement det = FqElement::one(ctx);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return FqElement::zero(ctx);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = FqElement::zero(ctx) - det;
    }
    det = det * m[k][k];
    FqElement inv = m[k][k].inverse();
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      FqElement c = m[i][k] * inv;
      for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - c * m[k][j];
    }
  }
  return det;
}

}  // namespace recgcd
