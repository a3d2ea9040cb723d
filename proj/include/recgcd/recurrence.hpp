#pragma once

// Integral linear recurrences: exact evaluation, modular evaluation via
// companion-matrix powering, eventual periods, subsequence recurrences,
// exact division, and the "k; a_1,..,a_k; F(0),..,F(k-1)" text form.

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recgcd/polyz.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

struct EventualPeriod {
  u64 preperiod = 0;  // rho
  u64 period = 1;     // lambda
};

class LinearRecurrence {
 public:
  // coeffs = a_1..a_k, init = F(0)..F(k-1)
  LinearRecurrence(std::vector<Int> coeffs, std::vector<Int> init)
      : a_(std::move(coeffs)), f_(std::move(init)) {
    if (a_.empty()) throw domain_error("order k must be >= 1");
    if (a_.back() == 0) throw domain_error("a_k must be non-zero");
    if (f_.size() != a_.size()) throw domain_error("need exactly k initial terms");
  }

  static LinearRecurrence fibonacci() { return LinearRecurrence({1, 1}, {0, 1}); }
  static LinearRecurrence zero() { return LinearRecurrence({1}, {0}); }

  unsigned order() const { return static_cast<unsigned>(a_.size()); }
  const std::vector<Int>& coefficients() const { return a_; }
  const std::vector<Int>& initial_terms() const { return f_; }

  // F identically zero iff the first k terms vanish
  bool is_zero_sequence() const {
    for (const auto& v : f_)
      if (v != 0) return false;
    return true;
  }

  Int eval(u64 n) const {
    unsigned k = order();
    if (n < k) return f_[n];
    std::vector<Int> win(f_);
    for (u64 i = k; i <= n; ++i) {
      Int next = 0;
      for (unsigned j = 0; j < k; ++j) next += a_[j] * win[k - 1 - j];
      for (unsigned j = 0; j + 1 < k; ++j) win[j] = win[j + 1];
      win[k - 1] = next;
    }
    return win[k - 1];
  }

  // First n+1 terms F(0..n), one linear pass.
  std::vector<Int> eval_range(u64 n) const {
    unsigned k = order();
    std::vector<Int> t(f_.begin(), f_.end());
    t.reserve(n + 1);
    for (u64 i = k; i <= n; ++i) {
      Int next = 0;
      for (unsigned j = 0; j < k; ++j) next += a_[j] * t[i - 1 - j];
      t.push_back(std::move(next));
    }
    t.resize(n + 1);
    return t;
  }

  // F(0..n) mod m by rolling the recurrence; m must fit in 60 bits.
  std::vector<u64> eval_range_mod(u64 n, u64 m) const {
    if (m < 1) throw domain_error("modulus must be >= 1");
    unsigned k = order();
    std::vector<u64> a(k), t;
    t.reserve(n + 1);
    for (unsigned i = 0; i < k; ++i) {
      a[i] = to_u64(mod_floor(a_[i], Int(m)));
      t.push_back(to_u64(mod_floor(f_[i], Int(m))));
    }
    for (u64 i = k; i <= n; ++i) {
      unsigned __int128 acc = 0;
      for (unsigned j = 0; j < k; ++j) acc += static_cast<unsigned __int128>(a[j]) * t[i - 1 - j];
      t.push_back(static_cast<u64>(acc % m));
    }
    t.resize(n + 1);
    return t;
  }

  // F(n) mod m in O(k^3 log n) word/limb operations.
  Int eval_mod(u64 n, const Int& m) const {
    if (m < 1) throw domain_error("modulus must be >= 1");
    if (m == 1) return 0;
    unsigned k = order();
    if (n < k) return mod_floor(f_[n], m);
    if (fits_u64(m) && mpz_sizeinbase(m.get_mpz_t(), 2) <= 60 && k <= 16)
      return Int(eval_mod_u64(n, to_u64(m)));
    return eval_mod_big(n, m);
  }

  // Minimal (rho, lambda) with state(n + lambda) = state(n) mod m for n >= rho,
  // where state(n) = (F(n), .., F(n+k-1)). Found by hashing iterated states.
  EventualPeriod eventual_period_mod(const Int& m) const {
    if (m < 2) throw domain_error("modulus must be >= 2");
    if (!fits_u64(m) || mpz_sizeinbase(m.get_mpz_t(), 2) > 60)
      throw domain_error("modulus too large for period scan");
    u64 mm = to_u64(m);
    unsigned k = order();
    std::vector<u64> a(k), st(k);
    for (unsigned i = 0; i < k; ++i) {
      a[i] = to_u64(mod_floor(a_[i], m));
      st[i] = to_u64(mod_floor(f_[i], m));
    }
    std::unordered_map<std::string, u64> seen;
    auto key = [&](const std::vector<u64>& v) {
      return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(u64));
    };
    u64 idx = 0;
    for (;;) {
      auto [it, fresh] = seen.emplace(key(st), idx);
      if (!fresh) return {it->second, idx - it->second};
      unsigned __int128 next = 0;
      for (unsigned j = 0; j < k; ++j) next += static_cast<unsigned __int128>(a[j]) * st[k - 1 - j];
      u64 nx = static_cast<u64>(next % mm);
      for (unsigned j = 0; j + 1 < k; ++j) st[j] = st[j + 1];
      st[k - 1] = nx;
      ++idx;
    }
  }

  // psi_F = X^k - a_1 X^(k-1) - ... - a_k
  PolyZ char_poly() const {
    unsigned k = order();
    std::vector<Int> c(k + 1);
    c[k] = 1;
    for (unsigned i = 1; i <= k; ++i) c[k - i] = -a_[i - 1];
    return PolyZ(std::move(c));
  }

  std::string to_string() const {
    std::string s = std::to_string(order()) + "; ";
    for (size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + a_[i].get_str();
    s += "; ";
    for (size_t i = 0; i < f_.size(); ++i) s += (i ? "," : "") + f_[i].get_str();
    return s;
  }

  static LinearRecurrence parse(const std::string& text) {
    auto fields = split(text, ';');
    if (fields.size() != 3) throw domain_error("recurrence spec needs 3 ';'-separated fields");
    unsigned long k = std::stoul(trim(fields[0]));
    std::vector<Int> a, f;
    for (auto& t : split(fields[1], ',')) a.push_back(parse_int(t));
    for (auto& t : split(fields[2], ',')) f.push_back(parse_int(t));
    if (a.size() != k || f.size() != k)
      throw domain_error("recurrence spec field counts disagree with k");
    return LinearRecurrence(std::move(a), std::move(f));
  }

  friend bool operator==(const LinearRecurrence& x, const LinearRecurrence& y) {
    return x.a_ == y.a_ && x.f_ == y.f_;
  }

 private:
  u64 eval_mod_u64(u64 n, u64 m) const {
    unsigned k = order();
    // step matrix M with state(n+1) = M state(n); F(n) = (M^n state(0))[0]
    std::vector<u64> M(static_cast<size_t>(k) * k, 0), R(static_cast<size_t>(k) * k, 0);
    for (unsigned i = 0; i + 1 < k; ++i) M[i * k + i + 1] = 1 % m;
    for (unsigned j = 0; j < k; ++j) M[(k - 1) * k + j] = to_u64(mod_floor(a_[k - 1 - j], Int(m)));
    for (unsigned i = 0; i < k; ++i) R[i * k + i] = 1 % m;
    auto matmul = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
      std::vector<u64> z(static_cast<size_t>(k) * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned l = 0; l < k; ++l) {
          u64 v = x[i * k + l];
          if (!v) continue;
          unsigned __int128 acc;
          for (unsigned j = 0; j < k; ++j) {
            acc = static_cast<unsigned __int128>(v) * y[l * k + j] + z[i * k + j];
            z[i * k + j] = static_cast<u64>(acc % m);
          }
        }
      return z;
    };
    u64 e = n;
    std::vector<u64> B = M;
    while (e) {
      if (e & 1) R = matmul(R, B);
      B = matmul(B, B);
      e >>= 1;
    }
    unsigned __int128 acc = 0;
    for (unsigned j = 0; j < k; ++j)
      acc += static_cast<unsigned __int128>(R[j]) * to_u64(mod_floor(f_[j], Int(m)));
    return static_cast<u64>(acc % m);
  }

  Int eval_mod_big(u64 n, const Int& m) const {
    unsigned k = order();
    std::vector<Int> M(static_cast<size_t>(k) * k, Int(0)), R(static_cast<size_t>(k) * k, Int(0));
    for (unsigned i = 0; i + 1 < k; ++i) M[i * k + i + 1] = 1;
    for (unsigned j = 0; j < k; ++j) M[(k - 1) * k + j] = mod_floor(a_[k - 1 - j], m);
    for (unsigned i = 0; i < k; ++i) R[i * k + i] = 1;
    auto matmul = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
      std::vector<Int> z(static_cast<size_t>(k) * k, Int(0));
      for (unsigned i = 0; i < k; ++i)
        for (unsigned l = 0; l < k; ++l) {
          if (x[i * k + l] == 0) continue;
          for (unsigned j = 0; j < k; ++j) z[i * k + j] += x[i * k + l] * y[l * k + j];
        }
      for (auto& v : z) v = mod_floor(v, m);
      return z;
    };
    u64 e = n;
    std::vector<Int> B = M;
    while (e) {
      if (e & 1) R = matmul(R, B);
      B = matmul(B, B);
      e >>= 1;
    }
    Int acc = 0;
    for (unsigned j = 0; j < k; ++j) acc += R[j] * mod_floor(f_[j], m);
    return mod_floor(acc, m);
  }

  std::vector<Int> a_;
  std::vector<Int> f_;
};

namespace detail {

// Berlekamp-Massey over Q. Returns the minimal L and connection coefficients
// q_1..q_L with t_n = q_1 t_{n-1} + ... + q_L t_{n-L} for all n >= L.
inline std::pair<size_t, std::vector<Rat>> berlekamp_massey(const std::vector<Int>& t) {
  std::vector<Rat> C{Rat(1)}, B{Rat(1)};
  size_t L = 0, m = 1;
  Rat b = 1;
  for (size_t n = 0; n < t.size(); ++n) {
    Rat d = Rat(t[n]);
    for (size_t i = 1; i <= L; ++i) d += C[i] * Rat(t[n - i]);
    d.canonicalize();
    if (d == 0) {
      ++m;
      continue;
    }
    if (2 * L <= n) {
      std::vector<Rat> T = C;
      Rat coef = d / b;
      coef.canonicalize();
      if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
      for (size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
      L = n + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      Rat coef = d / b;
      coef.canonicalize();
      if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
      for (size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
      ++m;
    }
  }
  std::vector<Rat> q(L);
  for (size_t i = 1; i <= L; ++i) {
    q[i - 1] = (i < C.size()) ? -C[i] : Rat(0);
    q[i - 1].canonicalize();
  }
  return {L, q};
}

// Minimal integral linear recurrence fitting the given terms (which must come
// from a power-sum sequence with non-zero roots, e.g. any F(am+b)).
inline LinearRecurrence minimal_recurrence(const std::vector<Int>& terms) {
  auto [L, q] = berlekamp_massey(terms);
  if (L == 0) return LinearRecurrence::zero();
  std::vector<Int> a(L);
  for (size_t i = 0; i < L; ++i) {
    if (q[i].get_den() != 1)
      throw domain_error("sequence has no integral minimal recurrence");
    a[i] = q[i].get_num();
  }
  if (a.back() == 0) throw domain_error("sequence is eventually but not purely recurrent");
  std::vector<Int> init(terms.begin(), terms.begin() + static_cast<long>(L));
  LinearRecurrence out(std::move(a), std::move(init));
  // the fit must reproduce every supplied term
  auto chk = out.eval_range(terms.size() - 1);
  for (size_t i = 0; i < terms.size(); ++i)
    if (chk[i] != terms[i]) throw domain_error("minimal recurrence fit failed");
  return out;
}

}  // namespace detail

// Recurrence generating F(a m + b), reduced to its minimal order.
inline LinearRecurrence subsequence(const LinearRecurrence& rec, u64 a, u64 b) {
  if (a < 1) throw domain_error("stride must be >= 1");
  unsigned k = rec.order();
  u64 top = a * (2 * static_cast<u64>(k) + 3) + b;
  auto all = rec.eval_range(top);
  std::vector<Int> terms;
  for (u64 m = 0; m <= 2 * static_cast<u64>(k) + 3; ++m) terms.push_back(all[a * m + b]);
  return detail::minimal_recurrence(terms);
}

// Same order reduction applied to the recurrence itself.
inline LinearRecurrence minimal_order(const LinearRecurrence& rec) {
  return subsequence(rec, 1, 0);
}

// Same coefficients, initial terms divided by h. Divisibility of F(n) for
// n = 0..2k is checked; the caller guarantees it for all n.
inline LinearRecurrence divide_exact(const LinearRecurrence& rec, const Int& h) {
  if (h < 1) throw domain_error("divisor must be >= 1");
  unsigned k = rec.order();
  auto head = rec.eval_range(2 * static_cast<u64>(k));
  for (const auto& v : head)
    if (v % h != 0) throw domain_error("not divisible");
  std::vector<Int> init(rec.initial_terms());
  for (auto& v : init) v /= h;
  return LinearRecurrence(rec.coefficients(), std::move(init));
}

}  // namespace recgcd
