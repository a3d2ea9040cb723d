#pragma once

// Dense univariate polynomials over Z: arithmetic, content/primitive part,
// gcd by primitive pseudo-remainders, Sylvester/Bareiss resultants,
// cyclotomic polynomials, finite differences, affine composition.

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "recgcd/util.hpp"

namespace recgcd {

class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static PolyZ constant(Int v) { return PolyZ(std::vector<Int>{std::move(v)}); }
  static PolyZ x() { return PolyZ({Int(0), Int(1)}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }

  // coefficient of X^i, zero beyond the degree
  const Int& coeff(size_t i) const {
    static const Int zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }
  const Int& lead() const {
    assert(!c_.empty());
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // sum_i c_i * p^i * q^(deg-i); integer test for the rational point p/q
  Int eval_scaled(const Int& p, const Int& q) const {
    if (c_.empty()) return 0;
    Int acc = 0, qpow = 1;
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * p + c_[i] * qpow;
      if (i > 0) qpow *= q;
    }
    return acc;
  }

  PolyZ operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return PolyZ(std::move(r));
  }

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return PolyZ(std::move(r));
  }
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(r));
  }
  friend PolyZ operator*(const PolyZ& a, const Int& s) {
    std::vector<Int> r(a.c_);
    for (auto& v : r) v *= s;
    return PolyZ(std::move(r));
  }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

  PolyZ derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return PolyZ(std::move(r));
  }

  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    return g;
  }

  PolyZ primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (sgn(lead()) < 0) g = -g;
    return divexact_scalar(g);
  }

  PolyZ divexact_scalar(const Int& s) const {
    assert(s != 0);
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
      assert(rem == 0);
      r[i] = q;
    }
    return PolyZ(std::move(r));
  }

  // long division by a monic divisor; exact over Z
  std::pair<PolyZ, PolyZ> divrem_monic(const PolyZ& d) const {
    assert(d.is_monic());
    std::vector<Int> rem(c_);
    std::vector<Int> quo;
    int dd = d.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
      Int q = rem.back();
      size_t shift = rem.size() - 1 - dd;
      if (quo.size() < shift + 1) quo.resize(shift + 1, Int(0));
      quo[shift] += q;
      for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * d.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {PolyZ(std::move(quo)), PolyZ(std::move(rem))};
  }

  // p(aX + b)
  PolyZ compose_affine(const Int& a, const Int& b) const {
    PolyZ acc;
    PolyZ lin({b, a});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  // p(X + 1) - p(X)
  PolyZ forward_difference() const { return compose_affine(1, 1) - *this; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Int a = c_[i];
      if (!s.empty()) {
        s += (sgn(a) < 0) ? " - " : " + ";
        a = abs(a);
      }
      std::string term;
      if (i == 0 || a != 1) term += a.get_str();
      if (i >= 1) {
        if (!term.empty()) term += "*";
        term += "X";
        if (i >= 2) term += "^" + std::to_string(i);
      }
      s += term;
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

namespace detail {

// Bareiss fraction-free determinant; exact over Z.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Resultant with *formal* degrees (coefficient lists may have zero leads);
// polynomial in the entries, which is what evaluation/interpolation needs.
inline Int resultant_formal(const std::vector<Int>& f, size_t degf, const std::vector<Int>& g,
                            size_t degg) {
  if (degf == 0 && degg == 0) return 1;
  size_t n = degf + degg;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  auto at = [](const std::vector<Int>& v, size_t i) { return i < v.size() ? v[i] : Int(0); };
  for (size_t r = 0; r < degg; ++r)
    for (size_t i = 0; i <= degf; ++i) m[r][r + degf - i] = at(f, i);
  for (size_t r = 0; r < degf; ++r)
    for (size_t i = 0; i <= degg; ++i) m[degg + r][r + degg - i] = at(g, i);
  return detail::bareiss_det(std::move(m));
}

inline Int resultant(const PolyZ& f, const PolyZ& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  return resultant_formal(f.coeffs(), f.degree(), g.coeffs(), g.degree());
}

// gcd by primitive pseudo-remainder sequence; result is primitive with
// positive leading coefficient.
inline PolyZ poly_gcd(PolyZ a, PolyZ b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    int da = a.degree(), db = b.degree();
    Int lb = b.lead();
    PolyZ r = a * int_pow(lb, static_cast<unsigned long>(da - db + 1));
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      Int q;
      mpz_divexact(q.get_mpz_t(), r.lead().get_mpz_t(), lb.get_mpz_t());
      std::vector<Int> sub(static_cast<size_t>(shift), Int(0));
      sub.push_back(q);
      r = r - b * PolyZ(std::move(sub));
    }
    a = b;
    b = r.primitive_part();
  }
  return a;
}

// f / gcd(f, f'); the product of (X - alpha) over distinct roots, up to sign.
inline PolyZ squarefree_part(const PolyZ& f) {
  if (f.is_zero()) return {};
  PolyZ g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return f.primitive_part();
  // divide primitively: g divides f up to content
  PolyZ fp = f.primitive_part();
  // g is primitive; fp = g * q with q in Z[X] (Gauss)
  // do rational-free division via pseudo-division then content fix
  int dq = fp.degree() - g.degree();
  Int lg = g.lead();
  PolyZ r = fp * int_pow(lg, static_cast<unsigned long>(dq + 1));
  std::vector<Int> quo(static_cast<size_t>(dq) + 1, Int(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    Int q;
    mpz_divexact(q.get_mpz_t(), r.lead().get_mpz_t(), lg.get_mpz_t());
    quo[static_cast<size_t>(shift)] = q;
    std::vector<Int> sub(static_cast<size_t>(shift), Int(0));
    sub.push_back(q);
    r = r - g * PolyZ(std::move(sub));
  }
  assert(r.is_zero());
  return PolyZ(std::move(quo)).primitive_part();
}

inline PolyZ cyclotomic(unsigned m) {
  assert(m >= 1);
  // X^m - 1 divided by all proper-divisor cyclotomics
  std::vector<Int> xm(m + 1, Int(0));
  xm[0] = -1;
  xm[m] = 1;
  PolyZ num(std::move(xm));
  for (u64 d : divisors_sorted(m)) {
    if (d == m) continue;
    auto [q, r] = num.divrem_monic(cyclotomic(static_cast<unsigned>(d)));
    assert(r.is_zero());
    num = q;
  }
  return num;
}

inline bool divides_monic(const PolyZ& d, const PolyZ& f) {
  if (f.is_zero()) return true;
  if (d.degree() > f.degree()) return false;
  return f.divrem_monic(d).second.is_zero();
}

}  // namespace recgcd
