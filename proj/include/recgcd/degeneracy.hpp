#pragma once

// Degeneracy of a recurrence: some ratio alpha_i/alpha_j (i != j) of distinct
// characteristic roots is a root of unity. Decided entirely from the
// squarefree part of psi_F, by testing which cyclotomics divide the ratio
// polynomial R(x) = Res_y(psi*(y), psi*(x y)).

#include <optional>
#include <vector>

#include "recgcd/polyz.hpp"
#include "recgcd/recurrence.hpp"
#include "recgcd/util.hpp"

namespace recgcd {

// R(x) = Res_y(psi*(y), psi*(x y)), a degree-r^2 polynomial whose roots are
// all ratios alpha_i/alpha_j (including i = j, giving the (x-1)^r factor).
// Computed by evaluation at r^2+1 points and exact interpolation.
inline PolyZ ratio_polynomial(const PolyZ& psf) {
  int r = psf.degree();
  if (r <= 0) return PolyZ::constant(1);
  size_t npts = static_cast<size_t>(r) * static_cast<size_t>(r) + 1;
  std::vector<Int> xs, ys;
  for (long v = 0; xs.size() < npts; v = (v > 0) ? -v : -v + 1) {
    xs.emplace_back(v);
    // psi*(x0 * y) has y-coefficients c_i * x0^i; keep formal degree r
    std::vector<Int> g(psf.coeffs());
    Int p = 1;
    for (size_t i = 0; i < g.size(); ++i) {
      g[i] *= p;
      p *= Int(v);
    }
    ys.push_back(resultant_formal(psf.coeffs(), static_cast<size_t>(r), g, static_cast<size_t>(r)));
  }
  // Lagrange interpolation over Q; the result is an integer polynomial
  std::vector<Rat> acc(npts, Rat(0));
  for (size_t i = 0; i < npts; ++i) {
    // numerator polynomial prod_{j != i} (X - x_j), denominator prod (x_i - x_j)
    std::vector<Rat> num{Rat(1)};
    Rat den = 1;
    for (size_t j = 0; j < npts; ++j) {
      if (j == i) continue;
      num.push_back(Rat(0));
      for (size_t t = num.size() - 1; t > 0; --t) num[t] = num[t - 1] - Rat(xs[j]) * num[t];
      num[0] = -Rat(xs[j]) * num[0];
      den *= Rat(xs[i] - xs[j]);
    }
    Rat w = Rat(ys[i]) / den;
    for (size_t t = 0; t < num.size(); ++t) acc[t] += w * num[t];
  }
  std::vector<Int> out(npts);
  for (size_t t = 0; t < npts; ++t) {
    if (acc[t].get_den() != 1) throw domain_error("ratio polynomial interpolation not integral");
    out[t] = acc[t].get_num();
  }
  return PolyZ(std::move(out));
}

// All orders m >= 2 with phi(m) <= r^2 such that Phi_m divides R.
inline std::vector<unsigned> unity_ratio_orders(const PolyZ& psf) {
  std::vector<unsigned> orders;
  int r = psf.degree();
  if (r <= 1) return orders;
  PolyZ R = ratio_polynomial(psf);
  unsigned bound = static_cast<unsigned>(r) * static_cast<unsigned>(r);
  // phi(m) >= sqrt(m/2), so m <= 2*bound^2 is safe
  for (unsigned m = 2; m <= 2 * bound * bound + 1; ++m) {
    if (euler_phi_u32(m) > bound) continue;
    if (divides_monic(cyclotomic(m), R)) orders.push_back(m);
  }
  return orders;
}

// Smallest witness order if degenerate, nullopt otherwise.
inline std::optional<unsigned> is_degenerate(const LinearRecurrence& rec) {
  PolyZ psf = squarefree_part(rec.char_poly());
  auto orders = unity_ratio_orders(psf);
  if (orders.empty()) return std::nullopt;
  return orders.front();
}

struct NondegenerateDecomposition {
  u64 stride = 1;  // c
  std::vector<LinearRecurrence> parts;  // parts[j](m) = F(c m + j)
};

// Minimal c such that every F(c m + j) is non-degenerate or identically zero;
// searched over increasing divisors of the lcm of the witness orders.
inline NondegenerateDecomposition decompose_nondegenerate(const LinearRecurrence& rec) {
  PolyZ psf = squarefree_part(rec.char_poly());
  auto orders = unity_ratio_orders(psf);
  u64 lam = 1;
  for (unsigned m : orders) lam = lcm_u64(lam, m);
  for (u64 c : divisors_sorted(lam)) {
    std::vector<LinearRecurrence> parts;
    bool ok = true;
    for (u64 j = 0; j < c && ok; ++j) {
      LinearRecurrence part = subsequence(rec, c, j);
      if (!part.is_zero_sequence() && is_degenerate(part)) ok = false;
      parts.push_back(std::move(part));
    }
    if (ok) return {c, std::move(parts)};
  }
  // unreachable: c = lcm always works
  throw domain_error("no decomposition stride found");
}

}  // namespace recgcd
