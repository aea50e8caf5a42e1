#pragma once

// Deliberately naive reference routines used to cross-check the library.
// Field products go through the schoolbook polynomial multiply, never the
// library's log tables, and elimination is textbook Gauss-Jordan on
// vector-of-vector storage.

#include <cstdint>
#include <vector>

#include "sheafccz/gf.hpp"

namespace oracle {

using Row = std::vector<std::uint16_t>;
using Dense = std::vector<Row>;

struct Gf {
  std::uint32_t modulus;
  unsigned r;
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return sheafccz::poly_mulmod(a, b, modulus, r);
  }
  std::uint16_t inv(std::uint16_t a) const {
    // Brute force: q is at most 2^16.
    for (std::uint32_t x = 1; x < (1u << r); ++x)
      if (mul(a, static_cast<std::uint16_t>(x)) == 1) return static_cast<std::uint16_t>(x);
    return 0;
  }
};

inline Gf gf_of(const sheafccz::Field& f) { return {f.modulus(), f.r()}; }

/// Gauss-Jordan; returns pivot columns and leaves `m` reduced (zero rows last).
inline std::vector<std::size_t> gauss_jordan(const Gf& g, Dense& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    const auto s = g.inv(m[rank][c]);
    for (auto& x : m[rank]) x = g.mul(x, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const auto factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= g.mul(factor, m[rank][j]);
    }
    piv.push_back(c);
    ++rank;
  }
  return piv;
}

inline std::size_t rank(const Gf& g, Dense m, std::size_t cols) { return gauss_jordan(g, m, cols).size(); }

/// Kernel basis from free columns (not reduced further).
inline Dense kernel(const Gf& g, Dense m, std::size_t cols) {
  auto piv = gauss_jordan(g, m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  Dense out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m[i][f];
    out.push_back(v);
  }
  return out;
}

/// Product M v.
inline Row apply(const Gf& g, const Dense& m, const Row& v) {
  Row out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] ^= g.mul(m[i][j], v[j]);
  return out;
}

/// Minimum weight of a vector in span(Z) \ span(B), by enumerating all of span(Z).
/// Returns SIZE_MAX when span(Z) = span(B).
inline std::size_t min_weight_outside(const Gf& g, const Dense& z, const Dense& b, std::size_t cols) {
  const std::uint32_t q = 1u << g.r;
  const std::size_t rb = rank(g, b, cols);
  std::size_t best = SIZE_MAX;
  std::vector<std::uint32_t> coef(z.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == q) coef[k++] = 0;
    if (k == coef.size()) break;
    Row v(cols, 0);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) v[j] ^= g.mul(static_cast<std::uint16_t>(coef[i]), z[i][j]);
    std::size_t w = 0;
    for (auto x : v) w += x != 0;
    if (w >= best) continue;
    Dense ext = b;
    ext.push_back(v);
    if (rank(g, ext, cols) > rb) best = w;
  }
  return best;
}

}  // namespace oracle
