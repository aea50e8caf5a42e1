#pragma once

// Exhaustive subrank of a tiny tensor over F_2: every choice of r rows for
// the first two maps, with each row of the third map solved by trying all
// vectors. Independent of the library's search.

#include <cstdint>
#include <vector>

namespace oracle {

/// t[a][b][c] in {0, 1}, dims k0 x k1 x k2, each at most 4.
inline std::size_t subrank_f2(const std::vector<std::vector<std::vector<int>>>& t) {
  const std::size_t k0 = t.size(), k1 = t[0].size(), k2 = t[0][0].size();
  auto eval = [&](unsigned u, unsigned v, unsigned w) {
    int s = 0;
    for (std::size_t a = 0; a < k0; ++a)
      for (std::size_t b = 0; b < k1; ++b)
        for (std::size_t c = 0; c < k2; ++c)
          s ^= ((u >> a) & 1) & ((v >> b) & 1) & ((w >> c) & 1) & t[a][b][c];
    return s;
  };
  std::size_t best = 0;
  const std::size_t cap = std::min(k0, std::min(k1, k2));
  for (std::size_t r = 1; r <= cap; ++r) {
    bool found = false;
    const std::uint64_t nu = std::uint64_t{1} << (k0 * r), nv = std::uint64_t{1} << (k1 * r);
    for (std::uint64_t us = 0; us < nu && !found; ++us)
      for (std::uint64_t vs = 0; vs < nv && !found; ++vs) {
        bool all = true;
        for (std::size_t c = 0; c < r && all; ++c) {
          bool any = false;
          for (unsigned w = 0; w < (1u << k2) && !any; ++w) {
            bool ok = true;
            for (std::size_t a = 0; a < r && ok; ++a)
              for (std::size_t b = 0; b < r && ok; ++b) {
                const unsigned u = static_cast<unsigned>((us >> (a * k0)) & ((1u << k0) - 1));
                const unsigned v = static_cast<unsigned>((vs >> (b * k1)) & ((1u << k1) - 1));
                ok = eval(u, v, w) == ((a == b && b == c) ? 1 : 0);
              }
            any = ok;
          }
          all = any;
        }
        found = all;
      }
    if (!found) break;
    best = r;
  }
  return best;
}

}  // namespace oracle
