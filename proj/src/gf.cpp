#include "sheafccz/gf.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace sheafccz {

namespace {

// One primitive polynomial per degree; bit i is the coefficient of x^i.
constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

int degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool Field::is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  for (std::uint32_t g = 2; degree(g) <= d / 2; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

std::uint32_t Field::default_modulus(unsigned r) {
  if (r < 1 || r > kMaxDegree) {
    throw ValidationError("field degree r must lie in [1, 16], got " + std::to_string(r));
  }
  return kDefaultModuli[r];
}

Elem poly_mulmod(Elem a, Elem b, std::uint32_t modulus, unsigned r) {
  std::uint32_t acc = 0;
  for (unsigned i = 0; i < r; ++i) {
    if ((b >> i) & 1u) acc ^= static_cast<std::uint32_t>(a) << i;
  }
  return static_cast<Elem>(poly_mod(acc, modulus));
}

Field::Field(unsigned r) : Field(r, default_modulus(r)) {}

Field::Field(unsigned r, std::uint32_t modulus) : r_(r), modulus_(modulus), q_(0) {
  if (r < 1 || r > kMaxDegree) {
    throw ValidationError("field degree r must lie in [1, 16], got " + std::to_string(r));
  }
  if (degree(modulus) != static_cast<int>(r) || !is_irreducible(modulus)) {
    throw ValidationError("modulus " + std::to_string(modulus) +
                          " is not an irreducible polynomial of degree " + std::to_string(r));
  }
  q_ = 1u << r;

  auto tables = std::make_shared<Tables>();
  tables->log.assign(q_, 0);
  tables->exp.assign(2 * q_, 0);

  // Search for a multiplicative generator; x itself for the built-in moduli.
  const std::uint32_t order = q_ - 1;
  Elem gen = 0;
  for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_; ++cand) {
    Elem x = 1;
    std::uint32_t k = 0;
    do {
      x = poly_mulmod(x, static_cast<Elem>(cand), modulus, r);
      ++k;
    } while (x != 1);
    if (k == order) {
      gen = static_cast<Elem>(cand);
      break;
    }
  }
  Elem x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    tables->exp[k] = x;
    tables->log[x] = k;
    x = poly_mulmod(x, gen, modulus, r);
  }
  for (std::uint32_t k = order; k < 2 * q_; ++k) tables->exp[k] = tables->exp[k - order];

  tables_ = tables;

  // Trace table: tr(a) = a + a^2 + ... + a^{2^{r-1}}.
  tables->trace.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Elem acc = 0;
    Elem y = static_cast<Elem>(a);
    for (unsigned i = 0; i < r; ++i) {
      acc ^= y;
      y = mul(y, y);
    }
    tables->trace[a] = acc;
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  const std::uint32_t order = q_ - 1;
  return tables_->exp[(order - tables_->log[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return tables_->exp[(static_cast<std::uint64_t>(tables_->log[a]) * (e % order)) % order];
}

FVec entrywise_product(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) {
    throw ShapeError("entrywise product of vectors of lengths " + std::to_string(u.size()) +
                     " and " + std::to_string(v.size()));
  }
  FVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.mul(u[i], v[i]);
  return out;
}

Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) throw ShapeError("dot product length mismatch");
  Elem acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc ^= f.mul(u[i], v[i]);
  return acc;
}

void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y) {
  if (x.size() != y.size()) throw ShapeError("axpy length mismatch");
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] ^= x[i];
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) y[i] ^= f.mul(c, x[i]);
}

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace sheafccz
