#pragma once

// Exact arithmetic over the binary extension fields F_{2^r}, 1 <= r <= 16.
//
// Elements are encoded as integers in [0, q) whose bits are the coefficients
// of a polynomial in the generator x, reduced modulo the field modulus.
// Addition is XOR; multiplication goes through discrete log tables built once
// per field and shared between copies of the same Field handle.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sheafccz/errors.hpp"

namespace sheafccz {

using Elem = std::uint16_t;
using FVec = std::vector<Elem>;

class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// F_{2^r} with the built-in modulus for degree r.
  explicit Field(unsigned r = 1);
  /// F_{2^r} with an explicit modulus; throws ValidationError if the
  /// polynomial is not irreducible of exact degree r.
  Field(unsigned r, std::uint32_t modulus);

  /// Built-in irreducible (primitive) modulus for degree r.
  static std::uint32_t default_modulus(unsigned r);
  static bool is_irreducible(std::uint32_t poly);

  unsigned r() const { return r_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t q() const { return q_; }

  Elem add(Elem a, Elem b) const { return static_cast<Elem>(a ^ b); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>(a ^ b); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Absolute trace to F_2: sum of the r Frobenius conjugates, always 0 or 1.
  Elem trace(Elem a) const { return tables_->trace[a]; }

  /// True if `a` is a valid encoding.
  bool contains(std::uint64_t a) const { return a < q_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> exp;           // doubled so log sums need no reduction
    std::vector<Elem> trace;
  };

  unsigned r_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::shared_ptr<const Tables> tables_;
};

/// Schoolbook polynomial product reduced by the modulus; independent of the
/// log tables and used to cross-check them.
Elem poly_mulmod(Elem a, Elem b, std::uint32_t modulus, unsigned r);

/// (u ⊙ v)_i = u_i v_i. Throws ShapeError on length mismatch.
FVec entrywise_product(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

/// Standard bilinear form sum_i u_i v_i.
Elem dot(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

/// y += c * x.
void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y);

/// Number of nonzero entries.
std::size_t weight(std::span<const Elem> v);

bool is_zero(std::span<const Elem> v);

}  // namespace sheafccz
