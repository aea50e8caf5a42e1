#pragma once

// Cup products of sheaf cochains and the intersection forms built from them.
//
// Values are taken pointwise on top cells: a cochain's section over σ is a
// function on X_{≥σ}(t), and a product of sections is their entrywise product
// on the common top cells. Vertices of a simplicial complex are ordered by ID.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sheafccz/chain.hpp"
#include "sheafccz/sheaf.hpp"

namespace sheafccz {

using SheafPtr = std::shared_ptr<const Sheaf>;

/// Element of C^degree(X, F), coordinates in the cochain complex basis.
struct Cochain {
  SheafPtr sheaf;
  unsigned degree = 0;
  FVec coeffs;
};

Cochain zero_cochain(SheafPtr s, unsigned degree);
Cochain random_cochain(SheafPtr s, unsigned degree, std::mt19937_64& rng);
/// The cochain whose section over every vertex is the constant 1 function;
/// nullopt if some F_v does not contain it.
std::optional<Cochain> unit_cochain(SheafPtr s);
/// Cochain from coordinates in the complex's own basis.
Cochain make_cochain(const CochainComplex& c, unsigned degree, FVec coeffs);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain coboundary(const CochainComplex& c, const Cochain& a);

/// Section functions of a cochain, one per cell (on its support).
std::vector<FVec> section_functions(const Cochain& a);
/// Value of a's section over cell `cell` at the top cell `top`.
Elem value_at(const Cochain& a, const std::vector<FVec>& funcs, std::uint32_t cell, std::uint32_t top);

/// (a ∪ b)(σ) at τ = a([v_0..v_i])(τ) · b([v_i..v_{i+j}])(τ), expressed in
/// `product` (normally product_sheaf(F1, F2)). Throws IntegrityError if a
/// value falls outside the product sheaf, DomainError if i + j > t.
Cochain simplicial_cup(const Cochain& a, const Cochain& b, SheafPtr product);
Cochain simplicial_cup(const Cochain& a, const Cochain& b);

struct LeibnizReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::uint32_t> witness_cell;  // first offending (i+j+1)-simplex
  bool ok() const { return failures == 0; }
};

/// δ(a∪b) = δa∪b + a∪δb for one pair.
LeibnizReport leibniz_check(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& prod,
                            const Cochain& a, const Cochain& b);
/// Same identity on `trials` seeded random pairs of degrees (i, j).
LeibnizReport leibniz_check(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& prod,
                            unsigned i, unsigned j, std::size_t trials, std::uint64_t seed);

/// Two-dimensional cubical intersection form (degree-1 cochains).
Elem cubical_bilinear_f(const Cochain& a1, const Cochain& a2);
/// Three-dimensional cubical form, the six-term sum over all cubes.
Elem cubical_trilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3);

/// Σ_τ ((a1 ∪ a2) ∪ a3)(τ) for degrees summing to t.
Elem simplicial_trilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3);
/// Σ_τ (((a1 ∪ a2) ∪ a3) ∪ z4)(τ) for degrees summing to t.
Elem quadrilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3, const Cochain& z4);

/// One summand a1(c1)·a2(c2)·a3(c3) of a form, all values taken at `top`.
struct FormTerm {
  std::uint32_t top;
  std::array<std::uint32_t, 3> cells;
};
/// The summands of cubical_trilinear_f, cube by cube.
std::vector<FormTerm> cubical_trilinear_terms(const CellComplex& x);
/// The summands of simplicial_trilinear_f: front, middle and back faces of
/// every top simplex.
std::vector<FormTerm> simplicial_trilinear_terms(const CellComplex& x, unsigned l1, unsigned l2, unsigned l3);

/// Σ_τ a(τ) for a top-degree cochain.
Elem top_sum(const Cochain& a);

}  // namespace sheafccz
