#pragma once

// Sheaves on cell complexes with top-cell coefficients F_q.
//
// A section over a cell σ is stored as a function on the top cells above σ
// (X_{≥σ}(t), ascending cell index). F_σ is the row space of a basis matrix;
// restriction to a larger cell π is coordinate restriction to X_{≥π}(t).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sheafccz/complex.hpp"
#include "sheafccz/gf.hpp"
#include "sheafccz/localcode.hpp"
#include "sheafccz/matrix.hpp"

namespace sheafccz {

using ComplexPtr = std::shared_ptr<const CellComplex>;

class Sheaf {
 public:
  /// Sheaf with the given section bases (bases[k][i], rows are sections).
  /// No axioms are checked; see verify_axioms.
  Sheaf(ComplexPtr x, Field f, std::vector<std::vector<Mat>> bases);

  const CellComplex& complex() const { return *x_; }
  const ComplexPtr& complex_ptr() const { return x_; }
  const Field& field() const { return f_; }
  unsigned t() const { return x_->t(); }

  const Mat& basis(unsigned k, std::uint32_t i) const { return cells_[k][i].basis; }
  std::size_t dim(unsigned k, std::uint32_t i) const { return cells_[k][i].basis.rows(); }
  /// Top cells carrying the coordinates of sections over (k, i).
  const std::vector<std::uint32_t>& support(unsigned k, std::uint32_t i) const { return x_->top_above(k, i); }
  /// Local code at a (t-1)-cell, coordinates in support order.
  LinCode local_code(std::uint32_t i) const;

  /// Section function from basis coefficients.
  FVec section(unsigned k, std::uint32_t i, std::span<const Elem> coeffs) const;
  /// Basis coefficients of a function on the support, or nullopt if the
  /// function is not a section.
  std::optional<FVec> coordinates(unsigned k, std::uint32_t i, std::span<const Elem> func) const;

  /// Matrix R with R a = restriction of a, for column coefficient vectors
  /// (dim F_π x dim F_σ). Throws ValidationError if σ is not a face of π,
  /// IntegrityError if a restricted section falls outside F_π.
  Mat restriction(unsigned ks, std::uint32_t s, unsigned kp, std::uint32_t p) const;
  /// Positions of support(π) inside support(σ).
  std::vector<std::size_t> support_positions(unsigned ks, std::uint32_t s, unsigned kp, std::uint32_t p) const;

  /// Copy with the section space at one cell replaced.
  Sheaf with_basis(unsigned k, std::uint32_t i, Mat basis) const;

 private:
  struct CellSpace {
    Mat basis;
    std::vector<std::size_t> pivots;  // columns where the basis is invertible
    Mat pivot_inverse;                // inverse of basis restricted to pivots
  };
  static CellSpace make_space(const Field& f, Mat basis);

  ComplexPtr x_;
  Field f_;
  std::vector<std::vector<CellSpace>> cells_;
};

/// F_σ = {c : c restricted to every (t-1)-cell above σ lies in its local
/// code}. codes[i] is the local code of (t-1)-cell i in support order.
Sheaf sheaf_from_local_codes(ComplexPtr x, const Field& f, const std::vector<LinCode>& codes);

/// Local codes C_j on every (t-1)-cell of a cubical complex whose free
/// direction is j, reindexed from label order to support order.
std::vector<LinCode> cubical_local_codes(const CellComplex& x, const std::vector<LinCode>& per_direction);
/// The same named code on every (t-1)-cell, with the cell's own length.
std::vector<LinCode> uniform_local_codes(const CellComplex& x, const Field& f, const std::string& name);

/// F_σ = image of ⊗_{j free} h_j^T, realized on the support by label.
Sheaf cubical_tensor_sheaf(ComplexPtr x, const std::vector<LinCode>& per_direction);

Sheaf constant_sheaf(ComplexPtr x, const Field& f);

Sheaf dual_sheaf(const Sheaf& s);
Sheaf product_sheaf(const Sheaf& a, const Sheaf& b);
Sheaf product_sheaf(const Sheaf& a, const Sheaf& b, const Sheaf& c);

/// The up-complex C^j(σ) = ⊕_{ρ ∈ X_{≥σ}(j)} F_ρ for j = dim σ .. t.
struct LocalCochains {
  unsigned base_dim = 0;
  std::vector<std::vector<std::uint32_t>> cells;     // cells[j - base_dim]
  std::vector<std::vector<std::size_t>> offsets;     // block offsets, parallel to cells
  std::vector<std::size_t> dims;                     // dim C^j(σ)
  std::vector<Mat> d;                                // d[j - base_dim]: C^j -> C^{j+1}
};
LocalCochains local_cochains(const Sheaf& s, unsigned k, std::uint32_t i);

struct CellFinding {
  unsigned dim;
  std::uint32_t cell;
  std::string what;
};

struct AxiomReport {
  std::size_t cells_checked = 0;
  std::vector<CellFinding> failures;
  bool ok() const { return failures.empty(); }
};

/// Identity (injectivity) and gluability at every cell, plus the presheaf
/// condition that restrictions land in the target spaces.
AxiomReport verify_axioms(const Sheaf& s);

/// Exactness of C^{i+1}(σ) -> ... -> C^t(σ) at every interior term, per cell.
AxiomReport local_acyclicity(const Sheaf& s);

}  // namespace sheafccz
