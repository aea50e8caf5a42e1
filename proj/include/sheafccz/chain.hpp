#pragma once

// Sheaf cochain complexes, (co)homology and CSS codes.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "sheafccz/matrix.hpp"
#include "sheafccz/sheaf.hpp"

namespace sheafccz {

/// C^i = ⊕_{σ ∈ X(i)} F_σ in canonical cell order; coordinate (σ, a) is the
/// a-th basis section of F_σ.
class CochainComplex {
 public:
  explicit CochainComplex(std::shared_ptr<const Sheaf> s);

  const Sheaf& sheaf() const { return *sheaf_; }
  const std::shared_ptr<const Sheaf>& sheaf_ptr() const { return sheaf_; }
  const Field& field() const { return sheaf_->field(); }
  unsigned t() const { return sheaf_->t(); }
  std::size_t dim(unsigned i) const { return dims_[i]; }
  std::size_t offset(unsigned i, std::uint32_t cell) const { return offsets_[i][cell]; }
  /// δ^i : C^i -> C^{i+1} (rows index C^{i+1}).
  const SpMat& delta(unsigned i) const { return delta_[i]; }

  FVec coboundary(unsigned i, std::span<const Elem> a) const { return spmv(field(), delta_[i], a); }

 private:
  std::shared_ptr<const Sheaf> sheaf_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<SpMat> delta_;
};

/// Builds the complex and checks δ^{i+1} δ^i = 0 (IntegrityError otherwise).
CochainComplex sheaf_cochain_complex(const Sheaf& s);
CochainComplex sheaf_cochain_complex(std::shared_ptr<const Sheaf> s);

enum class Side { Cohomology, Homology };

struct Cohomology {
  std::size_t dim = 0;
  Mat cycles;      // basis of Z (reduced)
  Mat boundaries;  // basis of B (reduced)
  Mat reps;        // representatives of Z/B
};

/// H^i (Z = ker δ^i, B = im δ^{i-1}) or H_i (Z = ker ∂_i, B = im ∂_{i+1}
/// with ∂_i = (δ^{i-1})^T).
Cohomology cohomology(const CochainComplex& c, unsigned i, Side side = Side::Cohomology);
/// Dimension only, from ranks.
std::size_t betti(const CochainComplex& c, unsigned i, Side side = Side::Cohomology);

struct CSSCode {
  Field field;
  unsigned level = 0;
  std::size_t n = 0;
  SpMat hx;  // (δ^{ℓ-1})^T
  SpMat hz;  // δ^ℓ
  std::size_t k = 0;
};

CSSCode css_from_complex(const CochainComplex& c, unsigned level);

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

struct DistanceBudget {
  std::uint64_t brute_force_cap = std::uint64_t{1} << 22;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  bool force_random = false;
};

/// Best weight found on one side. The X side searches ker Hz \ rowspace Hx
/// (cocycles that are not coboundaries), the Z side ker Hx \ rowspace Hz.
struct SideDistance {
  char side = 'X';
  bool exact = false;
  std::size_t weight = kInfiniteDistance;
  FVec witness;
};

struct DistanceReport {
  SideDistance x;
  SideDistance z;
  std::size_t d_upper = kInfiniteDistance;
  std::optional<std::size_t> d_exact;
  char min_side = 'X';
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

/// Weight is the number of nonzero field entries.
DistanceReport distance_bounds(const CSSCode& code, const DistanceBudget& budget);

}  // namespace sheafccz
