#pragma once

// Duality between a sheaf and its dual sheaf, checked as rank conditions.

#include <string>
#include <vector>

#include "sheafccz/chain.hpp"
#include "sheafccz/sheaf.hpp"

namespace sheafccz {

/// H_t(X, F), H^0(X, F⊥) and the explicit space S of functions on X(t) whose
/// restriction to every (t-1)-cell lies in the dual local code.
struct H0HtReport {
  std::size_t dim_ht = 0;
  std::size_t dim_h0_dual = 0;
  std::size_t dim_sections = 0;
  bool ht_is_sections = false;  // ker ∂_t equals S as functions on X(t)
  bool h0_onto_sections = false;  // global sections of F⊥ map injectively onto S
  bool ok() const {
    return ht_is_sections && h0_onto_sections && dim_ht == dim_sections && dim_h0_dual == dim_sections;
  }
};
H0HtReport verify_h0_ht(const Sheaf& s);

enum class DualityStatus { Pass, Fail, NotApplicable };
const char* to_string(DualityStatus s);

struct DualityPair {
  unsigned i = 0;
  std::size_t homology = 0;       // dim H_{t-i}(X, F)
  std::size_t dual_cohomology = 0;  // dim H^i(X, F⊥)
};

struct DualityReport {
  std::vector<DualityPair> pairs;  // i = 0 .. t-1
  bool locally_acyclic = false;
  std::vector<unsigned> mismatched;
  DualityStatus status = DualityStatus::Fail;
  bool ok() const { return status == DualityStatus::Pass; }
};
/// Compares dim H_{t-i}(X, F) with dim H^i(X, F⊥) for 0 ≤ i ≤ t-1. Without
/// local acyclicity the dims are still recorded and the status is
/// NotApplicable.
DualityReport verify_poincare(const Sheaf& s);

struct ExactnessReport {
  bool vertex_chains = false;      // C_0(X,F) ≅ ∏_{X(0)} C^0(σ,F)
  bool gluing = false;             // 0 → C_i → ∏_{X(0)} C^i(σ) → ∏_{X(1)} C^i(ρ), 1 ≤ i ≤ t
  bool local_injective = false;    // C^i(σ) → C^{i+1}(σ) injective for i < t
  bool top_identification = false; // C^t(X,F⊥) ≅ ∏_{X(t)} C^t(σ,F)
  bool dual_kernel = false;        // 0 → F⊥_σ → C^t(σ) → C^{t-1}(σ) exact, i < t
  bool long_sequence = false;      // 0 → C^i(σ) → ... → C^t(σ) → F⊥_σ → 0 exact per cell
  std::vector<CellFinding> findings;
  bool ok() const {
    return vertex_chains && gluing && local_injective && top_identification && dual_kernel && long_sequence;
  }
};
ExactnessReport verify_exactness(const Sheaf& s);

}  // namespace sheafccz
