#pragma once

// Trilinear forms over physical qudits, CCZ-code certification, the logical
// tensor T and lower bounds on its subrank.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sheafccz/chain.hpp"
#include "sheafccz/cup.hpp"

namespace sheafccz {

struct FormEntry {
  std::uint32_t j1, j2, j3;
  Elem a;
  friend bool operator==(const FormEntry&, const FormEntry&) = default;
};

/// f(x, y, z) = Σ a x_{j1} y_{j2} z_{j3}; entries sorted, distinct, nonzero.
struct TrilinearForm {
  Field field;
  std::array<std::size_t, 3> n{0, 0, 0};
  std::vector<FormEntry> entries;

  Elem evaluate(std::span<const Elem> x, std::span<const Elem> y, std::span<const Elem> z) const;
};

using FormEvaluator = std::function<Elem(std::span<const Elem>, std::span<const Elem>, std::span<const Elem>)>;

/// Groups of coordinates per leg; f may only be nonzero on triples that lie
/// together in some group.
struct Locality {
  std::vector<std::array<std::vector<std::uint32_t>, 3>> groups;
};

/// Tabulates f on basis triples (restricted to `hint` if given). Spot-checks
/// trilinearity and the expansion on random triples; ValidationError on failure.
TrilinearForm materialize_form(const Field& f, const FormEvaluator& eval, std::array<std::size_t, 3> n,
                               const Locality* hint = nullptr, std::uint64_t seed = 1);
/// Coefficient tensors of the cubical three-dimensional form and the nested
/// simplicial cup form, assembled cell by cell.
TrilinearForm cubical_form_tensor(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& c3);
TrilinearForm simplicial_form_tensor(const CochainComplex& c1, unsigned l1, const CochainComplex& c2, unsigned l2,
                                     const CochainComplex& c3, unsigned l3);
/// Per-cube (per-top-simplex) coordinate groups of the level cochains.
Locality top_cell_locality(const CochainComplex& c1, unsigned l1, const CochainComplex& c2, unsigned l2,
                           const CochainComplex& c3, unsigned l3);

std::size_t n_ccz(const TrilinearForm& t);
/// Largest number of entries sharing one coordinate, over all three legs.
std::size_t w_ccz(const TrilinearForm& t);
/// Lines "CCZ j1 j2 j3 a" with a the integer encoding of the field element.
void write_gate_list(std::ostream& os, const TrilinearForm& t);

/// One of the three codes: Z = span(reps) + B with B the column space of
/// `boundary` (δ^{ℓ-1} for a cochain complex).
struct CCZLeg {
  std::size_t n = 0;
  Mat reps;
  SpMat boundary;
};
CCZLeg leg_from_complex(const CochainComplex& c, unsigned level);

struct CCZCode {
  Field field;
  std::array<CCZLeg, 3> legs;
  FormEvaluator f;
  std::optional<TrilinearForm> form;  // coefficient tensor when known
  std::string name;
};

/// Cubical three-dimensional form on level-1 cochains of three sheaves.
CCZCode cubical_ccz_code(std::shared_ptr<const CochainComplex> c1, std::shared_ptr<const CochainComplex> c2,
                         std::shared_ptr<const CochainComplex> c3, bool materialize = true);
/// Σ_τ ((a1 ∪ a2) ∪ a3)(τ) on a simplicial complex, l1 + l2 + l3 = t.
CCZCode simplicial_ccz_code(std::shared_ptr<const CochainComplex> c1, unsigned l1,
                            std::shared_ptr<const CochainComplex> c2, unsigned l2,
                            std::shared_ptr<const CochainComplex> c3, unsigned l3, bool materialize = true);

struct CertificationWitness {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::array<FVec, 3> zeta;
  std::array<FVec, 3> beta;
  Elem base = 0;
  Elem shifted = 0;
};

struct CertificationReport {
  std::string form;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::uint64_t seed = 0;
  std::vector<CertificationWitness> failures;  // at most a handful kept
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

/// Random ζ_i ∈ Z_i, β_i ∈ B_i per trial (seeds derived from `seed`);
/// checks f(ζ + β) = f(ζ) exactly through code.f.
CertificationReport certify_ccz(const CCZCode& code, std::size_t trials, std::uint64_t seed);

/// Exact check from the coefficient tensor: f vanishes whenever one argument
/// is a boundary generator and the others are cycle generators. The cost is
/// cubic in the generator counts, so this is meant for small codes.
bool exact_invariance(const TrilinearForm& t, const std::array<CCZLeg, 3>& legs);

struct TTensor {
  std::array<std::size_t, 3> k{0, 0, 0};
  std::vector<Elem> entries;  // k1 x k2 x k3, row-major
  std::array<Mat, 3> reps;
  Elem at(std::size_t a, std::size_t b, std::size_t c) const { return entries[(a * k[1] + b) * k[2] + c]; }
};

/// T on the stored representatives, or on representatives shifted by random
/// boundaries when `shift_seed` is set.
TTensor build_T(const CCZCode& code, std::optional<std::uint64_t> shift_seed = std::nullopt);

struct SubrankBound {
  std::size_t r = 0;
  bool exact = false;        // exhaustive search established Q(T) = r
  std::array<Mat, 3> maps;   // r x k_i each
  bool verified = false;
};

struct SubrankBudget {
  std::size_t restarts = 64;
  std::size_t attempts = 256;
  std::uint64_t seed = 1;
  bool allow_exact = true;
};

/// Lower bound on the subrank with maps M_i such that (M1 ⊗ M2 ⊗ M3) T is
/// the r x r x r unit tensor. Exhaustive when q = 2 and every k_i ≤ 3.
SubrankBound subrank_lower_bound(const Field& f, const TTensor& t, const SubrankBudget& budget = {});
/// Recomputes (M1 ⊗ M2 ⊗ M3) T and compares with the unit tensor.
bool verify_subrank(const Field& f, const TTensor& t, const std::array<Mat, 3>& maps);

struct TriorthogonalReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::optional<CCZCode> code;  // three copies with the diagonal form
};
TriorthogonalReport triorthogonal_check(const Mat& stabilizers, const Mat& logicals);

}  // namespace sheafccz
