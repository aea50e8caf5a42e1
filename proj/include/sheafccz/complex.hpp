#pragma once

// Graded cell complexes with a cover relation between adjacent dimensions.
//
// Two builders are provided. Labeled cubical complexes X(V; A_1, ..., A_t)
// come from t sets of pairwise commuting permutations of a vertex domain V;
// a k-cell is (v; (a_j)_{j in S}, (b_j)_{j not in S}) with |S| = k. Simplicial
// complexes come from a list of facets of one common dimension.
//
// Cells are addressed by (dim, index) where index runs over the canonical
// order of that dimension: (type set, v, labels, bits) for cubical cells and
// lexicographic vertex lists for simplices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sheafccz {

using Perm = std::vector<std::uint32_t>;

struct CubicalSpec {
  unsigned t = 0;
  std::uint32_t n_vertices = 0;
  /// gens[i][a] is the a-th permutation in direction i (0-based).
  std::vector<std::vector<Perm>> gens;
};

struct CubicalCell {
  std::uint32_t type = 0;           // bitmask S over directions 0..t-1
  std::uint32_t v = 0;              // base vertex
  std::vector<std::uint32_t> labels;  // one per direction in S, ascending
  std::vector<std::uint8_t> bits;     // one per direction not in S, ascending

  friend bool operator==(const CubicalCell&, const CubicalCell&) = default;
};

struct CellRef {
  unsigned dim;
  std::uint32_t index;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

struct ValidationReport {
  std::size_t diamond_violations = 0;
  std::size_t dangling_incidences = 0;
  std::size_t top_components = 0;
  std::vector<std::string> findings;
  bool ok() const { return diamond_violations == 0 && dangling_incidences == 0; }
};

class CellComplex {
 public:
  enum class Kind { Cubical, Simplicial };

  static CellComplex cubical(const CubicalSpec& spec);
  static CellComplex simplicial(const std::vector<std::vector<std::uint32_t>>& facets);

  Kind kind() const { return kind_; }
  bool is_cubical() const { return kind_ == Kind::Cubical; }
  unsigned t() const { return t_; }
  std::size_t count(unsigned k) const { return k <= t_ ? down_[k].size() : 0; }
  std::vector<std::size_t> counts() const;

  /// Cells covered by (k, i), in the builder's facet order.
  const std::vector<std::uint32_t>& down(unsigned k, std::uint32_t i) const { return down_[k][i]; }
  /// Cells covering (k, i), ascending.
  const std::vector<std::uint32_t>& up(unsigned k, std::uint32_t i) const { return up_[k][i]; }

  /// Indices of the k-cells above (dim, i), ascending. Throws LookupError on
  /// an index outside the complex, ShapeError if k < dim or k > t.
  std::vector<std::uint32_t> up_set(unsigned dim, std::uint32_t i, unsigned k) const;
  /// Indices of the k-cells below (dim, i), ascending.
  std::vector<std::uint32_t> down_set(unsigned dim, std::uint32_t i, unsigned k) const;
  /// Top cells above (dim, i); cached.
  const std::vector<std::uint32_t>& top_above(unsigned dim, std::uint32_t i) const;

  /// sigma <= tau in the face order.
  bool is_face(unsigned dim_s, std::uint32_t s, unsigned dim_t, std::uint32_t tau) const;

  // Cubical accessors.
  const CubicalSpec& cubical_spec() const;
  std::uint32_t delta() const { return delta_; }
  CubicalCell cubical_cell(unsigned k, std::uint32_t i) const;
  std::optional<std::uint32_t> cubical_index(const CubicalCell& c) const;
  /// Number of k-cells of type S predicted by |V| Δ^k 2^{t-k}.
  std::size_t cubical_type_count(unsigned k) const;
  const Perm& perm(unsigned dir, std::uint32_t label) const { return spec_.gens[dir][label]; }
  const Perm& perm_inverse(unsigned dir, std::uint32_t label) const { return inv_[dir][label]; }
  /// Top cells above a cubical cell listed in label order: entry m corresponds
  /// to the labels of the free directions (ascending) in mixed radix Δ, most
  /// significant first.
  std::vector<std::uint32_t> cubical_top_by_label(unsigned k, std::uint32_t i) const;

  // Simplicial accessors.
  const std::vector<std::uint32_t>& simplex(unsigned k, std::uint32_t i) const { return simplices_[k][i]; }
  std::optional<std::uint32_t> simplex_index(const std::vector<std::uint32_t>& verts) const;

  std::string describe(unsigned k, std::uint32_t i) const;

 private:
  CellComplex() = default;
  void build_up_lists();

  Kind kind_ = Kind::Simplicial;
  unsigned t_ = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> down_;
  std::vector<std::vector<std::vector<std::uint32_t>>> up_;
  mutable std::vector<std::vector<std::vector<std::uint32_t>>> top_cache_;
  mutable std::vector<std::vector<char>> top_cached_;

  // cubical
  CubicalSpec spec_;
  std::vector<std::vector<Perm>> inv_;
  std::uint32_t delta_ = 0;
  std::vector<std::vector<std::uint32_t>> types_by_dim_;  // type masks per dim, lexicographic
  std::vector<std::vector<std::size_t>> type_offset_;    // parallel to types_by_dim_

  // simplicial
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices_;
};

ValidationReport validate(const CellComplex& x);

/// Connected components of the graph on top cells, adjacency via shared (t-1)-cells.
std::size_t top_components(const CellComplex& x);

}  // namespace sheafccz
