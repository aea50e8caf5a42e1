#pragma once

// Exact linear algebra over F_{2^r}.
//
// Elimination runs on a bit-sliced row layout: a row of length n is stored as
// r planes of ceil(n/64) words, plane k holding bit k of every entry. Adding
// c * row is then a handful of word XORs per plane, which keeps the larger
// coboundary matrices (thousands of rows and columns) tractable.
//
// Conventions: vectors are rows; every basis returned here is in reduced row
// echelon form with the leftmost available pivot taken from the lowest row
// index, so outputs are deterministic functions of the inputs.

#include <cstdint>
#include <optional>
#include <vector>

#include "sheafccz/gf.hpp"
#include "sheafccz/matrix.hpp"

namespace sheafccz {

/// Bit-sliced row storage.
class PackedRows {
 public:
  PackedRows(const Field& f, std::size_t cols);

  static PackedRows from_dense(const Field& f, const Mat& m);
  static PackedRows from_sparse(const Field& f, const SpMat& m);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }
  const Field& field() const { return f_; }

  Elem get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Elem v);
  std::uint64_t* row_ptr(std::size_t i) { return data_.data() + i * stride_; }
  const std::uint64_t* row_ptr(std::size_t i) const { return data_.data() + i * stride_; }
  std::size_t stride() const { return stride_; }

  void append_zero_row();
  void append_row(std::span<const Elem> v);
  FVec row(std::size_t i) const;
  Mat to_dense() const;

 private:
  Field f_;
  std::size_t cols_;
  std::size_t words_;
  std::size_t stride_;
  std::size_t nrows_ = 0;
  std::vector<std::uint64_t> data_;
};

struct Echelon {
  Mat basis;                        // rank x cols, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Field& f, const Mat& m);
Echelon rref(const Field& f, const SpMat& m);
/// Row space of the rows of `m`, reduced.
inline Mat row_basis(const Field& f, const Mat& m) { return rref(f, m).basis; }

std::size_t rank(const Field& f, const Mat& m);
std::size_t rank(const Field& f, const SpMat& m);

/// Basis (as rows) of {x : M x = 0}.
Mat kernel_basis(const Field& f, const Mat& m);
Mat kernel_basis(const Field& f, const SpMat& m);
/// Kernel basis given an existing reduction of M.
Mat kernel_from_echelon(const Field& f, const Echelon& e, std::size_t cols);

/// Basis (as rows) of the column space {M x}.
Mat image_basis(const Field& f, const Mat& m);
Mat image_basis(const Field& f, const SpMat& m);

/// Some x with M x = b, or nullopt if the system is inconsistent.
std::optional<FVec> solve(const Field& f, const Mat& m, std::span<const Elem> b);
std::optional<FVec> solve(const Field& f, const SpMat& m, std::span<const Elem> b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Field& f, const Mat& m);

/// Residual of v after reduction by an echelon basis; zero iff v is in the span.
FVec reduce(const Field& f, const Echelon& e, std::span<const Elem> v);
bool in_span(const Field& f, const Echelon& e, std::span<const Elem> v);
/// Coordinates of v in the echelon basis, or nullopt if v is outside the span.
std::optional<FVec> coordinates(const Field& f, const Echelon& e, std::span<const Elem> v);

/// span(small) ⊆ span(big).
bool span_contains(const Field& f, const Mat& big, const Mat& small);
bool same_span(const Field& f, const Mat& a, const Mat& b);

/// Vectors from Z (original rows, in order) completing a basis of span(B) to
/// one of span(Z). Throws ContainmentError if span(B) ⊄ span(Z).
Mat quotient_reps(const Field& f, const Mat& z, const Mat& b);

/// Incremental independent-set builder: add() reports whether a vector is
/// independent of everything added so far and keeps it if so.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, std::size_t cols);
  bool add(std::span<const Elem> v);
  std::size_t dim() const { return pivots_.size(); }
  bool contains(std::span<const Elem> v) const;

 private:
  void reduce_packed(std::uint64_t* buf) const;

  Field f_;
  PackedRows rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sheafccz
