#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sheafccz/gf.hpp"

namespace sheafccz {

/// Dense row-major matrix over F_{2^r}. Used for bases (one vector per row)
/// and small coefficient blocks.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<FVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  FVec row_vec(std::size_t i) const { return FVec(row(i).begin(), row(i).end()); }

  void append_row(std::span<const Elem> r);
  Mat transposed() const;
  /// Rows listed in `idx`, in that order.
  Mat select_rows(std::span<const std::size_t> idx) const;
  /// Columns listed in `idx`, in that order.
  Mat select_cols(std::span<const std::size_t> idx) const;

  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Mat matmul(const Field& f, const Mat& a, const Mat& b);
/// x^T A as a row vector (x has a.rows() entries).
FVec row_combination(const Field& f, std::span<const Elem> x, const Mat& a);
/// A x (x has a.cols() entries).
FVec mat_vec(const Field& f, const Mat& a, std::span<const Elem> x);
/// Kronecker product A ⊗ B.
Mat kron(const Field& f, const Mat& a, const Mat& b);

struct SpEntry {
  std::uint32_t row;
  std::uint32_t col;
  Elem value;
};

/// Sparse matrix as sorted (row, col, value) triples with nonzero values and
/// no duplicate positions.
class SpMat {
 public:
  SpMat() = default;
  SpMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Accumulates duplicates by field addition and drops zeros.
  static SpMat from_triplets(const Field& f, std::size_t rows, std::size_t cols,
                             std::vector<SpEntry> entries);
  static SpMat from_dense(const Mat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<SpEntry>& entries() const { return entries_; }

  /// Entries of row i as a contiguous range.
  std::span<const SpEntry> row(std::size_t i) const;

  SpMat transposed() const;
  Mat to_dense() const;
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SpMat& a, const SpMat& b);

 private:
  void build_row_index();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SpEntry> entries_;
  std::vector<std::size_t> row_start_;
};

/// y = M x.
FVec spmv(const Field& f, const SpMat& m, std::span<const Elem> x);
/// A B for sparse operands.
SpMat spmul(const Field& f, const SpMat& a, const SpMat& b);

}  // namespace sheafccz
