#include "sheafccz/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sheafccz {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<FVec>& rows, std::size_t cols) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Mat::append_row(std::span<const Elem> r) {
  if (r.size() != cols_) {
    throw ShapeError("row of length " + std::to_string(r.size()) + " appended to matrix with " +
                     std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat out(0, cols_);
  for (auto i : idx) out.append_row(row(i));
  return out;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
  return out;
}

Mat matmul(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul inner dimension mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik != 0) axpy(f, aik, b.row(k), c.row(i));
    }
  return c;
}

FVec row_combination(const Field& f, std::span<const Elem> x, const Mat& a) {
  if (x.size() != a.rows()) throw ShapeError("row_combination length mismatch");
  FVec out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(f, x[i], a.row(i), out);
  return out;
}

FVec mat_vec(const Field& f, const Mat& a, std::span<const Elem> x) {
  if (x.size() != a.cols()) throw ShapeError("mat_vec length mismatch");
  FVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(f, a.row(i), x);
  return out;
}

Mat kron(const Field& f, const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
    }
  return out;
}

SpMat SpMat::from_triplets(const Field& f, std::size_t rows, std::size_t cols,
                           std::vector<SpEntry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw ShapeError("sparse entry out of range");
  }
  std::sort(entries.begin(), entries.end(), [](const SpEntry& a, const SpEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SpMat m(rows, cols);
  for (const auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value = f.add(m.entries_.back().value, e.value);
    } else {
      m.entries_.push_back(e);
    }
  }
  std::erase_if(m.entries_, [](const SpEntry& e) { return e.value == 0; });
  m.build_row_index();
  return m;
}

SpMat SpMat::from_dense(const Mat& d) {
  SpMat m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0)
        m.entries_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), d(i, j)});
  m.build_row_index();
  return m;
}

void SpMat::build_row_index() {
  row_start_.assign(rows_ + 1, 0);
  for (const auto& e : entries_) ++row_start_[e.row + 1];
  for (std::size_t i = 0; i < rows_; ++i) row_start_[i + 1] += row_start_[i];
}

std::span<const SpEntry> SpMat::row(std::size_t i) const {
  if (row_start_.empty()) return {};
  return {entries_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
}

SpMat SpMat::transposed() const {
  SpMat t(cols_, rows_);
  t.entries_.reserve(entries_.size());
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  std::sort(t.entries_.begin(), t.entries_.end(), [](const SpEntry& a, const SpEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  t.build_row_index();
  return t;
}

Mat SpMat::to_dense() const {
  Mat d(rows_, cols_);
  for (const auto& e : entries_) d(e.row, e.col) = e.value;
  return d;
}

bool operator==(const SpMat& a, const SpMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

FVec spmv(const Field& f, const SpMat& m, std::span<const Elem> x) {
  if (x.size() != m.cols()) throw ShapeError("spmv length mismatch");
  FVec y(m.rows(), 0);
  for (const auto& e : m.entries()) {
    const Elem xv = x[e.col];
    if (xv) y[e.row] ^= f.mul(e.value, xv);
  }
  return y;
}

SpMat spmul(const Field& f, const SpMat& a, const SpMat& b) {
  if (a.cols() != b.rows()) throw ShapeError("spmul inner dimension mismatch");
  std::vector<SpEntry> out;
  std::map<std::uint32_t, Elem> acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    acc.clear();
    for (const auto& ea : a.row(i)) {
      for (const auto& eb : b.row(ea.col)) {
        acc[eb.col] ^= f.mul(ea.value, eb.value);
      }
    }
    for (const auto& [c, v] : acc)
      if (v) out.push_back({static_cast<std::uint32_t>(i), c, v});
  }
  return SpMat::from_triplets(f, a.rows(), b.cols(), std::move(out));
}

}  // namespace sheafccz
