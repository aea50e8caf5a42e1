#include "sheafccz/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace sheafccz {

PackedRows::PackedRows(const Field& f, std::size_t cols)
    : f_(f), cols_(cols), words_((cols + 63) / 64), stride_(f.r() * ((cols + 63) / 64)) {}

Elem PackedRows::get(std::size_t i, std::size_t j) const {
  const std::uint64_t* p = row_ptr(i) + (j >> 6);
  const unsigned sh = j & 63;
  Elem v = 0;
  for (unsigned k = 0; k < f_.r(); ++k) v |= static_cast<Elem>(((p[k * words_] >> sh) & 1u) << k);
  return v;
}

void PackedRows::set(std::size_t i, std::size_t j, Elem v) {
  std::uint64_t* p = row_ptr(i) + (j >> 6);
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  for (unsigned k = 0; k < f_.r(); ++k) {
    if ((v >> k) & 1u)
      p[k * words_] |= bit;
    else
      p[k * words_] &= ~bit;
  }
}

void PackedRows::append_zero_row() {
  data_.resize(data_.size() + stride_, 0);
  ++nrows_;
}

void PackedRows::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw ShapeError("packed row length mismatch");
  append_zero_row();
  for (std::size_t j = 0; j < cols_; ++j)
    if (v[j]) set(nrows_ - 1, j, v[j]);
}

FVec PackedRows::row(std::size_t i) const {
  FVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = get(i, j);
  return out;
}

Mat PackedRows::to_dense() const {
  Mat m(nrows_, cols_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j);
  return m;
}

PackedRows PackedRows::from_dense(const Field& f, const Mat& m) {
  PackedRows p(f, m.cols());
  p.data_.assign(m.rows() * p.stride_, 0);
  p.nrows_ = m.rows();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) p.set(i, j, m(i, j));
  return p;
}

PackedRows PackedRows::from_sparse(const Field& f, const SpMat& m) {
  PackedRows p(f, m.cols());
  p.data_.assign(m.rows() * p.stride_, 0);
  p.nrows_ = m.rows();
  for (const auto& e : m.entries()) p.set(e.row, e.col, e.value);
  return p;
}

namespace {

// Multiples c * row of one fixed row. For q <= 16 every multiple is tabulated;
// otherwise the r multiples alpha^k * row are kept and combined per bit of c.
class RowMultiples {
 public:
  RowMultiples(const Field& f, std::size_t words)
      : r_(f.r()),
        q_(f.q()),
        words_(words),
        stride_(f.r() * words),
        low_(f.modulus() & (f.q() - 1)),
        table_(q_ <= 16),
        buf_((table_ ? q_ : r_) * stride_, 0),
        top_(words, 0) {}

  void prepare(const std::uint64_t* row, std::size_t from_word) {
    from_ = from_word;
    std::uint64_t* a = table_ ? slot(1) : slot(0);
    std::copy(row, row + stride_, a);
    if (table_) {
      // slot(1 << k) = alpha^k * row; the rest by linearity.
      for (unsigned k = 1; k < r_; ++k) {
        std::uint64_t* dst = slot(1u << k);
        std::copy(slot(1u << (k - 1)), slot(1u << (k - 1)) + stride_, dst);
        times_alpha(dst);
      }
      for (std::uint32_t c = 3; c < q_; ++c) {
        if ((c & (c - 1)) == 0) continue;
        const std::uint32_t lo = c & (~c + 1);
        std::uint64_t* dst = slot(c);
        const std::uint64_t* x = slot(lo);
        const std::uint64_t* y = slot(c ^ lo);
        for (unsigned k = 0; k < r_; ++k)
          for (std::size_t w = from_; w < words_; ++w) dst[k * words_ + w] = x[k * words_ + w] ^ y[k * words_ + w];
      }
    } else {
      for (unsigned k = 1; k < r_; ++k) {
        std::uint64_t* dst = slot(k);
        std::copy(slot(k - 1), slot(k - 1) + stride_, dst);
        times_alpha(dst);
      }
    }
  }

  void add_to(std::uint64_t* target, Elem c) const {
    if (c == 0) return;
    if (table_) {
      xor_in(target, slot(c));
      return;
    }
    for (unsigned k = 0; k < r_; ++k)
      if ((c >> k) & 1u) xor_in(target, slot(k));
  }

 private:
  std::uint64_t* slot(std::uint32_t i) { return buf_.data() + i * stride_; }
  const std::uint64_t* slot(std::uint32_t i) const { return buf_.data() + i * stride_; }

  void xor_in(std::uint64_t* target, const std::uint64_t* src) const {
    for (unsigned k = 0; k < r_; ++k) {
      std::uint64_t* t = target + k * words_;
      const std::uint64_t* s = src + k * words_;
      for (std::size_t w = from_; w < words_; ++w) t[w] ^= s[w];
    }
  }

  // Multiply every entry by the field generator x: shift planes up one and
  // fold the overflow plane back through the low part of the modulus.
  void times_alpha(std::uint64_t* buf) {
    std::copy(buf + (r_ - 1) * words_, buf + r_ * words_, top_.begin());
    for (unsigned k = r_ - 1; k >= 1; --k)
      std::copy(buf + (k - 1) * words_, buf + k * words_, buf + k * words_);
    std::fill(buf, buf + words_, 0);
    for (unsigned m = 0; m < r_; ++m) {
      if ((low_ >> m) & 1u)
        for (std::size_t w = 0; w < words_; ++w) buf[m * words_ + w] ^= top_[w];
    }
  }

  unsigned r_;
  std::uint32_t q_;
  std::size_t words_;
  std::size_t stride_;
  std::uint32_t low_;
  bool table_;
  std::size_t from_ = 0;
  std::vector<std::uint64_t> buf_;
  std::vector<std::uint64_t> top_;
};

void scale_row(RowMultiples& mult, std::uint64_t* row, std::size_t stride, Elem c) {
  if (c == 1) return;
  mult.prepare(row, 0);
  std::fill(row, row + stride, 0);
  mult.add_to(row, c);
}

// In-place reduced row echelon form. Returns pivot columns; `order` receives
// the physical row index of each logical row (pivot rows first).
std::vector<std::size_t> rref_inplace(PackedRows& p, std::vector<std::size_t>& order) {
  const Field& f = p.field();
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  order.resize(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> pivots;
  RowMultiples mult(f, p.words());
  RowMultiples scaler(f, p.words());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t found = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (p.get(order[i], col)) {
        found = i;
        break;
      }
    }
    if (found == m) continue;
    std::swap(order[rank], order[found]);
    std::uint64_t* prow = p.row_ptr(order[rank]);
    const Elem pv = p.get(order[rank], col);
    if (pv != 1) scale_row(scaler, prow, p.stride(), f.inv(pv));
    mult.prepare(prow, col >> 6);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const Elem c = p.get(order[i], col);
      if (c) mult.add_to(p.row_ptr(order[i]), c);
    }
    pivots.push_back(col);
    ++rank;
  }

  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t col = pivots[k];
    bool any = false;
    for (std::size_t i = 0; i < k && !any; ++i) any = p.get(order[i], col) != 0;
    if (!any) continue;
    mult.prepare(p.row_ptr(order[k]), col >> 6);
    for (std::size_t i = 0; i < k; ++i) {
      const Elem c = p.get(order[i], col);
      if (c) mult.add_to(p.row_ptr(order[i]), c);
    }
  }
  return pivots;
}

Echelon finish(PackedRows& p) {
  std::vector<std::size_t> order;
  Echelon e;
  e.pivots = rref_inplace(p, order);
  e.basis = Mat(e.pivots.size(), p.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = e.pivots[i]; j < p.cols(); ++j) e.basis(i, j) = p.get(order[i], j);
  return e;
}

std::optional<FVec> solve_packed(PackedRows& p, std::size_t n) {
  std::vector<std::size_t> order;
  const auto pivots = rref_inplace(p, order);
  FVec x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;
    x[pivots[i]] = p.get(order[i], n);
  }
  return x;
}

void check_same_cols(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols())
    throw ShapeError("subspaces of different ambient dimension: " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.cols()));
}

std::size_t stacked_rank(const Field& f, const Mat& a, const Mat& b) {
  PackedRows p(f, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) p.append_row(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) p.append_row(b.row(i));
  std::vector<std::size_t> order;
  return rref_inplace(p, order).size();
}

}  // namespace

Echelon rref(const Field& f, const Mat& m) {
  auto p = PackedRows::from_dense(f, m);
  return finish(p);
}

Echelon rref(const Field& f, const SpMat& m) {
  auto p = PackedRows::from_sparse(f, m);
  return finish(p);
}

std::size_t rank(const Field& f, const Mat& m) {
  auto p = PackedRows::from_dense(f, m);
  std::vector<std::size_t> order;
  return rref_inplace(p, order).size();
}

std::size_t rank(const Field& f, const SpMat& m) {
  auto p = PackedRows::from_sparse(f, m);
  std::vector<std::size_t> order;
  return rref_inplace(p, order).size();
}

Mat kernel_from_echelon(const Field& f, const Echelon& e, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  PackedRows k(f, cols);
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    k.append_zero_row();
    const std::size_t i = k.rows() - 1;
    k.set(i, fc, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Elem v = e.basis(r, fc);
      if (v) k.set(i, e.pivots[r], v);
    }
  }
  return finish(k).basis;
}

Mat kernel_basis(const Field& f, const Mat& m) { return kernel_from_echelon(f, rref(f, m), m.cols()); }

Mat kernel_basis(const Field& f, const SpMat& m) { return kernel_from_echelon(f, rref(f, m), m.cols()); }

Mat image_basis(const Field& f, const Mat& m) { return rref(f, m.transposed()).basis; }

Mat image_basis(const Field& f, const SpMat& m) { return rref(f, m.transposed()).basis; }

std::optional<FVec> solve(const Field& f, const Mat& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length does not match row count");
  PackedRows p(f, m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    p.append_zero_row();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) p.set(i, j, m(i, j));
    if (b[i]) p.set(i, m.cols(), b[i]);
  }
  return solve_packed(p, m.cols());
}

std::optional<FVec> solve(const Field& f, const SpMat& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length does not match row count");
  PackedRows p(f, m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) p.append_zero_row();
  for (const auto& e : m.entries()) p.set(e.row, e.col, e.value);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (b[i]) p.set(i, m.cols(), b[i]);
  return solve_packed(p, m.cols());
}

std::optional<Mat> inverse(const Field& f, const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  PackedRows p(f, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p.append_zero_row();
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j)) p.set(i, j, m(i, j));
    p.set(i, n + i, 1);
  }
  std::vector<std::size_t> order;
  const auto piv = rref_inplace(p, order);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = p.get(order[i], n + j);
  return inv;
}

FVec reduce(const Field& f, const Echelon& e, std::span<const Elem> v) {
  if (v.size() != e.basis.cols()) throw ShapeError("reduce: vector length mismatch");
  FVec res(v.begin(), v.end());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Elem c = res[e.pivots[i]];
    if (c) axpy(f, c, e.basis.row(i), res);
  }
  return res;
}

bool in_span(const Field& f, const Echelon& e, std::span<const Elem> v) { return is_zero(reduce(f, e, v)); }

std::optional<FVec> coordinates(const Field& f, const Echelon& e, std::span<const Elem> v) {
  if (v.size() != e.basis.cols()) throw ShapeError("coordinates: vector length mismatch");
  FVec res(v.begin(), v.end());
  FVec coord(e.pivots.size(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Elem c = res[e.pivots[i]];
    coord[i] = c;
    if (c) axpy(f, c, e.basis.row(i), res);
  }
  if (!is_zero(res)) return std::nullopt;
  return coord;
}

bool span_contains(const Field& f, const Mat& big, const Mat& small) {
  check_same_cols(big, small);
  if (small.rows() == 0) return true;
  return stacked_rank(f, big, Mat(0, big.cols())) == stacked_rank(f, big, small);
}

bool same_span(const Field& f, const Mat& a, const Mat& b) {
  check_same_cols(a, b);
  const std::size_t ra = rank(f, a);
  return ra == rank(f, b) && ra == stacked_rank(f, a, b);
}

Mat quotient_reps(const Field& f, const Mat& z, const Mat& b) {
  check_same_cols(z, b);
  if (!span_contains(f, z, b)) throw ContainmentError("quotient_reps: span(B) is not contained in span(Z)");
  SpanBuilder sb(f, z.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) sb.add(b.row(i));
  Mat reps(0, z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    if (sb.add(z.row(i))) reps.append_row(z.row(i));
  return reps;
}

SpanBuilder::SpanBuilder(const Field& f, std::size_t cols) : f_(f), rows_(f, cols) {}

void SpanBuilder::reduce_packed(std::uint64_t* buf) const {
  const std::size_t W = rows_.words();
  const unsigned r = f_.r();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t col = pivots_[k];
    const unsigned sh = col & 63;
    Elem c = 0;
    for (unsigned b = 0; b < r; ++b) c |= static_cast<Elem>(((buf[b * W + (col >> 6)] >> sh) & 1u) << b);
    if (!c) continue;
    // Stored rows hold alpha^b multiples back to back: row k*r + b.
    for (unsigned b = 0; b < r; ++b) {
      if (!((c >> b) & 1u)) continue;
      const std::uint64_t* src = rows_.row_ptr(k * r + b);
      for (std::size_t w = 0; w < rows_.stride(); ++w) buf[w] ^= src[w];
    }
  }
}

bool SpanBuilder::contains(std::span<const Elem> v) const {
  PackedRows tmp(f_, rows_.cols());
  tmp.append_row(v);
  std::uint64_t* buf = tmp.row_ptr(0);
  reduce_packed(buf);
  return std::all_of(buf, buf + tmp.stride(), [](std::uint64_t w) { return w == 0; });
}

bool SpanBuilder::add(std::span<const Elem> v) {
  PackedRows tmp(f_, rows_.cols());
  tmp.append_row(v);
  reduce_packed(tmp.row_ptr(0));
  // First nonzero column of the residual.
  const std::size_t W = rows_.words();
  std::size_t piv = rows_.cols();
  for (std::size_t w = 0; w < W && piv == rows_.cols(); ++w) {
    std::uint64_t any = 0;
    for (unsigned b = 0; b < f_.r(); ++b) any |= tmp.row_ptr(0)[b * W + w];
    if (any) piv = w * 64 + static_cast<std::size_t>(std::countr_zero(any));
  }
  if (piv == rows_.cols()) return false;

  const Elem inv = f_.inv(tmp.get(0, piv));
  FVec normalized = tmp.row(0);
  for (auto& x : normalized) x = f_.mul(x, inv);
  Elem a = 1;
  for (unsigned b = 0; b < f_.r(); ++b) {
    FVec mult(normalized.size());
    for (std::size_t j = 0; j < mult.size(); ++j) mult[j] = f_.mul(a, normalized[j]);
    rows_.append_row(mult);
    if (b + 1 < f_.r()) a = f_.mul(a, 2);
  }
  pivots_.push_back(piv);
  return true;
}

}  // namespace sheafccz
