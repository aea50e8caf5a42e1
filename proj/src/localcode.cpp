#include "sheafccz/localcode.hpp"

#include <string>

#include "sheafccz/linalg.hpp"

namespace sheafccz {

namespace {

void check_lengths(const std::vector<LinCode>& codes) {
  for (const auto& c : codes) {
    if (c.length() != codes.front().length())
      throw ShapeError("codes of lengths " + std::to_string(codes.front().length()) + " and " +
                       std::to_string(c.length()));
    if (!(c.field() == codes.front().field())) throw ShapeError("codes over different fields");
  }
}

Mat pairwise_products(const Field& f, const Mat& a, const Mat& b) {
  Mat out(0, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) out.append_row(entrywise_product(f, a.row(i), b.row(j)));
  return out;
}

}  // namespace

LinCode::LinCode(Field f, Mat generator) : field_(std::move(f)), gen_(std::move(generator)) {
  for (auto x : gen_.data())
    if (!field_.contains(x)) throw ValidationError("generator entry " + std::to_string(x) + " is not a field element");
  if (rank(field_, gen_) != gen_.rows()) throw ValidationError("generator rows are linearly dependent");
}

LinCode LinCode::spanned_by(Field f, const Mat& rows) {
  Mat basis = row_basis(f, rows);
  return LinCode(std::move(f), std::move(basis));
}

bool LinCode::contains(std::span<const Elem> v) const {
  if (v.size() != length()) throw ShapeError("word length does not match code length");
  Mat ext = gen_;
  ext.append_row(v);
  return rank(field_, ext) == dim();
}

Mat LinCode::parity_check() const { return kernel_basis(field_, gen_); }

LinCode LinCode::permuted(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != length()) throw ShapeError("permutation length does not match code length");
  Mat g(dim(), length());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < length(); ++j) g(i, perm[j]) = gen_(i, j);
  return LinCode(field_, std::move(g));
}

bool same_code(const LinCode& a, const LinCode& b) {
  return a.length() == b.length() && same_span(a.field(), a.generator(), b.generator());
}

LinCode repetition(const Field& f, std::size_t n) {
  Mat g(1, n);
  for (std::size_t j = 0; j < n; ++j) g(0, j) = 1;
  return LinCode(f, g);
}

LinCode full_code(const Field& f, std::size_t n) { return LinCode(f, Mat::identity(n)); }

LinCode zero_code(const Field& f, std::size_t n) { return LinCode(f, Mat(0, n)); }

LinCode parity_code(const Field& f, std::size_t n) { return dual(repetition(f, n)); }

LinCode reed_solomon(const Field& f, std::size_t k) {
  if (k < 1 || k > f.q())
    throw ValidationError("Reed-Solomon dimension " + std::to_string(k) + " outside [1, " + std::to_string(f.q()) + "]");
  Mat g(k, f.q());
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t x = 0; x < f.q(); ++x) g(i, x) = f.pow(static_cast<Elem>(x), i);
  return LinCode(f, g);
}

LinCode dual(const LinCode& c) { return LinCode(c.field(), c.parity_check()); }

LinCode schur_span(const LinCode& a, const LinCode& b) {
  check_lengths({a, b});
  return LinCode::spanned_by(a.field(), pairwise_products(a.field(), a.generator(), b.generator()));
}

LinCode schur_span(const LinCode& a, const LinCode& b, const LinCode& c) {
  check_lengths({a, b, c});
  const Field& f = a.field();
  Mat ab = pairwise_products(f, a.generator(), b.generator());
  return LinCode::spanned_by(f, pairwise_products(f, ab, c.generator()));
}

LinCode tensor_code(const std::vector<LinCode>& codes) {
  if (codes.empty()) throw ShapeError("tensor_code needs at least one code");
  Mat g = codes.front().generator();
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (!(codes[i].field() == codes.front().field())) throw ShapeError("codes over different fields");
    g = kron(codes.front().field(), g, codes[i].generator());
  }
  return LinCode(codes.front().field(), std::move(g));
}

bool product_condition(const std::vector<LinCode>& codes) {
  if (codes.empty()) return true;
  check_lengths(codes);
  const Field& f = codes.front().field();
  Mat prod = codes.front().generator();
  for (std::size_t i = 1; i < codes.size(); ++i) prod = pairwise_products(f, prod, codes[i].generator());
  for (std::size_t r = 0; r < prod.rows(); ++r) {
    Elem s = 0;
    for (auto x : prod.row(r)) s ^= x;
    if (s) return false;
  }
  return true;
}

LinCode named_code(const Field& f, const std::string& name, std::size_t length) {
  if (name == "rep") return repetition(f, length);
  if (name == "full") return full_code(f, length);
  if (name == "zero") return zero_code(f, length);
  if (name == "parity") return parity_code(f, length);
  if (name.rfind("dual:", 0) == 0) return dual(named_code(f, name.substr(5), length));
  if (name.rfind("rs:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(name.substr(3));
    } catch (const std::exception&) {
      throw LookupError("malformed Reed-Solomon code name '" + name + "'");
    }
    if (length != f.q())
      throw ValidationError("Reed-Solomon code over F_" + std::to_string(f.q()) + " has length " +
                            std::to_string(f.q()) + ", local length is " + std::to_string(length));
    return reed_solomon(f, k);
  }
  throw LookupError("unknown code name '" + name + "'");
}

}  // namespace sheafccz
