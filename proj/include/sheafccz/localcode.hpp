#pragma once

// Classical linear codes over F_q used as local codes of sheaves.

#include <string>
#include <vector>

#include "sheafccz/gf.hpp"
#include "sheafccz/matrix.hpp"

namespace sheafccz {

class LinCode {
 public:
  /// Generator rows must be linearly independent (ValidationError otherwise).
  LinCode(Field f, Mat generator);
  /// Code spanned by arbitrary rows; the stored generator is their reduced basis.
  static LinCode spanned_by(Field f, const Mat& rows);

  const Field& field() const { return field_; }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dim() const { return gen_.rows(); }
  const Mat& generator() const { return gen_; }

  bool contains(std::span<const Elem> v) const;
  /// Parity-check matrix: rows span the dual code.
  Mat parity_check() const;
  /// Code obtained by placing coordinate i at position perm[i].
  LinCode permuted(const std::vector<std::uint32_t>& perm) const;

 private:
  Field field_;
  Mat gen_;
};

bool same_code(const LinCode& a, const LinCode& b);

LinCode repetition(const Field& f, std::size_t n);
LinCode full_code(const Field& f, std::size_t n);
LinCode zero_code(const Field& f, std::size_t n);
/// Sum-zero code {c : sum_i c_i = 0}.
LinCode parity_code(const Field& f, std::size_t n);
/// Evaluations of 1, x, ..., x^{k-1} at every field element in encoding order.
LinCode reed_solomon(const Field& f, std::size_t k);

LinCode dual(const LinCode& c);
LinCode schur_span(const LinCode& a, const LinCode& b);
LinCode schur_span(const LinCode& a, const LinCode& b, const LinCode& c);
/// Generator = Kronecker product of generators; coordinate of (i_1, ..., i_s)
/// is i_1 Δ_2...Δ_s + ... + i_s.
LinCode tensor_code(const std::vector<LinCode>& codes);

/// The span of entrywise products lies in the sum-zero code.
bool product_condition(const std::vector<LinCode>& codes);

/// Built-in code by name: "rep", "full", "zero", "parity", "rs:k",
/// "dual:<name>". Throws LookupError for unknown names.
LinCode named_code(const Field& f, const std::string& name, std::size_t length);

}  // namespace sheafccz
