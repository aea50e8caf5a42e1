#include "doctest.h"
#include "sheafccz/linalg.hpp"
#include "sheafccz/localcode.hpp"

using namespace sheafccz;

TEST_CASE("duals") {
  Field f2(1);
  CHECK(same_code(dual(repetition(f2, 2)), repetition(f2, 2)));
  CHECK(dual(full_code(f2, 3)).dim() == 0);
  Field f8(3);
  auto rs = reed_solomon(f8, 2);
  auto d = dual(rs);
  CHECK(d.dim() == 6);
  for (std::size_t i = 0; i < rs.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) CHECK(dot(f8, rs.generator().row(i), d.generator().row(j)) == 0);
  CHECK(same_code(dual(d), rs));
}

TEST_CASE("Reed-Solomon") {
  Field f4(2);
  auto rs = reed_solomon(f4, 2);
  CHECK(rs.generator().row_vec(1) == FVec{0, 1, 2, 3});
  CHECK(same_code(reed_solomon(f4, 1), repetition(f4, 4)));
  CHECK(same_code(reed_solomon(f4, 4), full_code(f4, 4)));
  CHECK_THROWS_AS(reed_solomon(f4, 0), ValidationError);
  CHECK_THROWS_AS(reed_solomon(f4, 5), ValidationError);
}

TEST_CASE("Schur products") {
  Field f2(1);
  CHECK(same_code(schur_span(repetition(f2, 5), repetition(f2, 5)), repetition(f2, 5)));
  CHECK(schur_span(full_code(f2, 4), zero_code(f2, 4)).dim() == 0);
  Field f8(3);
  CHECK(schur_span(reed_solomon(f8, 2), reed_solomon(f8, 2)).dim() == 3);
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = 1; b <= 8; ++b)
      CHECK(schur_span(reed_solomon(f8, a), reed_solomon(f8, b)).dim() == std::min<std::size_t>(8, a + b - 1));
  CHECK_THROWS_AS(schur_span(full_code(f2, 3), full_code(f2, 4)), ShapeError);
}

TEST_CASE("tensor codes") {
  Field f2(1);
  auto t = tensor_code({repetition(f2, 2), repetition(f2, 2)});
  CHECK(t.dim() == 1);
  CHECK(t.generator().row_vec(0) == FVec{1, 1, 1, 1});
  Field f4(2);
  CHECK(tensor_code({reed_solomon(f4, 2), full_code(f4, 3)}).dim() == 6);

  // Fiber characterization of rep_2 ⊗ RS(F_4, 2): a 2x4 array is a codeword
  // iff both rows lie in RS and every column lies in rep_2.
  auto c = tensor_code({repetition(f4, 2), reed_solomon(f4, 2)});
  auto rs = reed_solomon(f4, 2);
  std::size_t count = 0;
  for (std::uint32_t w = 0; w < (1u << 16); ++w) {
    FVec v(8);
    for (int i = 0; i < 8; ++i) v[i] = Elem((w >> (2 * i)) & 3u);
    bool fibers = true;
    for (int col = 0; col < 4; ++col) fibers = fibers && v[col] == v[4 + col];
    for (int row = 0; row < 2 && fibers; ++row) fibers = rs.contains(std::span<const Elem>(v).subspan(4 * row, 4));
    REQUIRE(fibers == c.contains(v));
    count += fibers;
  }
  CHECK(count == 16);
}

TEST_CASE("product condition") {
  Field f2(1);
  CHECK(product_condition({repetition(f2, 2), repetition(f2, 2), repetition(f2, 2)}));
  CHECK_FALSE(product_condition({full_code(f2, 1), full_code(f2, 1), full_code(f2, 1)}));
  Field f8(3);
  for (std::uint32_t j = 0; j <= 6; ++j) {
    Elem s = 0;
    for (std::uint32_t x = 0; x < 8; ++x) s ^= f8.pow(Elem(x), j);
    CHECK(s == 0);
  }
  auto rs = reed_solomon(f8, 2);
  CHECK(product_condition({rs, rs, rs}));
  CHECK_FALSE(product_condition({reed_solomon(f8, 4), reed_solomon(f8, 3), reed_solomon(f8, 3)}));
  // equivalent formulation via the all-ones vector
  auto p = schur_span(rs, rs, rs);
  CHECK(dual(p).contains(repetition(f8, 8).generator().row(0)));
}

TEST_CASE("named codes") {
  Field f8(3);
  CHECK(named_code(f8, "rs:2", 8).dim() == 2);
  CHECK(named_code(f8, "dual:rs:2", 8).dim() == 6);
  CHECK(named_code(f8, "parity", 5).dim() == 4);
  CHECK_THROWS_AS(named_code(f8, "rs:2", 5), ValidationError);
  CHECK_THROWS_AS(named_code(f8, "golay", 5), LookupError);
  CHECK_THROWS_AS(LinCode(f8, Mat::from_rows({{1, 1}, {1, 1}}, 2)), ValidationError);
}
