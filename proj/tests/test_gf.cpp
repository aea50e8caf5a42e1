#include "doctest.h"
#include "sheafccz/gf.hpp"

using namespace sheafccz;

TEST_CASE("characteristic two") {
  Field f2(1);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.q() == 2);
}

TEST_CASE("F4 multiplication and trace") {
  Field f4(2);
  CHECK(f4.modulus() == 0x7);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.trace(2) == 1);
  CHECK(f4.trace(0) == 0);
  Field f2(1);
  CHECK(f2.trace(1) == 1);
}

TEST_CASE("inverse") {
  for (unsigned r = 1; r <= 16; ++r) {
    Field f(r);
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), DomainError);
  }
  Field f8(8);
  for (std::uint32_t a = 1; a < 256; ++a) CHECK(f8.mul(static_cast<Elem>(a), f8.inv(static_cast<Elem>(a))) == 1);
}

TEST_CASE("log tables agree with schoolbook multiplication") {
  for (unsigned r = 1; r <= 8; ++r) {
    Field f(r);
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b)
        REQUIRE(f.mul(Elem(a), Elem(b)) == poly_mulmod(Elem(a), Elem(b), f.modulus(), r));
  }
  Field f16(16);
  for (std::uint32_t a = 1; a < 65536; a += 251)
    for (std::uint32_t b = 3; b < 65536; b += 509)
      REQUIRE(f16.mul(Elem(a), Elem(b)) == poly_mulmod(Elem(a), Elem(b), f16.modulus(), 16));
}

TEST_CASE("pow") {
  Field f(4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    Elem acc = 1;
    for (unsigned e = 0; e < 20; ++e) {
      CHECK(f.pow(Elem(a), e) == acc);
      acc = f.mul(acc, Elem(a));
    }
  }
}

TEST_CASE("trace is additive, binary and nondegenerate") {
  for (unsigned r = 1; r <= 8; ++r) {
    Field f(r);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      Elem tx = f.trace(Elem(x));
      REQUIRE(tx <= 1);
      // direct definition
      Elem acc = 0, y = Elem(x);
      for (unsigned i = 0; i < r; ++i) {
        acc ^= y;
        y = f.mul(y, y);
      }
      REQUIRE(acc == tx);
      for (std::uint32_t z = 0; z < f.q(); ++z) REQUIRE(f.trace(Elem(x ^ z)) == (tx ^ f.trace(Elem(z))));
      if (x != 0) {
        bool found = false;
        for (std::uint32_t a = 0; a < f.q() && !found; ++a) found = f.trace(f.mul(Elem(a), Elem(x))) == 1;
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("explicit modulus") {
  Field f(3, 0xD);  // x^3 + x^2 + 1
  CHECK(f.modulus() == 0xD);
  for (std::uint32_t a = 1; a < 8; ++a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
  CHECK_THROWS_AS(Field(2, 0x5), ValidationError);  // x^2 + 1 = (x+1)^2
  CHECK_THROWS_AS(Field(3, 0x7), ValidationError);  // wrong degree
  CHECK_THROWS_AS(Field(0), ValidationError);
  CHECK_THROWS_AS(Field(17), ValidationError);
}

TEST_CASE("entrywise product") {
  Field f2(1);
  CHECK(entrywise_product(f2, FVec{1, 0, 1}, FVec{1, 1, 0}) == FVec{1, 0, 0});
  Field f4(2);
  CHECK(entrywise_product(f4, FVec{2, 2}, FVec{2, 1}) == FVec{3, 2});
  CHECK(entrywise_product(f4, FVec{1, 1, 1}, FVec{3, 0, 2}) == FVec{3, 0, 2});
  CHECK_THROWS_AS(entrywise_product(f4, FVec{1}, FVec{1, 2}), ShapeError);
}

TEST_CASE("vector helpers") {
  Field f4(2);
  CHECK(dot(f4, FVec{2, 3}, FVec{2, 1}) == (3 ^ 3));
  FVec y{1, 0, 2};
  axpy(f4, 2, FVec{1, 1, 1}, y);
  CHECK(y == FVec{3, 2, 0});
  CHECK(weight(y) == 2);
  CHECK(!is_zero(y));
  CHECK(is_zero(FVec{0, 0}));
}
