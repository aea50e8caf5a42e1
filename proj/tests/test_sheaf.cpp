#include <random>

#include "doctest.h"
#include "sheafccz/catalog.hpp"
#include "sheafccz/linalg.hpp"
#include "sheafccz/sheaf.hpp"

using namespace sheafccz;

namespace {

ComplexPtr make(CellComplex x) { return std::make_shared<const CellComplex>(std::move(x)); }

bool same_sections(const Sheaf& a, const Sheaf& b) {
  for (unsigned k = 0; k <= a.t(); ++k)
    for (std::uint32_t i = 0; i < a.complex().count(k); ++i)
      if (!same_span(a.field(), a.basis(k, i), b.basis(k, i))) return false;
  return true;
}

}  // namespace

TEST_CASE("repetition local codes give the constant sheaf") {
  Field f2(1);
  for (auto x : {make(catalog::toric_like()), make(catalog::cycle_z3()),
                 make(CellComplex::simplicial(catalog::torus7_facets()))}) {
    auto s = constant_sheaf(x, f2);
    for (unsigned k = 0; k <= x->t(); ++k)
      for (std::uint32_t i = 0; i < x->count(k); ++i) {
        REQUIRE(s.dim(k, i) == 1);
        FVec ones(s.support(k, i).size(), 1);
        REQUIRE(s.coordinates(k, i, ones).has_value());
      }
    CHECK(verify_axioms(s).ok());
    // every restriction is the 1x1 identity
    CHECK(s.restriction(0, 0, 1, x->up(0, 0)[0]) == Mat::identity(1));
  }
}

TEST_CASE("full local codes impose no constraints") {
  Field f4(2);
  auto x = make(catalog::toric_like());
  auto s = sheaf_from_local_codes(x, f4, uniform_local_codes(*x, f4, "full"));
  for (unsigned k = 0; k <= 3; ++k)
    for (std::uint32_t i = 0; i < x->count(k); ++i) CHECK(s.dim(k, i) == s.support(k, i).size());
  auto d = dual_sheaf(s);
  for (std::uint32_t i = 0; i < x->count(2); ++i) CHECK(d.dim(2, i) == 0);
}

TEST_CASE("tensor sheaf equals the sheaf rebuilt from its local codes") {
  Field f2(1), f4(2), f8(3);
  struct Case {
    ComplexPtr x;
    std::vector<LinCode> codes;
  };
  std::vector<Case> cases;
  cases.push_back({make(catalog::square_toy()), {repetition(f2, 2), full_code(f2, 2)}});
  cases.push_back({make(catalog::cayley_s3()), {repetition(f2, 2), repetition(f2, 2)}});
  cases.push_back({make(catalog::toric_like()), {repetition(f2, 2), repetition(f2, 2), repetition(f2, 2)}});
  cases.push_back({make(catalog::toric_like()), {repetition(f2, 2), full_code(f2, 2), zero_code(f2, 2)}});
  cases.push_back({make(CellComplex::cubical(catalog::shift_spec(4, 2, {0, 1, 2, 3}))),
                   {reed_solomon(f4, 2), reed_solomon(f4, 3)}});
  cases.push_back({make(CellComplex::cubical(catalog::shift_spec(3, 3, {0, 1, 2, 1}))),
                   {reed_solomon(f4, 2), reed_solomon(f4, 1), reed_solomon(f4, 3)}});
  for (const auto& c : cases) {
    auto tensor = cubical_tensor_sheaf(c.x, c.codes);
    auto rebuilt = sheaf_from_local_codes(c.x, c.codes.front().field(), cubical_local_codes(*c.x, c.codes));
    CHECK(same_sections(tensor, rebuilt));
    CHECK(verify_axioms(tensor).ok());
    CHECK(verify_axioms(rebuilt).ok());
    CHECK(local_acyclicity(tensor).ok());
  }
  (void)f8;
}

TEST_CASE("tensor sheaf dimensions") {
  Field f2(1);
  auto cyc = make(catalog::cycle_z3());
  auto s1 = cubical_tensor_sheaf(cyc, {repetition(f2, 2)});
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(s1.dim(0, i) == 1);
    CHECK(s1.dim(1, i) == 1);
  }
  auto tl = make(catalog::toric_like());
  auto s3 = cubical_tensor_sheaf(tl, {repetition(f2, 2), repetition(f2, 2), repetition(f2, 2)});
  for (std::uint32_t i = 0; i < tl->count(1); ++i) CHECK(s3.dim(1, i) == 1);
  Field f8(3);
  auto rs = make(catalog::rs_cubical());
  auto code = reed_solomon(f8, 2);
  auto srs = cubical_tensor_sheaf(rs, {code, code, code});
  CHECK(srs.dim(0, 0) == 8);
  CHECK(srs.dim(1, 0) == 4);
  CHECK(srs.dim(2, 0) == 2);
  CHECK(srs.dim(3, 0) == 1);
}

TEST_CASE("restriction maps compose") {
  Field f4(2);
  auto x = make(CellComplex::cubical(catalog::shift_spec(3, 3, {0, 1, 2, 1})));
  std::vector<LinCode> codes{reed_solomon(f4, 2), reed_solomon(f4, 3), reed_solomon(f4, 2)};
  auto s = sheaf_from_local_codes(x, f4, cubical_local_codes(*x, codes));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t v = static_cast<std::uint32_t>(rng() % x->count(0));
    auto e = x->up(0, v)[rng() % x->up(0, v).size()];
    auto sq = x->up(1, e)[rng() % x->up(1, e).size()];
    auto cu = x->up(2, sq)[rng() % x->up(2, sq).size()];
    CHECK(matmul(f4, s.restriction(1, e, 2, sq), s.restriction(0, v, 1, e)) == s.restriction(0, v, 2, sq));
    CHECK(matmul(f4, s.restriction(2, sq, 3, cu), s.restriction(0, v, 2, sq)) == s.restriction(0, v, 3, cu));
    CHECK(s.restriction(1, e, 1, e) == Mat::identity(s.dim(1, e)));
  }
  // non-comparable pair
  std::uint32_t e0 = x->up(0, 0)[0];
  std::uint32_t far = 0;
  while (x->is_face(0, 0, 1, far) || far == e0) ++far;
  CHECK_THROWS_AS(s.restriction(0, 0, 1, far), ValidationError);
}

TEST_CASE("dropped basis vector breaks gluability") {
  Field f2(1);
  auto x = make(catalog::toric_like());
  auto s = constant_sheaf(x, f2);
  auto full = sheaf_from_local_codes(x, f2, uniform_local_codes(*x, f2, "full"));
  // Full sheaf: vertex space has dimension 8; keep only 7 of its basis rows.
  Mat b = full.basis(0, 4);
  Mat smaller(0, b.cols());
  for (std::size_t r = 0; r + 1 < b.rows(); ++r) smaller.append_row(b.row(r));
  auto bad = full.with_basis(0, 4, smaller);
  auto rep = verify_axioms(bad);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].dim == 0);
  CHECK(rep.failures[0].cell == 4);
  CHECK(rep.failures[0].what.find("gluability") != std::string::npos);
  (void)s;
}

TEST_CASE("dual and product sheaves") {
  Field f2(1);
  auto x = make(catalog::toric_like());
  auto c = constant_sheaf(x, f2);
  CHECK(same_sections(dual_sheaf(c), c));
  Field f4(2);
  auto y = make(CellComplex::cubical(catalog::shift_spec(4, 2, {0, 1, 2, 3})));
  auto s = sheaf_from_local_codes(y, f4, cubical_local_codes(*y, {reed_solomon(f4, 2), reed_solomon(f4, 3)}));
  CHECK(same_sections(dual_sheaf(dual_sheaf(s)), s));
  auto sq = product_sheaf(s, s);
  for (std::uint32_t i = 0; i < y->count(1); ++i) {
    const auto k = s.local_code(i).dim();
    CHECK(sq.local_code(i).dim() == std::min<std::size_t>(4, 2 * k - 1));
  }
  auto cc = constant_sheaf(y, f4);
  CHECK(same_sections(product_sheaf(cc, cc), cc));
  auto full = sheaf_from_local_codes(y, f4, uniform_local_codes(*y, f4, "full"));
  CHECK(same_sections(product_sheaf(s, full), sheaf_from_local_codes(y, f4, uniform_local_codes(*y, f4, "full"))));
  auto other = make(catalog::square_toy());
  CHECK_THROWS_AS(product_sheaf(s, constant_sheaf(other, f4)), ShapeError);
}

TEST_CASE("local acyclicity") {
  Field f2(1);
  auto cube = make(catalog::single_cube(3));
  CHECK(local_acyclicity(sheaf_from_local_codes(cube, f2, uniform_local_codes(*cube, f2, "full"))).ok());
  auto susp = make(CellComplex::simplicial(catalog::torus_suspension_facets()));
  auto rep = local_acyclicity(constant_sheaf(susp, f2));
  CHECK_FALSE(rep.ok());
  // The two apexes (vertices 7 and 8) carry the torus link.
  REQUIRE(rep.failures.size() == 2);
  CHECK(rep.failures[0].dim == 0);
  CHECK(rep.failures[0].cell == 7);
  CHECK(rep.failures[1].cell == 8);
  auto torus3 = make(CellComplex::simplicial(catalog::torus3_facets()));
  CHECK(local_acyclicity(constant_sheaf(torus3, f2)).ok());
}

TEST_CASE("missing or mis-sized local codes") {
  Field f2(1);
  auto x = make(catalog::toric_like());
  auto codes = uniform_local_codes(*x, f2, "rep");
  codes.pop_back();
  CHECK_THROWS_AS(sheaf_from_local_codes(x, f2, codes), LookupError);
  codes.push_back(repetition(f2, 3));
  CHECK_THROWS_AS(sheaf_from_local_codes(x, f2, codes), ShapeError);
}
