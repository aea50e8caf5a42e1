#include <random>

#include "doctest.h"
#include "sheafccz/catalog.hpp"
#include "sheafccz/cup.hpp"
#include "sheafccz/linalg.hpp"

using namespace sheafccz;

namespace {

ComplexPtr simplicial(std::vector<std::vector<std::uint32_t>> facets) {
  return std::make_shared<const CellComplex>(CellComplex::simplicial(std::move(facets)));
}

SheafPtr share(Sheaf s) { return std::make_shared<const Sheaf>(std::move(s)); }

// Every (t-1)-cell gets a random one-dimensional code spanned by a vector
// with no zero entries, so the sheaf is a twisted copy of the constant one.
Sheaf twisted_sheaf(ComplexPtr x, const Field& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> nz(1, f.q() - 1);
  std::vector<LinCode> codes;
  for (std::uint32_t e = 0; e < x->count(x->t() - 1); ++e) {
    const std::size_t n = x->top_above(x->t() - 1, e).size();
    Mat g(1, n);
    for (std::size_t j = 0; j < n; ++j) g(0, j) = static_cast<Elem>(nz(rng));
    codes.emplace_back(f, g);
  }
  return sheaf_from_local_codes(x, f, codes);
}

Cochain random_from(const Mat& basis, const CochainComplex& c, unsigned deg, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::uint32_t> elem(0, c.field().q() - 1);
  FVec co(basis.rows(), 0);
  do
    for (auto& x : co) x = static_cast<Elem>(elem(rng));
  while (nonzero && is_zero(co));
  return make_cochain(c, deg, row_combination(c.field(), co, basis));
}

}  // namespace

TEST_CASE("cup with zero and with the unit") {
  Field f4(2);
  auto x = simplicial(catalog::torus7_facets());
  auto one_sheaf = share(constant_sheaf(x, f4));
  auto tw = share(twisted_sheaf(x, f4, 3));
  std::mt19937_64 rng(5);
  auto b = random_cochain(tw, 1, rng);
  auto unit = unit_cochain(one_sheaf);
  REQUIRE(unit.has_value());
  auto ub = simplicial_cup(*unit, b);
  CHECK(section_functions(ub) == section_functions(b));
  auto zb = simplicial_cup(zero_cochain(one_sheaf, 1), b);
  CHECK(is_zero(zb.coeffs));
  CHECK_THROWS_AS(simplicial_cup(b, random_cochain(tw, 2, rng)), DomainError);
}

TEST_CASE("Leibniz identity on random cochains") {
  Field f2(1), f4(2);
  for (auto facets : {catalog::torus7_facets(), catalog::tetrahedron_boundary_facets()}) {
    auto x = simplicial(facets);
    for (const Field& f : {f2, f4}) {
      auto s1 = share(twisted_sheaf(x, f, 11));
      auto s2 = share(twisted_sheaf(x, f, 12));
      auto p = share(product_sheaf(*s1, *s2));
      auto c1 = sheaf_cochain_complex(s1), c2 = sheaf_cochain_complex(s2), cp = sheaf_cochain_complex(p);
      CHECK(leibniz_check(c1, c2, cp, 0, 0, 40, 1).ok());
      CHECK(leibniz_check(c1, c2, cp, 1, 0, 40, 2).ok());
      CHECK(leibniz_check(c1, c2, cp, 0, 1, 40, 3).ok());
    }
  }
}

TEST_CASE("cocycle cup coboundary is a coboundary") {
  Field f2(1);
  auto x = simplicial(catalog::torus7_facets());
  auto s = share(constant_sheaf(x, f2));
  auto c = sheaf_cochain_complex(s);
  auto h1 = cohomology(c, 1);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_from(h1.cycles, c, 1, rng, false);
    auto cc = random_cochain(s, 0, rng);
    auto ab = simplicial_cup(a, coboundary(c, cc), s);
    CHECK(solve(f2, c.delta(1), ab.coeffs).has_value());
    CHECK(ab.coeffs == coboundary(c, simplicial_cup(a, cc, s)).coeffs);
  }
}

TEST_CASE("torus cup pairing is nondegenerate and alternating") {
  Field f2(1);
  auto x = simplicial(catalog::torus7_facets());
  auto s = share(constant_sheaf(x, f2));
  auto c = sheaf_cochain_complex(s);
  auto h = cohomology(c, 1);
  REQUIRE(h.dim == 2);
  Mat m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m(i, j) = top_sum(simplicial_cup(make_cochain(c, 1, h.reps.row_vec(i)), make_cochain(c, 1, h.reps.row_vec(j)), s));
  CHECK(m(0, 0) == 0);
  CHECK(m(1, 1) == 0);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  // with a degree-0 global section the trilinear form reduces to the pairing
  auto unit = *unit_cochain(s);
  auto a = make_cochain(c, 1, h.reps.row_vec(0)), b = make_cochain(c, 1, h.reps.row_vec(1));
  CHECK(simplicial_trilinear_f(a, b, unit) == m(0, 1));
  CHECK(simplicial_trilinear_f(unit, a, b) == m(0, 1));
}

TEST_CASE("triple products on the 3-torus and RP^3") {
  Field f2(1);
  {
    auto x = simplicial(catalog::torus3_facets());
    auto s = share(constant_sheaf(x, f2));
    auto c = sheaf_cochain_complex(s);
    auto h = cohomology(c, 1);
    REQUIRE(h.dim == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const Elem want = (i != j && j != k && i != k) ? 1 : 0;
          CHECK(simplicial_trilinear_f(make_cochain(c, 1, h.reps.row_vec(i)), make_cochain(c, 1, h.reps.row_vec(j)),
                                       make_cochain(c, 1, h.reps.row_vec(k))) == want);
        }
  }
  {
    auto x = simplicial(catalog::rp3_facets());
    auto s = share(constant_sheaf(x, f2));
    auto c = sheaf_cochain_complex(s);
    auto h = cohomology(c, 1);
    REQUIRE(h.dim == 1);
    auto z = make_cochain(c, 1, h.reps.row_vec(0));
    CHECK(simplicial_trilinear_f(z, z, z) == 1);
    auto unit = *unit_cochain(s);
    CHECK(quadrilinear_f(z, z, z, unit) == 1);
    CHECK(quadrilinear_f(z, z, z, zero_cochain(s, 0)) == 0);
    // shifting by a coboundary does not change the value
    std::mt19937_64 rng(4);
    auto zz = z + coboundary(c, random_cochain(s, 0, rng));
    CHECK(simplicial_trilinear_f(zz, z, zz) == 1);
  }
}

TEST_CASE("coboundaries sum to zero when local codes are even") {
  Field f2(1);
  auto x = simplicial(catalog::torus7_facets());
  auto s = share(constant_sheaf(x, f2));
  auto c = sheaf_cochain_complex(s);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) CHECK(top_sum(coboundary(c, random_cochain(s, 1, rng))) == 0);
}

TEST_CASE("cubical bilinear form is invariant under coboundary shifts") {
  Field f2(1);
  auto x = std::make_shared<const CellComplex>(catalog::cayley_s3());
  auto s = share(cubical_tensor_sheaf(x, {repetition(f2, 2), repetition(f2, 2)}));
  auto c = sheaf_cochain_complex(s);
  auto h = cohomology(c, 1);
  REQUIRE(h.dim > 0);
  std::mt19937_64 rng(21);
  bool nonzero = false;
  for (int trial = 0; trial < 50; ++trial) {
    auto z1 = random_from(h.cycles, c, 1, rng, false), z2 = random_from(h.cycles, c, 1, rng, false);
    auto b1 = coboundary(c, random_cochain(s, 0, rng)), b2 = coboundary(c, random_cochain(s, 0, rng));
    const Elem v = cubical_bilinear_f(z1, z2);
    nonzero |= v != 0;
    CHECK(cubical_bilinear_f(z1 + b1, z2 + b2) == v);
  }
  CHECK(nonzero);
  // bilinearity
  auto a = random_cochain(s, 1, rng), a2 = random_cochain(s, 1, rng), b = random_cochain(s, 1, rng);
  CHECK(cubical_bilinear_f(a + a2, b) == (cubical_bilinear_f(a, b) ^ cubical_bilinear_f(a2, b)));
  CHECK(cubical_bilinear_f(zero_cochain(s, 1), b) == 0);
}

TEST_CASE("cubical trilinear form on the toric-like complex") {
  Field f2(1);
  auto x = std::make_shared<const CellComplex>(catalog::toric_like());
  auto s = share(cubical_tensor_sheaf(x, std::vector<LinCode>(3, repetition(f2, 2))));
  auto c = sheaf_cochain_complex(s);
  auto h = cohomology(c, 1);
  REQUIRE(h.dim > 0);
  std::mt19937_64 rng(31);
  bool nonzero = false;
  for (int trial = 0; trial < 30; ++trial) {
    Cochain z[3] = {random_from(h.cycles, c, 1, rng, false), random_from(h.cycles, c, 1, rng, false),
                    random_from(h.cycles, c, 1, rng, false)};
    const Elem v = cubical_trilinear_f(z[0], z[1], z[2]);
    nonzero |= v != 0;
    for (auto& zi : z) zi = zi + coboundary(c, random_cochain(s, 0, rng));
    CHECK(cubical_trilinear_f(z[0], z[1], z[2]) == v);
  }
  CHECK(nonzero);
  auto a = random_cochain(s, 1, rng), a2 = random_cochain(s, 1, rng);
  auto b = random_cochain(s, 1, rng), d = random_cochain(s, 1, rng);
  CHECK(cubical_trilinear_f(b, a + a2, d) == (cubical_trilinear_f(b, a, d) ^ cubical_trilinear_f(b, a2, d)));
  CHECK(cubical_trilinear_f(a, b, zero_cochain(s, 1)) == 0);
}

TEST_CASE("full local codes break cubical invariance") {
  Field f2(1);
  auto x = std::make_shared<const CellComplex>(catalog::toric_like());
  auto s = share(cubical_tensor_sheaf(x, std::vector<LinCode>(3, full_code(f2, 2))));
  auto c = sheaf_cochain_complex(s);
  auto z1 = cohomology(c, 1).cycles;
  std::mt19937_64 rng(41);
  bool broke = false;
  for (int trial = 0; trial < 30 && !broke; ++trial) {
    auto a = random_from(z1, c, 1, rng, false), b = random_from(z1, c, 1, rng, false);
    auto d = random_from(z1, c, 1, rng, false);
    broke = cubical_trilinear_f(a + coboundary(c, random_cochain(s, 0, rng)), b, d) != cubical_trilinear_f(a, b, d);
  }
  CHECK(broke);
}
