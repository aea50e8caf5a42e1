#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "sheafccz/catalog.hpp"
#include "sheafccz/complex.hpp"
#include "sheafccz/errors.hpp"

using namespace sheafccz;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_cubical_counts(const CellComplex& x) {
  const auto& s = x.cubical_spec();
  std::size_t d = x.delta();
  for (unsigned k = 0; k <= x.t(); ++k) {
    std::size_t per = s.n_vertices;
    for (unsigned i = 0; i < k; ++i) per *= d;
    for (unsigned i = k; i < x.t(); ++i) per *= 2;
    CHECK(x.count(k) == binom(x.t(), k) * per);
  }
}

}  // namespace

TEST_CASE("single cube") {
  auto x = catalog::single_cube(3);
  CHECK(x.counts() == std::vector<std::size_t>{8, 12, 6, 1});
  auto rep = validate(x);
  CHECK(rep.ok());
  CHECK(rep.top_components == 1);
  CHECK(x.up_set(3, 0, 3) == std::vector<std::uint32_t>{0});
  for (std::uint32_t v = 0; v < 8; ++v) CHECK(x.up(0, v).size() == 3);
}

TEST_CASE("cycle over Z_3") {
  auto x = catalog::cycle_z3();
  CHECK(x.counts() == std::vector<std::size_t>{6, 6});
  for (std::uint32_t v = 0; v < 6; ++v) CHECK(x.up(0, v).size() == 2);
  CHECK(validate(x).ok());
  CHECK(top_components(x) == 1);
}

TEST_CASE("left-right Cayley complex of S_3") {
  auto x = catalog::cayley_s3();
  CHECK(x.counts() == std::vector<std::size_t>{24, 48, 24});
  CHECK(validate(x).ok());
}

TEST_CASE("cubical counts and diamonds") {
  for (auto x : {catalog::toric_like(), catalog::square_toy(), catalog::single_cube(2), catalog::cycle_z3()}) {
    check_cubical_counts(x);
    auto rep = validate(x);
    CHECK(rep.ok());
  }
  auto rs = catalog::rs_cubical();
  CHECK(rs.counts() == std::vector<std::size_t>{72, 864, 3456, 4608});
}

TEST_CASE("cubical up-sets") {
  auto x = catalog::toric_like();
  for (std::uint32_t i = 0; i < x.count(2); ++i) CHECK(x.up_set(2, i, 3).size() == 2);
  for (std::uint32_t i = 0; i < x.count(0); ++i) {
    CHECK(x.up_set(0, i, 3).size() == 8);
    CHECK(x.top_above(0, i) == x.up_set(0, i, 3));
    auto by_label = x.cubical_top_by_label(0, i);
    std::sort(by_label.begin(), by_label.end());
    CHECK(by_label == x.top_above(0, i));
  }
  // up/down consistency
  for (unsigned k = 0; k < 3; ++k)
    for (std::uint32_t i = 0; i < x.count(k); ++i)
      for (auto tau : x.up_set(k, i, 3)) {
        auto d = x.down_set(3, tau, k);
        CHECK(std::binary_search(d.begin(), d.end(), i));
      }
  CHECK_THROWS_AS(x.up_set(0, 10000, 1), LookupError);
}

TEST_CASE("cubical cell round trip and vertex rule") {
  auto x = catalog::toric_like();
  for (unsigned k = 0; k <= 3; ++k)
    for (std::uint32_t i = 0; i < x.count(k); ++i) CHECK(x.cubical_index(x.cubical_cell(k, i)) == i);
  // The 8 vertices of a cube (v; a) are (a^b v; b).
  for (std::uint32_t i = 0; i < x.count(3); ++i) {
    auto c = x.cubical_cell(3, i);
    std::set<std::uint32_t> expect;
    for (unsigned b = 0; b < 8; ++b) {
      CubicalCell v;
      v.type = 0;
      v.v = c.v;
      for (unsigned j = 0; j < 3; ++j) {
        const std::uint8_t bit = (b >> j) & 1u;
        if (bit) v.v = x.perm(j, c.labels[j])[v.v];
        v.bits.push_back(bit);
      }
      expect.insert(*x.cubical_index(v));
    }
    auto got = x.down_set(3, i, 0);
    CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == expect);
  }
}

TEST_CASE("non-commuting generators are rejected") {
  CubicalSpec s;
  s.t = 2;
  s.n_vertices = 3;
  s.gens = {{{1, 0, 2}}, {{0, 2, 1}}};
  try {
    CellComplex::cubical(s);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("A_1[0] and A_2[0]") != std::string::npos);
  }
}

TEST_CASE("simplicial builders") {
  auto tri = CellComplex::simplicial(catalog::triangle_facets());
  CHECK(tri.counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(tri.up_set(0, 0, 1).size() == 2);
  auto tet = CellComplex::simplicial(catalog::tetrahedron_boundary_facets());
  CHECK(tet.counts() == std::vector<std::size_t>{4, 6, 4});
  auto torus = CellComplex::simplicial(catalog::torus7_facets());
  auto c = torus.counts();
  CHECK(c == std::vector<std::size_t>{7, 21, 14});
  CHECK(validate(torus).ok());
  auto two = CellComplex::simplicial(catalog::two_triangles_facets());
  CHECK(validate(two).top_components == 2);
  CHECK_THROWS_AS(CellComplex::simplicial({{0, 1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(CellComplex::simplicial({{0, 0, 1}}), ValidationError);
  CHECK(tri.simplex_index({0, 2}).has_value());
  CHECK_FALSE(tri.simplex_index({0, 3}).has_value());
}

TEST_CASE("three-torus and RP3 are closed 3-manifolds") {
  for (auto facets : {catalog::torus3_facets(), catalog::rp3_facets()}) {
    auto x = CellComplex::simplicial(facets);
    CHECK(validate(x).ok());
    CHECK(validate(x).top_components == 1);
    // Euler characteristic of a closed odd-dimensional manifold is 0.
    auto c = x.counts();
    CHECK(long(c[0]) - long(c[1]) + long(c[2]) - long(c[3]) == 0);
    // Every triangle in exactly two tetrahedra.
    for (std::uint32_t i = 0; i < x.count(2); ++i) CHECK(x.up(2, i).size() == 2);
    // Vertex links are 2-spheres: connected with Euler characteristic 2.
    for (std::uint32_t v = 0; v < x.count(0); ++v) {
      auto tets = x.up_set(0, v, 3);
      std::set<std::vector<std::uint32_t>> lv, le, lt;
      for (auto t : tets) {
        std::vector<std::uint32_t> tri;
        for (auto w : x.simplex(3, t))
          if (w != x.simplex(0, v)[0]) tri.push_back(w);
        lt.insert(tri);
        for (int a = 0; a < 3; ++a) {
          lv.insert({tri[a]});
          for (int b = a + 1; b < 3; ++b) le.insert({tri[a], tri[b]});
        }
      }
      REQUIRE(long(lv.size()) - long(le.size()) + long(lt.size()) == 2);
      std::vector<std::vector<std::uint32_t>> link(lt.begin(), lt.end());
      REQUIRE(validate(CellComplex::simplicial(link)).top_components == 1);
    }
  }
  auto t3 = CellComplex::simplicial(catalog::torus3_facets());
  CHECK(t3.count(0) == 27);
  CHECK(t3.count(3) == 162);
  auto rp3 = CellComplex::simplicial(catalog::rp3_facets());
  CHECK(rp3.count(0) == 40);
  CHECK(rp3.count(3) == 192);
}

TEST_CASE("catalog lookup") {
  CHECK(catalog::by_name("cycle_z3").count(1) == 6);
  CHECK_THROWS_AS(catalog::by_name("nope"), LookupError);
  CHECK(catalog::names().size() >= 10);
}
