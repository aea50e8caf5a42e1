#include <optional>
#include <random>

#include "doctest.h"
#include "oracle/dense_oracle.hpp"
#include "sheafccz/catalog.hpp"
#include "sheafccz/chain.hpp"
#include "sheafccz/duality.hpp"

using namespace sheafccz;

namespace {

ComplexPtr make(CellComplex x) { return std::make_shared<const CellComplex>(std::move(x)); }
ComplexPtr simplicial(const std::vector<std::vector<std::uint32_t>>& facets) {
  return make(CellComplex::simplicial(facets));
}

// Constraints a|_{X_{≥σ}(t)} · b = 0 for every basis row b of F_σ, σ ∈ X(t-1).
oracle::Dense dual_constraints(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  oracle::Dense rows;
  for (std::uint32_t e = 0; e < x.count(t - 1); ++e) {
    const auto& supp = x.top_above(t - 1, e);
    const Mat& b = s.basis(t - 1, e);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      oracle::Row row(x.count(t), 0);
      for (std::size_t p = 0; p < supp.size(); ++p) row[supp[p]] = b(r, p);
      rows.push_back(row);
    }
  }
  return rows;
}

std::size_t dual_sections_dim(const Sheaf& s) {
  const std::size_t n = s.complex().count(s.t());
  return n - oracle::rank(oracle::gf_of(s.field()), dual_constraints(s), n);
}

// Straight enumeration of the same space; nullopt when q^|X(t)| is too large.
std::optional<std::size_t> count_dual_sections(const Sheaf& s) {
  const auto g = oracle::gf_of(s.field());
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const std::size_t n = x.count(t);
  const std::size_t q = std::size_t{1} << s.field().r();
  if (n * s.field().r() > 18) return std::nullopt;
  std::vector<Elem> a(n, 0);
  std::size_t count = 0;
  while (true) {
    bool good = true;
    for (std::uint32_t e = 0; good && e < x.count(t - 1); ++e) {
      const auto& supp = x.top_above(t - 1, e);
      const Mat& b = s.basis(t - 1, e);
      for (std::size_t r = 0; good && r < b.rows(); ++r) {
        Elem dot = 0;
        for (std::size_t p = 0; p < supp.size(); ++p) dot ^= g.mul(b(r, p), a[supp[p]]);
        good = dot == 0;
      }
    }
    count += good;
    std::size_t i = 0;
    while (i < n && ++a[i] == q) a[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::size_t log_q(std::size_t v, unsigned r) {
  std::size_t d = 0;
  while (v > 1) {
    v >>= r;
    ++d;
  }
  return d;
}

std::size_t oracle_betti(const CochainComplex& c, unsigned i) {
  const auto g = oracle::gf_of(c.field());
  auto dense = [](const SpMat& m) {
    const Mat d = m.to_dense();
    oracle::Dense out;
    for (std::size_t r = 0; r < d.rows(); ++r) out.push_back(d.row_vec(r));
    return out;
  };
  const std::size_t rk_out = i < c.t() ? oracle::rank(g, dense(c.delta(i)), c.dim(i)) : 0;
  const std::size_t rk_in = i > 0 ? oracle::rank(g, dense(c.delta(i - 1)), c.dim(i - 1)) : 0;
  return c.dim(i) - rk_out - rk_in;
}

Sheaf random_tensor_sheaf(ComplexPtr x, const Field& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LinCode> codes;
  for (int j = 0; j < 3; ++j) {
    Mat g(1, 2);
    g(0, 0) = 1 + rng() % ((1u << f.r()) - 1);
    g(0, 1) = 1 + rng() % ((1u << f.r()) - 1);
    codes.emplace_back(f, g);
  }
  return cubical_tensor_sheaf(x, codes);
}

}  // namespace

TEST_CASE("top homology equals dual global sections") {
  Field f2(1), f4(2);
  std::vector<Sheaf> cases;
  cases.push_back(constant_sheaf(simplicial(catalog::torus7_facets()), f2));
  cases.push_back(constant_sheaf(simplicial(catalog::tetrahedron_boundary_facets()), f4));
  cases.push_back(constant_sheaf(simplicial(catalog::triangle_facets()), f2));
  auto tl = make(catalog::toric_like());
  cases.push_back(sheaf_from_local_codes(tl, f2, uniform_local_codes(*tl, f2, "rep")));
  cases.push_back(random_tensor_sheaf(tl, f4, 3));
  auto cube = make(catalog::single_cube(3));
  cases.push_back(sheaf_from_local_codes(cube, f4, uniform_local_codes(*cube, f4, "full")));
  auto sq = make(catalog::square_toy());
  cases.push_back(sheaf_from_local_codes(sq, f4, uniform_local_codes(*sq, f4, "parity")));

  for (const auto& s : cases) {
    const auto rep = verify_h0_ht(s);
    CHECK(rep.ok());
    CHECK(rep.dim_sections == dual_sections_dim(s));
    if (auto count = count_dual_sections(s)) CHECK(rep.dim_sections == log_q(*count, s.field().r()));
  }
}

TEST_CASE("poincare pairs on locally acyclic sheaves") {
  Field f2(1), f4(2);
  std::vector<Sheaf> cases;
  cases.push_back(constant_sheaf(simplicial(catalog::torus7_facets()), f2));
  cases.push_back(constant_sheaf(simplicial(catalog::torus3_facets()), f2));
  cases.push_back(constant_sheaf(simplicial(catalog::rp3_facets()), f2));
  auto tl = make(catalog::toric_like());
  cases.push_back(sheaf_from_local_codes(tl, f2, uniform_local_codes(*tl, f2, "rep")));
  cases.push_back(random_tensor_sheaf(tl, f4, 11));
  auto cube = make(catalog::single_cube(3));
  cases.push_back(sheaf_from_local_codes(cube, f4, uniform_local_codes(*cube, f4, "full")));

  for (const auto& s : cases) {
    const auto rep = verify_poincare(s);
    REQUIRE(rep.locally_acyclic);
    CHECK(rep.status == DualityStatus::Pass);
    CHECK(rep.pairs.size() == s.t());
    const auto c = sheaf_cochain_complex(s);
    const auto cd = sheaf_cochain_complex(dual_sheaf(s));
    for (const auto& p : rep.pairs) {
      CHECK(p.homology == oracle_betti(c, s.t() - p.i));
      CHECK(p.dual_cohomology == oracle_betti(cd, p.i));
    }
  }
}

TEST_CASE("torus suspension is not locally acyclic") {
  Field f2(1);
  const auto s = constant_sheaf(simplicial(catalog::torus_suspension_facets()), f2);
  const auto rep = verify_poincare(s);
  CHECK_FALSE(rep.locally_acyclic);
  CHECK(rep.status == DualityStatus::NotApplicable);
  CHECK_FALSE(rep.mismatched.empty());
  const auto ex = verify_exactness(s);
  CHECK_FALSE(ex.long_sequence);
  CHECK_FALSE(ex.ok());
  CHECK(std::string(to_string(rep.status)) == "not-applicable");
}

TEST_CASE("exactness statements") {
  Field f2(1), f4(2);
  auto tl = make(catalog::toric_like());
  auto cube = make(catalog::single_cube(3));
  std::vector<Sheaf> cases;
  cases.push_back(constant_sheaf(simplicial(catalog::torus7_facets()), f2));
  cases.push_back(constant_sheaf(simplicial(catalog::torus3_facets()), f4));
  cases.push_back(sheaf_from_local_codes(tl, f2, uniform_local_codes(*tl, f2, "rep")));
  cases.push_back(random_tensor_sheaf(tl, f4, 5));
  cases.push_back(sheaf_from_local_codes(cube, f4, uniform_local_codes(*cube, f4, "full")));
  for (const auto& s : cases) {
    const auto rep = verify_exactness(s);
    CHECK(rep.vertex_chains);
    CHECK(rep.gluing);
    CHECK(rep.local_injective);
    CHECK(rep.top_identification);
    CHECK(rep.dual_kernel);
    CHECK(rep.long_sequence);
    CHECK(rep.findings.empty());
  }
}
