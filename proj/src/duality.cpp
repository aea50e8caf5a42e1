#include "sheafccz/duality.hpp"

#include <algorithm>

#include "sheafccz/errors.hpp"
#include "sheafccz/linalg.hpp"

namespace sheafccz {

namespace {

// Scalar b with F_τ = span{b} for a top cell τ.
Elem top_scalar(const Sheaf& s, std::uint32_t tau) {
  const Mat& b = s.basis(s.t(), tau);
  if (b.rows() != 1 || b.cols() != 1 || b(0, 0) == 0)
    throw IntegrityError("top cell " + std::to_string(tau) + " does not carry F_q");
  return b(0, 0);
}

// Rows of m (coefficients on X(t)) turned into functions on X(t).
Mat top_functions(const Sheaf& s, Mat m) {
  const Field& f = s.field();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Elem b = top_scalar(s, static_cast<std::uint32_t>(c));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = f.mul(m(r, c), b);
  }
  return m;
}

// Functions a on X(t) with a restricted to every (t-1)-cell orthogonal to its
// local code.
Mat dual_section_space(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const std::size_t n = x.count(t);
  Mat constraints(0, n);
  for (std::uint32_t e = 0; e < x.count(t - 1); ++e) {
    const auto& supp = s.support(t - 1, e);
    const Mat& g = s.basis(t - 1, e);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      FVec row(n, 0);
      for (std::size_t p = 0; p < supp.size(); ++p) row[supp[p]] = g(r, p);
      constraints.append_row(row);
    }
  }
  return kernel_basis(s.field(), constraints);
}

bool spans_equal_or_empty(const Field& f, const Mat& a, const Mat& b) {
  if (a.rows() == 0 || b.rows() == 0) return rank(f, a) == 0 && rank(f, b) == 0;
  return same_span(f, a, b);
}

}  // namespace

const char* to_string(DualityStatus s) {
  switch (s) {
    case DualityStatus::Pass: return "pass";
    case DualityStatus::Fail: return "fail";
    case DualityStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

H0HtReport verify_h0_ht(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const Field& f = s.field();
  const std::size_t n = x.count(t);
  H0HtReport rep;

  const Mat sections = dual_section_space(s);
  rep.dim_sections = sections.rows();

  const CochainComplex c = sheaf_cochain_complex(s);
  const Mat ht = top_functions(s, cohomology(c, t, Side::Homology).cycles);
  rep.dim_ht = ht.rows();
  rep.ht_is_sections = spans_equal_or_empty(f, ht, sections);

  // Global sections of F⊥ evaluated on top cells through any vertex below.
  const Sheaf dual = dual_sheaf(s);
  const CochainComplex cd = sheaf_cochain_complex(dual);
  const Mat h0 = cohomology(cd, 0, Side::Cohomology).cycles;
  rep.dim_h0_dual = h0.rows();
  Mat values(0, n);
  bool consistent = true;
  for (std::size_t r = 0; r < h0.rows(); ++r) {
    FVec val(n, 0);
    std::vector<bool> seen(n, false);
    for (std::uint32_t v = 0; v < x.count(0); ++v) {
      const std::size_t off = cd.offset(0, v);
      const auto coeffs = h0.row(r).subspan(off, dual.dim(0, v));
      const FVec fn = dual.section(0, v, coeffs);
      const auto& supp = dual.support(0, v);
      for (std::size_t p = 0; p < supp.size(); ++p) {
        const auto tau = supp[p];
        if (seen[tau] && val[tau] != fn[p]) consistent = false;
        val[tau] = fn[p];
        seen[tau] = true;
      }
    }
    values.append_row(val);
  }
  rep.h0_onto_sections =
      consistent && rank(f, values) == h0.rows() && spans_equal_or_empty(f, values, sections);
  return rep;
}

DualityReport verify_poincare(const Sheaf& s) {
  const unsigned t = s.t();
  DualityReport rep;
  rep.locally_acyclic = local_acyclicity(s).ok();
  const CochainComplex c = sheaf_cochain_complex(s);
  const CochainComplex cd = sheaf_cochain_complex(dual_sheaf(s));
  for (unsigned i = 0; i < t; ++i) {
    DualityPair p{i, betti(c, t - i, Side::Homology), betti(cd, i, Side::Cohomology)};
    if (p.homology != p.dual_cohomology) rep.mismatched.push_back(i);
    rep.pairs.push_back(p);
  }
  if (!rep.locally_acyclic)
    rep.status = DualityStatus::NotApplicable;
  else
    rep.status = rep.mismatched.empty() ? DualityStatus::Pass : DualityStatus::Fail;
  return rep;
}

ExactnessReport verify_exactness(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const Field& f = s.field();
  const Sheaf dual = dual_sheaf(s);
  ExactnessReport rep;
  auto note = [&](unsigned k, std::uint32_t i, std::string what) { rep.findings.push_back({k, i, std::move(what)}); };

  // C^0(σ, F) = F_σ for a vertex, so the product over vertices is C^0(X, F).
  rep.vertex_chains = true;
  for (std::uint32_t v = 0; v < x.count(0); ++v) {
    const auto lc = local_cochains(s, 0, v);
    if (lc.dims[0] != s.dim(0, v)) {
      rep.vertex_chains = false;
      note(0, v, "local degree-0 space differs from the stalk");
    }
  }

  // Gluing: a ↦ (a|_{X_{≥v}(i)})_v, then (b_v)_v ↦ (b_v + b_w restricted)_{vw}.
  rep.gluing = true;
  for (unsigned i = 1; i <= t; ++i) {
    std::vector<std::size_t> cell_off(x.count(i) + 1, 0);
    for (std::uint32_t r = 0; r < x.count(i); ++r) cell_off[r + 1] = cell_off[r] + s.dim(i, r);
    const std::size_t dim_global = cell_off.back();

    std::vector<std::vector<std::uint32_t>> vcells(x.count(0));
    std::vector<std::size_t> voff(x.count(0) + 1, 0);
    for (std::uint32_t v = 0; v < x.count(0); ++v) {
      vcells[v] = x.up_set(0, v, i);
      std::size_t d = 0;
      for (auto r : vcells[v]) d += s.dim(i, r);
      voff[v + 1] = voff[v] + d;
    }
    // Position of (v, ρ, a) in the vertex product.
    auto vpos = [&](std::uint32_t v, std::uint32_t rho) {
      const auto& cs = vcells[v];
      const auto it = std::lower_bound(cs.begin(), cs.end(), rho);
      std::size_t p = voff[v];
      for (auto j = cs.begin(); j != it; ++j) p += s.dim(i, *j);
      return p;
    };

    std::vector<SpEntry> g;
    for (std::uint32_t v = 0; v < x.count(0); ++v)
      for (auto rho : vcells[v]) {
        const std::size_t p = vpos(v, rho);
        for (std::size_t a = 0; a < s.dim(i, rho); ++a)
          g.push_back({static_cast<std::uint32_t>(p + a), static_cast<std::uint32_t>(cell_off[rho] + a), 1});
      }
    const SpMat gm = SpMat::from_triplets(f, voff.back(), dim_global, std::move(g));

    std::vector<SpEntry> d;
    std::size_t erow = 0;
    for (std::uint32_t e = 0; e < x.count(1); ++e) {
      const auto ecells = x.up_set(1, e, i);
      const auto verts = x.down_set(1, e, 0);
      std::size_t local = 0;
      for (auto rho : ecells) {
        for (auto v : verts) {
          const std::size_t p = vpos(v, rho);
          for (std::size_t a = 0; a < s.dim(i, rho); ++a)
            d.push_back({static_cast<std::uint32_t>(erow + local + a), static_cast<std::uint32_t>(p + a), 1});
        }
        local += s.dim(i, rho);
      }
      erow += local;
    }
    const SpMat dm = SpMat::from_triplets(f, erow, voff.back(), std::move(d));

    const bool composes = spmul(f, dm, gm).is_zero();
    const std::size_t rg = rank(f, gm);
    const std::size_t rd = rank(f, dm);
    if (!composes || rg != dim_global || rg + rd != voff.back()) {
      rep.gluing = false;
      note(i, 0, "gluing sequence not exact in degree " + std::to_string(i));
    }
  }

  // C^t(X, F⊥) and ∏_{X(t)} C^t(σ, F) are both one copy of F_q per top cell.
  rep.top_identification = true;
  for (std::uint32_t tau = 0; tau < x.count(t); ++tau)
    if (s.dim(t, tau) != 1 || dual.dim(t, tau) != 1) {
      rep.top_identification = false;
      note(t, tau, "top-cell space is not F_q");
    }

  rep.local_injective = true;
  rep.dual_kernel = true;
  rep.long_sequence = true;
  for (unsigned k = 0; k < t; ++k) {
    for (std::uint32_t i = 0; i < x.count(k); ++i) {
      const auto lc = local_cochains(s, k, i);
      std::vector<std::size_t> ranks;
      for (const auto& m : lc.d) ranks.push_back(rank(f, m));

      if (ranks[0] != lc.dims[0]) {
        rep.local_injective = false;
        rep.long_sequence = false;
        note(k, i, "F_σ does not embed into the next local term");
      }
      for (unsigned j = k + 1; j < t; ++j) {
        const std::size_t a = j - k;
        if (ranks[a - 1] + ranks[a] != lc.dims[a]) {
          rep.long_sequence = false;
          note(k, i, "local sequence not exact at degree " + std::to_string(j));
        }
      }

      // Last local coboundary, landing in functions on X_{≥σ}(t).
      const std::size_t last = t - 1 - k;
      Mat dt = lc.d[last];
      const auto& tops = lc.cells[last + 1];
      for (std::size_t r = 0; r < tops.size(); ++r) {
        const Elem b = top_scalar(s, tops[r]);
        for (std::size_t c = 0; c < dt.cols(); ++c) dt(r, c) = f.mul(dt(r, c), b);
      }
      const Mat& dual_sigma = dual.basis(k, i);
      const Mat ker = kernel_basis(f, dt.transposed());
      if (!spans_equal_or_empty(f, ker, dual_sigma)) {
        rep.dual_kernel = false;
        note(k, i, "kernel of the local boundary differs from the dual stalk");
      }
      // Exact at C^t(σ): the image of the last coboundary is the annihilator
      // of F⊥_σ; the pairing map onto F⊥_σ is then onto.
      const bool orthogonal = dual_sigma.rows() == 0 || matmul(f, dual_sigma, dt).data() == Mat(dual_sigma.rows(), dt.cols()).data();
      if (!orthogonal || ranks[last] + dual_sigma.rows() != tops.size()) {
        rep.long_sequence = false;
        note(k, i, "local sequence not exact at the top degree");
      }
    }
  }
  return rep;
}

}  // namespace sheafccz
