#include "sheafccz/sheaf.hpp"

#include <algorithm>
#include <string>

#include "sheafccz/linalg.hpp"

namespace sheafccz {

namespace {

std::vector<std::size_t> positions_in(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
  std::vector<std::size_t> pos(small.size());
  for (std::size_t m = 0; m < small.size(); ++m) {
    auto it = std::lower_bound(big.begin(), big.end(), small[m]);
    if (it == big.end() || *it != small[m]) throw ValidationError("support is not nested");
    pos[m] = static_cast<std::size_t>(it - big.begin());
  }
  return pos;
}

std::string cell_name(const CellComplex& x, unsigned k, std::uint32_t i) {
  return std::to_string(k) + "-cell " + x.describe(k, i);
}

}  // namespace

Sheaf::CellSpace Sheaf::make_space(const Field& f, Mat basis) {
  CellSpace c;
  const Echelon e = rref(f, basis);
  if (e.rank() != basis.rows()) throw ValidationError("section basis rows are linearly dependent");
  c.pivots = e.pivots;
  c.pivot_inverse = *inverse(f, basis.select_cols(c.pivots));
  c.basis = std::move(basis);
  return c;
}

Sheaf::Sheaf(ComplexPtr x, Field f, std::vector<std::vector<Mat>> bases) : x_(std::move(x)), f_(std::move(f)) {
  if (bases.size() != x_->t() + 1) throw ShapeError("section bases must cover dimensions 0..t");
  cells_.resize(bases.size());
  for (unsigned k = 0; k < bases.size(); ++k) {
    if (bases[k].size() != x_->count(k))
      throw ShapeError("expected " + std::to_string(x_->count(k)) + " section bases in dimension " + std::to_string(k));
    cells_[k].reserve(bases[k].size());
    for (std::uint32_t i = 0; i < bases[k].size(); ++i) {
      if (bases[k][i].cols() != x_->top_above(k, i).size())
        throw ShapeError("section basis at " + cell_name(*x_, k, i) + " has " + std::to_string(bases[k][i].cols()) +
                         " columns, support has " + std::to_string(x_->top_above(k, i).size()));
      cells_[k].push_back(make_space(f_, std::move(bases[k][i])));
    }
  }
}

LinCode Sheaf::local_code(std::uint32_t i) const { return LinCode(f_, basis(t() - 1, i)); }

FVec Sheaf::section(unsigned k, std::uint32_t i, std::span<const Elem> coeffs) const {
  return row_combination(f_, coeffs, basis(k, i));
}

std::optional<FVec> Sheaf::coordinates(unsigned k, std::uint32_t i, std::span<const Elem> func) const {
  const CellSpace& c = cells_[k][i];
  if (func.size() != c.basis.cols()) throw ShapeError("function length does not match support of " + cell_name(*x_, k, i));
  FVec fp(c.pivots.size());
  for (std::size_t m = 0; m < fp.size(); ++m) fp[m] = func[c.pivots[m]];
  FVec coeff = row_combination(f_, fp, c.pivot_inverse);
  if (row_combination(f_, coeff, c.basis) != FVec(func.begin(), func.end())) return std::nullopt;
  return coeff;
}

std::vector<std::size_t> Sheaf::support_positions(unsigned ks, std::uint32_t s, unsigned kp, std::uint32_t p) const {
  return positions_in(support(ks, s), support(kp, p));
}

Mat Sheaf::restriction(unsigned ks, std::uint32_t s, unsigned kp, std::uint32_t p) const {
  const bool face = kp == ks + 1 ? std::binary_search(x_->up(ks, s).begin(), x_->up(ks, s).end(), p)
                                 : x_->is_face(ks, s, kp, p);
  if (!face)
    throw ValidationError("no restriction: " + cell_name(*x_, ks, s) + " is not a face of " + cell_name(*x_, kp, p));
  const auto pos = support_positions(ks, s, kp, p);
  const Mat& b = basis(ks, s);
  Mat r(dim(kp, p), b.rows());
  FVec g(pos.size());
  for (std::size_t a = 0; a < b.rows(); ++a) {
    for (std::size_t m = 0; m < pos.size(); ++m) g[m] = b(a, pos[m]);
    const auto c = coordinates(kp, p, g);
    if (!c)
      throw IntegrityError("restriction of a section over " + cell_name(*x_, ks, s) + " is not a section over " +
                           cell_name(*x_, kp, p));
    for (std::size_t m = 0; m < c->size(); ++m) r(m, a) = (*c)[m];
  }
  return r;
}

Sheaf Sheaf::with_basis(unsigned k, std::uint32_t i, Mat basis) const {
  if (basis.cols() != support(k, i).size()) throw ShapeError("replacement basis has the wrong number of columns");
  Sheaf out = *this;
  out.cells_[k][i] = make_space(f_, std::move(basis));
  return out;
}

Sheaf sheaf_from_local_codes(ComplexPtr x, const Field& f, const std::vector<LinCode>& codes) {
  const unsigned t = x->t();
  if (t == 0) throw ValidationError("sheaves need a complex of dimension at least 1");
  if (codes.size() < x->count(t - 1))
    throw LookupError("no local code assigned to " + cell_name(*x, t - 1, static_cast<std::uint32_t>(codes.size())));
  if (codes.size() > x->count(t - 1)) throw ShapeError("more local codes than (t-1)-cells");

  std::vector<std::vector<Mat>> bases(t + 1);
  std::vector<std::vector<Mat>> checks(t + 1);
  bases[t].assign(x->count(t), Mat::identity(1));
  bases[t - 1].resize(x->count(t - 1));
  checks[t - 1].resize(x->count(t - 1));
  for (std::uint32_t i = 0; i < x->count(t - 1); ++i) {
    const auto n = x->top_above(t - 1, i).size();
    if (codes[i].length() != n)
      throw ShapeError("local code at " + cell_name(*x, t - 1, i) + " has length " + std::to_string(codes[i].length()) +
                       ", the cell has " + std::to_string(n) + " top cells above it");
    if (!(codes[i].field() == f)) throw ShapeError("local code over a different field");
    bases[t - 1][i] = codes[i].generator();
    checks[t - 1][i] = codes[i].parity_check();
  }
  for (unsigned k = t - 1; k-- > 0;) {
    bases[k].resize(x->count(k));
    checks[k].resize(x->count(k));
    for (std::uint32_t i = 0; i < x->count(k); ++i) {
      const auto& sup = x->top_above(k, i);
      Mat stack(0, sup.size());
      FVec row(sup.size());
      for (auto p : x->up(k, i)) {
        const auto pos = positions_in(sup, x->top_above(k + 1, p));
        const Mat& h = checks[k + 1][p];
        for (std::size_t r = 0; r < h.rows(); ++r) {
          std::fill(row.begin(), row.end(), 0);
          for (std::size_t m = 0; m < pos.size(); ++m) row[pos[m]] = h(r, m);
          stack.append_row(row);
        }
      }
      const Echelon e = rref(f, stack);
      bases[k][i] = kernel_from_echelon(f, e, sup.size());
      checks[k][i] = e.basis;
    }
  }
  return Sheaf(std::move(x), f, std::move(bases));
}

std::vector<LinCode> cubical_local_codes(const CellComplex& x, const std::vector<LinCode>& per_direction) {
  const unsigned t = x.t();
  if (per_direction.size() != t)
    throw ShapeError("expected " + std::to_string(t) + " direction codes, got " + std::to_string(per_direction.size()));
  for (const auto& c : per_direction)
    if (c.length() != x.delta())
      throw ShapeError("direction code of length " + std::to_string(c.length()) + " on a complex with Δ = " +
                       std::to_string(x.delta()));
  std::vector<LinCode> out;
  out.reserve(x.count(t - 1));
  for (std::uint32_t i = 0; i < x.count(t - 1); ++i) {
    const auto cell = x.cubical_cell(t - 1, i);
    unsigned j = 0;
    while ((cell.type >> j) & 1u) ++j;
    const auto by_label = x.cubical_top_by_label(t - 1, i);
    const auto pos = positions_in(x.top_above(t - 1, i), by_label);
    out.push_back(per_direction[j].permuted(std::vector<std::uint32_t>(pos.begin(), pos.end())));
  }
  return out;
}

std::vector<LinCode> uniform_local_codes(const CellComplex& x, const Field& f, const std::string& name) {
  std::vector<LinCode> out;
  const unsigned t = x.t();
  for (std::uint32_t i = 0; i < x.count(t - 1); ++i) out.push_back(named_code(f, name, x.top_above(t - 1, i).size()));
  return out;
}

Sheaf cubical_tensor_sheaf(ComplexPtr x, const std::vector<LinCode>& per_direction) {
  const unsigned t = x->t();
  if (!x->is_cubical()) throw ValidationError("cubical_tensor_sheaf needs a cubical complex");
  if (per_direction.size() != t) throw ShapeError("expected one code per direction");
  const Field f = per_direction.front().field();
  for (const auto& c : per_direction)
    if (c.length() != x->delta()) throw ShapeError("direction code length does not match Δ");
  std::vector<std::vector<Mat>> bases(t + 1);
  for (unsigned k = 0; k <= t; ++k) {
    bases[k].resize(x->count(k));
    for (std::uint32_t i = 0; i < x->count(k); ++i) {
      const auto cell = x->cubical_cell(k, i);
      Mat g = Mat::identity(1);
      for (unsigned j = 0; j < t; ++j)
        if (!((cell.type >> j) & 1u)) g = kron(f, g, per_direction[j].generator());
      const auto pos = positions_in(x->top_above(k, i), x->cubical_top_by_label(k, i));
      Mat b(g.rows(), g.cols());
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t m = 0; m < g.cols(); ++m) b(r, pos[m]) = g(r, m);
      bases[k][i] = std::move(b);
    }
  }
  return Sheaf(std::move(x), f, std::move(bases));
}

Sheaf constant_sheaf(ComplexPtr x, const Field& f) {
  auto codes = uniform_local_codes(*x, f, "rep");
  return sheaf_from_local_codes(std::move(x), f, codes);
}

Sheaf dual_sheaf(const Sheaf& s) {
  std::vector<LinCode> codes;
  for (std::uint32_t i = 0; i < s.complex().count(s.t() - 1); ++i) codes.push_back(dual(s.local_code(i)));
  return sheaf_from_local_codes(s.complex_ptr(), s.field(), codes);
}

namespace {

void check_compatible(const Sheaf& a, const Sheaf& b) {
  if (a.complex_ptr() != b.complex_ptr()) throw ShapeError("sheaves live on different complexes");
  if (!(a.field() == b.field())) throw ShapeError("sheaves over different fields");
}

}  // namespace

Sheaf product_sheaf(const Sheaf& a, const Sheaf& b) {
  check_compatible(a, b);
  std::vector<LinCode> codes;
  for (std::uint32_t i = 0; i < a.complex().count(a.t() - 1); ++i)
    codes.push_back(schur_span(a.local_code(i), b.local_code(i)));
  return sheaf_from_local_codes(a.complex_ptr(), a.field(), codes);
}

Sheaf product_sheaf(const Sheaf& a, const Sheaf& b, const Sheaf& c) {
  check_compatible(a, b);
  check_compatible(a, c);
  std::vector<LinCode> codes;
  for (std::uint32_t i = 0; i < a.complex().count(a.t() - 1); ++i)
    codes.push_back(schur_span(a.local_code(i), b.local_code(i), c.local_code(i)));
  return sheaf_from_local_codes(a.complex_ptr(), a.field(), codes);
}

LocalCochains local_cochains(const Sheaf& s, unsigned k, std::uint32_t i) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  LocalCochains lc;
  lc.base_dim = k;
  for (unsigned j = k; j <= t; ++j) {
    lc.cells.push_back(x.up_set(k, i, j));
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (auto rho : lc.cells.back()) {
      off.push_back(total);
      total += s.dim(j, rho);
    }
    lc.offsets.push_back(std::move(off));
    lc.dims.push_back(total);
  }
  for (unsigned j = k; j < t; ++j) {
    const std::size_t a = j - k;
    Mat d(lc.dims[a + 1], lc.dims[a]);
    for (std::size_t r = 0; r < lc.cells[a].size(); ++r) {
      const auto rho = lc.cells[a][r];
      for (auto up : x.up(j, rho)) {
        const auto& next = lc.cells[a + 1];
        const std::size_t c = static_cast<std::size_t>(std::lower_bound(next.begin(), next.end(), up) - next.begin());
        const Mat block = s.restriction(j, rho, j + 1, up);
        for (std::size_t p = 0; p < block.rows(); ++p)
          for (std::size_t q = 0; q < block.cols(); ++q) d(lc.offsets[a + 1][c] + p, lc.offsets[a][r] + q) = block(p, q);
      }
    }
    lc.d.push_back(std::move(d));
  }
  return lc;
}

AxiomReport verify_axioms(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const Field& f = s.field();
  AxiomReport rep;
  for (unsigned k = 0; k <= t; ++k) {
    for (std::uint32_t i = 0; i < x.count(k); ++i) {
      ++rep.cells_checked;
      if (k == t) {
        if (s.dim(k, i) != 1) rep.failures.push_back({k, i, "top-cell space is not F_q"});
        continue;
      }
      bool presheaf = true;
      for (auto p : x.up(k, i)) {
        try {
          s.restriction(k, i, k + 1, p);
        } catch (const IntegrityError&) {
          rep.failures.push_back({k, i, "restriction to " + x.describe(k + 1, p) + " leaves the target space"});
          presheaf = false;
        }
      }
      if (!presheaf) continue;
      // Only the first two maps of the up-complex are needed here.
      const auto up1 = x.up_set(k, i, k + 1);
      std::size_t dim1 = 0;
      std::vector<std::size_t> off1;
      for (auto p : up1) {
        off1.push_back(dim1);
        dim1 += s.dim(k + 1, p);
      }
      Mat d0(dim1, s.dim(k, i));
      for (std::size_t a = 0; a < up1.size(); ++a) {
        const Mat r = s.restriction(k, i, k + 1, up1[a]);
        for (std::size_t p = 0; p < r.rows(); ++p)
          for (std::size_t q = 0; q < r.cols(); ++q) d0(off1[a] + p, q) = r(p, q);
      }
      const std::size_t r0 = rank(f, d0);
      if (r0 != s.dim(k, i)) {
        rep.failures.push_back({k, i, "identity: F_σ does not inject into the cells above"});
        continue;
      }
      if (k + 2 > t) continue;
      const auto up2 = x.up_set(k, i, k + 2);
      std::size_t dim2 = 0;
      std::vector<std::size_t> off2;
      for (auto p : up2) {
        off2.push_back(dim2);
        dim2 += s.dim(k + 2, p);
      }
      Mat d1(dim2, dim1);
      bool ok = true;
      for (std::size_t a = 0; a < up1.size() && ok; ++a) {
        for (auto p2 : x.up(k + 1, up1[a])) {
          Mat r;
          try {
            r = s.restriction(k + 1, up1[a], k + 2, p2);
          } catch (const IntegrityError&) {
            ok = false;
            break;
          }
          const std::size_t c = static_cast<std::size_t>(std::lower_bound(up2.begin(), up2.end(), p2) - up2.begin());
          for (std::size_t p = 0; p < r.rows(); ++p)
            for (std::size_t q = 0; q < r.cols(); ++q) d1(off2[c] + p, off1[a] + q) = r(p, q);
        }
      }
      if (!ok) continue;  // reported at the offending cell itself
      const std::size_t ker1 = dim1 - rank(f, d1);
      if (ker1 != r0)
        rep.failures.push_back({k, i, "gluability: " + std::to_string(ker1 - r0) +
                                          " compatible families do not come from F_σ"});
    }
  }
  return rep;
}

AxiomReport local_acyclicity(const Sheaf& s) {
  const CellComplex& x = s.complex();
  const unsigned t = x.t();
  const Field& f = s.field();
  AxiomReport rep;
  for (unsigned k = 0; k + 3 <= t; ++k) {
    for (std::uint32_t i = 0; i < x.count(k); ++i) {
      ++rep.cells_checked;
      const auto lc = local_cochains(s, k, i);
      std::vector<std::size_t> ranks;
      for (const auto& d : lc.d) ranks.push_back(rank(f, d));
      // Term C^j(σ) sits at index j - k; interior terms of C^{k+1} -> ... -> C^t.
      for (unsigned j = k + 2; j + 1 <= t; ++j) {
        const std::size_t a = j - k;
        const std::size_t ker = lc.dims[a] - ranks[a];
        if (ker != ranks[a - 1]) {
          rep.failures.push_back({k, i, "local cohomology of dimension " + std::to_string(ker - ranks[a - 1]) +
                                            " at degree " + std::to_string(j)});
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace sheafccz
