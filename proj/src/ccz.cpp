#include "sheafccz/ccz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "sheafccz/linalg.hpp"

namespace sheafccz {

namespace {

FVec unit(std::size_t n, std::size_t j) {
  FVec v(n, 0);
  v[j] = 1;
  return v;
}

FVec random_vec(std::size_t n, const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> elem(0, f.q() - 1);
  FVec v(n);
  for (auto& x : v) x = static_cast<Elem>(elem(rng));
  return v;
}

TrilinearForm from_accumulator(const Field& f, std::array<std::size_t, 3> n,
                               const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Elem>& acc) {
  TrilinearForm t{f, n, {}};
  for (const auto& [key, a] : acc)
    if (a) t.entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), a});
  return t;
}

// Z generator sum for one leg: reps combination plus δ of a random cochain.
FVec random_cycle(const Field& f, const CCZLeg& leg, std::mt19937_64& rng, FVec* beta_out) {
  FVec z = row_combination(f, random_vec(leg.reps.rows(), f, rng), leg.reps);
  if (z.empty()) z.assign(leg.n, 0);
  const FVec b = spmv(f, leg.boundary, random_vec(leg.boundary.cols(), f, rng));
  for (std::size_t i = 0; i < z.size(); ++i) z[i] ^= b[i];
  if (beta_out) *beta_out = spmv(f, leg.boundary, random_vec(leg.boundary.cols(), f, rng));
  return z;
}

TrilinearForm tensor_from_terms(const std::array<const CochainComplex*, 3>& cs, const std::array<unsigned, 3>& ls,
                                const std::vector<FormTerm>& terms) {
  const Field& f = cs[0]->field();
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Elem> acc;
  for (const auto& tm : terms) {
    std::array<std::vector<std::pair<std::uint32_t, Elem>>, 3> vals;  // (coordinate, basis value at top)
    bool empty = false;
    for (int i = 0; i < 3 && !empty; ++i) {
      const Sheaf& s = cs[i]->sheaf();
      const auto& sup = s.support(ls[i], tm.cells[i]);
      const auto pos = static_cast<std::size_t>(std::lower_bound(sup.begin(), sup.end(), tm.top) - sup.begin());
      const Mat& b = s.basis(ls[i], tm.cells[i]);
      const std::size_t off = cs[i]->offset(ls[i], tm.cells[i]);
      for (std::size_t a = 0; a < b.rows(); ++a)
        if (b(a, pos)) vals[i].push_back({static_cast<std::uint32_t>(off + a), b(a, pos)});
      empty = vals[i].empty();
    }
    if (empty) continue;
    for (const auto& [j1, v1] : vals[0])
      for (const auto& [j2, v2] : vals[1])
        for (const auto& [j3, v3] : vals[2]) acc[{j1, j2, j3}] ^= f.mul(v1, f.mul(v2, v3));
  }
  return from_accumulator(f, {cs[0]->dim(ls[0]), cs[1]->dim(ls[1]), cs[2]->dim(ls[2])}, acc);
}

void require_one_complex(const std::array<const CochainComplex*, 3>& cs) {
  for (const auto* c : cs) {
    if (c->sheaf().complex_ptr() != cs[0]->sheaf().complex_ptr())
      throw ShapeError("the three sheaves must live on one complex");
    if (!(c->field() == cs[0]->field())) throw ShapeError("the three sheaves must share a field");
  }
}

}  // namespace

Elem TrilinearForm::evaluate(std::span<const Elem> x, std::span<const Elem> y, std::span<const Elem> z) const {
  if (x.size() != n[0] || y.size() != n[1] || z.size() != n[2]) throw ShapeError("argument lengths do not match form");
  Elem s = 0;
  for (const auto& e : entries) {
    const Elem a = x[e.j1], b = y[e.j2], c = z[e.j3];
    if (a && b && c) s ^= field.mul(e.a, field.mul(a, field.mul(b, c)));
  }
  return s;
}

TrilinearForm materialize_form(const Field& f, const FormEvaluator& eval, std::array<std::size_t, 3> n,
                               const Locality* hint, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // trilinearity spot check, one leg at a time
  for (int leg = 0; leg < 3; ++leg) {
    std::array<FVec, 3> a{random_vec(n[0], f, rng), random_vec(n[1], f, rng), random_vec(n[2], f, rng)};
    FVec other = random_vec(n[leg], f, rng);
    const Elem c = static_cast<Elem>(1 + rng() % (f.q() - 1));
    const Elem base = eval(a[0], a[1], a[2]);
    auto b = a;
    b[leg] = other;
    const Elem add = eval(b[0], b[1], b[2]);
    for (std::size_t i = 0; i < n[leg]; ++i) b[leg][i] = f.mul(c, a[leg][i]) ^ other[i];
    if (eval(b[0], b[1], b[2]) != (f.mul(c, base) ^ add)) throw ValidationError("form is not trilinear");
  }
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Elem> acc;
  auto visit = [&](std::uint32_t j1, std::uint32_t j2, std::uint32_t j3) {
    const auto key = std::make_tuple(j1, j2, j3);
    if (acc.count(key)) return;
    acc[key] = eval(unit(n[0], j1), unit(n[1], j2), unit(n[2], j3));
  };
  if (hint) {
    for (const auto& g : hint->groups)
      for (auto j1 : g[0])
        for (auto j2 : g[1])
          for (auto j3 : g[2]) visit(j1, j2, j3);
  } else {
    for (std::uint32_t j1 = 0; j1 < n[0]; ++j1)
      for (std::uint32_t j2 = 0; j2 < n[1]; ++j2)
        for (std::uint32_t j3 = 0; j3 < n[2]; ++j3) visit(j1, j2, j3);
  }
  TrilinearForm t = from_accumulator(f, n, acc);
  for (int trial = 0; trial < 8; ++trial) {
    const FVec x = random_vec(n[0], f, rng), y = random_vec(n[1], f, rng), z = random_vec(n[2], f, rng);
    if (t.evaluate(x, y, z) != eval(x, y, z))
      throw ValidationError("tabulated form disagrees with the evaluator (locality hint too narrow?)");
  }
  return t;
}

TrilinearForm cubical_form_tensor(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& c3) {
  require_one_complex({&c1, &c2, &c3});
  return tensor_from_terms({&c1, &c2, &c3}, {1, 1, 1}, cubical_trilinear_terms(c1.sheaf().complex()));
}

TrilinearForm simplicial_form_tensor(const CochainComplex& c1, unsigned l1, const CochainComplex& c2, unsigned l2,
                                     const CochainComplex& c3, unsigned l3) {
  require_one_complex({&c1, &c2, &c3});
  return tensor_from_terms({&c1, &c2, &c3}, {l1, l2, l3},
                           simplicial_trilinear_terms(c1.sheaf().complex(), l1, l2, l3));
}

Locality top_cell_locality(const CochainComplex& c1, unsigned l1, const CochainComplex& c2, unsigned l2,
                           const CochainComplex& c3, unsigned l3) {
  const std::array<const CochainComplex*, 3> cs{&c1, &c2, &c3};
  const std::array<unsigned, 3> ls{l1, l2, l3};
  require_one_complex(cs);
  const CellComplex& x = c1.sheaf().complex();
  Locality loc;
  for (std::uint32_t tau = 0; tau < x.count(x.t()); ++tau) {
    std::array<std::vector<std::uint32_t>, 3> g;
    for (int i = 0; i < 3; ++i)
      for (auto cell : x.down_set(x.t(), tau, ls[i]))
        for (std::size_t a = 0; a < cs[i]->sheaf().dim(ls[i], cell); ++a)
          g[i].push_back(static_cast<std::uint32_t>(cs[i]->offset(ls[i], cell) + a));
    loc.groups.push_back(std::move(g));
  }
  return loc;
}

std::size_t n_ccz(const TrilinearForm& t) { return t.entries.size(); }

std::size_t w_ccz(const TrilinearForm& t) {
  std::size_t w = 0;
  for (int leg = 0; leg < 3; ++leg) {
    std::vector<std::size_t> cnt(t.n[leg], 0);
    for (const auto& e : t.entries) {
      const std::uint32_t j = leg == 0 ? e.j1 : leg == 1 ? e.j2 : e.j3;
      w = std::max(w, ++cnt[j]);
    }
  }
  return w;
}

void write_gate_list(std::ostream& os, const TrilinearForm& t) {
  for (const auto& e : t.entries) os << "CCZ " << e.j1 << ' ' << e.j2 << ' ' << e.j3 << ' ' << e.a << '\n';
}

CCZLeg leg_from_complex(const CochainComplex& c, unsigned level) {
  if (level > c.t()) throw DomainError("CCZ leg level must lie in 0..t");
  CCZLeg leg;
  leg.n = c.dim(level);
  leg.reps = cohomology(c, level).reps;
  leg.boundary = level > 0 ? c.delta(level - 1) : SpMat(leg.n, 0);
  return leg;
}

CCZCode cubical_ccz_code(std::shared_ptr<const CochainComplex> c1, std::shared_ptr<const CochainComplex> c2,
                         std::shared_ptr<const CochainComplex> c3, bool materialize) {
  require_one_complex({c1.get(), c2.get(), c3.get()});
  CCZCode code{c1->field(), {leg_from_complex(*c1, 1), leg_from_complex(*c2, 1), leg_from_complex(*c3, 1)}, {}, {},
               "cubical"};
  code.f = [c1, c2, c3](std::span<const Elem> x, std::span<const Elem> y, std::span<const Elem> z) {
    return cubical_trilinear_f(make_cochain(*c1, 1, FVec(x.begin(), x.end())),
                               make_cochain(*c2, 1, FVec(y.begin(), y.end())),
                               make_cochain(*c3, 1, FVec(z.begin(), z.end())));
  };
  if (materialize) code.form = cubical_form_tensor(*c1, *c2, *c3);
  return code;
}

CCZCode simplicial_ccz_code(std::shared_ptr<const CochainComplex> c1, unsigned l1,
                            std::shared_ptr<const CochainComplex> c2, unsigned l2,
                            std::shared_ptr<const CochainComplex> c3, unsigned l3, bool materialize) {
  require_one_complex({c1.get(), c2.get(), c3.get()});
  CCZCode code{c1->field(), {leg_from_complex(*c1, l1), leg_from_complex(*c2, l2), leg_from_complex(*c3, l3)}, {}, {},
               "cup"};
  code.f = [=](std::span<const Elem> x, std::span<const Elem> y, std::span<const Elem> z) {
    return simplicial_trilinear_f(make_cochain(*c1, l1, FVec(x.begin(), x.end())),
                                  make_cochain(*c2, l2, FVec(y.begin(), y.end())),
                                  make_cochain(*c3, l3, FVec(z.begin(), z.end())));
  };
  if (materialize) code.form = simplicial_form_tensor(*c1, l1, *c2, l2, *c3, l3);
  return code;
}

CertificationReport certify_ccz(const CCZCode& code, std::size_t trials, std::uint64_t seed) {
  CertificationReport rep;
  rep.form = code.name;
  rep.seed = seed;
  std::mt19937_64 master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t ts = master();
    std::mt19937_64 rng(ts);
    std::array<FVec, 3> zeta, beta, shifted;
    for (int i = 0; i < 3; ++i) {
      zeta[i] = random_cycle(code.field, code.legs[i], rng, &beta[i]);
      shifted[i] = zeta[i];
      for (std::size_t j = 0; j < shifted[i].size(); ++j) shifted[i][j] ^= beta[i][j];
    }
    const Elem base = code.f(zeta[0], zeta[1], zeta[2]);
    const Elem moved = code.f(shifted[0], shifted[1], shifted[2]);
    ++rep.trials;
    if (base == moved) {
      ++rep.passed;
    } else {
      ++rep.failure_count;
      if (rep.failures.size() < 4) rep.failures.push_back({t, ts, zeta, beta, base, moved});
    }
  }
  return rep;
}

bool exact_invariance(const TrilinearForm& t, const std::array<CCZLeg, 3>& legs) {
  std::array<std::vector<FVec>, 3> cyc, bnd;
  for (int i = 0; i < 3; ++i) {
    const Mat b = legs[i].boundary.transposed().to_dense();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      bnd[i].push_back(b.row_vec(r));
      cyc[i].push_back(b.row_vec(r));
    }
    for (std::size_t r = 0; r < legs[i].reps.rows(); ++r) cyc[i].push_back(legs[i].reps.row_vec(r));
  }
  for (int leg = 0; leg < 3; ++leg) {
    const auto& g0 = leg == 0 ? bnd[0] : cyc[0];
    const auto& g1 = leg == 1 ? bnd[1] : cyc[1];
    const auto& g2 = leg == 2 ? bnd[2] : cyc[2];
    for (const auto& x : g0)
      for (const auto& y : g1)
        for (const auto& z : g2)
          if (t.evaluate(x, y, z)) return false;
  }
  return true;
}

TTensor build_T(const CCZCode& code, std::optional<std::uint64_t> shift_seed) {
  const Field& f = code.field;
  TTensor out;
  for (int i = 0; i < 3; ++i) {
    out.reps[i] = code.legs[i].reps;
    out.k[i] = out.reps[i].rows();
  }
  if (shift_seed) {
    std::mt19937_64 rng(*shift_seed);
    for (int i = 0; i < 3; ++i)
      for (std::size_t r = 0; r < out.k[i]; ++r) {
        const FVec b = spmv(f, code.legs[i].boundary, random_vec(code.legs[i].boundary.cols(), f, rng));
        for (std::size_t j = 0; j < b.size(); ++j) out.reps[i](r, j) ^= b[j];
      }
  }
  out.entries.assign(out.k[0] * out.k[1] * out.k[2], 0);
  if (out.entries.empty()) return out;
  if (!code.form) {
    for (std::size_t a = 0; a < out.k[0]; ++a)
      for (std::size_t b = 0; b < out.k[1]; ++b)
        for (std::size_t c = 0; c < out.k[2]; ++c)
          out.entries[(a * out.k[1] + b) * out.k[2] + c] =
              code.f(out.reps[0].row(a), out.reps[1].row(b), out.reps[2].row(c));
    return out;
  }
  // Contract one leg at a time: first fold j1 into a1 keyed by (j2, j3).
  const TrilinearForm& t = *code.form;
  const Mat r0 = out.reps[0].transposed(), r1 = out.reps[1].transposed(), r2 = out.reps[2].transposed();
  std::map<std::pair<std::uint32_t, std::uint32_t>, FVec> stage1;
  for (const auto& e : t.entries) {
    FVec& acc = stage1[{e.j2, e.j3}];
    if (acc.empty()) acc.assign(out.k[0], 0);
    for (std::size_t a = 0; a < out.k[0]; ++a)
      if (r0(e.j1, a)) acc[a] ^= f.mul(e.a, r0(e.j1, a));
  }
  // stage2[j3][a][b]
  std::map<std::uint32_t, std::vector<Elem>> stage2;
  for (const auto& [key, vec] : stage1) {
    auto& acc = stage2[key.second];
    if (acc.empty()) acc.assign(out.k[0] * out.k[1], 0);
    for (std::size_t b = 0; b < out.k[1]; ++b) {
      const Elem w = r1(key.first, b);
      if (!w) continue;
      for (std::size_t a = 0; a < out.k[0]; ++a)
        if (vec[a]) acc[a * out.k[1] + b] ^= f.mul(w, vec[a]);
    }
  }
  for (const auto& [j3, mat] : stage2)
    for (std::size_t c = 0; c < out.k[2]; ++c) {
      const Elem w = r2(j3, c);
      if (!w) continue;
      for (std::size_t ab = 0; ab < mat.size(); ++ab)
        if (mat[ab]) out.entries[ab * out.k[2] + c] ^= f.mul(w, mat[ab]);
    }
  return out;
}

namespace {

// T(u, v, w) for small dense vectors.
Elem contract(const Field& f, const TTensor& t, std::span<const Elem> u, std::span<const Elem> v,
              std::span<const Elem> w) {
  Elem s = 0;
  for (std::size_t a = 0; a < t.k[0]; ++a) {
    if (!u[a]) continue;
    for (std::size_t b = 0; b < t.k[1]; ++b) {
      if (!v[b]) continue;
      const Elem uv = f.mul(u[a], v[b]);
      for (std::size_t c = 0; c < t.k[2]; ++c)
        if (w[c]) s ^= f.mul(f.mul(uv, w[c]), t.at(a, b, c));
    }
  }
  return s;
}

// Linear functional of one leg with the other two fixed, as a row vector.
FVec functional(const Field& f, const TTensor& t, int leg, std::span<const Elem> p, std::span<const Elem> q) {
  FVec out(t.k[leg], 0);
  for (std::size_t i = 0; i < t.k[leg]; ++i) {
    FVec e(t.k[leg], 0);
    e[i] = 1;
    if (leg == 0) out[i] = contract(f, t, e, p, q);
    if (leg == 1) out[i] = contract(f, t, p, e, q);
    if (leg == 2) out[i] = contract(f, t, p, q, e);
  }
  return out;
}

FVec decode(std::uint32_t code, std::size_t k, std::uint32_t q) {
  FVec v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  return v;
}

// Exhaustive search over triples of vectors; returns the largest r.
SubrankBound exact_subrank(const Field& f, const TTensor& t) {
  const std::uint32_t q = f.q();
  std::array<std::uint32_t, 3> sz{};
  std::array<std::vector<FVec>, 3> vecs;
  for (int i = 0; i < 3; ++i) {
    sz[i] = 1;
    for (std::size_t j = 0; j < t.k[i]; ++j) sz[i] *= q;
    for (std::uint32_t c = 0; c < sz[i]; ++c) vecs[i].push_back(decode(c, t.k[i], q));
  }
  // table of T(u, v, w)
  std::vector<Elem> tab(static_cast<std::size_t>(sz[0]) * sz[1] * sz[2]);
  auto idx = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return (static_cast<std::size_t>(a) * sz[1] + b) * sz[2] + c;
  };
  for (std::uint32_t a = 0; a < sz[0]; ++a)
    for (std::uint32_t b = 0; b < sz[1]; ++b)
      for (std::uint32_t c = 0; c < sz[2]; ++c) tab[idx(a, b, c)] = contract(f, t, vecs[0][a], vecs[1][b], vecs[2][c]);
  std::vector<std::array<std::uint32_t, 3>> cand;
  for (std::uint32_t a = 0; a < sz[0]; ++a)
    for (std::uint32_t b = 0; b < sz[1]; ++b)
      for (std::uint32_t c = 0; c < sz[2]; ++c)
        if (tab[idx(a, b, c)] == 1) cand.push_back({a, b, c});
  std::vector<std::array<std::uint32_t, 3>> chosen, best;
  auto compatible = [&](const std::array<std::uint32_t, 3>& n) {
    const std::size_t r = chosen.size();
    for (std::size_t x = 0; x <= r; ++x)
      for (std::size_t y = 0; y <= r; ++y)
        for (std::size_t z = 0; z <= r; ++z) {
          if (x == y && y == z) continue;
          if (x != r && y != r && z != r) continue;
          const auto& tx = x == r ? n : chosen[x];
          const auto& ty = y == r ? n : chosen[y];
          const auto& tz = z == r ? n : chosen[z];
          if (tab[idx(tx[0], ty[1], tz[2])]) return false;
        }
    return true;
  };
  const std::size_t cap = std::min({t.k[0], t.k[1], t.k[2]});
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (chosen.size() > best.size()) best = chosen;
    if (best.size() == cap) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (!compatible(cand[i])) continue;
      chosen.push_back(cand[i]);
      dfs(i + 1);
      chosen.pop_back();
      if (best.size() == cap) return;
    }
  };
  dfs(0);
  SubrankBound out;
  out.r = best.size();
  out.exact = true;
  for (int i = 0; i < 3; ++i) {
    out.maps[i] = Mat(0, t.k[i]);
    for (const auto& tr : best) out.maps[i].append_row(vecs[i][tr[i]]);
  }
  return out;
}

FVec random_in(const Field& f, const Mat& basis, std::mt19937_64& rng) {
  if (basis.rows() == 0) return FVec(basis.cols(), 0);
  std::uniform_int_distribution<std::uint32_t> elem(0, f.q() - 1);
  FVec c(basis.rows());
  for (auto& x : c) x = static_cast<Elem>(elem(rng));
  return row_combination(f, c, basis);
}

Mat kernel_of_rows(const Field& f, const std::vector<FVec>& rows, std::size_t k) {
  if (rows.empty()) return Mat::identity(k);
  return kernel_basis(f, Mat::from_rows(rows, k));
}

SubrankBound greedy_subrank(const Field& f, const TTensor& t, const SubrankBudget& budget) {
  SubrankBound best;
  for (int i = 0; i < 3; ++i) best.maps[i] = Mat(0, t.k[i]);
  std::mt19937_64 master(budget.seed);
  const std::size_t cap = std::min({t.k[0], t.k[1], t.k[2]});
  for (std::size_t restart = 0; restart < budget.restarts && best.r < cap; ++restart) {
    std::mt19937_64 rng(master());
    std::array<std::vector<FVec>, 3> rows;
    bool grew = true;
    while (grew && rows[0].size() < cap) {
      grew = false;
      const std::size_t r = rows[0].size();
      // u must kill T(·, v_b, w_c) for all old b, c; likewise v.
      std::vector<FVec> cu, cv;
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          cu.push_back(functional(f, t, 0, rows[1][b], rows[2][c]));
          cv.push_back(functional(f, t, 1, rows[0][b], rows[2][c]));
        }
      const Mat ku = kernel_of_rows(f, cu, t.k[0]), kv = kernel_of_rows(f, cv, t.k[1]);
      // Sparse candidates first (pairs of reduced kernel rows, shuffled), then
      // random combinations.
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < ku.rows(); ++i)
        for (std::size_t j = 0; j < kv.rows(); ++j) pairs.push_back({i, j});
      std::shuffle(pairs.begin(), pairs.end(), rng);
      for (std::size_t attempt = 0; attempt < pairs.size() + budget.attempts && !grew; ++attempt) {
        const bool sparse = attempt < pairs.size();
        const FVec u = sparse ? ku.row_vec(pairs[attempt].first) : random_in(f, ku, rng);
        const FVec v = sparse ? kv.row_vec(pairs[attempt].second) : random_in(f, kv, rng);
        if (is_zero(u) || is_zero(v)) continue;
        bool ok = true;
        for (std::size_t c = 0; c < r && ok; ++c) ok = contract(f, t, u, v, rows[2][c]) == 0;
        if (!ok) continue;
        std::vector<FVec> cw;
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) cw.push_back(functional(f, t, 2, rows[0][a], rows[1][b]));
          cw.push_back(functional(f, t, 2, rows[0][a], v));
          cw.push_back(functional(f, t, 2, u, rows[1][a]));
        }
        const Mat kw = kernel_of_rows(f, cw, t.k[2]);
        const FVec lin = functional(f, t, 2, u, v);
        for (std::size_t m = 0; m < kw.rows(); ++m) {
          Elem s = 0;
          for (std::size_t c = 0; c < t.k[2]; ++c) s ^= f.mul(lin[c], kw(m, c));
          if (!s) continue;
          FVec w = kw.row_vec(m);
          const Elem inv = f.inv(s);
          for (auto& x : w) x = f.mul(x, inv);
          rows[0].push_back(u);
          rows[1].push_back(v);
          rows[2].push_back(w);
          grew = true;
          break;
        }
      }
    }
    if (rows[0].size() > best.r) {
      best.r = rows[0].size();
      for (int i = 0; i < 3; ++i) best.maps[i] = Mat::from_rows(rows[i], t.k[i]);
    }
  }
  return best;
}

}  // namespace

bool verify_subrank(const Field& f, const TTensor& t, const std::array<Mat, 3>& maps) {
  const std::size_t r = maps[0].rows();
  if (maps[1].rows() != r || maps[2].rows() != r) return false;
  for (int i = 0; i < 3; ++i)
    if (maps[i].cols() != t.k[i] && r > 0) return false;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        const Elem want = (a == b && b == c) ? 1 : 0;
        if (contract(f, t, maps[0].row(a), maps[1].row(b), maps[2].row(c)) != want) return false;
      }
  return true;
}

SubrankBound subrank_lower_bound(const Field& f, const TTensor& t, const SubrankBudget& budget) {
  SubrankBound out;
  if (t.entries.empty() || std::all_of(t.entries.begin(), t.entries.end(), [](Elem e) { return e == 0; })) {
    for (int i = 0; i < 3; ++i) out.maps[i] = Mat(0, t.k[i]);
    out.exact = true;
    out.verified = true;
    return out;
  }
  const bool tiny = f.q() == 2 && t.k[0] <= 3 && t.k[1] <= 3 && t.k[2] <= 3;
  out = budget.allow_exact && tiny ? exact_subrank(f, t) : greedy_subrank(f, t, budget);
  out.verified = verify_subrank(f, t, out.maps);
  if (!out.verified) throw IntegrityError("subrank certificate failed to verify");
  return out;
}

TriorthogonalReport triorthogonal_check(const Mat& stabilizers, const Mat& logicals) {
  TriorthogonalReport rep;
  const Field f2(1);
  const std::size_t n = std::max(stabilizers.cols(), logicals.cols());
  if ((stabilizers.rows() && stabilizers.cols() != n) || (logicals.rows() && logicals.cols() != n))
    throw ShapeError("stabilizer and logical rows must have one length");
  auto check_binary = [](const Mat& m) {
    for (auto x : m.data())
      if (x > 1) throw DomainError("triorthogonal rows must be binary");
  };
  check_binary(stabilizers);
  check_binary(logicals);
  std::vector<FVec> all;
  std::vector<std::string> name;
  for (std::size_t i = 0; i < stabilizers.rows(); ++i) {
    all.push_back(stabilizers.row_vec(i));
    name.push_back("stabilizer " + std::to_string(i));
    if (weight(all.back()) % 2) rep.violations.push_back("sum of " + name.back() + " is 1, expected 0");
  }
  for (std::size_t i = 0; i < logicals.rows(); ++i) {
    all.push_back(logicals.row_vec(i));
    name.push_back("logical " + std::to_string(i));
    if (weight(all.back()) % 2 == 0) rep.violations.push_back("sum of " + name.back() + " is 0, expected 1");
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      std::size_t s2 = 0;
      for (std::size_t i = 0; i < n; ++i) s2 += all[a][i] & all[b][i];
      if (s2 % 2) rep.violations.push_back("pair (" + name[a] + ", " + name[b] + ") overlaps oddly");
      for (std::size_t c = b + 1; c < all.size(); ++c) {
        std::size_t s3 = 0;
        for (std::size_t i = 0; i < n; ++i) s3 += all[a][i] & all[b][i] & all[c][i];
        if (s3 % 2) rep.violations.push_back("triple (" + name[a] + ", " + name[b] + ", " + name[c] + ") overlaps oddly");
      }
    }
  if (!rep.ok()) return rep;
  CCZLeg leg;
  leg.n = n;
  leg.reps = logicals.rows() ? logicals : Mat(0, n);
  leg.boundary = SpMat::from_dense(stabilizers.rows() ? stabilizers.transposed() : Mat(n, 0));
  TrilinearForm diag{f2, {n, n, n}, {}};
  for (std::uint32_t i = 0; i < n; ++i) diag.entries.push_back({i, i, i, 1});
  CCZCode code{f2, {leg, leg, leg}, {}, diag, "diagonal"};
  code.f = [diag](std::span<const Elem> x, std::span<const Elem> y, std::span<const Elem> z) {
    return diag.evaluate(x, y, z);
  };
  rep.code = std::move(code);
  return rep;
}

}  // namespace sheafccz
