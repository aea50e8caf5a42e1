#include "sheafccz/cup.hpp"

#include <algorithm>

#include "sheafccz/linalg.hpp"

namespace sheafccz {

namespace {

std::vector<std::size_t> block_offsets(const Sheaf& s, unsigned k) {
  std::vector<std::size_t> off(s.complex().count(k) + 1, 0);
  for (std::uint32_t i = 0; i < s.complex().count(k); ++i) off[i + 1] = off[i] + s.dim(k, i);
  return off;
}

std::size_t cochain_dim(const Sheaf& s, unsigned k) { return block_offsets(s, k).back(); }

void require_same_complex(const Cochain& a, const Cochain& b) {
  if (a.sheaf->complex_ptr() != b.sheaf->complex_ptr())
    throw ShapeError("cochains live on different complexes");
  if (!(a.sheaf->field() == b.sheaf->field())) throw ShapeError("cochains live over different fields");
}

void require_simplicial(const Cochain& a) {
  if (a.sheaf->complex().is_cubical()) throw DomainError("simplicial cup product needs a simplicial complex");
}

std::size_t position(const std::vector<std::uint32_t>& support, std::uint32_t top) {
  auto it = std::lower_bound(support.begin(), support.end(), top);
  if (it == support.end() || *it != top) throw LookupError("top cell is not above the cell");
  return static_cast<std::size_t>(it - support.begin());
}

std::uint32_t simplex_of(const CellComplex& x, const std::vector<std::uint32_t>& verts) {
  auto i = x.simplex_index(verts);
  if (!i) throw IntegrityError("missing face of a simplex");
  return *i;
}

// Value of the (i+j)-fold product of `parts` on the simplex `verts` at top
// cell `top`: consecutive segments share their endpoints.
Elem chained_value(const std::vector<const Cochain*>& parts, const std::vector<const std::vector<FVec>*>& funcs,
                   const CellComplex& x, const std::vector<std::uint32_t>& verts, std::uint32_t top, const Field& f) {
  Elem acc = 1;
  std::size_t start = 0;
  for (std::size_t p = 0; p < parts.size() && acc; ++p) {
    const unsigned d = parts[p]->degree;
    std::vector<std::uint32_t> seg(verts.begin() + start, verts.begin() + start + d + 1);
    acc = f.mul(acc, value_at(*parts[p], *funcs[p], simplex_of(x, seg), top));
    start += d;
  }
  return acc;
}

Elem simplicial_multi_f(const std::vector<const Cochain*>& parts) {
  for (const auto* p : parts) {
    require_same_complex(*parts[0], *p);
    require_simplicial(*p);
  }
  const Sheaf& s0 = *parts[0]->sheaf;
  const CellComplex& x = s0.complex();
  unsigned total = 0;
  for (const auto* p : parts) total += p->degree;
  if (total != x.t()) throw DomainError("cochain degrees must sum to the top dimension");
  std::vector<std::vector<FVec>> funcs;
  for (const auto* p : parts) funcs.push_back(section_functions(*p));
  std::vector<const std::vector<FVec>*> fp;
  for (const auto& v : funcs) fp.push_back(&v);
  const Field& f = s0.field();
  Elem sum = 0;
  for (std::uint32_t tau = 0; tau < x.count(x.t()); ++tau)
    sum ^= chained_value(parts, fp, x, x.simplex(x.t(), tau), tau, f);
  return sum;
}

}  // namespace

Cochain zero_cochain(SheafPtr s, unsigned degree) {
  const std::size_t n = cochain_dim(*s, degree);
  return {std::move(s), degree, FVec(n, 0)};
}

Cochain random_cochain(SheafPtr s, unsigned degree, std::mt19937_64& rng) {
  Cochain c = zero_cochain(std::move(s), degree);
  std::uniform_int_distribution<std::uint32_t> elem(0, c.sheaf->field().q() - 1);
  for (auto& e : c.coeffs) e = static_cast<Elem>(elem(rng));
  return c;
}

std::optional<Cochain> unit_cochain(SheafPtr s) {
  Cochain c = zero_cochain(s, 0);
  const auto off = block_offsets(*s, 0);
  for (std::uint32_t v = 0; v < s->complex().count(0); ++v) {
    FVec ones(s->support(0, v).size(), 1);
    auto co = s->coordinates(0, v, ones);
    if (!co) return std::nullopt;
    std::copy(co->begin(), co->end(), c.coeffs.begin() + static_cast<std::ptrdiff_t>(off[v]));
  }
  return c;
}

Cochain make_cochain(const CochainComplex& c, unsigned degree, FVec coeffs) {
  if (coeffs.size() != c.dim(degree)) throw ShapeError("coefficient vector does not match dim C^i");
  return {c.sheaf_ptr(), degree, std::move(coeffs)};
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.sheaf != b.sheaf || a.degree != b.degree) throw ShapeError("adding cochains of different spaces");
  Cochain c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] ^= b.coeffs[i];
  return c;
}

Cochain coboundary(const CochainComplex& c, const Cochain& a) {
  if (a.sheaf != c.sheaf_ptr()) throw ShapeError("cochain is not over this complex's sheaf");
  if (a.degree >= c.t()) throw DomainError("no coboundary out of the top degree");
  return {a.sheaf, a.degree + 1, c.coboundary(a.degree, a.coeffs)};
}

std::vector<FVec> section_functions(const Cochain& a) {
  const Sheaf& s = *a.sheaf;
  const auto off = block_offsets(s, a.degree);
  if (a.coeffs.size() != off.back()) throw ShapeError("cochain length does not match its sheaf");
  std::vector<FVec> out;
  out.reserve(off.size() - 1);
  for (std::uint32_t i = 0; i + 1 < off.size(); ++i)
    out.push_back(s.section(a.degree, i, std::span<const Elem>(a.coeffs).subspan(off[i], off[i + 1] - off[i])));
  return out;
}

Elem value_at(const Cochain& a, const std::vector<FVec>& funcs, std::uint32_t cell, std::uint32_t top) {
  return funcs[cell][position(a.sheaf->support(a.degree, cell), top)];
}

Cochain simplicial_cup(const Cochain& a, const Cochain& b, SheafPtr product) {
  require_same_complex(a, b);
  require_simplicial(a);
  if (product->complex_ptr() != a.sheaf->complex_ptr()) throw ShapeError("product sheaf lives on another complex");
  const CellComplex& x = a.sheaf->complex();
  const unsigned k = a.degree + b.degree;
  if (k > x.t()) throw DomainError("cup product degree exceeds the top dimension");
  const Field& f = a.sheaf->field();
  const auto fa = section_functions(a), fb = section_functions(b);
  const std::vector<const Cochain*> parts{&a, &b};
  const std::vector<const std::vector<FVec>*> funcs{&fa, &fb};
  Cochain out = zero_cochain(product, k);
  const auto off = block_offsets(*product, k);
  for (std::uint32_t s = 0; s < x.count(k); ++s) {
    const auto& sup = product->support(k, s);
    FVec g(sup.size());
    for (std::size_t m = 0; m < sup.size(); ++m) g[m] = chained_value(parts, funcs, x, x.simplex(k, s), sup[m], f);
    auto co = product->coordinates(k, s, g);
    if (!co) throw IntegrityError("cup product leaves the product sheaf at " + x.describe(k, s));
    std::copy(co->begin(), co->end(), out.coeffs.begin() + static_cast<std::ptrdiff_t>(off[s]));
  }
  return out;
}

Cochain simplicial_cup(const Cochain& a, const Cochain& b) {
  return simplicial_cup(a, b, std::make_shared<const Sheaf>(product_sheaf(*a.sheaf, *b.sheaf)));
}

LeibnizReport leibniz_check(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& prod,
                            const Cochain& a, const Cochain& b) {
  LeibnizReport rep;
  rep.trials = 1;
  if (a.degree + b.degree >= prod.t()) throw DomainError("no coboundary out of the top degree");
  const SheafPtr& p = prod.sheaf_ptr();
  const Cochain lhs = coboundary(prod, simplicial_cup(a, b, p));
  Cochain rhs = zero_cochain(p, lhs.degree);
  if (a.degree < c1.t()) rhs = rhs + simplicial_cup(coboundary(c1, a), b, p);
  if (b.degree < c2.t()) rhs = rhs + simplicial_cup(a, coboundary(c2, b), p);
  if (lhs.coeffs != rhs.coeffs) {
    rep.failures = 1;
    const auto off = block_offsets(*p, lhs.degree);
    for (std::uint32_t s = 0; s + 1 < off.size(); ++s)
      if (!std::equal(lhs.coeffs.begin() + static_cast<std::ptrdiff_t>(off[s]),
                      lhs.coeffs.begin() + static_cast<std::ptrdiff_t>(off[s + 1]),
                      rhs.coeffs.begin() + static_cast<std::ptrdiff_t>(off[s]))) {
        rep.witness_cell = s;
        break;
      }
  }
  return rep;
}

LeibnizReport leibniz_check(const CochainComplex& c1, const CochainComplex& c2, const CochainComplex& prod,
                            unsigned i, unsigned j, std::size_t trials, std::uint64_t seed) {
  LeibnizReport total;
  std::mt19937_64 master(seed);
  for (std::size_t n = 0; n < trials; ++n) {
    std::mt19937_64 rng(master());
    const Cochain a = random_cochain(c1.sheaf_ptr(), i, rng);
    const Cochain b = random_cochain(c2.sheaf_ptr(), j, rng);
    const auto r = leibniz_check(c1, c2, prod, a, b);
    ++total.trials;
    total.failures += r.failures;
    if (!total.witness_cell && r.witness_cell) total.witness_cell = r.witness_cell;
  }
  return total;
}

namespace {

struct CubeCtx {
  const CellComplex& x;
  std::uint32_t apply(unsigned dir, std::uint32_t label, std::uint32_t g) const { return x.perm(dir, label)[g]; }
  // Edge along `dir` with label `label`, other directions fixed to `bits`
  // (indexed by direction), base vertex g.
  std::uint32_t edge(std::uint32_t g, unsigned dir, std::uint32_t label, const std::vector<std::uint8_t>& bits) const {
    CubicalCell c;
    c.type = 1u << dir;
    c.v = g;
    c.labels = {label};
    for (unsigned d = 0; d < x.t(); ++d)
      if (d != dir) c.bits.push_back(bits[d]);
    auto i = x.cubical_index(c);
    if (!i) throw IntegrityError("edge missing from cubical complex");
    return *i;
  }
  std::uint32_t top(std::uint32_t g, const std::vector<std::uint32_t>& labels) const {
    CubicalCell c;
    c.type = (1u << x.t()) - 1;
    c.v = g;
    c.labels = labels;
    auto i = x.cubical_index(c);
    if (!i) throw IntegrityError("top cell missing from cubical complex");
    return *i;
  }
};

// One term: a1 on an edge along d1, a2 along d2, a3 along d3 (a permutation
// of u, v, w). The a3 edge starts at g; the a2 edge starts at the end of a d3
// step; the a1 edge starts after the d3 and d2 steps.
struct Term {
  unsigned d1, d2, d3;
};
constexpr Term kTerms[6] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}, {1, 0, 2}, {2, 0, 1}, {2, 1, 0}};

// Edges (a1, a2, a3) of one term inside the cube (g; lab).
std::array<std::uint32_t, 3> term_edges(const CubeCtx& cx, std::uint32_t g, const std::uint32_t* lab, const Term& tm) {
  std::vector<std::uint8_t> b3(3, 0), b2(3, 0), b1(3, 0);
  const std::uint32_t g2 = cx.apply(tm.d3, lab[tm.d3], g);
  b2[tm.d3] = 1;
  const std::uint32_t g1 = cx.apply(tm.d2, lab[tm.d2], g2);
  b1[tm.d3] = 1;
  b1[tm.d2] = 1;
  return {cx.edge(g1, tm.d1, lab[tm.d1], b1), cx.edge(g2, tm.d2, lab[tm.d2], b2), cx.edge(g, tm.d3, lab[tm.d3], b3)};
}

void require_cubical_edges(const std::vector<const Cochain*>& as, unsigned t) {
  for (const auto* a : as) {
    require_same_complex(*as[0], *a);
    if (!a->sheaf->complex().is_cubical() || a->sheaf->complex().t() != t)
      throw DomainError("form needs a " + std::to_string(t) + "-dimensional cubical complex");
    if (a->degree != 1) throw DomainError("form takes degree-1 cochains");
  }
}

}  // namespace

Elem cubical_bilinear_f(const Cochain& a1, const Cochain& a2) {
  require_cubical_edges({&a1, &a2}, 2);
  const CellComplex& x = a1.sheaf->complex();
  const Field& f = a1.sheaf->field();
  const CubeCtx cx{x};
  const auto f1 = section_functions(a1), f2 = section_functions(a2);
  const std::uint32_t nv = x.cubical_spec().n_vertices, dl = x.delta();
  Elem sum = 0;
  for (std::uint32_t g = 0; g < nv; ++g)
    for (std::uint32_t au = 0; au < dl; ++au)
      for (std::uint32_t av = 0; av < dl; ++av) {
        const std::uint32_t sq = cx.top(g, {au, av});
        const std::uint32_t e_s1 = cx.edge(cx.apply(1, av, g), 0, au, {0, 1});
        const std::uint32_t e_0s = cx.edge(g, 1, av, {0, 0});
        const std::uint32_t e_1s = cx.edge(cx.apply(0, au, g), 1, av, {1, 0});
        const std::uint32_t e_s0 = cx.edge(g, 0, au, {0, 0});
        sum ^= f.mul(value_at(a1, f1, e_s1, sq), value_at(a2, f2, e_0s, sq));
        sum ^= f.mul(value_at(a1, f1, e_1s, sq), value_at(a2, f2, e_s0, sq));
      }
  return sum;
}

Elem cubical_trilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3) {
  require_cubical_edges({&a1, &a2, &a3}, 3);
  const CellComplex& x = a1.sheaf->complex();
  const Field& f = a1.sheaf->field();
  const CubeCtx cx{x};
  const auto f1 = section_functions(a1), f2 = section_functions(a2), f3 = section_functions(a3);
  const std::uint32_t nv = x.cubical_spec().n_vertices, dl = x.delta();
  Elem sum = 0;
  for (std::uint32_t g = 0; g < nv; ++g)
    for (std::uint32_t au = 0; au < dl; ++au)
      for (std::uint32_t av = 0; av < dl; ++av)
        for (std::uint32_t aw = 0; aw < dl; ++aw) {
          const std::uint32_t lab[3] = {au, av, aw};
          const std::uint32_t cu = cx.top(g, {au, av, aw});
          for (const auto& tm : kTerms) {
            const auto e = term_edges(cx, g, lab, tm);
            const Elem v3 = value_at(a3, f3, e[2], cu);
            if (!v3) continue;
            const Elem v2 = value_at(a2, f2, e[1], cu);
            if (!v2) continue;
            sum ^= f.mul(value_at(a1, f1, e[0], cu), f.mul(v2, v3));
          }
        }
  return sum;
}

Elem simplicial_trilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3) {
  return simplicial_multi_f({&a1, &a2, &a3});
}

Elem quadrilinear_f(const Cochain& a1, const Cochain& a2, const Cochain& a3, const Cochain& z4) {
  return simplicial_multi_f({&a1, &a2, &a3, &z4});
}

std::vector<FormTerm> cubical_trilinear_terms(const CellComplex& x) {
  if (!x.is_cubical() || x.t() != 3) throw DomainError("form needs a 3-dimensional cubical complex");
  const CubeCtx cx{x};
  const std::uint32_t nv = x.cubical_spec().n_vertices, dl = x.delta();
  std::vector<FormTerm> out;
  for (std::uint32_t g = 0; g < nv; ++g)
    for (std::uint32_t au = 0; au < dl; ++au)
      for (std::uint32_t av = 0; av < dl; ++av)
        for (std::uint32_t aw = 0; aw < dl; ++aw) {
          const std::uint32_t lab[3] = {au, av, aw};
          const std::uint32_t cu = cx.top(g, {au, av, aw});
          for (const auto& tm : kTerms) out.push_back({cu, term_edges(cx, g, lab, tm)});
        }
  return out;
}

std::vector<FormTerm> simplicial_trilinear_terms(const CellComplex& x, unsigned l1, unsigned l2, unsigned l3) {
  if (x.is_cubical()) throw DomainError("simplicial form needs a simplicial complex");
  if (l1 + l2 + l3 != x.t()) throw DomainError("cochain degrees must sum to the top dimension");
  std::vector<FormTerm> out;
  for (std::uint32_t tau = 0; tau < x.count(x.t()); ++tau) {
    const auto& v = x.simplex(x.t(), tau);
    auto seg = [&](std::size_t from, unsigned d) {
      return simplex_of(x, std::vector<std::uint32_t>(v.begin() + from, v.begin() + from + d + 1));
    };
    out.push_back({tau, {seg(0, l1), seg(l1, l2), seg(l1 + l2, l3)}});
  }
  return out;
}

Elem top_sum(const Cochain& a) {
  const Sheaf& s = *a.sheaf;
  if (a.degree != s.t()) throw DomainError("top_sum needs a top-degree cochain");
  const auto funcs = section_functions(a);
  Elem sum = 0;
  for (const auto& fn : funcs)
    for (auto v : fn) sum ^= v;
  return sum;
}

}  // namespace sheafccz
