#include "sheafccz/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sheafccz/errors.hpp"

namespace sheafccz {

namespace {

std::vector<std::uint32_t> sorted_union(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> mask_dirs(std::uint32_t mask, unsigned t, bool inside) {
  std::vector<std::uint32_t> d;
  for (unsigned j = 0; j < t; ++j)
    if (((mask >> j) & 1u) == (inside ? 1u : 0u)) d.push_back(j);
  return d;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_perm(const Perm& p, std::uint32_t n, unsigned dir, std::size_t label) {
  if (p.size() != n)
    throw ValidationError("permutation A_" + std::to_string(dir + 1) + "[" + std::to_string(label) + "] has length " +
                          std::to_string(p.size()) + ", expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (auto x : p) {
    if (x >= n || seen[x])
      throw ValidationError("A_" + std::to_string(dir + 1) + "[" + std::to_string(label) + "] is not a permutation");
    seen[x] = 1;
  }
}

}  // namespace

std::vector<std::size_t> CellComplex::counts() const {
  std::vector<std::size_t> c(t_ + 1);
  for (unsigned k = 0; k <= t_; ++k) c[k] = count(k);
  return c;
}

CellComplex CellComplex::cubical(const CubicalSpec& spec) {
  if (spec.t == 0 || spec.t > 16) throw ValidationError("cubical dimension t must lie in [1, 16]");
  if (spec.gens.size() != spec.t)
    throw ValidationError("expected " + std::to_string(spec.t) + " generator sets, got " + std::to_string(spec.gens.size()));
  if (spec.n_vertices == 0) throw ValidationError("vertex domain is empty");
  const std::size_t delta = spec.gens[0].size();
  if (delta == 0) throw ValidationError("generator set A_1 is empty");
  for (unsigned i = 0; i < spec.t; ++i) {
    if (spec.gens[i].size() != delta)
      throw ValidationError("generator sets must share one size; |A_1| = " + std::to_string(delta) + ", |A_" +
                            std::to_string(i + 1) + "| = " + std::to_string(spec.gens[i].size()));
    for (std::size_t a = 0; a < delta; ++a) check_perm(spec.gens[i][a], spec.n_vertices, i, a);
  }
  for (unsigned i = 0; i < spec.t; ++i)
    for (unsigned j = i + 1; j < spec.t; ++j)
      for (std::size_t a = 0; a < delta; ++a)
        for (std::size_t b = 0; b < delta; ++b) {
          const auto& p = spec.gens[i][a];
          const auto& q = spec.gens[j][b];
          for (std::uint32_t v = 0; v < spec.n_vertices; ++v) {
            if (p[q[v]] != q[p[v]])
              throw ValidationError("generators A_" + std::to_string(i + 1) + "[" + std::to_string(a) + "] and A_" +
                                    std::to_string(j + 1) + "[" + std::to_string(b) + "] do not commute (vertex " +
                                    std::to_string(v) + ")");
          }
        }

  CellComplex x;
  x.kind_ = Kind::Cubical;
  x.t_ = spec.t;
  x.spec_ = spec;
  x.delta_ = static_cast<std::uint32_t>(delta);
  x.inv_.resize(spec.t);
  for (unsigned i = 0; i < spec.t; ++i)
    for (const auto& p : spec.gens[i]) {
      Perm inv(p.size());
      for (std::uint32_t v = 0; v < p.size(); ++v) inv[p[v]] = v;
      x.inv_[i].push_back(std::move(inv));
    }

  const unsigned t = spec.t;
  x.types_by_dim_.assign(t + 1, {});
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) x.types_by_dim_[std::popcount(mask)].push_back(mask);
  for (auto& types : x.types_by_dim_) {
    std::sort(types.begin(), types.end(), [t](std::uint32_t a, std::uint32_t b) {
      return mask_dirs(a, t, true) < mask_dirs(b, t, true);
    });
  }
  x.type_offset_.assign(t + 1, {});
  x.down_.assign(t + 1, {});
  for (unsigned k = 0; k <= t; ++k) {
    const std::size_t per_type = x.cubical_type_count(k);
    std::size_t off = 0;
    for (std::size_t s = 0; s < x.types_by_dim_[k].size(); ++s) {
      x.type_offset_[k].push_back(off);
      off += per_type;
    }
    x.down_[k].resize(off);
  }

  for (unsigned k = 1; k <= t; ++k) {
    for (std::uint32_t i = 0; i < x.down_[k].size(); ++i) {
      const CubicalCell c = x.cubical_cell(k, i);
      const auto in = mask_dirs(c.type, t, true);
      auto& facets = x.down_[k][i];
      for (std::size_t p = 0; p < in.size(); ++p) {
        const unsigned j = in[p];
        for (std::uint8_t b = 0; b < 2; ++b) {
          CubicalCell f;
          f.type = c.type & ~(1u << j);
          f.v = b ? spec.gens[j][c.labels[p]][c.v] : c.v;
          for (std::size_t q = 0; q < in.size(); ++q)
            if (q != p) f.labels.push_back(c.labels[q]);
          std::size_t bi = 0;
          for (unsigned d = 0; d < t; ++d) {
            if ((c.type >> d) & 1u) {
              if (d == j) f.bits.push_back(b);
            } else {
              f.bits.push_back(c.bits[bi++]);
            }
          }
          facets.push_back(*x.cubical_index(f));
        }
      }
    }
  }
  x.build_up_lists();
  return x;
}

std::size_t CellComplex::cubical_type_count(unsigned k) const {
  return static_cast<std::size_t>(spec_.n_vertices) * ipow(delta_, k) * ipow(2, t_ - k);
}

const CubicalSpec& CellComplex::cubical_spec() const {
  if (!is_cubical()) throw LookupError("complex is not cubical");
  return spec_;
}

CubicalCell CellComplex::cubical_cell(unsigned k, std::uint32_t i) const {
  if (!is_cubical()) throw LookupError("complex is not cubical");
  if (k > t_ || i >= count(k)) throw LookupError("no cell " + std::to_string(i) + " in dimension " + std::to_string(k));
  const std::size_t per_type = cubical_type_count(k);
  const std::size_t s = i / per_type;
  std::size_t rem = i % per_type;
  CubicalCell c;
  c.type = types_by_dim_[k][s];
  c.bits.resize(t_ - k);
  for (std::size_t q = t_ - k; q-- > 0;) {
    c.bits[q] = static_cast<std::uint8_t>(rem & 1u);
    rem >>= 1;
  }
  c.labels.resize(k);
  for (std::size_t q = k; q-- > 0;) {
    c.labels[q] = static_cast<std::uint32_t>(rem % delta_);
    rem /= delta_;
  }
  c.v = static_cast<std::uint32_t>(rem);
  return c;
}

std::optional<std::uint32_t> CellComplex::cubical_index(const CubicalCell& c) const {
  if (!is_cubical()) return std::nullopt;
  const unsigned k = static_cast<unsigned>(std::popcount(c.type));
  if (k > t_ || c.type >= (1u << t_) || c.labels.size() != k || c.bits.size() != t_ - k || c.v >= spec_.n_vertices)
    return std::nullopt;
  const auto& types = types_by_dim_[k];
  const auto it = std::find(types.begin(), types.end(), c.type);
  std::size_t idx = c.v;
  for (auto l : c.labels) {
    if (l >= delta_) return std::nullopt;
    idx = idx * delta_ + l;
  }
  for (auto b : c.bits) {
    if (b > 1) return std::nullopt;
    idx = idx * 2 + b;
  }
  return static_cast<std::uint32_t>(type_offset_[k][static_cast<std::size_t>(it - types.begin())] + idx);
}

std::vector<std::uint32_t> CellComplex::cubical_top_by_label(unsigned k, std::uint32_t i) const {
  const CubicalCell c = cubical_cell(k, i);
  const auto free_dirs = mask_dirs(c.type, t_, false);
  const std::size_t m = ipow(delta_, static_cast<unsigned>(free_dirs.size()));
  std::vector<std::uint32_t> out(m);
  std::vector<std::uint32_t> lab(free_dirs.size());
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t rem = r;
    for (std::size_t q = free_dirs.size(); q-- > 0;) {
      lab[q] = static_cast<std::uint32_t>(rem % delta_);
      rem /= delta_;
    }
    std::uint32_t w = c.v;
    for (std::size_t q = 0; q < free_dirs.size(); ++q)
      if (c.bits[q]) w = inv_[free_dirs[q]][lab[q]][w];
    CubicalCell top;
    top.type = (1u << t_) - 1;
    top.v = w;
    std::size_t si = 0, fi = 0;
    for (unsigned d = 0; d < t_; ++d) {
      if ((c.type >> d) & 1u)
        top.labels.push_back(c.labels[si++]);
      else
        top.labels.push_back(lab[fi++]);
    }
    out[r] = *cubical_index(top);
  }
  return out;
}

CellComplex CellComplex::simplicial(const std::vector<std::vector<std::uint32_t>>& facets) {
  if (facets.empty()) throw ValidationError("simplicial complex needs at least one facet");
  const std::size_t size = facets[0].size();
  if (size == 0) throw ValidationError("empty facet");
  CellComplex x;
  x.kind_ = Kind::Simplicial;
  x.t_ = static_cast<unsigned>(size - 1);
  std::vector<std::set<std::vector<std::uint32_t>>> faces(size);
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    auto f = facets[fi];
    if (f.size() != size)
      throw ValidationError("facet " + std::to_string(fi) + " has " + std::to_string(f.size()) +
                            " vertices, expected " + std::to_string(size) + " (pure complexes only)");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ValidationError("facet " + std::to_string(fi) + " repeats a vertex");
    for (std::uint32_t sub = 1; sub < (1u << size); ++sub) {
      std::vector<std::uint32_t> s;
      for (std::size_t j = 0; j < size; ++j)
        if ((sub >> j) & 1u) s.push_back(f[j]);
      faces[s.size() - 1].insert(std::move(s));
    }
  }
  x.simplices_.resize(size);
  for (std::size_t k = 0; k < size; ++k) x.simplices_[k].assign(faces[k].begin(), faces[k].end());
  x.down_.assign(size, {});
  x.down_[0].resize(x.simplices_[0].size());
  for (std::size_t k = 1; k < size; ++k) {
    x.down_[k].resize(x.simplices_[k].size());
    for (std::uint32_t i = 0; i < x.simplices_[k].size(); ++i) {
      const auto& s = x.simplices_[k][i];
      for (std::size_t p = 0; p <= k; ++p) {
        std::vector<std::uint32_t> f;
        for (std::size_t q = 0; q <= k; ++q)
          if (q != p) f.push_back(s[q]);
        x.down_[k][i].push_back(*x.simplex_index(f));
      }
    }
  }
  x.build_up_lists();
  return x;
}

std::optional<std::uint32_t> CellComplex::simplex_index(const std::vector<std::uint32_t>& verts) const {
  if (is_cubical() || verts.empty() || verts.size() > t_ + 1) return std::nullopt;
  const auto& list = simplices_[verts.size() - 1];
  auto it = std::lower_bound(list.begin(), list.end(), verts);
  if (it == list.end() || *it != verts) return std::nullopt;
  return static_cast<std::uint32_t>(it - list.begin());
}

void CellComplex::build_up_lists() {
  up_.assign(t_ + 1, {});
  for (unsigned k = 0; k <= t_; ++k) up_[k].resize(down_[k].size());
  for (unsigned k = 1; k <= t_; ++k)
    for (std::uint32_t i = 0; i < down_[k].size(); ++i)
      for (auto f : down_[k][i]) up_[k - 1][f].push_back(i);
  for (auto& lvl : up_)
    for (auto& u : lvl) {
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
    }
  top_cache_.assign(t_ + 1, {});
  top_cached_.assign(t_ + 1, {});
  for (unsigned k = 0; k <= t_; ++k) {
    top_cache_[k].resize(down_[k].size());
    top_cached_[k].assign(down_[k].size(), 0);
  }
}

std::vector<std::uint32_t> CellComplex::up_set(unsigned dim, std::uint32_t i, unsigned k) const {
  if (dim > t_ || i >= count(dim)) throw LookupError("no cell " + std::to_string(i) + " in dimension " + std::to_string(dim));
  if (k < dim || k > t_) throw ShapeError("up_set target dimension out of range");
  std::vector<std::uint32_t> cur{i};
  for (unsigned d = dim; d < k; ++d) {
    std::vector<std::uint32_t> next;
    for (auto c : cur) next = sorted_union(next, up_[d][c]);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::uint32_t> CellComplex::down_set(unsigned dim, std::uint32_t i, unsigned k) const {
  if (dim > t_ || i >= count(dim)) throw LookupError("no cell " + std::to_string(i) + " in dimension " + std::to_string(dim));
  if (k > dim) throw ShapeError("down_set target dimension out of range");
  std::vector<std::uint32_t> cur{i};
  for (unsigned d = dim; d > k; --d) {
    std::vector<std::uint32_t> next;
    for (auto c : cur) {
      auto f = down_[d][c];
      std::sort(f.begin(), f.end());
      next = sorted_union(next, f);
    }
    cur = std::move(next);
  }
  return cur;
}

const std::vector<std::uint32_t>& CellComplex::top_above(unsigned dim, std::uint32_t i) const {
  if (dim > t_ || i >= count(dim)) throw LookupError("no cell " + std::to_string(i) + " in dimension " + std::to_string(dim));
  if (!top_cached_[dim][i]) {
    if (dim == t_) {
      top_cache_[dim][i] = {i};
    } else {
      std::vector<std::uint32_t> acc;
      for (auto u : up_[dim][i]) acc = sorted_union(acc, top_above(dim + 1, u));
      top_cache_[dim][i] = std::move(acc);
    }
    top_cached_[dim][i] = 1;
  }
  return top_cache_[dim][i];
}

bool CellComplex::is_face(unsigned dim_s, std::uint32_t s, unsigned dim_t, std::uint32_t tau) const {
  if (dim_s > dim_t) return false;
  const auto u = up_set(dim_s, s, dim_t);
  return std::binary_search(u.begin(), u.end(), tau);
}

std::string CellComplex::describe(unsigned k, std::uint32_t i) const {
  std::ostringstream os;
  if (is_cubical()) {
    const auto c = cubical_cell(k, i);
    os << "(v=" << c.v;
    std::size_t li = 0, bi = 0;
    for (unsigned d = 0; d < t_; ++d) {
      if ((c.type >> d) & 1u)
        os << "; a" << d + 1 << "=" << c.labels[li++];
      else
        os << "; b" << d + 1 << "=" << int(c.bits[bi++]);
    }
    os << ")";
  } else {
    os << "[";
    const auto& s = simplex(k, i);
    for (std::size_t p = 0; p < s.size(); ++p) os << (p ? "," : "") << s[p];
    os << "]";
  }
  return os.str();
}

std::size_t top_components(const CellComplex& x) {
  const unsigned t = x.t();
  std::vector<std::uint32_t> parent(x.count(t));
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  if (t > 0) {
    for (std::uint32_t s = 0; s < x.count(t - 1); ++s) {
      const auto& u = x.up(t - 1, s);
      for (std::size_t p = 1; p < u.size(); ++p) parent[find(u[p])] = find(u[0]);
    }
  }
  std::size_t comps = 0;
  for (std::uint32_t i = 0; i < parent.size(); ++i) comps += find(i) == i;
  return comps;
}

ValidationReport validate(const CellComplex& x) {
  ValidationReport rep;
  const unsigned t = x.t();
  for (unsigned k = 1; k <= t; ++k) {
    for (std::uint32_t i = 0; i < x.count(k); ++i) {
      const auto& d = x.down(k, i);
      std::set<std::uint32_t> uniq(d.begin(), d.end());
      for (auto f : d) {
        if (f >= x.count(k - 1)) {
          ++rep.dangling_incidences;
          rep.findings.push_back("cell " + std::to_string(k) + ":" + std::to_string(i) + " has out-of-range facet");
        }
      }
      if (uniq.size() != d.size()) {
        ++rep.dangling_incidences;
        rep.findings.push_back(x.describe(k, i) + " lists a facet twice");
      }
    }
  }
  for (unsigned k = 2; k <= t; ++k) {
    for (std::uint32_t i = 0; i < x.count(k); ++i) {
      std::map<std::uint32_t, int> paths;
      for (auto f : x.down(k, i))
        for (auto g : x.down(k - 1, f)) ++paths[g];
      for (const auto& [g, n] : paths) {
        if (n != 2) {
          ++rep.diamond_violations;
          rep.findings.push_back("diamond " + x.describe(k - 2, g) + " < " + x.describe(k, i) + " has " +
                                 std::to_string(n) + " intermediate cells");
        }
      }
    }
  }
  rep.top_components = top_components(x);
  return rep;
}

}  // namespace sheafccz
