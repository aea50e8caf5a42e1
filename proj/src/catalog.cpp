#include "sheafccz/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "sheafccz/errors.hpp"

namespace sheafccz::catalog {

CubicalSpec shift_spec(std::uint32_t n, unsigned t, const std::vector<std::uint32_t>& shifts) {
  CubicalSpec s;
  s.t = t;
  s.n_vertices = n;
  s.gens.resize(t);
  for (unsigned i = 0; i < t; ++i)
    for (auto sh : shifts) {
      Perm p(n);
      for (std::uint32_t v = 0; v < n; ++v) p[v] = (v + sh) % n;
      s.gens[i].push_back(std::move(p));
    }
  return s;
}

CellComplex single_cube(unsigned t) { return CellComplex::cubical(shift_spec(1, t, {0})); }

CellComplex cycle_z3() { return CellComplex::cubical(shift_spec(3, 1, {1, 2})); }

CellComplex cayley_s3() {
  // Elements of S_3 as images of (0, 1, 2), in lexicographic order.
  std::vector<std::array<int, 3>> elems;
  std::array<int, 3> p{0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& x) {
    return static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  };
  auto compose = [](const std::array<int, 3>& g, const std::array<int, 3>& h) {
    return std::array<int, 3>{g[h[0]], g[h[1]], g[h[2]]};
  };
  const std::array<std::array<int, 3>, 2> transp{{{1, 0, 2}, {0, 2, 1}}};
  CubicalSpec s;
  s.t = 2;
  s.n_vertices = 6;
  s.gens.resize(2);
  for (const auto& g : transp) {
    Perm left(6), right(6);
    for (std::uint32_t i = 0; i < 6; ++i) {
      left[i] = index(compose(g, elems[i]));
      right[i] = index(compose(elems[i], g));
    }
    s.gens[0].push_back(left);
    s.gens[1].push_back(right);
  }
  return CellComplex::cubical(s);
}

CellComplex toric_like() { return CellComplex::cubical(shift_spec(3, 3, {1, 2})); }

CellComplex rs_cubical() { return CellComplex::cubical(shift_spec(9, 3, {1, 2, 3, 4, 5, 6, 7, 8})); }

CellComplex square_toy() { return CellComplex::cubical(shift_spec(2, 2, {0, 1})); }

std::vector<std::vector<std::uint32_t>> triangle_facets() { return {{0, 1, 2}}; }

std::vector<std::vector<std::uint32_t>> tetrahedron_boundary_facets() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

std::vector<std::vector<std::uint32_t>> two_triangles_facets() { return {{0, 1, 2}, {3, 4, 5}}; }

std::vector<std::vector<std::uint32_t>> torus7_facets() {
  std::vector<std::vector<std::uint32_t>> f;
  for (std::uint32_t i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

std::vector<std::vector<std::uint32_t>> torus3_facets() {
  auto id = [](int x, int y, int z) {
    return static_cast<std::uint32_t>(((x % 3) * 3 + (y % 3)) * 3 + (z % 3));
  };
  std::vector<std::vector<std::uint32_t>> f;
  std::array<int, 3> axes{0, 1, 2};
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        std::array<int, 3> ax = axes;
        do {
          std::array<int, 3> p{x, y, z};
          std::vector<std::uint32_t> tet{id(p[0], p[1], p[2])};
          for (int a : ax) {
            ++p[a];
            tet.push_back(id(p[0], p[1], p[2]));
          }
          f.push_back(tet);
        } while (std::next_permutation(ax.begin(), ax.end()));
      }
  return f;
}

std::vector<std::vector<std::uint32_t>> rp3_facets() {
  // S^3 as the join of two 4-cycles a_0..a_3 (ids 0..3) and b_0..b_3 (ids 4..7);
  // the antipodal map rotates each cycle by two steps.
  using Face = std::vector<std::uint32_t>;
  std::vector<Face> tets;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) {
      Face t{i, (i + 1) % 4, 4 + j, 4 + (j + 1) % 4};
      std::sort(t.begin(), t.end());
      tets.push_back(t);
    }
  std::set<Face> faces;
  for (const auto& t : tets)
    for (std::uint32_t sub = 1; sub < 16; ++sub) {
      Face s;
      for (int k = 0; k < 4; ++k)
        if ((sub >> k) & 1u) s.push_back(t[k]);
      faces.insert(s);
    }
  const std::vector<Face> face_list(faces.begin(), faces.end());
  std::map<Face, std::uint32_t> face_id;
  for (std::uint32_t i = 0; i < face_list.size(); ++i) face_id[face_list[i]] = i;
  auto antipode = [](std::uint32_t v) { return v < 4 ? (v + 2) % 4 : 4 + (v - 2) % 4; };
  // Each vertex of the subdivision (a face of the join) is identified with its antipode.
  std::vector<std::uint32_t> cls(face_list.size());
  std::map<std::uint32_t, std::uint32_t> rep_to_cls;
  for (std::uint32_t i = 0; i < face_list.size(); ++i) {
    Face g;
    for (auto v : face_list[i]) g.push_back(antipode(v));
    std::sort(g.begin(), g.end());
    const std::uint32_t rep = std::min(i, face_id.at(g));
    auto [it, inserted] = rep_to_cls.emplace(rep, static_cast<std::uint32_t>(rep_to_cls.size()));
    cls[i] = it->second;
  }
  std::set<Face> out;
  for (const auto& t : tets) {
    std::array<std::uint32_t, 4> order{t[0], t[1], t[2], t[3]};
    do {
      Face flag;
      Face prefix;
      for (auto v : order) {
        prefix.push_back(v);
        Face s = prefix;
        std::sort(s.begin(), s.end());
        flag.push_back(cls[face_id.at(s)]);
      }
      std::sort(flag.begin(), flag.end());
      out.insert(flag);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::uint32_t>> torus_suspension_facets() {
  std::vector<std::vector<std::uint32_t>> f;
  for (const auto& tri : torus7_facets()) {
    for (std::uint32_t apex : {7u, 8u}) {
      auto t = tri;
      t.push_back(apex);
      f.push_back(t);
    }
  }
  return f;
}

namespace {

struct Entry {
  const char* name;
  CellComplex (*make)();
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"single_cube", [] { return single_cube(3); }},
      {"cycle_z3", cycle_z3},
      {"cayley_s3", cayley_s3},
      {"toric_like", toric_like},
      {"rs_cubical", rs_cubical},
      {"square_toy", square_toy},
      {"triangle", [] { return CellComplex::simplicial(triangle_facets()); }},
      {"tetrahedron_boundary", [] { return CellComplex::simplicial(tetrahedron_boundary_facets()); }},
      {"two_triangles", [] { return CellComplex::simplicial(two_triangles_facets()); }},
      {"torus7", [] { return CellComplex::simplicial(torus7_facets()); }},
      {"torus3", [] { return CellComplex::simplicial(torus3_facets()); }},
      {"rp3", [] { return CellComplex::simplicial(rp3_facets()); }},
      {"torus_suspension", [] { return CellComplex::simplicial(torus_suspension_facets()); }},
  };
  return r;
}

}  // namespace

CellComplex by_name(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e.make();
  throw LookupError("unknown catalog complex '" + name + "'");
}

std::vector<std::string> names() {
  std::vector<std::string> n;
  for (const auto& e : registry()) n.emplace_back(e.name);
  return n;
}

}  // namespace sheafccz::catalog
