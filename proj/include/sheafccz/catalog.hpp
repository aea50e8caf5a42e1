#pragma once

// Named reference complexes used by the tests, the acceptance suite and the
// CLI's "catalog" complex source.

#include <string>
#include <vector>

#include "sheafccz/complex.hpp"

namespace sheafccz::catalog {

/// V = Z_n, t directions, every direction using the same list of shifts.
CubicalSpec shift_spec(std::uint32_t n, unsigned t, const std::vector<std::uint32_t>& shifts);

/// t-cube: one vertex, A_i = {id}.
CellComplex single_cube(unsigned t = 3);
/// t = 1, V = Z_3, A = {+1, +2}: a 6-cycle.
CellComplex cycle_z3();
/// Left-right Cayley complex of S_3 with two transpositions on each side.
CellComplex cayley_s3();
/// t = 3, V = Z_3, A_i = {+1, +2}.
CellComplex toric_like();
/// t = 3, V = Z_9, A_i = {+1, ..., +8}; local codes of length 8 match F_8.
CellComplex rs_cubical();
/// t = 2, V = Z_2, A_i = {0, +1}.
CellComplex square_toy();

std::vector<std::vector<std::uint32_t>> triangle_facets();
std::vector<std::vector<std::uint32_t>> tetrahedron_boundary_facets();
std::vector<std::vector<std::uint32_t>> two_triangles_facets();
/// 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
std::vector<std::vector<std::uint32_t>> torus7_facets();
/// Freudenthal triangulation of (Z_3)^3: 27 vertices, 162 tetrahedra.
std::vector<std::vector<std::uint32_t>> torus3_facets();
/// Real projective 3-space: barycentric subdivision of the join of two
/// antipodal 4-gons, modulo the antipodal map (40 vertices, 192 tetrahedra).
std::vector<std::vector<std::uint32_t>> rp3_facets();
/// Suspension of the 7-vertex torus (not a manifold at the two apexes).
std::vector<std::vector<std::uint32_t>> torus_suspension_facets();

/// Build a catalog complex by name; throws LookupError for unknown names.
CellComplex by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace sheafccz::catalog
