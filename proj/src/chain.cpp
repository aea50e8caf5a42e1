#include "sheafccz/chain.hpp"

#include <bit>
#include <random>
#include <string>

#include "sheafccz/linalg.hpp"

namespace sheafccz {

CochainComplex::CochainComplex(std::shared_ptr<const Sheaf> s) : sheaf_(std::move(s)) {
  const CellComplex& x = sheaf_->complex();
  const unsigned t = x.t();
  dims_.assign(t + 1, 0);
  offsets_.assign(t + 1, {});
  for (unsigned i = 0; i <= t; ++i) {
    offsets_[i].resize(x.count(i));
    for (std::uint32_t c = 0; c < x.count(i); ++c) {
      offsets_[i][c] = dims_[i];
      dims_[i] += sheaf_->dim(i, c);
    }
  }
  for (unsigned i = 0; i < t; ++i) {
    std::vector<SpEntry> ent;
    for (std::uint32_t s = 0; s < x.count(i); ++s) {
      for (auto tau : x.up(i, s)) {
        const Mat r = sheaf_->restriction(i, s, i + 1, tau);
        for (std::size_t p = 0; p < r.rows(); ++p)
          for (std::size_t q = 0; q < r.cols(); ++q)
            if (r(p, q))
              ent.push_back({static_cast<std::uint32_t>(offsets_[i + 1][tau] + p),
                             static_cast<std::uint32_t>(offsets_[i][s] + q), r(p, q)});
      }
    }
    delta_.push_back(SpMat::from_triplets(field(), dims_[i + 1], dims_[i], std::move(ent)));
  }
}

CochainComplex sheaf_cochain_complex(std::shared_ptr<const Sheaf> s) {
  CochainComplex c(std::move(s));
  for (unsigned i = 0; i + 1 < c.t(); ++i) {
    if (!spmul(c.field(), c.delta(i + 1), c.delta(i)).is_zero())
      throw IntegrityError("coboundary squares to a nonzero map at degree " + std::to_string(i) +
                           " (diamond property violated)");
  }
  return c;
}

CochainComplex sheaf_cochain_complex(const Sheaf& s) { return sheaf_cochain_complex(std::make_shared<const Sheaf>(s)); }

namespace {

void check_degree(const CochainComplex& c, unsigned i) {
  if (i > c.t()) throw DomainError("degree " + std::to_string(i) + " outside 0.." + std::to_string(c.t()));
}

}  // namespace

Cohomology cohomology(const CochainComplex& c, unsigned i, Side side) {
  check_degree(c, i);
  const Field& f = c.field();
  const std::size_t n = c.dim(i);
  Cohomology h;
  if (side == Side::Cohomology) {
    h.cycles = i < c.t() ? kernel_basis(f, c.delta(i)) : Mat::identity(n);
    h.boundaries = i > 0 ? image_basis(f, c.delta(i - 1)) : Mat(0, n);
  } else {
    h.cycles = i > 0 ? kernel_basis(f, c.delta(i - 1).transposed()) : Mat::identity(n);
    h.boundaries = i < c.t() ? rref(f, c.delta(i)).basis : Mat(0, n);
  }
  h.reps = quotient_reps(f, h.cycles, h.boundaries);
  h.dim = h.reps.rows();
  return h;
}

std::size_t betti(const CochainComplex& c, unsigned i, Side) {
  check_degree(c, i);
  const Field& f = c.field();
  std::size_t d = c.dim(i);
  if (i < c.t()) d -= rank(f, c.delta(i));
  if (i > 0) d -= rank(f, c.delta(i - 1));
  return d;
}

CSSCode css_from_complex(const CochainComplex& c, unsigned level) {
  if (level < 1 || level + 1 > c.t())
    throw DomainError("CSS level " + std::to_string(level) + " outside 1.." + std::to_string(c.t() == 0 ? 0 : c.t() - 1));
  CSSCode q{c.field(), level, c.dim(level), c.delta(level - 1).transposed(), c.delta(level), 0};
  q.k = betti(c, level);
  return q;
}

namespace {

std::size_t nonzeros(const FVec& v) { return weight(v); }

bool is_logical(const Field& f, const SpMat& checks, const Echelon& stabs, const FVec& v) {
  return is_zero(spmv(f, checks, v)) && !in_span(f, stabs, v);
}

// All of span(B ⊕ reps) with a nonzero reps component, odometer order.
SideDistance exhaustive(const Field& f, char side, const Mat& b, const Mat& reps) {
  const std::size_t n = reps.cols();
  const std::size_t words = (n + 63) / 64;
  const unsigned r = f.r();
  const std::size_t stride = r * words;
  const std::uint32_t q = f.q();
  Mat basis = b;
  for (std::size_t i = 0; i < reps.rows(); ++i) basis.append_row(reps.row(i));
  const std::size_t m = basis.rows();
  const std::size_t first_rep = b.rows();
  // table[(j * q + c) * stride ...] = bit planes of c * basis_j
  std::vector<std::uint64_t> table(m * q * stride, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::uint32_t c = 1; c < q; ++c) {
      std::uint64_t* dst = table.data() + (j * q + c) * stride;
      for (std::size_t col = 0; col < n; ++col) {
        const Elem v = f.mul(static_cast<Elem>(c), basis(j, col));
        for (unsigned k = 0; k < r; ++k)
          if ((v >> k) & 1u) dst[k * words + (col >> 6)] |= std::uint64_t{1} << (col & 63);
      }
    }
  std::vector<std::uint64_t> v(stride, 0);
  std::vector<std::uint32_t> coef(m, 0);
  std::size_t rep_nonzero = 0;
  SideDistance best;
  best.side = side;
  best.exact = true;
  std::vector<std::uint32_t> best_coef;
  while (true) {
    std::size_t j = 0;
    for (; j < m; ++j) {
      const std::uint32_t old = coef[j];
      const std::uint32_t now = (old + 1) % q;
      coef[j] = now;
      const std::uint64_t* d = table.data() + (j * q + (old ^ now)) * stride;
      for (std::size_t w = 0; w < stride; ++w) v[w] ^= d[w];
      if (j >= first_rep) {
        if (old == 0) ++rep_nonzero;
        if (now == 0) --rep_nonzero;
      }
      if (now != 0) break;
    }
    if (j == m) break;
    if (rep_nonzero == 0) continue;
    std::size_t wt = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t any = 0;
      for (unsigned k = 0; k < r; ++k) any |= v[k * words + w];
      wt += static_cast<std::size_t>(std::popcount(any));
    }
    if (wt < best.weight) {
      best.weight = wt;
      best_coef = coef;
    }
  }
  if (!best_coef.empty()) {
    const FVec c(best_coef.begin(), best_coef.end());
    best.witness = row_combination(f, c, basis);
  }
  return best;
}

// Greedy descent: add scalar multiples of stabilizer rows while that lowers weight.
void greedy_reduce(const Field& f, const SpMat& stabs, FVec& v) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < stabs.rows(); ++i) {
      const auto row = stabs.row(i);
      if (row.empty()) continue;
      long best_delta = 0;
      Elem best_c = 0;
      for (std::uint32_t c = 1; c < f.q(); ++c) {
        long delta = 0;
        for (const auto& e : row) {
          const Elem old = v[e.col];
          const Elem now = old ^ f.mul(static_cast<Elem>(c), e.value);
          delta += (now != 0) - (old != 0);
        }
        if (delta < best_delta) {
          best_delta = delta;
          best_c = static_cast<Elem>(c);
        }
      }
      if (best_c) {
        for (const auto& e : row) v[e.col] ^= f.mul(best_c, e.value);
        improved = true;
      }
    }
  }
}

SideDistance sampled(const Field& f, char side, const SpMat& stabs, const Mat& reps, const DistanceBudget& budget) {
  std::mt19937_64 rng(budget.seed ^ (side == 'X' ? 0x5851f42d4c957f2dULL : 0x14057b7ef767814fULL));
  std::uniform_int_distribution<std::uint32_t> elem(0, f.q() - 1);
  SideDistance best;
  best.side = side;
  auto consider = [&](FVec v) {
    greedy_reduce(f, stabs, v);
    const std::size_t w = nonzeros(v);
    if (w < best.weight) {
      best.weight = w;
      best.witness = std::move(v);
    }
  };
  for (std::size_t i = 0; i < reps.rows(); ++i) consider(reps.row_vec(i));
  for (std::size_t s = 0; s < budget.samples; ++s) {
    FVec c(reps.rows(), 0);
    while (is_zero(c))
      for (auto& x : c) x = static_cast<Elem>(elem(rng));
    FVec v = row_combination(f, c, reps);
    for (std::size_t i = 0; i < stabs.rows(); ++i) {
      if (rng() & 1u) continue;
      const Elem a = static_cast<Elem>(elem(rng));
      if (!a) continue;
      for (const auto& e : stabs.row(i)) v[e.col] ^= f.mul(a, e.value);
    }
    consider(std::move(v));
  }
  return best;
}

SideDistance search_side(const Field& f, char side, const SpMat& checks, const SpMat& stabs,
                         const DistanceBudget& budget) {
  const Mat z = kernel_basis(f, checks);
  const Echelon b = rref(f, stabs);
  const Mat reps = quotient_reps(f, z, b.basis);
  if (reps.rows() == 0) {
    SideDistance none;
    none.side = side;
    none.exact = true;
    return none;
  }
  const std::size_t dim_z = z.rows();
  double candidates = 1.0;
  for (std::size_t i = 0; i < dim_z; ++i) candidates *= f.q();
  SideDistance out = (!budget.force_random && candidates <= static_cast<double>(budget.brute_force_cap))
                         ? exhaustive(f, side, b.basis, reps)
                         : sampled(f, side, stabs, reps, budget);
  if (!is_logical(f, checks, b, out.witness))
    throw IntegrityError(std::string("distance witness on side ") + side + " is not a nontrivial logical");
  return out;
}

}  // namespace

DistanceReport distance_bounds(const CSSCode& code, const DistanceBudget& budget) {
  DistanceReport rep;
  rep.seed = budget.seed;
  rep.samples = budget.samples;
  rep.x = search_side(code.field, 'X', code.hz, code.hx, budget);
  rep.z = search_side(code.field, 'Z', code.hx, code.hz, budget);
  rep.d_upper = std::min(rep.x.weight, rep.z.weight);
  rep.min_side = rep.x.weight <= rep.z.weight ? 'X' : 'Z';
  if (rep.x.exact && rep.z.exact) rep.d_exact = rep.d_upper;
  return rep;
}

}  // namespace sheafccz
