#include <algorithm>
#include <exception>
#include <string>

#include "abq/error.hpp"
#include "abq/homology.hpp"
#include "internal.hpp"

namespace abq {

using linalg::IntMatrix;
using linalg::Integer;
using linalg::IntVector;

namespace {

std::vector<Integer> torsion_part(std::vector<Integer> const& factors) {
  std::vector<Integer> t;
  for (auto const& f : factors)
    if (sgn(f) != 0) t.push_back(f);
  return t;
}

std::size_t rank_of(std::vector<Integer> const& diag) {
  return static_cast<std::size_t>(std::count_if(
      diag.begin(), diag.end(), [](Integer const& d) { return sgn(d) != 0; }));
}

}  // namespace

H2Slice::H2Slice(QuandleTable const& q, std::size_t orbit, Exec exec)
    : n_(q.size()), orbit_(orbit) {
  detail::require_homology_size(q);
  detail::SliceBasis const s(q, orbit);
  members_ = s.members;
  std::size_t const dim = members_.size() * n_;

  d2_ = detail::differential_matrix(q, s, 2);
  linalg::SmithOptions opts;
  opts.right = false;
  opts.left = false;
  opts.left_inverse = true;
  opts.exec = exec;
  auto d2snf = linalg::smith_normal_form(d2_, opts);
  d2_rank_ = d2snf.rank;
  d2_left_inv_ = std::move(d2snf.transform_left_inverse);
  std::size_t const kdim = dim - d2_rank_;

  // A cycle x satisfies x = y U with y = x U^-1 vanishing below d2_rank_, so
  // the trailing coordinates of y describe x in the kernel basis.
  IntMatrix const b3 = detail::boundary_generators(q, s);
  IntMatrix const full = b3 * d2_left_inv_;
  IntMatrix coords(b3.rows(), kdim);
  for (std::size_t r = 0; r < b3.rows(); ++r) {
    for (std::size_t c = 0; c < d2_rank_; ++c) {
      if (sgn(full(r, c)) != 0) {
        throw Error(ErrorKind::CriterionMismatch,
                    "a boundary of orbit " + std::to_string(orbit) +
                        " is not a cycle");
      }
    }
    for (std::size_t c = 0; c < kdim; ++c) coords(r, c) = full(r, d2_rank_ + c);
  }

  linalg::SmithOptions qopts;
  qopts.left = false;
  qopts.exec = exec;
  auto qsnf = linalg::smith_normal_form(coords, qopts);
  quotient_rank_ = qsnf.rank;
  quotient_right_ = std::move(qsnf.transform_right);
  quotient_diag_.assign(kdim, Integer(0));
  for (std::size_t j = 0; j < quotient_rank_; ++j) quotient_diag_[j] = qsnf.diag[j];

  auto const factors = linalg::group_factors(qsnf.diag, kdim);
  torsion_ = torsion_part(factors);
  free_rank_ = kdim - quotient_rank_;
}

IntVector H2Slice::slice_vector(Chain const& chain) const {
  if (chain.size() != n_ * n_) {
    throw Error(ErrorKind::ShapeError, "2-chain has the wrong length",
                {static_cast<std::int64_t>(chain.size())});
  }
  IntVector v(members_.size() * n_);
  for (std::size_t p = 0; p < members_.size(); ++p)
    for (std::size_t b = 0; b < n_; ++b) v[p * n_ + b] = chain[members_[p] * n_ + b];
  return v;
}

bool H2Slice::is_cycle(Chain const& chain) const {
  auto const img = slice_vector(chain) * d2_;
  return std::all_of(img.begin(), img.end(), [](Integer const& x) { return sgn(x) == 0; });
}

IntVector H2Slice::class_coordinates(Chain const& chain) const {
  if (!is_cycle(chain)) {
    throw Error(ErrorKind::ShapeError, "chain is not a cycle of orbit " +
                                           std::to_string(orbit_));
  }
  IntVector const y = slice_vector(chain) * d2_left_inv_;
  IntVector const kernel(y.begin() + static_cast<std::ptrdiff_t>(d2_rank_), y.end());
  IntVector w = kernel * quotient_right_;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (sgn(quotient_diag_[j]) != 0) {
      mpz_fdiv_r(w[j].get_mpz_t(), w[j].get_mpz_t(), quotient_diag_[j].get_mpz_t());
    }
  }
  return w;
}

bool H2Slice::is_torsion_class(Chain const& chain) const {
  auto const w = class_coordinates(chain);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (sgn(quotient_diag_[j]) == 0 && sgn(w[j]) != 0) return false;
  return true;
}

std::vector<Integer> H2Slice::generated_subgroup(std::vector<Chain> const& cycles) const {
  std::vector<std::size_t> tors;
  for (std::size_t j = 0; j < quotient_diag_.size(); ++j)
    if (sgn(quotient_diag_[j]) != 0 && quotient_diag_[j] != 1) tors.push_back(j);
  std::size_t const t = tors.size();
  if (t == 0) return {};

  // Generators and the relations d_j e_j span a full-rank lattice L in Z^t;
  // the subgroup is L / diag(d).
  IntMatrix stacked(0, t);
  IntVector row(t);
  for (auto const& c : cycles) {
    if (!is_torsion_class(c)) {
      throw Error(ErrorKind::ShapeError, "generator is not a torsion class");
    }
    auto const w = class_coordinates(c);
    for (std::size_t k = 0; k < t; ++k) row[k] = w[tors[k]];
    stacked.append_row(row);
  }
  for (std::size_t k = 0; k < t; ++k) {
    std::fill(row.begin(), row.end(), Integer(0));
    row[k] = quotient_diag_[tors[k]];
    stacked.append_row(row);
  }
  linalg::SmithOptions opts;
  opts.left = false;
  auto const snf = linalg::smith_normal_form(stacked, opts);
  // L has basis diag(e) V^-1, so diag(d) = X diag(e) V^-1 gives
  // X = diag(d) V diag(e)^-1.
  IntMatrix x(t, t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      Integer v = quotient_diag_[tors[j]] * snf.transform_right(j, k);
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), snf.diag[k].get_mpz_t());
      x(j, k) = v;
    }
  }
  return torsion_part(linalg::invariant_factors(x, t).invariant_factors);
}

OrbitHomology homology_h2_slice_by_cokernel(QuandleTable const& q, std::size_t orbit,
                                            Exec exec) {
  detail::require_homology_size(q);
  detail::SliceBasis const s(q, orbit);
  std::size_t const dim = s.members.size() * s.n;
  auto const d2diag = linalg::smith_diagonal(detail::differential_matrix(q, s, 2), exec);
  auto const d3diag = linalg::smith_diagonal(detail::boundary_generators(q, s), exec);
  OrbitHomology h;
  // C_2 / Z_2 embeds in C_1, so it is free and the torsion of C_2 / B_2 is
  // exactly the torsion of Z_2 / B_2.
  h.torsion = torsion_part(linalg::group_factors(d3diag, dim));
  h.free_rank = dim - rank_of(d2diag) - rank_of(d3diag);
  return h;
}

Homology2Result homology_h2(QuandleTable const& q, Exec exec) {
  detail::require_homology_size(q);
  auto const od = orbit_decomposition(q);
  std::size_t const r = od.count();
  Homology2Result res;
  res.per_orbit.resize(r);
  std::vector<std::exception_ptr> failures(r);

  auto const count = static_cast<std::ptrdiff_t>(r);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    auto const i = static_cast<std::size_t>(ii);
    try {
      H2Slice const slice(q, i, exec);
      OrbitHomology const check = homology_h2_slice_by_cokernel(q, i, exec);
      if (check.free_rank != slice.free_rank() || check.torsion != slice.torsion()) {
        throw Error(ErrorKind::CriterionMismatch,
                    "kernel and cokernel routes disagree on orbit " + std::to_string(i),
                    {static_cast<std::int64_t>(i)});
      }
      res.per_orbit[i] = {slice.free_rank(), slice.torsion()};
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (auto const& f : failures)
    if (f) std::rethrow_exception(f);

  std::vector<Integer> all;
  for (auto const& h : res.per_orbit) {
    res.total_free_rank += h.free_rank;
    all.insert(all.end(), h.torsion.begin(), h.torsion.end());
  }
  res.total_torsion = direct_sum_factors(all);
  return res;
}

linalg::AbelianGroupSpec homology_h1(QuandleTable const& q, Exec exec) {
  return linalg::invariant_factors(differential(q, 2), q.size(), exec);
}

bool is_quotient_group(std::vector<Integer> const& t, std::vector<Integer> const& g) {
  if (t.size() > g.size()) return false;
  for (std::size_t s = 0; s < t.size(); ++s) {
    Integer const& a = t[t.size() - 1 - s];
    Integer const& b = g[g.size() - 1 - s];
    if (sgn(a) == 0) {
      if (sgn(b) != 0) return false;
      continue;
    }
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
  }
  return true;
}

std::vector<Integer> direct_sum_factors(std::vector<Integer> const& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (sgn(orders[k]) <= 0) {
      throw Error(ErrorKind::ShapeError, "cyclic orders must be positive");
    }
    d(k, k) = orders[k];
  }
  return torsion_part(
      linalg::group_factors(linalg::smith_diagonal(d, Exec::serial), orders.size()));
}

}  // namespace abq
