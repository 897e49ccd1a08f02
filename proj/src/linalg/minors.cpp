#include <cstddef>
#include <vector>

#include "abq/error.hpp"
#include "abq/linalg.hpp"

namespace abq::linalg {

Integer determinant(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
  }
  std::size_t const n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij = (a_ij * a_kk - a_ik * a_kj) / prev, exact by Sylvester.
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

Integer maximal_minors_gcd_by_expansion(IntMatrix const& m, Exec exec) {
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();
  if (rows < cols) {
    throw Error(ErrorKind::ShapeError,
                "maximal minors need at least as many rows as columns");
  }
  if (cols == 0) return 1;
  auto const picks = subsets(rows, cols);
  auto const count = static_cast<std::ptrdiff_t>(picks.size());

  Integer g = 0;
  bool done = false;  // gcd reached 1
#pragma omp parallel if (exec == Exec::parallel && count > 32)
  {
    Integer local = 0;
    IntMatrix minor(cols, cols);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t s = 0; s < count; ++s) {
      bool stop = false;
#pragma omp atomic read
      stop = done;
      if (stop || local == 1) continue;
      auto const& rowset = picks[static_cast<std::size_t>(s)];
      for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) minor(i, j) = m(rowset[i], j);
      Integer d = determinant(minor);
      mpz_gcd(local.get_mpz_t(), local.get_mpz_t(), d.get_mpz_t());
      if (local == 1) {
#pragma omp atomic write
        done = true;
      }
    }
#pragma omp critical(abq_minor_gcd)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), local.get_mpz_t());
  }
  return g;
}

Integer maximal_minors_gcd_by_smith(IntMatrix const& m, Exec exec) {
  if (m.rows() < m.cols()) {
    throw Error(ErrorKind::ShapeError,
                "maximal minors need at least as many rows as columns");
  }
  auto const diag = smith_diagonal(m, exec);
  Integer product = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (sgn(diag[i]) == 0) return 0;
    product *= diag[i];
  }
  return product;
}

Integer maximal_minors_gcd(IntMatrix const& m, Exec exec) {
  Integer const by_smith = maximal_minors_gcd_by_smith(m, exec);
  if (m.cols() <= kMaxExpansionCols) {
    Integer const by_minors = maximal_minors_gcd_by_expansion(m, exec);
    if (by_minors != by_smith) {
      throw Error(ErrorKind::CriterionMismatch,
                  "minor expansion gives " + by_minors.get_str() +
                      " but Smith form gives " + by_smith.get_str());
    }
  }
  return by_smith;
}

RowLattice::RowLattice(IntMatrix const& basis_rows, Exec exec)
    : cols_(basis_rows.cols()) {
  SmithOptions opts;
  opts.left = false;
  opts.exec = exec;
  auto snf = smith_normal_form(basis_rows, opts);
  rank_ = snf.rank;
  diag_ = std::move(snf.diag);
  right_ = std::move(snf.transform_right);
}

IntVector RowLattice::smith_coordinates(IntVector const& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::ShapeError, "vector length does not match lattice");
  }
  return v * right_;
}

bool RowLattice::contains(IntVector const& v) const {
  // x B = v  <=>  (x U^-1) D = v V, so v V must be divisible by D entrywise.
  IntVector const w = smith_coordinates(v);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j < rank_) {
      if (!mpz_divisible_p(w[j].get_mpz_t(), diag_[j].get_mpz_t())) return false;
    } else if (sgn(w[j]) != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_member(IntVector const& v, IntMatrix const& basis_rows) {
  if (v.size() != basis_rows.cols()) {
    throw Error(ErrorKind::ShapeError, "vector length does not match basis");
  }
  return RowLattice(basis_rows).contains(v);
}

}  // namespace abq::linalg
