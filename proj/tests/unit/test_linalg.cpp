#include <doctest.h>

#include <random>

#include "abq/error.hpp"
#include "abq/linalg.hpp"
#include "oracles.hpp"

using namespace abq;
using namespace abq::linalg;

namespace {

std::vector<Integer> nonzero(std::vector<Integer> const& d) {
  std::vector<Integer> out;
  for (auto const& x : d)
    if (sgn(x) != 0) out.push_back(x);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      auto const m = oracle::random_matrix(rng, n, n, -7, 7);
      CHECK(determinant(m) == oracle::det_laplace(m));
    }
  }
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
}

TEST_CASE("Smith diagonal matches determinantal divisors") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 250; ++rep) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    auto const rows = dim(rng);
    auto const cols = dim(rng);
    auto const m = oracle::random_matrix(rng, rows, cols, -6, 6);
    auto const d = smith_diagonal(m);
    CHECK(nonzero(d) == oracle::invariant_factors_by_divisors(m));
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      if (sgn(d[k + 1]) == 0) continue;
      CHECK(mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("Smith transforms reproduce the diagonal and are unimodular") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 80; ++rep) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    auto const m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    SmithOptions opts;
    opts.left_inverse = true;
    auto const s = smith_normal_form(m, opts);
    IntMatrix d(m.rows(), m.cols());
    for (std::size_t k = 0; k < s.diag.size(); ++k) d(k, k) = s.diag[k];
    CHECK(s.transform_left * m * s.transform_right == d);
    CHECK(abs(determinant(s.transform_left)) == 1);
    CHECK(abs(determinant(s.transform_right)) == 1);
    CHECK(s.transform_left_inverse * s.transform_left == IntMatrix::identity(m.rows()));
  }
}

TEST_CASE("invariant factors of small presentations") {
  CHECK(invariant_factors(IntMatrix{{2, 0}, {0, 3}}, 2).invariant_factors == ints({6}));
  CHECK(invariant_factors(IntMatrix{{2, 4}, {6, 8}}, 2).invariant_factors == ints({2, 4}));
  auto const free3 = invariant_factors(IntMatrix(0, 3), 3);
  CHECK(free3.invariant_factors == ints({0, 0, 0}));
  CHECK(free3.free_rank() == 3);
  auto const mixed = invariant_factors(IntMatrix{{4, 0, 0}}, 3);
  CHECK(mixed.invariant_factors == ints({4, 0, 0}));
  CHECK(mixed.torsion() == ints({4}));
  CHECK(mixed.torsion_order() == 4);
  CHECK(invariant_factors(IntMatrix{{1, 0}, {0, 1}}, 2).is_trivial());
}

TEST_CASE("arbitrary precision entries survive elimination") {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 100);
  IntMatrix m(2, 2);
  m(0, 0) = big * 6;
  m(0, 1) = big * 4;
  m(1, 0) = big * 9;
  m(1, 1) = big * 6 + 1;
  CHECK(nonzero(smith_diagonal(m)) == oracle::invariant_factors_by_divisors(m));
  CHECK(determinant(m) == oracle::det_laplace(m));
}

TEST_CASE("maximal minors gcd by expansion, by Smith and by the oracle") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 120; ++rep) {
    std::uniform_int_distribution<std::size_t> cdim(1, 3);
    auto const cols = cdim(rng);
    auto const rows = cols + cdim(rng);
    auto const m = oracle::random_matrix(rng, rows, cols, -5, 5);
    auto const expected = oracle::maximal_minors_gcd(m);
    CHECK(maximal_minors_gcd_by_expansion(m) == expected);
    CHECK(maximal_minors_gcd_by_smith(m) == expected);
    CHECK(maximal_minors_gcd(m) == expected);
  }
  CHECK(maximal_minors_gcd(IntMatrix{{2, 0}, {0, 2}, {2, 2}}) == 4);
  CHECK(maximal_minors_gcd(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("lattice membership") {
  IntMatrix const basis{{2, 0}, {0, 3}};
  CHECK(lattice_member({Integer(4), Integer(3)}, basis));
  CHECK_FALSE(lattice_member({Integer(1), Integer(0)}, basis));
  CHECK(lattice_member({Integer(0), Integer(0)}, IntMatrix(0, 2)));

  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 40; ++rep) {
    auto const b = oracle::random_matrix(rng, 3, 4, -4, 4);
    RowLattice const lat(b);
    auto const coeffs = oracle::random_matrix(rng, 1, 3, -3, 3);
    IntVector v(4);
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t r = 0; r < 3; ++r) v[c] += coeffs(0, r) * b(r, c);
    CHECK(lat.contains(v));
    // v + e_0 is certainly outside when it raises the rank.
    IntVector w = v;
    w[0] += 1;
    IntMatrix stacked = b;
    stacked.append_row(w);
    bool const in_span = nonzero(smith_diagonal(stacked)).size() == lat.rank();
    if (!in_span) CHECK_FALSE(lat.contains(w));
  }
}

TEST_CASE("left kernel") {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 40; ++rep) {
    auto const m = oracle::random_matrix(rng, 5, 3, -3, 3);
    auto const k = left_kernel_basis(m);
    CHECK((k * m).is_zero());
    CHECK(k.rows() == 5 - nonzero(smith_diagonal(m)).size());
    CHECK(nonzero(smith_diagonal(k)).size() == k.rows());
  }
}

TEST_CASE("shape errors") {
  IntMatrix const row{{1, 2}};
  CHECK_THROWS_AS(row * row, Error);
}

}  // TEST_SUITE
