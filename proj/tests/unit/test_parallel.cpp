#include <doctest.h>

#include <random>

#include "abq/fp.hpp"
#include "abq/group.hpp"
#include "abq/homology.hpp"
#include "abq/linalg.hpp"
#include "oracles.hpp"

using namespace abq;

// The serial path is the reference; the OpenMP kernels must match it exactly.
TEST_SUITE("parallel") {

TEST_CASE("Smith normal form") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    auto const m = oracle::random_matrix(rng, 24, 18, -20, 20);
    linalg::SmithOptions s;
    s.exec = Exec::serial;
    s.left_inverse = true;
    linalg::SmithOptions p = s;
    p.exec = Exec::parallel;
    auto const a = linalg::smith_normal_form(m, s);
    auto const b = linalg::smith_normal_form(m, p);
    CHECK(a.diag == b.diag);
    CHECK(a.transform_left == b.transform_left);
    CHECK(a.transform_right == b.transform_right);
    CHECK(a.transform_left_inverse == b.transform_left_inverse);
  }
}

TEST_CASE("minors and lattices") {
  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 20; ++rep) {
    auto const m = oracle::random_matrix(rng, 9, 4, -6, 6);
    CHECK(linalg::maximal_minors_gcd_by_expansion(m, Exec::serial) ==
          linalg::maximal_minors_gcd_by_expansion(m, Exec::parallel));
    CHECK(linalg::left_kernel_basis(m, Exec::serial) == linalg::left_kernel_basis(m, Exec::parallel));
  }
}

TEST_CASE("homology") {
  for (auto const& q : {family_u_starstar(2, 4), family_graphic({2, 2, 2, 2}), family_u(3, 5)}) {
    auto const a = homology_h2(q, Exec::serial);
    auto const b = homology_h2(q, Exec::parallel);
    CHECK(a.total_free_rank == b.total_free_rank);
    CHECK(a.total_torsion == b.total_torsion);
    for (std::size_t i = 0; i < a.per_orbit.size(); ++i) {
      CHECK(a.per_orbit[i].free_rank == b.per_orbit[i].free_rank);
      CHECK(a.per_orbit[i].torsion == b.per_orbit[i].torsion);
    }
  }
}

TEST_CASE("enumeration") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_quandles(n, false, Exec::serial) == enumerate_quandles(n, false, Exec::parallel));
    CHECK(enumerate_quandles(n, true, Exec::serial) == enumerate_quandles(n, true, Exec::parallel));
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(enumerate_abelian_quandles(n, std::nullopt, Exec::serial) ==
          enumerate_abelian_quandles(n, std::nullopt, Exec::parallel));
  }
}

TEST_CASE("criteria") {
  std::mt19937_64 rng(63);
  for (int rep = 0; rep < 30; ++rep) {
    auto const p = oracle::random_params(rng, 4, 6, 12);
    CHECK(parameter_group(p, Exec::serial).invariant_factors ==
          parameter_group(p, Exec::parallel).invariant_factors);
    CHECK(free_abelian_criteria(p, Exec::serial).free_abelian ==
          free_abelian_criteria(p, Exec::parallel).free_abelian);
  }
}

}  // TEST_SUITE
