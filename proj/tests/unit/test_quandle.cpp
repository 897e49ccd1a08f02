#include <doctest.h>

#include <numeric>
#include <random>

#include "abq/error.hpp"
#include "abq/fp.hpp"
#include "abq/quandle.hpp"
#include "oracles.hpp"

using namespace abq;

namespace {

using Raw = std::vector<std::vector<std::int64_t>>;

ErrorKind kind_of(Raw const& raw) {
  try {
    validate_table(raw);
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return ErrorKind::ParseError;
}

// Dihedral quandle of order 3: a ◁ b = 2b - a mod 3.
QuandleTable dihedral3() { return validate_table(Raw{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }

std::vector<Element> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> s(n);
  std::iota(s.begin(), s.end(), Element{0});
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

// Every table on {0..n-1} with the diagonal fixed, filtered by the oracle.
std::size_t brute_count(std::size_t n) {
  std::size_t const cells = n * n - n;
  std::size_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) total *= n;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Raw t(n, std::vector<std::int64_t>(n));
    std::size_t c = code;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) {
          t[a][b] = static_cast<std::int64_t>(a);
        } else {
          t[a][b] = static_cast<std::int64_t>(c % n);
          c /= n;
        }
      }
    }
    if (oracle::is_quandle(t)) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("quandle") {

TEST_CASE("validation reports the first violated axiom") {
  CHECK(kind_of(Raw{}) == ErrorKind::InvalidShape);
  CHECK(kind_of(Raw{{0, 0}, {1}}) == ErrorKind::InvalidShape);
  CHECK(kind_of(Raw{{0, 2}, {1, 1}}) == ErrorKind::EntryOutOfRange);
  CHECK(kind_of(Raw{{1, 0}, {0, 1}}) == ErrorKind::NotIdempotent);
  CHECK(kind_of(Raw{{0, 2, 0}, {2, 1, 1}, {1, 0, 2}}) == ErrorKind::NotSelfDistributive);

  try {
    validate_table(Raw{{0, 0, 0}, {1, 1, 1}, {2, 1, 2}});
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAPermutation);
    CHECK(e.witness() == std::vector<std::int64_t>{1});
  }
}

TEST_CASE("labelled counts agree with exhaustive search") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(enumerate_quandles(n, false).size() == brute_count(n));
  }
}

TEST_CASE("frozen quandle counts") {
  std::vector<std::size_t> const labelled{1, 1, 5, 36, 404};
  std::vector<std::size_t> const classes{1, 1, 3, 7, 22, 73};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_quandles(n, false).size() == labelled[n - 1]);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_quandles(n, true).size() == classes[n - 1]);
  CHECK_THROWS_AS(enumerate_quandles(kMaxEnumerationSize + 1, true), Error);
}

TEST_CASE("every enumerated table satisfies the axioms") {
  for (auto const& q : enumerate_quandles(4, false)) {
    Raw raw(q.size());
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) raw[a].push_back(q.op(a, b));
    CHECK(oracle::is_quandle(raw));
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) CHECK(q.inv_op(q.op(a, b), b) == a);
  }
}

TEST_CASE("abelian and 2-reductive coincide on small tables") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto const& q : enumerate_quandles(n, false)) CHECK(is_abelian(q) == is_two_reductive(q));
  CHECK_FALSE(is_abelian(dihedral3()));
  CHECK_FALSE(is_two_reductive(dihedral3()));
}

TEST_CASE("orbits") {
  auto const od = orbit_decomposition(family_u(2, 3));
  CHECK(od.count() == 2);
  CHECK(od.sizes() == std::vector<std::size_t>{2, 3});
  CHECK(od.orbits[0] == std::vector<Element>{0, 1});
  CHECK(orbit_decomposition(trivial_quandle(4)).count() == 4);
  CHECK(orbit_decomposition(dihedral3()).count() == 1);
}

TEST_CASE("inner translations of an abelian quandle commute and act regularly") {
  auto const q = family_u_star(2, 4);
  auto const it = inner_translations(q);
  auto const r = it.orbits.count();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (auto a : it.orbits.orbits[i]) {
        CHECK(it.apply(i, j, a) == q.op(a, it.orbits.orbits[j][0]));
      }
    }
  }
  CHECK_THROWS_AS(inner_translations(dihedral3()), Error);
}

TEST_CASE("canonical table is invariant under relabelling") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& q : enumerate_quandles(n, true)) {
      CHECK(canonical_table(q) == q);
      auto const p = relabel(q, random_perm(rng, n));
      CHECK(canonical_table(p) == q);
    }
  }
}

TEST_CASE("isomorphism search agrees with trying every bijection") {
  std::mt19937_64 rng(22);
  auto const classes = enumerate_quandles(4, true);
  for (auto const& q : classes) {
    for (auto const& p : classes) {
      auto const other = relabel(p, random_perm(rng, 4));
      auto const sigma = find_isomorphism(q, other);
      CHECK(sigma.has_value() == oracle::isomorphic_brute(q, other));
      if (sigma) CHECK(relabel(q, *sigma) == other);
    }
  }
  CHECK_FALSE(find_isomorphism(trivial_quandle(3), trivial_quandle(4)).has_value());
}

TEST_CASE("relabel rejects non-bijections") {
  CHECK_THROWS_AS(relabel(trivial_quandle(3), {0, 0, 1}), Error);
  CHECK_THROWS_AS(relabel(trivial_quandle(3), {0, 1}), Error);
}

}  // TEST_SUITE
