#include <doctest.h>

#include <numeric>
#include <random>

#include "abq/error.hpp"
#include "abq/fp.hpp"
#include "abq/quandle.hpp"
#include "oracles.hpp"

using namespace abq;

namespace {

FpParameters params(std::size_t r, std::vector<std::vector<std::vector<std::int64_t>>> blocks) {
  FpParameters p;
  p.r = r;
  for (auto& b : blocks) p.collections.emplace_back(r, std::move(b));
  p.validate();
  return p;
}

std::vector<Element> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> s(n);
  std::iota(s.begin(), s.end(), Element{0});
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("fp") {

TEST_CASE("normal forms in G(M)") {
  ParamCollection const cyc(2, {{2}});
  auto const x = gm_generator(cyc, 0);
  CHECK(gm_multiply(cyc, x, x) == gm_identity(cyc));
  CHECK(cyc.order() == 2);

  // x0^3 = 1, x0 x1^2 = 1: order 6, and x1^2 = x0^2.
  ParamCollection const M(3, {{3}, {1, 2}});
  CHECK(M.order() == 6);
  CHECK(normalize(M, {0, 2}) == GmElement{2, 0});
  CHECK(normalize(M, {-1, 0}) == GmElement{2, 0});
  CHECK(gm_elements(M).size() == 6);
  CHECK(gm_elements(M)[1] == GmElement{1, 0});
}

TEST_CASE("G(M) group laws hold exhaustively") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::uint64_t size = 1; size <= 12; ++size) {
      for (auto const& M : collections_of_order(r, size)) {
        auto const els = gm_elements(M);
        REQUIRE(els.size() == size);
        auto const e = gm_identity(M);
        for (std::size_t i = 0; i < els.size(); ++i) {
          auto const& a = els[i];
          CHECK(gm_index(M, a) == i);
          CHECK(gm_multiply(M, a, e) == a);
          CHECK(gm_multiply(M, a, gm_inverse(M, a)) == e);
          for (auto const& b : els) {
            CHECK(gm_multiply(M, a, b) == gm_multiply(M, b, a));
            for (auto const& c : els) {
              CHECK(gm_multiply(M, gm_multiply(M, a, b), c) ==
                    gm_multiply(M, a, gm_multiply(M, b, c)));
            }
          }
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
  // Larger groups: closure and inverses only.
  for (int rep = 0; rep < 20; ++rep) {
    auto const p = oracle::random_params(rng, 4, 8, 64);
    for (auto const& M : p.collections) {
      auto const els = gm_elements(M);
      CHECK(els.size() == M.order());
      for (auto const& a : els) CHECK(gm_multiply(M, a, gm_inverse(M, a)) == gm_identity(M));
    }
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK(kind_of([] { ParamCollection(2, {{0}}); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { ParamCollection(3, {{2}, {2, 1}}); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { ParamCollection(3, {{2}}); }) == ErrorKind::InvalidParameters);
  FpParameters p;
  p.r = 2;
  p.collections.emplace_back(2, std::vector<std::vector<std::int64_t>>{{1}});
  CHECK(kind_of([&] { p.validate(); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { build_fp_quandle(params(2, {{{4096}}, {{1}}})); }) ==
        ErrorKind::SizeTooLarge);
}

TEST_CASE("building follows the shift rule") {
  auto const p = params(2, {{{2}}, {{3}}});
  auto const q = build_fp_quandle(p);
  REQUIRE(q.size() == 5);
  // x0 ◁ y = x0·x_0 = x1, y ◁ x = y·x_0.
  CHECK(q.op(0, 2) == 1);
  CHECK(q.op(2, 0) == 3);
  CHECK(q.op(4, 1) == 2);
  CHECK(q.op(0, 1) == 0);
  CHECK(is_abelian(q));
  CHECK(orbit_decomposition(q).sizes() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("named families have the expected parameters") {
  CHECK(extract_parameters(family_u(2, 3)) == params(2, {{{2}}, {{3}}}));
  CHECK(canonical_parameters(family_u(3, 2)) == params(2, {{{2}}, {{3}}}));
  CHECK(extract_parameters(family_u_star(2, 4)) ==
        params(3, {{{2}, {0, 1}}, {{1}, {0, 4}}, {{1}, {0, 1}}}));
  CHECK(extract_parameters(family_u_starstar(2, 4)) ==
        params(3, {{{2}, {0, 1}}, {{1}, {0, 4}}, {{2}, {1, 1}}}));
  CHECK(extract_parameters(family_graphic({2, 4, 2})) ==
        params(3, {{{2}, {1, 1}}, {{4}, {3, 1}}, {{2}, {1, 1}}}));
  CHECK(family_u(2, 3).labels() ==
        std::vector<std::string>{"x0", "x1", "y0", "y1", "y2"});
  CHECK(family_u_star(2, 2).size() == 5);
  CHECK(family_u_starstar(2, 2).size() == 6);
  CHECK(family_graphic({2, 2, 2, 2}).size() == 8);
  CHECK_THROWS_AS(family_graphic({3}), Error);
}

TEST_CASE("parameters print in block form") {
  CHECK(to_string(params(2, {{{2}}, {{3}}})) == "r = 2\nM(1) = [2]\nM(2) = [3]");
}

TEST_CASE("extraction rejects non-abelian tables and bad orders") {
  auto const d3 = validate_table(
      std::vector<std::vector<std::int64_t>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(kind_of([&] { extract_parameters(d3); }) == ErrorKind::NotAbelian);
  CHECK(kind_of([] { extract_parameters(family_u(2, 3), std::vector<std::size_t>{0}); }) ==
        ErrorKind::WrongOrbitCount);
}

TEST_CASE("build and extract are inverse up to the recorded relabelling") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 200; ++rep) {
    auto const p = oracle::random_params(rng, 4, 6, 8);
    auto const q = build_fp_quandle(p);
    CHECK(q.size() == p.total_size());
    auto const ex = extract_with_coordinates(q);
    CHECK(ex.params == p);
    CHECK(relabel(q, ex.to_fp) == build_fp_quandle(ex.params));

    auto const scrambled = relabel(q, random_perm(rng, q.size()));
    auto const ex2 = extract_with_coordinates(scrambled);
    CHECK(relabel(scrambled, ex2.to_fp) == build_fp_quandle(ex2.params));
  }
}

TEST_CASE("canonical parameters are an isomorphism invariant") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 150; ++rep) {
    auto const p = oracle::random_params(rng, 4, 4, 4);
    auto const q = build_fp_quandle(p);
    if (q.size() > 8) continue;
    auto const c = canonical_parameters(q);
    CHECK(c <= extract_parameters(q));
    CHECK(canonical_parameters(relabel(q, random_perm(rng, q.size()))) == c);
    CHECK(canonical_parameters(build_fp_quandle(c)) == c);
    CHECK(find_isomorphism(build_fp_quandle(c), q).has_value());
  }
}

TEST_CASE("abelian census agrees with the brute-force enumeration") {
  std::vector<std::size_t> const frozen{1, 1, 2, 5, 15, 55};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t brute = 0;
    for (auto const& q : enumerate_quandles(n, true))
      if (is_abelian(q)) ++brute;
    auto const census = enumerate_abelian_quandles(n);
    CHECK(census.size() == brute);
    CHECK(census.size() == frozen[n - 1]);
    CHECK(std::is_sorted(census.begin(), census.end()));
    for (auto const& p : census) CHECK(p.total_size() == n);
  }
  // Size 2 has two one-element orbits, so only the trivial quandle.
  auto const two = enumerate_abelian_quandles(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == params(2, {{{1}}, {{1}}}));

  std::size_t by_orbits = 0;
  for (std::size_t r = 1; r <= 6; ++r) by_orbits += enumerate_abelian_quandles(6, r).size();
  CHECK(by_orbits == frozen[5]);
}

}  // TEST_SUITE
