#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abq/exec.hpp"
#include "abq/quandle.hpp"

namespace abq {

// One lower-triangular block of parameters for an orbit of an r-orbit
// quandle. Storage is 0-based: m[j][k] for 0 <= k <= j < r-1, with m[j][j]
// the diagonal. Row j encodes the relation prod_k x_k^{m[j][k]} = 1 in the
// abelian group G(M) generated by x_0..x_{r-2}.
struct ParamCollection {
  std::size_t r = 1;
  std::vector<std::vector<std::int64_t>> m;

  ParamCollection() = default;
  ParamCollection(std::size_t orbits, std::vector<std::vector<std::int64_t>> rows);

  [[nodiscard]] std::size_t rank() const noexcept { return r - 1; }
  [[nodiscard]] std::int64_t diagonal(std::size_t j) const { return m[j][j]; }
  // |G(M)| = product of the diagonal.
  [[nodiscard]] std::uint64_t order() const;

  // Throws InvalidParameters unless m[j][j] >= 1 and 0 <= m[j][k] < m[k][k].
  void validate() const;

  friend bool operator==(ParamCollection const&, ParamCollection const&) = default;
};

// Exponent vector in normal form: 0 <= n_k < m[k][k].
using GmElement = std::vector<std::int64_t>;

// Reduces an arbitrary exponent vector to its normal form in G(M).
GmElement normalize(ParamCollection const& M, GmElement v);
GmElement gm_multiply(ParamCollection const& M, GmElement const& a,
                      GmElement const& b);
GmElement gm_inverse(ParamCollection const& M, GmElement const& a);
GmElement gm_identity(ParamCollection const& M);
// x_k as a normal form (k is 0-based).
GmElement gm_generator(ParamCollection const& M, std::size_t k);

// All normal forms, n_0 varying fastest.
std::vector<GmElement> gm_elements(ParamCollection const& M);
// Position of a normal form in gm_elements order.
std::size_t gm_index(ParamCollection const& M, GmElement const& a);

struct FpParameters {
  std::size_t r = 1;
  std::vector<ParamCollection> collections;

  [[nodiscard]] std::vector<std::uint64_t> orbit_sizes() const;
  [[nodiscard]] std::uint64_t total_size() const;

  // Throws InvalidParameters on inconsistent r or a bad collection.
  void validate() const;

  friend bool operator==(FpParameters const&, FpParameters const&) = default;
  // Lexicographic on (r, orbit sizes, entries collection by collection,
  // each row-major over the lower triangle).
  friend std::strong_ordering operator<=>(FpParameters const& a,
                                          FpParameters const& b);
};

std::string to_string(FpParameters const& p);

// Largest quandle build_fp_quandle agrees to tabulate.
inline constexpr std::uint64_t kMaxBuildSize = 4096;

// Elements enumerated orbit by orbit, each orbit in gm_elements order.
QuandleTable build_fp_quandle(FpParameters const& p);

struct Extraction {
  FpParameters params;
  // element of q -> element of build_fp_quandle(params); relabel(q, to_fp)
  // reproduces that table exactly.
  std::vector<Element> to_fp;
};

// `order[t]` names the orbit of q (canonical index) used as orbit t; the
// default is the canonical order. Throws NotAbelian.
Extraction extract_with_coordinates(
    QuandleTable const& q,
    std::optional<std::vector<std::size_t>> const& order = std::nullopt);
FpParameters extract_parameters(
    QuandleTable const& q,
    std::optional<std::vector<std::size_t>> const& order = std::nullopt);

// Minimum over orbit orderings. Only orderings with non-decreasing orbit
// sizes are tried, since any other ordering compares larger on sizes.
FpParameters canonical_parameters(QuandleTable const& q);

// The named families, in x, y, z element order with labels attached.
QuandleTable family_u(std::int64_t m, std::int64_t n);
QuandleTable family_u_star(std::int64_t m, std::int64_t n);
QuandleTable family_u_starstar(std::int64_t m, std::int64_t n);
QuandleTable family_graphic(std::vector<std::int64_t> const& sizes);

// Every collection with r orbits whose group has exactly `size` elements.
std::vector<ParamCollection> collections_of_order(std::size_t r,
                                                  std::uint64_t size);

// Canonical parameters of every abelian quandle of size n (optionally with
// exactly r orbits), sorted.
std::vector<FpParameters> enumerate_abelian_quandles(
    std::size_t n, std::optional<std::size_t> r = std::nullopt,
    Exec exec = Exec::parallel);

}  // namespace abq
