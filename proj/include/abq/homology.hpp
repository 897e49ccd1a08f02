#pragma once

#include <cstdint>
#include <vector>

#include "abq/group.hpp"
#include "abq/linalg.hpp"
#include "abq/quandle.hpp"

namespace abq {

// Largest quandle whose degree-2 homology and boundary lattice we compute.
inline constexpr std::size_t kMaxHomologySize = 14;

// Dense integer chain on the lexicographic basis of X^k; for k = 2 the pair
// (a, b) sits at a * n + b.
using Chain = std::vector<std::int64_t>;

// Matrix of d_k : C_k -> C_{k-1}, one row per basis tuple of C_k.
// d2(a, b) = (a◁b) - (a); d3(a, b, c) = (a◁b, c) - (a, c) - (a◁c, b◁c) + (a, b).
linalg::IntMatrix differential(QuandleTable const& q, int k);

// The block of d_k on tuples whose first entry lies in the given orbit.
// Rows and columns use the sub-basis (position of a in its orbit, rest), in
// lexicographic order.
linalg::IntMatrix differential_slice(QuandleTable const& q, int k,
                                     std::size_t orbit);

// d2 applied to a chain.
std::vector<std::int64_t> boundary(QuandleTable const& q, Chain const& chain);

// H_{2;i} = Z_{2;i} / B_{2;i} for one orbit, with the data needed to place
// individual cycles in it.
class H2Slice {
 public:
  H2Slice(QuandleTable const& q, std::size_t orbit, Exec exec = Exec::parallel);

  [[nodiscard]] std::size_t orbit() const noexcept { return orbit_; }
  [[nodiscard]] std::size_t free_rank() const noexcept { return free_rank_; }
  // Invariant factors > 1, ascending.
  [[nodiscard]] std::vector<linalg::Integer> const& torsion() const noexcept {
    return torsion_;
  }

  // Only the entries over this orbit are read.
  [[nodiscard]] bool is_cycle(Chain const& chain) const;
  // Coordinates in the Smith basis of the quotient; entry j is taken modulo
  // the j-th Smith factor when that factor is nonzero. Requires a cycle.
  [[nodiscard]] linalg::IntVector class_coordinates(Chain const& chain) const;
  [[nodiscard]] bool is_torsion_class(Chain const& chain) const;

  // Invariant factors of the subgroup generated by the classes of the given
  // torsion cycles.
  [[nodiscard]] std::vector<linalg::Integer> generated_subgroup(
      std::vector<Chain> const& cycles) const;

 private:
  [[nodiscard]] linalg::IntVector slice_vector(Chain const& chain) const;

  std::size_t n_;
  std::size_t orbit_;
  std::vector<Element> members_;
  std::size_t free_rank_ = 0;
  std::vector<linalg::Integer> torsion_;

  std::size_t d2_rank_ = 0;
  linalg::IntMatrix d2_;             // slice of d2
  linalg::IntMatrix d2_left_inv_;    // inverse of the left Smith transform of d2
  std::vector<linalg::Integer> quotient_diag_;  // Smith factors of the cycle quotient
  std::size_t quotient_rank_ = 0;
  linalg::IntMatrix quotient_right_;  // right Smith transform of the quotient
};

struct OrbitHomology {
  std::size_t free_rank = 0;
  std::vector<linalg::Integer> torsion;
};

struct Homology2Result {
  std::vector<OrbitHomology> per_orbit;
  std::size_t total_free_rank = 0;
  // Invariant factors of the direct sum of the orbit torsion groups.
  std::vector<linalg::Integer> total_torsion;
};

// Kernel-basis route per orbit, cross-checked against the torsion of
// C_{2;i} / B_{2;i}; disagreement throws CriterionMismatch. SizeTooLarge
// beyond kMaxHomologySize.
Homology2Result homology_h2(QuandleTable const& q, Exec exec = Exec::parallel);

// Torsion and free rank of C_{2;i} / B_{2;i} and the rank of d2, computed
// without a kernel basis.
OrbitHomology homology_h2_slice_by_cokernel(QuandleTable const& q,
                                            std::size_t orbit,
                                            Exec exec = Exec::parallel);

linalg::AbelianGroupSpec homology_h1(QuandleTable const& q,
                                     Exec exec = Exec::parallel);

struct PathChain {
  Chain chain;
  Element endpoint = 0;
};

// Walks the word from `start`: (b, +1) adds (cur, b) and moves to cur◁b;
// (b, -1) moves to cur◁̃b and subtracts (cur, b).
PathChain path_map(QuandleTable const& q, Element start, GroupWord const& w);

// Membership of differences in B_2, one orbit slice at a time.
class BoundaryLattice {
 public:
  explicit BoundaryLattice(QuandleTable const& q, Exec exec = Exec::parallel);

  [[nodiscard]] bool is_boundary(Chain const& chain) const;
  [[nodiscard]] bool equal_mod_boundaries(Chain const& u, Chain const& v) const;

 private:
  std::size_t n_;
  OrbitDecomposition orbits_;
  std::vector<linalg::RowLattice> slices_;
};

bool chains_equal_mod_boundaries(QuandleTable const& q, Chain const& u,
                                 Chain const& v);

// -(a, b) + (a, b◁c) for a = min O_i and b, c running over the orbit minima;
// zero chains and repeats are dropped. NotAbelian for non-abelian q.
std::vector<Chain> torsion_generators(QuandleTable const& q, std::size_t orbit);

// Whether a finite abelian group with invariant factors `t` is a quotient
// (equivalently a subgroup) of one with factors `g`: t has at most as many
// factors and, aligned from the largest, each t-factor divides its g-factor.
bool is_quotient_group(std::vector<linalg::Integer> const& t,
                       std::vector<linalg::Integer> const& g);

// Invariant factors of a direct sum of cyclic groups (orders > 0).
std::vector<linalg::Integer> direct_sum_factors(
    std::vector<linalg::Integer> const& orders);

}  // namespace abq
