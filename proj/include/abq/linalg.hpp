#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "abq/exec.hpp"

namespace abq::linalg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<IntVector> const& rows,
                             std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Integer const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Integer const> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<Integer const> values);
  [[nodiscard]] IntMatrix transposed() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

// Row vector times matrix.
IntVector operator*(IntVector const& v, IntMatrix const& m);

std::string to_string(IntMatrix const& m);

// Diagonal form D = transform_left * M * transform_right with
// diag[0] | diag[1] | ... ; trailing entries past `rank` are zero.
struct SmithForm {
  std::vector<Integer> diag;  // length min(rows, cols)
  std::size_t rank = 0;
  IntMatrix transform_left;          // rows x rows, unimodular
  IntMatrix transform_right;         // cols x cols, unimodular
  IntMatrix transform_left_inverse;  // only when requested
};

struct SmithOptions {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
  Exec exec = Exec::parallel;
};

// Pivoting picks the nonzero entry of least absolute value in the active
// submatrix; ties go to the first one in row-major order.
SmithForm smith_normal_form(IntMatrix const& m, SmithOptions const& opts = {});

// Diagonal only: no transforms are tracked.
std::vector<Integer> smith_diagonal(IntMatrix const& m,
                                    Exec exec = Exec::parallel);

// Z^g modulo the row space of `relations`.
struct AbelianGroupSpec {
  std::size_t generator_count = 0;
  IntMatrix relations;
  // Nontrivial invariant factors: torsion factors ascending (each dividing the
  // next), then one 0 per free summand.
  std::vector<Integer> invariant_factors;

  [[nodiscard]] bool is_trivial() const noexcept {
    return invariant_factors.empty();
  }
  [[nodiscard]] std::size_t free_rank() const;
  [[nodiscard]] std::vector<Integer> torsion() const;
  [[nodiscard]] Integer torsion_order() const;
};

AbelianGroupSpec invariant_factors(IntMatrix const& relations,
                                   std::size_t generators,
                                   Exec exec = Exec::parallel);

// Nontrivial invariant factors from a Smith diagonal of a matrix with
// `generators` columns.
std::vector<Integer> group_factors(std::vector<Integer> const& diag,
                                   std::size_t generators);

// Fraction-free (Bareiss) determinant.
Integer determinant(IntMatrix const& m);

// gcd of all cols x cols minors; 0 when they all vanish. Uses the Smith route
// and, for cols <= kMaxExpansionCols, also expands the minors and throws
// CriterionMismatch on disagreement.
inline constexpr std::size_t kMaxExpansionCols = 6;
Integer maximal_minors_gcd(IntMatrix const& m, Exec exec = Exec::parallel);
Integer maximal_minors_gcd_by_expansion(IntMatrix const& m,
                                        Exec exec = Exec::parallel);
Integer maximal_minors_gcd_by_smith(IntMatrix const& m,
                                    Exec exec = Exec::parallel);

// Row-space membership of v over Z.
bool lattice_member(IntVector const& v, IntMatrix const& basis_rows);

// Reusable membership oracle for repeated queries against one lattice.
class RowLattice {
 public:
  explicit RowLattice(IntMatrix const& basis_rows, Exec exec = Exec::parallel);

  [[nodiscard]] bool contains(IntVector const& v) const;
  // Coordinates of v in the Smith basis of Z^cols / lattice (v * right).
  [[nodiscard]] IntVector smith_coordinates(IntVector const& v) const;

  [[nodiscard]] std::size_t dimension() const noexcept { return cols_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::vector<Integer> const& diag() const noexcept {
    return diag_;
  }

 private:
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<Integer> diag_;
  IntMatrix right_;
};

// Left kernel {x : x * m = 0} as the rows of the returned matrix.
IntMatrix left_kernel_basis(IntMatrix const& m, Exec exec = Exec::parallel);

}  // namespace abq::linalg
