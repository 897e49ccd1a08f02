#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abq/fp.hpp"
#include "abq/linalg.hpp"
#include "abq/quandle.hpp"

namespace abq {

// Index pair, 1-based as in the usual (i, j) notation.
using IndexPair = std::pair<std::size_t, std::size_t>;

struct ParameterMatrix {
  linalg::IntMatrix matrix;              // r(r-1) x r(r-1)/2
  std::vector<IndexPair> row_labels;     // (i, j): row j of M^(i)
  std::vector<IndexPair> column_labels;  // (i, j), i < j
};

ParameterMatrix parameter_matrix(FpParameters const& p);

// G' as Z^{r(r-1)/2} modulo the parameter-matrix rows.
linalg::AbelianGroupSpec parameter_group(FpParameters const& p,
                                         Exec exec = Exec::parallel);

// G' straight from its definition: generators x^(i)_j for all i and
// 1 <= j < r, the rows of every M^(i), and x^(i)_{j-i} x^(j)_{i-j} = 1.
linalg::AbelianGroupSpec parameter_group_unreduced(FpParameters const& p,
                                                   Exec exec = Exec::parallel);

// The nine renamed entries of a 3-orbit parameter matrix and the seven gcd
// conditions built from them.
struct Z3Evaluation {
  // a, b, c, u, v, w, x, y, z in that order, taken from the parameter matrix
  // (signs included).
  std::array<linalg::Integer, 9> values;
  linalg::Integer delta;           // u x y + v w z
  std::array<bool, 7> conditions;  // three of type (1), three of type (2), one
  bool result = false;
};

// Which parameter each renamed variable is, e.g. {"w", "-m(2)_2"}.
std::vector<std::pair<std::string, std::string>> const& z3_variable_table();

Z3Evaluation z3_evaluate(FpParameters const& p);
bool z3_criterion(FpParameters const& p);

// Requires every off-diagonal parameter to vanish (NotDiagonal otherwise).
bool diagonal_criterion(FpParameters const& p);
bool is_diagonal(FpParameters const& p);

struct FreeAbelianCertificate {
  bool abelian_quandle = false;
  bool free_abelian = false;
  std::optional<FpParameters> parameters;
  std::optional<ParameterMatrix> matrix;
  std::optional<linalg::AbelianGroupSpec> parameter_group;
  std::optional<linalg::Integer> minors_gcd;
  // Verdict of each criterion that was evaluated.
  std::optional<bool> by_parameter_group;
  std::optional<bool> by_minors;
  std::optional<bool> by_z3;
  std::optional<bool> by_diagonal;
  std::optional<Z3Evaluation> z3;
};

// Evaluates every applicable criterion; any disagreement throws
// CriterionMismatch.
FreeAbelianCertificate free_abelian_criteria(FpParameters const& p,
                                             Exec exec = Exec::parallel);
FreeAbelianCertificate structure_group_is_free_abelian(
    QuandleTable const& q, Exec exec = Exec::parallel);

// Relator words over generators 0..r^2-1 (g_{i,j} at (i-1) r + (j-1)) and
// r^2..r^2+r-1 (h_i); each word equals 1 in the group.
struct Relation {
  std::string family;  // "Gij", "Gij2", "Gij3", "Gij4", "Gij5"
  std::vector<std::pair<std::size_t, std::int64_t>> word;  // (generator, exponent)
};

struct PresentationSpec {
  std::size_t r = 0;
  std::vector<std::string> central_generators;  // g_{i,j}
  std::vector<std::string> main_generators;     // h_i
  std::vector<Relation> relations;

  [[nodiscard]] std::size_t generator_count() const {
    return central_generators.size() + main_generators.size();
  }
  // Exponent-sum matrix: one row per relation.
  [[nodiscard]] linalg::IntMatrix abelianized() const;
  // Exponent sums over the g_{i,j} of the Gij, Gij2 and Gij4 relations only;
  // its cokernel is the subgroup they generate.
  [[nodiscard]] linalg::IntMatrix central_relations() const;
};

PresentationSpec structure_group_presentation(FpParameters const& p);

struct Letter {
  Element element;
  int sign;  // +1 or -1
  friend bool operator==(Letter const&, Letter const&) = default;
};
using GroupWord = std::vector<Letter>;

// Right action of the structure group: g_b acts as - ◁ b.
Element act(QuandleTable const& q, Element a, GroupWord const& w);

// g_b^-1 g_c^-1 g_b g_c.
GroupWord commutator_word(Element b, Element c);

}  // namespace abq
