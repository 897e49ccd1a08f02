#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abq/exec.hpp"

namespace abq {

using Element = std::uint32_t;

class QuandleTable;

namespace detail {
// Wraps a flat row-major table the caller has already proven to be a quandle.
QuandleTable from_valid_flat(std::size_t n, std::vector<Element> flat);
}  // namespace detail

// Finite quandle given by its operation table; entry (a, b) is a ◁ b.
// Instances only come out of validate_table (or the constructors built on
// it), so every live QuandleTable satisfies the quandle axioms.
class QuandleTable {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  [[nodiscard]] Element op(Element a, Element b) const noexcept {
    return table_[a * n_ + b];
  }
  // a ◁̃ b, the inverse right translation.
  [[nodiscard]] Element inv_op(Element a, Element b) const noexcept {
    return inverse_[a * n_ + b];
  }

  [[nodiscard]] std::vector<std::vector<Element>> rows() const;
  [[nodiscard]] std::vector<Element> const& flat() const noexcept {
    return table_;
  }

  // Display labels for named families (x0, y1, z0, ...); empty otherwise.
  // Not part of equality.
  [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
    return labels_;
  }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(QuandleTable const& a, QuandleTable const& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }
  friend bool operator<(QuandleTable const& a, QuandleTable const& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.table_ < b.table_;
  }

 private:
  friend QuandleTable validate_table(
      std::vector<std::vector<std::int64_t>> const& raw);
  friend QuandleTable detail::from_valid_flat(std::size_t n,
                                              std::vector<Element> flat);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

// Checks shape, range, then axioms (2), (3), (1) in that order; the first
// violation in row-major scan order is thrown as abq::Error with its witness.
QuandleTable validate_table(std::vector<std::vector<std::int64_t>> const& raw);
QuandleTable validate_table(std::vector<std::vector<Element>> const& raw);

// Relabels elements: the result has table'(σa, σb) = σ(a ◁ b).
QuandleTable relabel(QuandleTable const& q, std::vector<Element> const& sigma);

QuandleTable trivial_quandle(std::size_t n);

struct OrbitDecomposition {
  std::vector<std::size_t> orbit_of;          // element -> orbit index
  std::vector<std::vector<Element>> orbits;   // sorted, ordered by min element
  std::vector<std::size_t> position;          // element -> index inside orbit

  [[nodiscard]] std::size_t count() const noexcept { return orbits.size(); }
  [[nodiscard]] std::vector<std::size_t> sizes() const;
};

OrbitDecomposition orbit_decomposition(QuandleTable const& q);

bool is_two_reductive(QuandleTable const& q);
bool is_abelian(QuandleTable const& q);

using Permutation = std::vector<std::uint32_t>;

// f(i, j) acts on orbit i through local positions (index into orbits[i]).
struct InnerTranslations {
  OrbitDecomposition orbits;
  std::vector<std::vector<Permutation>> f;  // r x r

  [[nodiscard]] Element apply(std::size_t i, std::size_t j, Element a) const;
};

// Requires 2-reductivity. Verifies commutativity, transitivity and freeness
// of the induced action on each orbit.
InnerTranslations inner_translations(QuandleTable const& q);

inline constexpr std::size_t kMaxEnumerationSize = 6;

// Every quandle structure on {0..n-1}; with up_to_iso, one lexicographically
// minimal table per isomorphism class, sorted.
std::vector<QuandleTable> enumerate_quandles(std::size_t n, bool up_to_iso,
                                             Exec exec = Exec::parallel);

// Lexicographically least table over all n! relabellings.
QuandleTable canonical_table(QuandleTable const& q);

// Backtracking search for an isomorphism q -> p; returns sigma with
// sigma(a ◁ b) = sigma(a) ◁' sigma(b).
std::optional<std::vector<Element>> find_isomorphism(QuandleTable const& q,
                                                     QuandleTable const& p);

}  // namespace abq
