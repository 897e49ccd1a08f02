#pragma once

#include <optional>

#include "abq/homology.hpp"

namespace abq::detail {

// Basis of the chains whose first entry lies in `members` (all of X when no
// orbit is given).
struct SliceBasis {
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  SliceBasis(QuandleTable const& q, std::optional<std::size_t> orbit);

  std::size_t n;
  std::vector<Element> members;
  std::vector<std::size_t> position;  // element -> index in members

  [[nodiscard]] std::size_t pair(Element a, Element b) const {
    return position[a] * n + b;
  }
};

linalg::IntMatrix differential_matrix(QuandleTable const& q, SliceBasis const& s,
                                      int k);

// Rows of d3 on the slice with zero rows and repeats (up to sign) removed.
linalg::IntMatrix boundary_generators(QuandleTable const& q, SliceBasis const& s);

void require_homology_size(QuandleTable const& q);
void require_chain(QuandleTable const& q, Chain const& chain);

}  // namespace abq::detail
