#include <string>

#include "abq/error.hpp"
#include "abq/fp.hpp"

namespace abq {

QuandleTable build_fp_quandle(FpParameters const& p) {
  p.validate();
  std::uint64_t const total = p.total_size();
  if (total > kMaxBuildSize) {
    throw Error(ErrorKind::SizeTooLarge,
                "quandle of size " + std::to_string(total) + " exceeds " +
                    std::to_string(kMaxBuildSize),
                {static_cast<std::int64_t>(total)});
  }
  std::size_t const r = p.r;
  std::size_t const n = total;

  std::vector<std::size_t> offset(r + 1, 0);
  std::vector<std::size_t> orbit_of(n);
  std::vector<std::vector<GmElement>> elems(r);
  for (std::size_t i = 0; i < r; ++i) {
    elems[i] = gm_elements(p.collections[i]);
    offset[i + 1] = offset[i] + elems[i].size();
    for (std::size_t a = offset[i]; a < offset[i + 1]; ++a) orbit_of[a] = i;
  }

  // shift[i][k][a]: local index of a * x_k in orbit i.
  std::vector<std::vector<std::vector<std::size_t>>> shift(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto const& M = p.collections[i];
    shift[i].resize(r);
    for (std::size_t k = 1; k < r; ++k) {
      GmElement const x = gm_generator(M, k - 1);
      auto& s = shift[i][k];
      s.resize(elems[i].size());
      for (std::size_t a = 0; a < elems[i].size(); ++a)
        s[a] = gm_index(M, gm_multiply(M, elems[i][a], x));
    }
  }

  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t const i = orbit_of[a];
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t const k = (orbit_of[b] + r - i) % r;
      flat[a * n + b] = static_cast<Element>(
          k == 0 ? a : offset[i] + shift[i][k][a - offset[i]]);
    }
  }
  return detail::from_valid_flat(n, std::move(flat));
}

}  // namespace abq
