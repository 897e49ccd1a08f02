#include <algorithm>
#include <numeric>
#include <string>

#include "abq/error.hpp"
#include "abq/fp.hpp"

namespace abq {

namespace {

void require_abelian(QuandleTable const& q) {
  auto const n = static_cast<Element>(q.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), b)) {
          throw Error(ErrorKind::NotAbelian,
                      "(a ◁ b) ◁ c differs from (a ◁ c) ◁ b at (" +
                          std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")",
                      {a, b, c});
        }
}

void check_order(std::vector<std::size_t> const& order, std::size_t r) {
  std::vector<bool> seen(r, false);
  if (order.size() != r) {
    throw Error(ErrorKind::WrongOrbitCount, "orbit order must list every orbit once");
  }
  for (auto o : order) {
    if (o >= r || seen[o]) {
      throw Error(ErrorKind::WrongOrbitCount, "orbit order must list every orbit once");
    }
    seen[o] = true;
  }
}

// Normal form of v using only the first `rows.size()` relations.
GmElement reduce_prefix(std::vector<std::vector<std::int64_t>> const& rows,
                        GmElement v) {
  for (std::size_t j = rows.size(); j-- > 0;) {
    std::int64_t const d = rows[j][j];
    std::int64_t q = v[j] / d;
    if (v[j] % d != 0 && v[j] < 0) --q;
    if (q == 0) continue;
    for (std::size_t k = 0; k <= j; ++k) v[k] -= q * rows[j][k];
  }
  return v;
}

Extraction extract_from(InnerTranslations const& it,
                        std::vector<std::size_t> const& order) {
  auto const& od = it.orbits;
  std::size_t const r = od.count();

  Extraction ex;
  ex.params.r = r;
  ex.params.collections.reserve(r);
  ex.to_fp.assign(od.orbit_of.size(), 0);
  std::size_t offset = 0;

  for (std::size_t t = 0; t < r; ++t) {
    std::size_t const o = order[t];
    std::size_t const size = od.orbits[o].size();
    std::vector<GmElement> coords(size);
    std::vector<bool> known(size, false);
    coords[0] = GmElement(r - 1, 0);
    known[0] = true;
    std::vector<std::size_t> reached{0};
    std::vector<std::vector<std::int64_t>> rows;

    for (std::size_t k = 0; k + 1 < r; ++k) {
      auto const& g = it.f[o][order[(t + k + 1) % r]];
      // Least power of g bringing the base point back into the span of the
      // earlier generators.
      std::size_t p = g[0];
      std::int64_t steps = 1;
      while (!known[p]) {
        p = g[p];
        ++steps;
      }
      GmElement back(k, 0);
      for (std::size_t s = 0; s < k; ++s) back[s] = -coords[p][s];
      back = reduce_prefix(rows, std::move(back));
      back.push_back(steps);
      rows.push_back(std::move(back));

      std::size_t const before = reached.size();
      for (std::size_t idx = 0; idx < before; ++idx) {
        std::size_t cur = reached[idx];
        GmElement c = coords[cur];
        for (std::int64_t s = 1; s < steps; ++s) {
          cur = g[cur];
          ++c[k];
          if (known[cur]) {
            throw Error(ErrorKind::FreenessViolated,
                        "translations of orbit " + std::to_string(o) +
                            " do not act freely",
                        {static_cast<std::int64_t>(o), od.orbits[o][cur]});
          }
          known[cur] = true;
          coords[cur] = c;
          reached.push_back(cur);
        }
      }
    }
    if (reached.size() != size) {
      throw Error(ErrorKind::FreenessViolated,
                  "translations of orbit " + std::to_string(o) +
                      " are not transitive",
                  {static_cast<std::int64_t>(o)});
    }

    ParamCollection M;
    M.r = r;
    M.m = std::move(rows);
    for (std::size_t p = 0; p < size; ++p)
      ex.to_fp[od.orbits[o][p]] = static_cast<Element>(offset + gm_index(M, coords[p]));
    offset += size;
    ex.params.collections.push_back(std::move(M));
  }
  return ex;
}

}  // namespace

Extraction extract_with_coordinates(
    QuandleTable const& q, std::optional<std::vector<std::size_t>> const& order) {
  require_abelian(q);
  InnerTranslations const it = inner_translations(q);
  std::size_t const r = it.orbits.count();
  std::vector<std::size_t> ord(r);
  std::iota(ord.begin(), ord.end(), 0);
  if (order) {
    check_order(*order, r);
    ord = *order;
  }
  return extract_from(it, ord);
}

FpParameters extract_parameters(
    QuandleTable const& q, std::optional<std::vector<std::size_t>> const& order) {
  return extract_with_coordinates(q, order).params;
}

FpParameters canonical_parameters(QuandleTable const& q) {
  require_abelian(q);
  InnerTranslations const it = inner_translations(q);
  std::size_t const r = it.orbits.count();
  auto const sizes = it.orbits.sizes();

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  // Blocks of equal orbit size; each is permuted independently.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < r;) {
    std::size_t e = s;
    while (e < r && sizes[order[e]] == sizes[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }

  std::optional<FpParameters> best;
  while (true) {
    FpParameters p = extract_from(it, order).params;
    if (!best || p < *best) best = std::move(p);
    // Odometer over the blocks, each stepping through next_permutation.
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto const first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto const last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return *best;
}

}  // namespace abq
