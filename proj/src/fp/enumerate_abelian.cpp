#include <algorithm>
#include <functional>

#include "abq/error.hpp"
#include "abq/fp.hpp"

namespace abq {

std::vector<ParamCollection> collections_of_order(std::size_t r,
                                                  std::uint64_t size) {
  if (r == 0) throw Error(ErrorKind::InvalidParameters, "orbit count must be positive");
  std::vector<ParamCollection> out;
  std::size_t const rank = r - 1;
  ParamCollection M;
  M.r = r;
  M.m.resize(rank);

  // Diagonal first (ordered factorisations of size), then the offsets row by
  // row; rows are filled left to right with each entry below its diagonal.
  std::function<void(std::size_t, std::size_t)> offsets =
      [&](std::size_t j, std::size_t k) {
        if (j == rank) {
          out.push_back(M);
          return;
        }
        if (k == j) {
          offsets(j + 1, 0);
          return;
        }
        for (std::int64_t v = 0; v < M.m[k][k]; ++v) {
          M.m[j][k] = v;
          offsets(j, k + 1);
        }
      };
  std::function<void(std::size_t, std::uint64_t)> diagonal =
      [&](std::size_t j, std::uint64_t left) {
        if (j == rank) {
          if (left == 1) offsets(0, 0);
          return;
        }
        for (std::uint64_t d = 1; d <= left; ++d) {
          if (left % d != 0) continue;
          M.m[j].assign(j + 1, 0);
          M.m[j][j] = static_cast<std::int64_t>(d);
          diagonal(j + 1, left / d);
        }
      };
  diagonal(0, size);
  return out;
}

namespace {

// Partitions of n into exactly `parts` non-decreasing positive parts.
void partitions(std::uint64_t n, std::size_t parts, std::uint64_t min_part,
                std::vector<std::uint64_t>& cur,
                std::vector<std::vector<std::uint64_t>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (std::uint64_t p = min_part; p * parts <= n; ++p) {
    cur.push_back(p);
    partitions(n - p, parts - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FpParameters> enumerate_abelian_quandles(
    std::size_t n, std::optional<std::size_t> r, Exec exec) {
  if (n == 0) throw Error(ErrorKind::InvalidShape, "size must be positive");
  if (n > kMaxBuildSize) {
    throw Error(ErrorKind::SizeTooLarge, "size too large to enumerate",
                {static_cast<std::int64_t>(n)});
  }

  std::vector<FpParameters> candidates;
  std::size_t const lo = r ? *r : 1;
  std::size_t const hi = r ? *r : n;
  for (std::size_t orbits = lo; orbits <= hi && orbits <= n; ++orbits) {
    std::vector<std::vector<std::uint64_t>> shapes;
    std::vector<std::uint64_t> cur;
    partitions(n, orbits, 1, cur, shapes);
    for (auto const& shape : shapes) {
      std::vector<std::vector<ParamCollection>> choices;
      bool empty = false;
      for (auto s : shape) {
        choices.push_back(collections_of_order(orbits, s));
        empty = empty || choices.back().empty();
      }
      if (empty) continue;
      std::vector<std::size_t> pick(orbits, 0);
      while (true) {
        FpParameters p;
        p.r = orbits;
        for (std::size_t i = 0; i < orbits; ++i) p.collections.push_back(choices[i][pick[i]]);
        candidates.push_back(std::move(p));
        std::size_t i = 0;
        while (i < orbits && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == orbits) break;
      }
    }
  }

  // A candidate survives when it is its own canonical form.
  std::vector<char> keep(candidates.size(), 0);
  auto const count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    auto const& p = candidates[static_cast<std::size_t>(c)];
    keep[static_cast<std::size_t>(c)] = canonical_parameters(build_fp_quandle(p)) == p;
  }

  std::vector<FpParameters> out;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (keep[c]) out.push_back(std::move(candidates[c]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abq
