#include <map>
#include <set>
#include <string>

#include "abq/error.hpp"
#include "abq/homology.hpp"
#include "internal.hpp"

namespace abq {

using linalg::IntMatrix;

namespace detail {

SliceBasis::SliceBasis(QuandleTable const& q, std::optional<std::size_t> orbit)
    : n(q.size()), position(q.size(), kAbsent) {
  if (orbit) {
    auto const od = orbit_decomposition(q);
    if (*orbit >= od.count()) {
      throw Error(ErrorKind::WrongOrbitCount,
                  "orbit " + std::to_string(*orbit) + " does not exist",
                  {static_cast<std::int64_t>(*orbit)});
    }
    members = od.orbits[*orbit];
  } else {
    for (std::size_t a = 0; a < n; ++a) members.push_back(static_cast<Element>(a));
  }
  for (std::size_t p = 0; p < members.size(); ++p) position[members[p]] = p;
}

namespace {

using SparseRow = std::map<std::size_t, std::int64_t>;

void add(SparseRow& row, std::size_t col, std::int64_t v) {
  auto [it, fresh] = row.try_emplace(col, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

IntMatrix dense(std::vector<SparseRow> const& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto const& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

std::vector<SparseRow> d2_rows(QuandleTable const& q, SliceBasis const& s) {
  std::vector<SparseRow> rows;
  rows.reserve(s.members.size() * s.n);
  for (Element a : s.members) {
    for (std::size_t b = 0; b < s.n; ++b) {
      SparseRow row;
      add(row, s.position[q.op(a, static_cast<Element>(b))], 1);
      add(row, s.position[a], -1);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SparseRow> d3_rows(QuandleTable const& q, SliceBasis const& s) {
  std::size_t const n = s.n;
  std::vector<SparseRow> rows;
  rows.reserve(s.members.size() * n * n);
  for (Element a : s.members) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        SparseRow row;
        add(row, s.pair(q.op(a, b), c), 1);
        add(row, s.pair(a, c), -1);
        add(row, s.pair(q.op(a, c), q.op(b, c)), -1);
        add(row, s.pair(a, b), 1);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

IntMatrix differential_matrix(QuandleTable const& q, SliceBasis const& s, int k) {
  if (k == 2) return dense(d2_rows(q, s), s.members.size());
  if (k == 3) return dense(d3_rows(q, s), s.members.size() * s.n);
  throw Error(ErrorKind::ShapeError, "differential degree must be 2 or 3", {k});
}

IntMatrix boundary_generators(QuandleTable const& q, SliceBasis const& s) {
  // Zero rows and rows equal up to sign span nothing new.
  std::set<std::vector<std::pair<std::size_t, std::int64_t>>> seen;
  std::vector<SparseRow> kept;
  for (auto& row : d3_rows(q, s)) {
    if (row.empty()) continue;
    std::vector<std::pair<std::size_t, std::int64_t>> key(row.begin(), row.end());
    if (key.front().second < 0)
      for (auto& e : key) e.second = -e.second;
    if (seen.insert(std::move(key)).second) kept.push_back(std::move(row));
  }
  return dense(kept, s.members.size() * s.n);
}

void require_homology_size(QuandleTable const& q) {
  if (q.size() > kMaxHomologySize) {
    throw Error(ErrorKind::SizeTooLarge,
                "homology is limited to size " + std::to_string(kMaxHomologySize),
                {static_cast<std::int64_t>(q.size())});
  }
}

void require_chain(QuandleTable const& q, Chain const& chain) {
  if (chain.size() != q.size() * q.size()) {
    throw Error(ErrorKind::ShapeError, "2-chain has the wrong length",
                {static_cast<std::int64_t>(chain.size())});
  }
}

}  // namespace detail

IntMatrix differential(QuandleTable const& q, int k) {
  return detail::differential_matrix(q, detail::SliceBasis(q, std::nullopt), k);
}

IntMatrix differential_slice(QuandleTable const& q, int k, std::size_t orbit) {
  return detail::differential_matrix(q, detail::SliceBasis(q, orbit), k);
}

std::vector<std::int64_t> boundary(QuandleTable const& q, Chain const& chain) {
  detail::require_chain(q, chain);
  std::size_t const n = q.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t const v = chain[a * n + b];
      if (v == 0) continue;
      out[q.op(static_cast<Element>(a), static_cast<Element>(b))] += v;
      out[a] -= v;
    }
  }
  return out;
}

PathChain path_map(QuandleTable const& q, Element start, GroupWord const& w) {
  std::size_t const n = q.size();
  if (start >= n) throw Error(ErrorKind::EntryOutOfRange, "start element out of range", {start});
  PathChain out;
  out.chain.assign(n * n, 0);
  Element cur = start;
  for (auto const& l : w) {
    if (l.element >= n) {
      throw Error(ErrorKind::EntryOutOfRange, "word letter out of range", {l.element});
    }
    if (l.sign == 1) {
      out.chain[cur * n + l.element] += 1;
      cur = q.op(cur, l.element);
    } else if (l.sign == -1) {
      cur = q.inv_op(cur, l.element);
      out.chain[cur * n + l.element] -= 1;
    } else {
      throw Error(ErrorKind::InvalidShape, "letter sign must be +1 or -1", {l.sign});
    }
  }
  out.endpoint = cur;
  return out;
}

BoundaryLattice::BoundaryLattice(QuandleTable const& q, Exec exec)
    : n_(q.size()), orbits_(orbit_decomposition(q)) {
  detail::require_homology_size(q);
  for (std::size_t i = 0; i < orbits_.count(); ++i) {
    detail::SliceBasis const s(q, i);
    slices_.emplace_back(detail::boundary_generators(q, s), exec);
  }
}

bool BoundaryLattice::is_boundary(Chain const& chain) const {
  if (chain.size() != n_ * n_) {
    throw Error(ErrorKind::ShapeError, "2-chain has the wrong length",
                {static_cast<std::int64_t>(chain.size())});
  }
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    auto const& members = orbits_.orbits[i];
    linalg::IntVector v(members.size() * n_);
    for (std::size_t p = 0; p < members.size(); ++p)
      for (std::size_t b = 0; b < n_; ++b) v[p * n_ + b] = chain[members[p] * n_ + b];
    if (!slices_[i].contains(v)) return false;
  }
  return true;
}

bool BoundaryLattice::equal_mod_boundaries(Chain const& u, Chain const& v) const {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::ShapeError, "chains have different lengths");
  }
  Chain diff(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) diff[k] = u[k] - v[k];
  return is_boundary(diff);
}

bool chains_equal_mod_boundaries(QuandleTable const& q, Chain const& u,
                                 Chain const& v) {
  detail::require_chain(q, u);
  detail::require_chain(q, v);
  return BoundaryLattice(q).equal_mod_boundaries(u, v);
}

std::vector<Chain> torsion_generators(QuandleTable const& q, std::size_t orbit) {
  if (!is_abelian(q)) {
    throw Error(ErrorKind::NotAbelian, "torsion generators need an abelian quandle");
  }
  auto const od = orbit_decomposition(q);
  if (orbit >= od.count()) {
    throw Error(ErrorKind::WrongOrbitCount,
                "orbit " + std::to_string(orbit) + " does not exist",
                {static_cast<std::int64_t>(orbit)});
  }
  std::size_t const n = q.size();
  Element const a = od.orbits[orbit][0];
  std::set<Chain> seen;
  std::vector<Chain> out;
  for (auto const& ob : od.orbits) {
    for (auto const& oc : od.orbits) {
      Element const b = ob[0];
      Element const bc = q.op(b, oc[0]);
      if (bc == b) continue;
      Chain chain(n * n, 0);
      chain[a * n + b] -= 1;
      chain[a * n + bc] += 1;
      if (seen.insert(chain).second) out.push_back(std::move(chain));
    }
  }
  return out;
}

}  // namespace abq
