#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "abq/error.hpp"
#include "abq/quandle.hpp"

namespace abq {

namespace {

constexpr int kUnknown = -1;

// Column-major backtracking over partial operation tables. Each column is a
// permutation fixing its diagonal; every assignment re-checks exactly the
// self-distributivity instances that read the new cell.
class TableSearch {
 public:
  explicit TableSearch(std::size_t n)
      : n_(n), t_(n * n, kUnknown), inv_(n * n, kUnknown) {
    for (std::size_t b = 0; b < n; ++b) set(b, b, static_cast<int>(b));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        if (a != b) cells_.emplace_back(a, b);
  }

  // Cells belonging to column 0, which is fixed before the parallel split.
  [[nodiscard]] std::size_t first_column_cells() const { return n_ - 1; }

  // Enumerates completions starting at cell index `from`. Stops descending
  // at `stop` and hands the partial table to `emit`.
  template <class Emit>
  void search(std::size_t from, std::size_t stop, Emit&& emit) {
    if (from == stop) {
      emit(*this);
      return;
    }
    auto const [a, b] = cells_[from];
    for (std::size_t v = 0; v < n_; ++v) {
      if (inv_[v * n_ + b] != kUnknown) continue;
      set(a, b, static_cast<int>(v));
      if (consistent(a, b)) search(from + 1, stop, emit);
      unset(a, b);
    }
  }

  [[nodiscard]] std::size_t cell_count() const { return cells_.size(); }
  [[nodiscard]] std::vector<int> const& raw() const { return t_; }

  void load(std::vector<int> const& partial) {
    std::fill(t_.begin(), t_.end(), kUnknown);
    std::fill(inv_.begin(), inv_.end(), kUnknown);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (partial[a * n_ + b] != kUnknown) set(a, b, partial[a * n_ + b]);
  }

  [[nodiscard]] std::vector<Element> flat() const {
    return {t_.begin(), t_.end()};
  }

 private:
  [[nodiscard]] int at(std::size_t a, std::size_t b) const {
    return t_[a * n_ + b];
  }

  void set(std::size_t a, std::size_t b, int v) {
    t_[a * n_ + b] = v;
    inv_[static_cast<std::size_t>(v) * n_ + b] = static_cast<int>(a);
  }
  void unset(std::size_t a, std::size_t b) {
    inv_[static_cast<std::size_t>(at(a, b)) * n_ + b] = kUnknown;
    t_[a * n_ + b] = kUnknown;
  }

  // (a◁b)◁c == (a◁c)◁(b◁c) whenever every entry involved is known.
  [[nodiscard]] bool holds(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0) return true;
    auto const ua = static_cast<std::size_t>(a);
    auto const ub = static_cast<std::size_t>(b);
    auto const uc = static_cast<std::size_t>(c);
    int const ab = at(ua, ub), ac = at(ua, uc), bc = at(ub, uc);
    if (ab < 0 || ac < 0 || bc < 0) return true;
    int const lhs = at(static_cast<std::size_t>(ab), uc);
    int const rhs = at(static_cast<std::size_t>(ac), static_cast<std::size_t>(bc));
    return lhs < 0 || rhs < 0 || lhs == rhs;
  }

  [[nodiscard]] bool consistent(std::size_t x, std::size_t y) const {
    int const ix = static_cast<int>(x), iy = static_cast<int>(y);
    for (std::size_t k = 0; k < n_; ++k) {
      int const ik = static_cast<int>(k);
      // (x, y) read as a◁b, a◁c, b◁c.
      if (!holds(ix, iy, ik) || !holds(ix, ik, iy) || !holds(ik, ix, iy))
        return false;
      // (x, y) read as (a◁b)◁c with a◁b = x, c = y.
      if (!holds(inv_[x * n_ + k], ik, iy)) return false;
      // (x, y) read as (a◁c)◁(b◁c) with a◁c = x, b◁c = y.
      if (!holds(inv_[x * n_ + k], inv_[y * n_ + k], ik)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<int> t_;
  std::vector<int> inv_;  // inv_[v * n + b] = a with a◁b = v
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

// Lexicographically least relabelled table; `best` starts as q itself.
std::vector<Element> canonical_flat(std::vector<Element> const& t,
                                    std::size_t n) {
  std::vector<Element> best = t;
  std::vector<Element> inv(n);  // new label -> old label
  std::iota(inv.begin(), inv.end(), 0);
  std::vector<Element> sigma(n);
  while (std::next_permutation(inv.begin(), inv.end())) {
    for (std::size_t i = 0; i < n; ++i) sigma[inv[i]] = static_cast<Element>(i);
    // Compare relabelled entry (i, j) = sigma(t[inv i][inv j]) against best.
    int cmp = 0;
    for (std::size_t i = 0; i < n && cmp == 0; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element const e = sigma[t[inv[i] * n + inv[j]]];
        Element const b = best[i * n + j];
        if (e != b) {
          cmp = e < b ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          best[i * n + j] = sigma[t[inv[i] * n + inv[j]]];
    }
  }
  return best;
}

}  // namespace

std::vector<QuandleTable> enumerate_quandles(std::size_t n, bool up_to_iso,
                                             Exec exec) {
  if (n == 0) throw Error(ErrorKind::InvalidShape, "size must be positive");
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorKind::SizeTooLarge,
                "brute-force enumeration is limited to size " +
                    std::to_string(kMaxEnumerationSize),
                {static_cast<std::int64_t>(n)});
  }

  // Split on the admissible first columns; each branch is completed
  // independently and results are concatenated in branch order.
  TableSearch root(n);
  std::size_t const split = root.first_column_cells();
  std::vector<std::vector<int>> branches;
  root.search(0, split, [&](TableSearch const& s) { branches.push_back(s.raw()); });

  std::vector<std::vector<std::vector<Element>>> found(branches.size());
  auto const count = static_cast<std::ptrdiff_t>(branches.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    TableSearch s(n);
    s.load(branches[static_cast<std::size_t>(k)]);
    auto& out = found[static_cast<std::size_t>(k)];
    s.search(split, s.cell_count(), [&](TableSearch const& done) {
      out.push_back(done.flat());
    });
  }

  std::vector<std::vector<Element>> tables;
  for (auto& branch : found)
    for (auto& t : branch) tables.push_back(std::move(t));

  if (up_to_iso) {
    std::vector<std::vector<Element>> canon(tables.size());
    auto const total = static_cast<std::ptrdiff_t>(tables.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      canon[static_cast<std::size_t>(k)] =
          canonical_flat(tables[static_cast<std::size_t>(k)], n);
    }
    std::set<std::vector<Element>> unique(canon.begin(), canon.end());
    tables.assign(unique.begin(), unique.end());
  }

  std::vector<QuandleTable> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(detail::from_valid_flat(n, std::move(t)));
  return out;
}

QuandleTable canonical_table(QuandleTable const& q) {
  return detail::from_valid_flat(q.size(), canonical_flat(q.flat(), q.size()));
}

namespace {

class IsoSearch {
 public:
  IsoSearch(QuandleTable const& q, QuandleTable const& p)
      : q_(q), p_(p), n_(q.size()), fwd_(n_, kNone), bwd_(n_, kNone) {}

  bool run() { return extend(); }
  [[nodiscard]] std::vector<Element> result() const { return fwd_; }

 private:
  static constexpr Element kNone = static_cast<Element>(-1);

  // Assigns a -> x and closes under the operation; returns false on conflict.
  bool assign(Element a, Element x, std::vector<Element>& trail) {
    std::vector<std::pair<Element, Element>> queue{{a, x}};
    while (!queue.empty()) {
      auto [u, y] = queue.back();
      queue.pop_back();
      if (fwd_[u] != kNone) {
        if (fwd_[u] != y) return false;
        continue;
      }
      if (bwd_[y] != kNone) return false;
      fwd_[u] = y;
      bwd_[y] = u;
      trail.push_back(u);
      assigned_.push_back(u);
      for (Element b : assigned_) {
        queue.emplace_back(q_.op(u, b), p_.op(y, fwd_[b]));
        queue.emplace_back(q_.op(b, u), p_.op(fwd_[b], y));
      }
    }
    return true;
  }

  void undo(std::vector<Element> const& trail) {
    for (Element u : trail) {
      bwd_[fwd_[u]] = kNone;
      fwd_[u] = kNone;
    }
    assigned_.resize(assigned_.size() - trail.size());
  }

  bool extend() {
    Element a = 0;
    while (a < n_ && fwd_[a] != kNone) ++a;
    if (a == n_) return true;
    for (Element x = 0; x < n_; ++x) {
      if (bwd_[x] != kNone) continue;
      std::vector<Element> trail;
      if (assign(a, x, trail) && extend()) return true;
      undo(trail);
    }
    return false;
  }

  QuandleTable const& q_;
  QuandleTable const& p_;
  Element n_;
  std::vector<Element> fwd_;
  std::vector<Element> bwd_;
  std::vector<Element> assigned_;  // in assignment order
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(QuandleTable const& q,
                                                     QuandleTable const& p) {
  if (q.size() != p.size()) return std::nullopt;
  auto sq = orbit_decomposition(q).sizes();
  auto sp = orbit_decomposition(p).sizes();
  std::sort(sq.begin(), sq.end());
  std::sort(sp.begin(), sp.end());
  if (sq != sp) return std::nullopt;
  IsoSearch search(q, p);
  if (!search.run()) return std::nullopt;
  return search.result();
}

}  // namespace abq
