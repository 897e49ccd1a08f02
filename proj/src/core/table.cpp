#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "abq/error.hpp"
#include "abq/quandle.hpp"

namespace abq {

namespace {

std::vector<Element> invert_columns(std::size_t n,
                                    std::vector<Element> const& table) {
  std::vector<Element> inv(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) inv[table[a * n + b] * n + b] = static_cast<Element>(a);
  return inv;
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

namespace detail {

QuandleTable from_valid_flat(std::size_t n, std::vector<Element> flat) {
  QuandleTable q;
  q.n_ = n;
  q.inverse_ = invert_columns(n, flat);
  q.table_ = std::move(flat);
  return q;
}

}  // namespace detail

std::vector<std::vector<Element>> QuandleTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return out;
}

void QuandleTable::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(ErrorKind::InvalidShape, "one label per element required");
  }
  labels_ = std::move(labels);
}

QuandleTable validate_table(std::vector<std::vector<std::int64_t>> const& raw) {
  std::size_t const n = raw.size();
  if (n == 0) throw Error(ErrorKind::InvalidShape, "table must be non-empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (raw[a].size() != n) {
      throw Error(ErrorKind::InvalidShape,
                  "row " + std::to_string(a) + " has length " +
                      std::to_string(raw[a].size()) + ", expected " +
                      std::to_string(n),
                  {static_cast<std::int64_t>(a)});
    }
  }
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto const v = raw[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::EntryOutOfRange,
                    "entry (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") = " + std::to_string(v) + " is outside [0, " +
                        std::to_string(n) + ")",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), v});
      }
      t[a * n + b] = static_cast<Element>(v);
    }
  }

  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      Element const v = t[a * n + b];
      if (seen[v]) {
        throw Error(ErrorKind::NotAPermutation,
                    "right translation by " + std::to_string(b) +
                        " is not a bijection (value " + std::to_string(v) +
                        " repeats in column " + std::to_string(b) + ")",
                    {static_cast<std::int64_t>(b)});
      }
      seen[v] = true;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (t[a * n + a] != a) {
      throw Error(ErrorKind::NotIdempotent,
                  "element " + std::to_string(a) + " is not idempotent",
                  {static_cast<std::int64_t>(a)});
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element const ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        Element const lhs = t[ab * n + c];
        Element const rhs = t[t[a * n + c] * n + t[b * n + c]];
        if (lhs != rhs) {
          throw Error(ErrorKind::NotSelfDistributive,
                      "self-distributivity fails at " + triple(a, b, c),
                      {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                       static_cast<std::int64_t>(c)});
        }
      }
    }
  }
  return detail::from_valid_flat(n, std::move(t));
}

QuandleTable validate_table(std::vector<std::vector<Element>> const& raw) {
  std::vector<std::vector<std::int64_t>> wide(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    wide[i].assign(raw[i].begin(), raw[i].end());
  return validate_table(wide);
}

QuandleTable relabel(QuandleTable const& q, std::vector<Element> const& sigma) {
  std::size_t const n = q.size();
  if (sigma.size() != n) {
    throw Error(ErrorKind::InvalidShape, "relabelling has the wrong length");
  }
  std::vector<bool> hit(n, false);
  for (Element s : sigma) {
    if (s >= n || hit[s]) {
      throw Error(ErrorKind::NotAPermutation, "relabelling is not a bijection");
    }
    hit[s] = true;
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[sigma[a] * n + sigma[b]] = sigma[q.op(static_cast<Element>(a), static_cast<Element>(b))];
  auto out = detail::from_valid_flat(n, std::move(flat));
  if (!q.labels().empty()) {
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) labels[sigma[a]] = q.labels()[a];
    out.set_labels(std::move(labels));
  }
  return out;
}

QuandleTable trivial_quandle(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidShape, "size must be positive");
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>(a);
  return detail::from_valid_flat(n, std::move(flat));
}

std::vector<std::size_t> OrbitDecomposition::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(orbits.size());
  for (auto const& o : orbits) s.push_back(o.size());
  return s;
}

OrbitDecomposition orbit_decomposition(QuandleTable const& q) {
  std::size_t const n = q.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  OrbitDecomposition d;
  d.orbit_of.assign(n, unset);
  d.position.assign(n, 0);
  // Seeds are visited in increasing order, so orbits come out sorted by
  // their minimal element.
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (d.orbit_of[seed] != unset) continue;
    std::size_t const id = d.orbits.size();
    std::vector<Element> members{static_cast<Element>(seed)};
    d.orbit_of[seed] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      Element const a = members[k];
      for (std::size_t b = 0; b < n; ++b) {
        Element const next = q.op(a, static_cast<Element>(b));
        if (d.orbit_of[next] == unset) {
          d.orbit_of[next] = id;
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (std::size_t p = 0; p < members.size(); ++p) d.position[members[p]] = p;
    d.orbits.push_back(std::move(members));
  }
  return d;
}

bool is_two_reductive(QuandleTable const& q) {
  auto const n = static_cast<Element>(q.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (q.op(a, q.op(b, c)) != q.op(a, b)) return false;
  return true;
}

bool is_abelian(QuandleTable const& q) {
  auto const n = static_cast<Element>(q.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), b)) return false;
  return true;
}

Element InnerTranslations::apply(std::size_t i, std::size_t j, Element a) const {
  return orbits.orbits[i][f[i][j][orbits.position[a]]];
}

namespace {

Permutation compose(Permutation const& first, Permutation const& then) {
  Permutation out(first.size());
  for (std::size_t p = 0; p < first.size(); ++p) out[p] = then[first[p]];
  return out;
}

// The group generated by `gens` must act regularly on [0, size): no two
// distinct elements may agree on position 0, and every position is reached.
void check_regular(std::size_t orbit, std::vector<Permutation> const& gens,
                   std::size_t size, std::vector<Element> const& members) {
  Permutation id(size);
  for (std::size_t p = 0; p < size; ++p) id[p] = static_cast<std::uint32_t>(p);
  std::map<std::uint32_t, Permutation> by_image{{0, id}};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (auto const& s : gens) {
      Permutation h = compose(g, s);
      auto [it, fresh] = by_image.try_emplace(h[0], h);
      if (fresh) {
        frontier.push_back(std::move(h));
      } else if (it->second != h) {
        // h * it^-1 fixes position 0 but moves something else.
        std::size_t moved = 0;
        while (h[moved] == it->second[moved]) ++moved;
        throw Error(ErrorKind::FreenessViolated,
                    "translation group of orbit " + std::to_string(orbit) +
                        " fixes element " + std::to_string(members[0]) +
                        " but not element " + std::to_string(members[moved]),
                    {static_cast<std::int64_t>(orbit), members[0], members[moved]});
      }
    }
  }
  if (by_image.size() != size) {
    throw Error(ErrorKind::FreenessViolated,
                "translation group of orbit " + std::to_string(orbit) +
                    " is not transitive",
                {static_cast<std::int64_t>(orbit)});
  }
}

}  // namespace

InnerTranslations inner_translations(QuandleTable const& q) {
  InnerTranslations it;
  it.orbits = orbit_decomposition(q);
  auto const& od = it.orbits;
  std::size_t const r = od.count();

  it.f.assign(r, std::vector<Permutation>(r));
  for (std::size_t i = 0; i < r; ++i) {
    auto const& oi = od.orbits[i];
    for (std::size_t j = 0; j < r; ++j) {
      auto const& oj = od.orbits[j];
      Permutation f(oi.size());
      for (std::size_t p = 0; p < oi.size(); ++p) {
        Element const target = q.op(oi[p], oj[0]);
        for (std::size_t k = 1; k < oj.size(); ++k) {
          if (q.op(oi[p], oj[k]) != target) {
            throw Error(ErrorKind::NotTwoReductive,
                        "a ◁ b depends on b within its orbit at " +
                            std::to_string(oi[p]) + " ◁ {" +
                            std::to_string(oj[0]) + ", " +
                            std::to_string(oj[k]) + "}",
                        {oi[p], oj[0], oj[k]});
          }
        }
        f[p] = static_cast<std::uint32_t>(od.position[target]);
      }
      it.f[i][j] = std::move(f);
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        if (compose(it.f[i][j], it.f[i][k]) != compose(it.f[i][k], it.f[i][j])) {
          throw Error(ErrorKind::NotAbelian,
                      "translations of orbit " + std::to_string(i) +
                          " by orbits " + std::to_string(j) + " and " +
                          std::to_string(k) + " do not commute",
                      {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                       static_cast<std::int64_t>(k)});
        }
      }
    }
    check_regular(i, it.f[i], od.orbits[i].size(), od.orbits[i]);
  }
  return it;
}

}  // namespace abq
