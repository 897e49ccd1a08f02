#include <string>

#include "abq/error.hpp"
#include "abq/fp.hpp"

namespace abq {

namespace {

void require_positive(std::int64_t v, char const* what) {
  if (v < 1) {
    throw Error(ErrorKind::InvalidParameters,
                std::string(what) + " must be positive, got " + std::to_string(v),
                {v});
  }
}

void require_buildable(std::int64_t n) {
  if (n > static_cast<std::int64_t>(kMaxBuildSize)) {
    throw Error(ErrorKind::SizeTooLarge,
                "quandle of size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxBuildSize),
                {n});
  }
}

// U_{m,n} on x_0..x_{m-1}, y_0..y_{n-1} with `extra` further elements that
// the caller fills in; those columns start out as the identity translation.
struct Builder {
  std::size_t m, n, size;
  std::vector<Element> flat;
  std::vector<std::string> labels;

  Builder(std::size_t m_, std::size_t n_, std::size_t extra)
      : m(m_), n(n_), size(m_ + n_ + extra), flat(size * size) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) flat[a * size + b] = static_cast<Element>(a);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        set(i, m + k, (i + 1) % m);
        set(m + k, i, m + (k + 1) % n);
      }
    for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t k = 0; k < n; ++k) labels.push_back("y" + std::to_string(k));
  }

  void set(std::size_t a, std::size_t b, std::size_t v) {
    flat[a * size + b] = static_cast<Element>(v);
  }

  QuandleTable finish() {
    auto q = detail::from_valid_flat(size, std::move(flat));
    q.set_labels(std::move(labels));
    return q;
  }
};

}  // namespace

QuandleTable family_u(std::int64_t m, std::int64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_buildable(m + n);
  return Builder(static_cast<std::size_t>(m), static_cast<std::size_t>(n), 0).finish();
}

QuandleTable family_u_star(std::int64_t m, std::int64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_buildable(m + n + 1);
  // z acts trivially and is fixed by everything.
  Builder b(static_cast<std::size_t>(m), static_cast<std::size_t>(n), 1);
  b.labels.push_back("z");
  return b.finish();
}

QuandleTable family_u_starstar(std::int64_t m, std::int64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_buildable(m + n + 2);
  Builder b(static_cast<std::size_t>(m), static_cast<std::size_t>(n), 2);
  std::size_t const z0 = b.m + b.n;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < b.m + b.n; ++a) b.set(z0 + s, a, z0 + (s + 1) % 2);
  b.labels.push_back("z0");
  b.labels.push_back("z1");
  return b.finish();
}

QuandleTable family_graphic(std::vector<std::int64_t> const& sizes) {
  if (sizes.size() < 2) {
    throw Error(ErrorKind::InvalidParameters, "graphic family needs at least 2 orbits",
                {static_cast<std::int64_t>(sizes.size())});
  }
  std::int64_t total = 0;
  for (auto s : sizes) {
    require_positive(s, "orbit size");
    total += s;
    require_buildable(total);
  }
  auto const n = static_cast<std::size_t>(total);
  std::vector<std::size_t> orbit(n), start(sizes.size());
  std::vector<std::string> labels;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    start[i] = pos;
    for (std::int64_t v = 0; v < sizes[i]; ++v, ++pos) {
      orbit[pos] = i;
      labels.push_back("O" + std::to_string(i + 1) + ":" + std::to_string(v));
    }
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t const i = orbit[a];
    auto const len = static_cast<std::size_t>(sizes[i]);
    Element const next = static_cast<Element>(start[i] + (a - start[i] + 1) % len);
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = orbit[b] == i ? static_cast<Element>(a) : next;
  }
  auto q = detail::from_valid_flat(n, std::move(flat));
  q.set_labels(std::move(labels));
  return q;
}

}  // namespace abq
