#include <sstream>
#include <string>

#include "abq/error.hpp"
#include "abq/fp.hpp"

namespace abq {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

ParamCollection::ParamCollection(std::size_t orbits,
                                 std::vector<std::vector<std::int64_t>> rows)
    : r(orbits), m(std::move(rows)) {
  validate();
}

std::uint64_t ParamCollection::order() const {
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    auto const d = static_cast<std::uint64_t>(m[j][j]);
    if (d != 0 && n > UINT64_MAX / d) {
      throw Error(ErrorKind::InvalidParameters, "group order overflows");
    }
    n *= d;
  }
  return n;
}

void ParamCollection::validate() const {
  if (r == 0) throw Error(ErrorKind::InvalidParameters, "orbit count must be positive");
  if (m.size() != rank()) {
    throw Error(ErrorKind::InvalidParameters,
                "expected " + std::to_string(rank()) + " rows, got " +
                    std::to_string(m.size()));
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j].size() != j + 1) {
      throw Error(ErrorKind::InvalidParameters,
                  "row " + std::to_string(j + 1) + " must have " +
                      std::to_string(j + 1) + " entries",
                  {static_cast<std::int64_t>(j + 1)});
    }
    if (m[j][j] < 1) {
      throw Error(ErrorKind::InvalidParameters,
                  "diagonal entry " + std::to_string(j + 1) + " must be >= 1",
                  {static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(j + 1)});
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (m[j][k] < 0 || m[j][k] >= m[k][k]) {
        throw Error(ErrorKind::InvalidParameters,
                    "entry (" + std::to_string(j + 1) + ", " +
                        std::to_string(k + 1) + ") = " +
                        std::to_string(m[j][k]) + " must lie in [0, " +
                        std::to_string(m[k][k]) + ")",
                    {static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(k + 1)});
      }
    }
  }
}

GmElement normalize(ParamCollection const& M, GmElement v) {
  if (v.size() != M.rank()) {
    throw Error(ErrorKind::InvalidParameters, "exponent vector has wrong length");
  }
  // x_j^{m_j} = prod_{k<j} x_k^{-m_{j,k}}; reducing index j only touches
  // lower indices, so one downward pass is enough.
  for (std::size_t j = M.rank(); j-- > 0;) {
    std::int64_t const q = floor_div(v[j], M.m[j][j]);
    if (q == 0) continue;
    v[j] -= q * M.m[j][j];
    for (std::size_t k = 0; k < j; ++k) v[k] -= q * M.m[j][k];
  }
  return v;
}

GmElement gm_identity(ParamCollection const& M) {
  return GmElement(M.rank(), 0);
}

GmElement gm_generator(ParamCollection const& M, std::size_t k) {
  GmElement e = gm_identity(M);
  e.at(k) = 1;
  return normalize(M, std::move(e));
}

GmElement gm_multiply(ParamCollection const& M, GmElement const& a,
                      GmElement const& b) {
  GmElement c(a);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.at(k);
  return normalize(M, std::move(c));
}

GmElement gm_inverse(ParamCollection const& M, GmElement const& a) {
  GmElement c(a);
  for (auto& x : c) x = -x;
  return normalize(M, std::move(c));
}

std::vector<GmElement> gm_elements(ParamCollection const& M) {
  std::vector<GmElement> out;
  out.reserve(M.order());
  GmElement e = gm_identity(M);
  while (true) {
    out.push_back(e);
    std::size_t k = 0;
    while (k < e.size() && ++e[k] == M.m[k][k]) e[k++] = 0;
    if (k == e.size()) break;
  }
  return out;
}

std::size_t gm_index(ParamCollection const& M, GmElement const& a) {
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    idx += static_cast<std::size_t>(a[k]) * stride;
    stride *= static_cast<std::size_t>(M.m[k][k]);
  }
  return idx;
}

std::vector<std::uint64_t> FpParameters::orbit_sizes() const {
  std::vector<std::uint64_t> s;
  s.reserve(collections.size());
  for (auto const& c : collections) s.push_back(c.order());
  return s;
}

std::uint64_t FpParameters::total_size() const {
  std::uint64_t n = 0;
  for (auto s : orbit_sizes()) n += s;
  return n;
}

void FpParameters::validate() const {
  if (r == 0) throw Error(ErrorKind::InvalidParameters, "orbit count must be positive");
  if (collections.size() != r) {
    throw Error(ErrorKind::InvalidParameters,
                "expected " + std::to_string(r) + " collections, got " +
                    std::to_string(collections.size()));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (collections[i].r != r) {
      throw Error(ErrorKind::InvalidParameters,
                  "collection " + std::to_string(i + 1) +
                      " is for a different orbit count",
                  {static_cast<std::int64_t>(i + 1)});
    }
    collections[i].validate();
  }
}

std::strong_ordering operator<=>(FpParameters const& a, FpParameters const& b) {
  if (auto c = a.r <=> b.r; c != 0) return c;
  if (a.collections.size() != b.collections.size())
    return a.collections.size() <=> b.collections.size();
  if (auto c = a.orbit_sizes() <=> b.orbit_sizes(); c != 0) return c;
  for (std::size_t i = 0; i < a.collections.size(); ++i) {
    if (auto c = a.collections[i].m <=> b.collections[i].m; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(FpParameters const& p) {
  std::ostringstream out;
  out << "r = " << p.r;
  for (std::size_t i = 0; i < p.collections.size(); ++i) {
    out << "\nM(" << i + 1 << ") =";
    auto const& rows = p.collections[i].m;
    if (rows.empty()) out << " []";
    for (auto const& row : rows) {
      out << " [";
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
      out << "]";
    }
  }
  return out.str();
}

}  // namespace abq
