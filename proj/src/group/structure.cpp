#include <string>

#include "abq/error.hpp"
#include "abq/group.hpp"

namespace abq {

using linalg::AbelianGroupSpec;
using linalg::IntMatrix;
using linalg::Integer;

namespace {

// m^(i)_{j,k}, all indices 1-based.
std::int64_t param(FpParameters const& p, std::size_t i, std::size_t j,
                   std::size_t k) {
  return p.collections[i - 1].m[j - 1][k - 1];
}

// Column of the pair (i, j), i < j, in lexicographic order.
std::size_t pair_column(std::size_t r, std::size_t i, std::size_t j) {
  std::size_t col = 0;
  for (std::size_t a = 1; a < i; ++a) col += r - a;
  return col + (j - i - 1);
}

Integer gcd_of(std::initializer_list<Integer const*> xs) {
  Integer g = 0;
  for (auto const* x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_mpz_t());
  return g;
}

}  // namespace

ParameterMatrix parameter_matrix(FpParameters const& p) {
  p.validate();
  std::size_t const r = p.r;
  ParameterMatrix pm;
  pm.matrix = IntMatrix(r * (r - 1), r * (r - 1) / 2);
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j) pm.column_labels.emplace_back(i, j);

  std::size_t row = 0;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j < r; ++j, ++row) {
      pm.row_labels.emplace_back(i, j);
      for (std::size_t k = 1; k <= j; ++k) {
        std::int64_t const v = param(p, i, j, k);
        if (k <= r - i) {
          pm.matrix(row, pair_column(r, i, i + k)) += v;
        } else {
          pm.matrix(row, pair_column(r, i + k - r, i)) -= v;
        }
      }
    }
  }
  return pm;
}

AbelianGroupSpec parameter_group(FpParameters const& p, Exec exec) {
  auto const pm = parameter_matrix(p);
  return linalg::invariant_factors(pm.matrix, pm.matrix.cols(), exec);
}

AbelianGroupSpec parameter_group_unreduced(FpParameters const& p, Exec exec) {
  p.validate();
  std::size_t const r = p.r;
  std::size_t const gens = r * (r - 1);
  auto gen = [r](std::size_t i, std::size_t j) { return (i - 1) * (r - 1) + (j - 1); };

  IntMatrix rel(0, gens);
  std::vector<Integer> row(gens);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j < r; ++j) {
      std::fill(row.begin(), row.end(), Integer(0));
      for (std::size_t k = 1; k <= j; ++k) row[gen(i, k)] = param(p, i, j, k);
      rel.append_row(row);
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      std::fill(row.begin(), row.end(), Integer(0));
      row[gen(i, j - i)] += 1;
      row[gen(j, r - (j - i))] += 1;
      rel.append_row(row);
    }
  }
  return linalg::invariant_factors(rel, gens, exec);
}

std::vector<std::pair<std::string, std::string>> const& z3_variable_table() {
  static std::vector<std::pair<std::string, std::string>> const table{
      {"a", "m(1)_1"},   {"b", "-m(3)_1"},   {"c", "m(2)_1"},
      {"u", "m(1)_2,1"}, {"v", "m(1)_2"},    {"w", "-m(2)_2"},
      {"x", "m(2)_2,1"}, {"y", "-m(3)_2,1"}, {"z", "-m(3)_2"},
  };
  return table;
}

Z3Evaluation z3_evaluate(FpParameters const& p) {
  if (p.r != 3) {
    throw Error(ErrorKind::WrongOrbitCount,
                "criterion needs exactly 3 orbits, got " + std::to_string(p.r),
                {static_cast<std::int64_t>(p.r)});
  }
  auto const pm = parameter_matrix(p);
  auto const& M = pm.matrix;
  // Rows (1,1) (1,2) (2,1) (2,2) (3,1) (3,2); columns (1,2) (1,3) (2,3).
  Z3Evaluation ev;
  auto& [a, b, c, u, v, w, x, y, z] = ev.values;
  a = M(0, 0);
  b = M(4, 1);
  c = M(2, 2);
  u = M(1, 0);
  v = M(1, 1);
  w = M(3, 0);
  x = M(3, 2);
  y = M(5, 1);
  z = M(5, 2);
  ev.delta = u * x * y + v * w * z;
  std::array<Integer, 7> const g{
      gcd_of({&a, &u, &w}),    gcd_of({&b, &v, &y}),    gcd_of({&c, &x, &z}),
      gcd_of({&a, &b, &w, &y}), gcd_of({&a, &c, &u, &z}), gcd_of({&b, &c, &v, &x}),
      gcd_of({&a, &b, &c, &ev.delta}),
  };
  ev.result = true;
  for (std::size_t k = 0; k < g.size(); ++k) {
    ev.conditions[k] = g[k] == 1;
    ev.result = ev.result && ev.conditions[k];
  }
  return ev;
}

bool z3_criterion(FpParameters const& p) { return z3_evaluate(p).result; }

bool is_diagonal(FpParameters const& p) {
  for (auto const& M : p.collections)
    for (std::size_t j = 0; j < M.m.size(); ++j)
      for (std::size_t k = 0; k < j; ++k)
        if (M.m[j][k] != 0) return false;
  return true;
}

bool diagonal_criterion(FpParameters const& p) {
  p.validate();
  if (!is_diagonal(p)) {
    throw Error(ErrorKind::NotDiagonal, "parameters have a nonzero off-diagonal entry");
  }
  std::size_t const r = p.r;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j < r; ++j) {
      if (i + j <= r) continue;
      Integer const lhs = param(p, i, j, j);
      std::size_t const i2 = j + i - r;
      std::size_t const j2 = r - j;
      Integer const rhs = param(p, i2, j2, j2);
      if (gcd(lhs, rhs) != 1) return false;
    }
  }
  return true;
}

FreeAbelianCertificate free_abelian_criteria(FpParameters const& p, Exec exec) {
  FreeAbelianCertificate cert;
  cert.abelian_quandle = true;
  cert.parameters = p;
  cert.matrix = parameter_matrix(p);

  auto group = parameter_group(p, exec);
  auto const direct = parameter_group_unreduced(p, exec);
  if (group.invariant_factors != direct.invariant_factors) {
    throw Error(ErrorKind::CriterionMismatch,
                "parameter group differs between the reduced and unreduced "
                "presentations");
  }
  cert.by_parameter_group = group.is_trivial();
  cert.parameter_group = std::move(group);

  cert.minors_gcd = linalg::maximal_minors_gcd(cert.matrix->matrix, exec);
  cert.by_minors = *cert.minors_gcd == 1;

  if (p.r == 3) {
    cert.z3 = z3_evaluate(p);
    cert.by_z3 = cert.z3->result;
  }
  if (is_diagonal(p)) cert.by_diagonal = diagonal_criterion(p);

  bool const verdict = *cert.by_parameter_group;
  auto check = [&](std::optional<bool> const& v, char const* name) {
    if (v && *v != verdict) {
      throw Error(ErrorKind::CriterionMismatch,
                  std::string(name) + " criterion disagrees with the parameter group");
    }
  };
  check(cert.by_minors, "maximal-minors");
  check(cert.by_z3, "three-orbit");
  check(cert.by_diagonal, "diagonal");
  cert.free_abelian = verdict;
  return cert;
}

FreeAbelianCertificate structure_group_is_free_abelian(QuandleTable const& q,
                                                       Exec exec) {
  if (!is_abelian(q)) return {};
  return free_abelian_criteria(extract_parameters(q), exec);
}

}  // namespace abq
