#include <algorithm>
#include <cstddef>
#include <utility>

#include "abq/error.hpp"
#include "abq/linalg.hpp"

namespace abq::linalg {

namespace {

// Rows below this count are eliminated serially even under Exec::parallel.
constexpr std::ptrdiff_t kParallelRows = 64;

class Eliminator {
 public:
  Eliminator(IntMatrix a, bool left, bool left_inverse, bool right, Exec exec)
      : a_(std::move(a)),
        m_(a_.rows()),
        n_(a_.cols()),
        track_u_(left),
        track_uinv_(left_inverse),
        track_v_(right),
        parallel_(exec == Exec::parallel) {
    if (track_u_) u_ = IntMatrix::identity(m_);
    if (track_uinv_) uinv_ = IntMatrix::identity(m_);
    if (track_v_) v_ = IntMatrix::identity(n_);
  }

  SmithForm run() {
    std::size_t const steps = std::min(m_, n_);
    std::size_t t = 0;
    for (; t < steps; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      move_to(t, pi, pj);
      while (true) {
        clear_column(t);
        clear_row(t);
        if (!line_is_clear(t)) {
          find_pivot(t, pi, pj);
          move_to(t, pi, pj);
          continue;
        }
        std::size_t bad = 0;
        if (!find_indivisible(t, bad)) break;
        add_row(t, bad, Integer(1));
      }
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }

    SmithForm out;
    out.rank = t;
    out.diag.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) out.diag[i] = a_(i, i);
    out.transform_left = std::move(u_);
    out.transform_left_inverse = std::move(uinv_);
    out.transform_right = std::move(v_);
    return out;
  }

 private:
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    Integer const* best = nullptr;
    for (std::size_t i = t; i < m_; ++i) {
      auto row = a_.row(i);
      for (std::size_t j = t; j < n_; ++j) {
        Integer const& x = row[j];
        if (sgn(x) == 0) continue;
        if (best == nullptr || mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &x;
          pi = i;
          pj = j;
          // |x| == 1 is minimal, and the first one seen wins ties.
          if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return true;
        }
      }
    }
    return best != nullptr;
  }

  void move_to(std::size_t t, std::size_t pi, std::size_t pj) {
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    swap_row_contents(a_, i, j);
    if (track_u_) swap_row_contents(u_, i, j);
    if (track_uinv_) {
      for (std::size_t r = 0; r < m_; ++r) swap(uinv_(r, i), uinv_(r, j));
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m_; ++r) swap(a_(r, i), a_(r, j));
    if (track_v_) {
      for (std::size_t r = 0; r < n_; ++r) swap(v_(r, i), v_(r, j));
    }
  }

  static void swap_row_contents(IntMatrix& x, std::size_t i, std::size_t j) {
    auto ri = x.row(i);
    auto rj = x.row(j);
    for (std::size_t c = 0; c < ri.size(); ++c) swap(ri[c], rj[c]);
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_.row(t)) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    if (track_u_) {
      for (auto& x : u_.row(t)) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
    if (track_uinv_) {
      for (std::size_t r = 0; r < m_; ++r) {
        mpz_neg(uinv_(r, t).get_mpz_t(), uinv_(r, t).get_mpz_t());
      }
    }
  }

  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, Integer const& q) {
    for (std::size_t c = 0; c < n_; ++c) {
      mpz_addmul(a_(dst, c).get_mpz_t(), q.get_mpz_t(), a_(src, c).get_mpz_t());
    }
    if (track_u_) {
      for (std::size_t c = 0; c < m_; ++c) {
        mpz_addmul(u_(dst, c).get_mpz_t(), q.get_mpz_t(),
                   u_(src, c).get_mpz_t());
      }
    }
    if (track_uinv_) {
      for (std::size_t r = 0; r < m_; ++r) {
        mpz_submul(uinv_(r, src).get_mpz_t(), q.get_mpz_t(),
                   uinv_(r, dst).get_mpz_t());
      }
    }
  }

  // Reduce every entry below the pivot to its remainder.
  void clear_column(std::size_t t) {
    Integer const& p = a_(t, t);
    std::vector<Integer> q(m_);
    bool any = false;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      mpz_tdiv_q(q[i].get_mpz_t(), a_(i, t).get_mpz_t(), p.get_mpz_t());
      any = any || sgn(q[i]) != 0;
    }
    if (!any) return;

    auto const rows = static_cast<std::ptrdiff_t>(m_);
    auto const begin = static_cast<std::ptrdiff_t>(t + 1);
#pragma omp parallel for schedule(static) if (parallel_ && rows - begin > kParallelRows)
    for (std::ptrdiff_t ii = begin; ii < rows; ++ii) {
      auto const i = static_cast<std::size_t>(ii);
      if (sgn(q[i]) == 0) continue;
      auto ri = a_.row(i);
      auto rt = a_.row(t);
      for (std::size_t c = t; c < n_; ++c) {
        if (sgn(rt[c]) == 0) continue;
        mpz_submul(ri[c].get_mpz_t(), q[i].get_mpz_t(), rt[c].get_mpz_t());
      }
      if (track_u_) {
        auto ui = u_.row(i);
        auto ut = u_.row(t);
        for (std::size_t c = 0; c < m_; ++c) {
          if (sgn(ut[c]) == 0) continue;
          mpz_submul(ui[c].get_mpz_t(), q[i].get_mpz_t(), ut[c].get_mpz_t());
        }
      }
    }
    if (track_uinv_) {
      // The inverse picks up col t += sum_i q_i * col i.
#pragma omp parallel for schedule(static) if (parallel_ && rows > kParallelRows)
      for (std::ptrdiff_t rr = 0; rr < rows; ++rr) {
        auto const r = static_cast<std::size_t>(rr);
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (sgn(q[i]) == 0) continue;
          mpz_addmul(uinv_(r, t).get_mpz_t(), q[i].get_mpz_t(),
                     uinv_(r, i).get_mpz_t());
        }
      }
    }
  }

  // Reduce every entry right of the pivot to its remainder.
  void clear_row(std::size_t t) {
    Integer const& p = a_(t, t);
    std::vector<Integer> q(n_);
    bool any = false;
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      mpz_tdiv_q(q[j].get_mpz_t(), a_(t, j).get_mpz_t(), p.get_mpz_t());
      any = any || sgn(q[j]) != 0;
    }
    if (!any) return;

    // Column t is zero above row t, so only rows t.. of A change.
    auto const rows = static_cast<std::ptrdiff_t>(m_);
    auto const begin = static_cast<std::ptrdiff_t>(t);
#pragma omp parallel for schedule(static) if (parallel_ && rows - begin > kParallelRows)
    for (std::ptrdiff_t rr = begin; rr < rows; ++rr) {
      auto row = a_.row(static_cast<std::size_t>(rr));
      if (sgn(row[t]) == 0) continue;
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (sgn(q[j]) == 0) continue;
        mpz_submul(row[j].get_mpz_t(), q[j].get_mpz_t(), row[t].get_mpz_t());
      }
    }
    if (track_v_) {
      auto const vrows = static_cast<std::ptrdiff_t>(n_);
#pragma omp parallel for schedule(static) if (parallel_ && vrows > kParallelRows)
      for (std::ptrdiff_t rr = 0; rr < vrows; ++rr) {
        auto row = v_.row(static_cast<std::size_t>(rr));
        if (sgn(row[t]) == 0) continue;
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(q[j]) == 0) continue;
          mpz_submul(row[j].get_mpz_t(), q[j].get_mpz_t(), row[t].get_mpz_t());
        }
      }
    }
  }

  [[nodiscard]] bool line_is_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < m_; ++i)
      if (sgn(a_(i, t)) != 0) return false;
    for (std::size_t j = t + 1; j < n_; ++j)
      if (sgn(a_(t, j)) != 0) return false;
    return true;
  }

  // First row (row-major) of the trailing block holding an entry the pivot
  // does not divide.
  bool find_indivisible(std::size_t t, std::size_t& row) const {
    Integer const& p = a_(t, t);
    if (mpz_cmpabs_ui(p.get_mpz_t(), 1) == 0) return false;
    for (std::size_t i = t + 1; i < m_; ++i) {
      for (std::size_t j = t + 1; j < n_; ++j) {
        Integer const& x = a_(i, j);
        if (sgn(x) != 0 && !mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
          row = i;
          return true;
        }
      }
    }
    return false;
  }

  IntMatrix a_;
  std::size_t m_;
  std::size_t n_;
  bool track_u_;
  bool track_uinv_;
  bool track_v_;
  bool parallel_;
  IntMatrix u_;
  IntMatrix uinv_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m, SmithOptions const& opts) {
  return Eliminator(m, opts.left, opts.left_inverse, opts.right, opts.exec)
      .run();
}

std::vector<Integer> smith_diagonal(IntMatrix const& m, Exec exec) {
  return Eliminator(m, false, false, false, exec).run().diag;
}

std::vector<Integer> group_factors(std::vector<Integer> const& diag,
                                   std::size_t generators) {
  std::vector<Integer> out;
  std::size_t rank = 0;
  for (auto const& d : diag) {
    if (sgn(d) == 0) break;
    ++rank;
    if (d != 1) out.push_back(d);
  }
  for (std::size_t i = rank; i < generators; ++i) out.emplace_back(0);
  return out;
}

std::size_t AbelianGroupSpec::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(),
                    [](Integer const& d) { return sgn(d) == 0; }));
}

std::vector<Integer> AbelianGroupSpec::torsion() const {
  std::vector<Integer> t;
  for (auto const& d : invariant_factors)
    if (sgn(d) != 0) t.push_back(d);
  return t;
}

Integer AbelianGroupSpec::torsion_order() const {
  Integer order = 1;
  for (auto const& d : invariant_factors)
    if (sgn(d) != 0) order *= d;
  return order;
}

AbelianGroupSpec invariant_factors(IntMatrix const& relations,
                                   std::size_t generators, Exec exec) {
  if (relations.cols() != generators && !(relations.rows() == 0)) {
    throw Error(ErrorKind::ShapeError,
                "relation matrix must have one column per generator");
  }
  AbelianGroupSpec spec;
  spec.generator_count = generators;
  spec.relations = relations.rows() == 0 ? IntMatrix(0, generators) : relations;
  spec.invariant_factors =
      group_factors(smith_diagonal(spec.relations, exec), generators);
  return spec;
}

IntMatrix left_kernel_basis(IntMatrix const& m, Exec exec) {
  SmithOptions opts;
  opts.right = false;
  opts.exec = exec;
  auto snf = smith_normal_form(m, opts);
  IntMatrix basis(0, m.rows());
  for (std::size_t r = snf.rank; r < m.rows(); ++r) {
    basis.append_row(snf.transform_left.row(r));
  }
  return basis;
}

}  // namespace abq::linalg
