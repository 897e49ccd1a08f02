#include <sstream>

#include "abq/error.hpp"
#include "abq/linalg.hpp"

namespace abq::linalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::ShapeError, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> const& rows,
                               std::size_t cols) {
  IntMatrix m(0, cols);
  for (auto const& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<Integer const> values) {
  if (values.size() != cols_) {
    throw Error(ErrorKind::ShapeError, "row length does not match matrix");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (auto const& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeError, "matrix product shape mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Integer const& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntVector operator*(IntVector const& v, IntMatrix const& m) {
  if (v.size() != m.rows()) {
    throw Error(ErrorKind::ShapeError, "vector-matrix product shape mismatch");
  }
  IntVector out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_addmul(out[j].get_mpz_t(), v[k].get_mpz_t(), m(k, j).get_mpz_t());
    }
  }
  return out;
}

std::string to_string(IntMatrix const& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << m(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace abq::linalg
