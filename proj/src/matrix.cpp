#include "nsymkit/matrix.hpp"

#include <stdexcept>

namespace nsymkit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        c(i, j) += t;
      }
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  if (n == 0) return m;

  // Row i of m times scale[i] is integral; invert that, then undo the scaling on columns.
  std::vector<Integer> scale(n, Integer(1));
  std::vector<std::vector<Integer>> w(n, std::vector<Integer>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) w[i][j] = m(i, j).get_num() * (scale[i] / m(i, j).get_den());
    w[i][n + i] = 1;
  }

  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != k) std::swap(w[p], w[k]);
    const Integer pivot = w[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        t = pivot * w[i][j] - factor * w[k][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][k] = 0;
    }
    prev = pivot;
  }

  // Left block is now d*I with d = prev; the right block is d times the inverse.
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = fraction(w[i][n + j] * scale[j], w[i][i]);
    }
  return inv;
}

std::vector<Rational> solve_left(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_left dimension mismatch");
  RationalMatrix inv = inverse(a);
  std::vector<Rational> x(a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) x[j] += b[i] * inv(i, j);
  return x;
}

}  // namespace nsymkit
