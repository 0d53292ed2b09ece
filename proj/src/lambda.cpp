#include "nsymkit/lambda.hpp"

#include <stdexcept>

namespace nsymkit {

LambdaOracle::LambdaOracle(int n, int m) : n_(n), m_(m), partitions_(enumerate_partitions(n)) {
  if (n < 1) throw std::invalid_argument("LambdaOracle needs n >= 1");
  if (m < n) throw std::invalid_argument("LambdaOracle needs m >= n");
  const std::size_t k = partitions_.size();
  auto build = [&](SymFamily family) {
    RationalMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto row = coordinates(realize_sym(family, partitions_[i], m_));
      for (std::size_t j = 0; j < k; ++j) c(i, j) = row[j];
    }
    return c;
  };
  e_ = build(SymFamily::E);
  h_ = build(SymFamily::H);
  p_ = build(SymFamily::P);
  m_coords_ = RationalMatrix::identity(k);
  // m_lambda = sum_mu (E^-1)[lambda][mu] e_mu, so f_lambda = omega(m_lambda) = sum_mu (E^-1)[lambda][mu] h_mu.
  f_ = inverse(e_) * h_;
}

std::size_t LambdaOracle::index(const Partition& lambda) const {
  for (std::size_t i = 0; i < partitions_.size(); ++i)
    if (partitions_[i] == lambda) return i;
  throw std::invalid_argument("partition " + to_string(lambda) + " is not a partition of " + std::to_string(n_));
}

const RationalMatrix& LambdaOracle::coords(SymFamily family) const {
  switch (family) {
    case SymFamily::E: return e_;
    case SymFamily::H: return h_;
    case SymFamily::P: return p_;
    case SymFamily::M: return m_coords_;
    case SymFamily::F: return f_;
  }
  throw std::logic_error("unreachable");
}

std::vector<Rational> LambdaOracle::coordinates(const CPoly& p) const {
  std::vector<Rational> out;
  out.reserve(partitions_.size());
  for (const auto& lambda : partitions_) {
    std::vector<int> exps(lambda.begin(), lambda.end());
    exps.resize(m_, 0);
    out.push_back(p.coeff(Monomial(exps)));
  }
  return out;
}

std::map<Partition, Rational> LambdaOracle::expand(const CPoly& target, SymFamily family) const {
  if (target.m() != m_) throw std::invalid_argument("sym_expand: polynomial has a different variable count");
  for (const auto& [x, c] : target.terms())
    if (x.degree() != n_) throw std::invalid_argument("sym_expand: target is not homogeneous of degree n");
  if (!is_symmetric(target)) throw std::invalid_argument("sym_expand: target is not symmetric");
  std::vector<Rational> c;
  try {
    c = solve_left(coords(family), coordinates(target));
  } catch (const std::domain_error&) {
    throw std::logic_error("sym_expand: singular family matrix (internal error)");
  }
  std::map<Partition, Rational> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) out.emplace(partitions_[i], c[i]);
  return out;
}

RationalMatrix LambdaOracle::transition(SymFamily a, SymFamily b) const {
  return coords(a) * inverse(coords(b));
}

}  // namespace nsymkit
