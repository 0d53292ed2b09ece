#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/matrix.hpp"
#include "nsymkit/polyreal.hpp"

#include <map>
#include <vector>

namespace nsymkit {

// Degree-n symmetric functions in m >= n commuting variables, in monomial coordinates.
// Coordinates of a symmetric polynomial are its coefficients at x^lambda, lambda |- n.
class LambdaOracle {
 public:
  LambdaOracle(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index(const Partition& lambda) const;

  // Row lambda holds the coordinates of b_lambda.
  const RationalMatrix& coords(SymFamily family) const;
  std::vector<Rational> coordinates(const CPoly& p) const;
  std::map<Partition, Rational> expand(const CPoly& target, SymFamily family) const;
  // Row lambda: coefficients of a_lambda in the b basis.
  RationalMatrix transition(SymFamily a, SymFamily b) const;

 private:
  int n_;
  int m_;
  std::vector<Partition> partitions_;
  RationalMatrix e_, h_, p_, m_coords_, f_;
};

}  // namespace nsymkit
