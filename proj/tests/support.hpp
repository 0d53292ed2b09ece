#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/polyreal.hpp"
#include "nsymkit/qsym.hpp"

#include <random>
#include <vector>

namespace nsymkit::testing {

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'2026ULL ^ salt); }

inline Composition random_composition(std::mt19937_64& rng, int n) {
  if (n == 0) return {};
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << (n - 1)) - 1);
  return Composition::from_mask(n, dist(rng));
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return fraction(num(rng), den(rng));
}

// Sparse random element with up to `terms` terms.
template <typename Elem, typename Basis>
Elem random_element(std::mt19937_64& rng, int n, Basis basis, int terms = 4) {
  Elem x(n, basis);
  for (int i = 0; i < terms; ++i) x.add(random_composition(rng, n), random_rational(rng));
  return x;
}

inline NSymElem random_nsym(std::mt19937_64& rng, int n, NSymBasis basis, int terms = 4) {
  return random_element<NSymElem>(rng, n, basis, terms);
}

inline QSymElem random_qsym(std::mt19937_64& rng, int n, QSymBasis basis, int terms = 4) {
  return random_element<QSymElem>(rng, n, basis, terms);
}

inline NCPoly random_ncpoly(std::mt19937_64& rng, int m, int max_len, int terms = 5) {
  NCPoly p(m);
  std::uniform_int_distribution<int> len(0, max_len), letter(1, m);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> w(len(rng));
    for (int& c : w) c = letter(rng);
    p.add(Word(w), random_rational(rng));
  }
  return p;
}

}  // namespace nsymkit::testing
