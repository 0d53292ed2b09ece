#pragma once

// Allocation-free block statistics for the change-of-basis inner loops.

#include "nsymkit/composition.hpp"
#include "nsymkit/rational.hpp"

#include <stdexcept>

namespace nsymkit {

// Conversions iterate over 2^(n-1) compositions; this also keeps block statistics inside 64 bits.
inline constexpr int kMaxConversionDegree = 20;

struct BlockStats {
  long lp = 1;          // product of last parts of blocks
  long fp = 1;          // product of first parts of blocks
  long len = 1;         // product of block lengths
  long piu = 1;         // product over blocks of partial-sum products
  long piu_rev = 1;     // the same on reversed blocks
  long sp = 1;          // product over blocks of l(block)! * prod(block)
  long prod_outer = 1;  // product of the coarse composition's parts
};

inline long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("block statistic overflows 64 bits");
  return r;
}

// beta must refine alpha.
inline BlockStats block_stats(const Composition& beta, const Composition& alpha) {
  BlockStats s;
  std::size_t j = 0;
  for (int target : alpha) {
    s.prod_outer = checked_mul(s.prod_outer, target);
    const std::size_t start = j;
    int sum = 0;
    long piu = 1, fact = 1, prod = 1;
    while (sum < target) {
      sum += beta[j];
      piu = checked_mul(piu, sum);
      prod = checked_mul(prod, beta[j]);
      ++j;
      fact = checked_mul(fact, static_cast<long>(j - start));
    }
    if (sum != target) throw std::invalid_argument("block_stats: beta does not refine alpha");
    long piu_rev = 1;
    int suffix = 0;
    for (std::size_t k = j; k-- > start;) {
      suffix += beta[k];
      piu_rev = checked_mul(piu_rev, suffix);
    }
    s.lp = checked_mul(s.lp, beta[j - 1]);
    s.fp = checked_mul(s.fp, beta[start]);
    s.len = checked_mul(s.len, static_cast<long>(j - start));
    s.piu = checked_mul(s.piu, piu);
    s.piu_rev = checked_mul(s.piu_rev, piu_rev);
    s.sp = checked_mul(s.sp, checked_mul(fact, prod));
  }
  return s;
}

inline Rational ratio(long num, long den) {
  Rational q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q.get_mpq_t(), num, static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace nsymkit
