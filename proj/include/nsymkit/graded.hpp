#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace nsymkit {

// Homogeneous element of degree n: finite map from compositions of n to nonzero rationals in a fixed basis.
template <typename Basis>
class GradedElement {
 public:
  GradedElement(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  }

  static GradedElement basis_element(Basis basis, const Composition& alpha, const Rational& c = 1) {
    GradedElement x(alpha.size(), basis);
    x.add(alpha, c);
    return x;
  }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Composition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Composition& alpha, const Rational& c) {
    if (alpha.size() != degree_)
      throw std::invalid_argument("index " + to_string(alpha) + " does not have size " + std::to_string(degree_));
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  GradedElement& operator+=(const GradedElement& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  GradedElement& operator-=(const GradedElement& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  GradedElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
  friend GradedElement operator-(GradedElement a) { return a *= Rational(-1); }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;

 private:
  void check_compatible(const GradedElement& o) const {
    if (o.degree_ != degree_ || o.basis_ != basis_)
      throw std::invalid_argument("adding elements of different degree or basis");
  }

  int degree_;
  Basis basis_;
  std::map<Composition, Rational> terms_;
};

// rho, psi, omega act on indices by reverse, complement, transpose.
enum class AlgebraInvolution { Rho, Psi, Omega };

inline Involution index_involution(AlgebraInvolution kind) {
  switch (kind) {
    case AlgebraInvolution::Rho: return Involution::Reverse;
    case AlgebraInvolution::Psi: return Involution::Complement;
    case AlgebraInvolution::Omega: return Involution::Transpose;
  }
  throw std::logic_error("unreachable");
}

// Calls f(beta) for every beta refining alpha (set(beta) contains set(alpha)), in canonical order.
template <typename F>
void for_each_refinement(const Composition& alpha, F&& f) {
  const int n = alpha.size();
  if (n == 0) {
    f(alpha);
    return;
  }
  const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
  const std::uint64_t base = alpha.set_mask();
  const std::uint64_t free = full & ~base;
  // Enumerate subsets of the free bits in increasing numeric order.
  std::uint64_t sub = 0;
  while (true) {
    f(Composition::from_mask(n, base | sub));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

// Calls f(beta) for every beta coarser than alpha (set(beta) contained in set(alpha)), in canonical order.
template <typename F>
void for_each_coarsening(const Composition& alpha, F&& f) {
  const int n = alpha.size();
  if (n == 0) {
    f(alpha);
    return;
  }
  const std::uint64_t base = alpha.set_mask();
  std::uint64_t sub = 0;
  while (true) {
    f(Composition::from_mask(n, sub));
    if (sub == base) break;
    sub = (sub - base) & base;
  }
}

}  // namespace nsymkit
