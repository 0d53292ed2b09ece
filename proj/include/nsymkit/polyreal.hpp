#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsymkit {

inline constexpr int kDefaultDegreeCap = 8;
inline constexpr int kDefaultVariables = 8;
// Words and exponent vectors are packed four bits per entry.
inline constexpr int kMaxVariables = 15;
inline constexpr int kMaxDegree = 15;

// Word in the letters 1..15, packed so that numeric order is length-then-lexicographic.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<int>& letters);
  static Word from_code(std::uint64_t code) { Word w; w.code_ = code; return w; }

  std::uint64_t code() const { return code_; }
  std::size_t length() const;
  int letter(std::size_t i) const;
  std::vector<int> letters() const;
  // Bit j-1 set iff letter j > letter j+1.
  std::uint64_t descent_mask() const;

  friend Word operator+(Word u, Word v);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::uint64_t code_ = 0;
};

class NCPoly {
 public:
  explicit NCPoly(int m);
  static NCPoly unit(int m);
  static NCPoly word(int m, const std::vector<int>& letters, const Rational& coeff = 1);

  int m() const { return m_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  // Adds c to the coefficient of w, dropping it if it cancels.
  void add(const Word& w, const Rational& c);
  void add_scaled(const NCPoly& p, const Rational& c);

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  int m_;
  std::map<Word, Rational> terms_;
};

// Exponent vector over at most 15 variables, variable 1 in the top nibble (numeric order is lexicographic).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);
  std::uint64_t code() const { return code_; }
  int exponent(int var) const { return static_cast<int>(code_ >> (4 * (16 - var)) & 15); }
  std::vector<int> exponents(int m) const;
  int degree() const;
  Monomial times_var(int var) const;
  friend Monomial operator*(Monomial a, Monomial b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint64_t code_ = 0;
};

class CPoly {
 public:
  explicit CPoly(int m);
  static CPoly unit(int m);

  int m() const { return m_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& x) const;
  void add(const Monomial& x, const Rational& c);
  void add_scaled(const CPoly& p, const Rational& c);

  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  int m_;
  std::map<Monomial, Rational> terms_;
};

struct NcGenerator {
  enum class Kind { Ribbon, H, E, Psi, Phi };
  Kind kind;
  Composition index;  // ribbon shape, or (n) for the one-index generators

  static NcGenerator ribbon(Composition alpha) { return {Kind::Ribbon, std::move(alpha)}; }
  static NcGenerator h(int n) { return {Kind::H, Composition{n}}; }
  static NcGenerator e(int n) { return {Kind::E, Composition{n}}; }
  static NcGenerator psi(int n) { return {Kind::Psi, Composition{n}}; }
  static NcGenerator phi(int n) { return {Kind::Phi, Composition{n}}; }
  int degree() const { return index.size(); }
};

struct CGenerator {
  enum class Kind { E, H, P, SymMonomial, M, F };
  Kind kind;
  Composition index;

  int degree() const { return index.size(); }
};

NCPoly realize_nc(const NcGenerator& gen, int m, int cap = kDefaultDegreeCap);
NCPoly nc_mul(const NCPoly& p, const NCPoly& q, int cap = kDefaultDegreeCap);
NCPoly nc_linear(const std::vector<std::pair<Rational, const NCPoly*>>& combination);

struct MembershipResult {
  bool member = true;
  std::optional<std::pair<Word, Word>> witness;  // two words with equal descent sets and different coefficients
};
MembershipResult is_nsym(const NCPoly& p, int n, int m);

// All words of length n over [m] whose descent set has the given mask, in canonical order.
std::vector<Word> words_with_descents(int n, std::uint64_t mask, int m);

CPoly chi(const NCPoly& p);
CPoly realize_c(const CGenerator& gen, int m);
CPoly c_mul(const CPoly& p, const CPoly& q);

enum class SymFamily { E, H, P, M, F };

// Realization of the Lambda basis element b_lambda (products of generators; f via omega of m).
CPoly realize_sym(SymFamily family, const Partition& lambda, int m);
// Unique c with target = sum_lambda c_lambda b_lambda. Requires m >= degree.
std::map<Partition, Rational> sym_expand(const CPoly& target, SymFamily family, int m);
// omega on Lambda: expand in e, reinterpret as h.
CPoly omega(const CPoly& target, int m);
bool is_symmetric(const CPoly& p);

// Generator text: "ribbon 2,1", "h 3", "e 2", "psi 3", "phi 3"; commutative "p 2", "m 2,1", "M 2,1", "F 1,2".
NcGenerator parse_nc_generator(std::string_view text);
CGenerator parse_c_generator(std::string_view text);

std::string to_string(const Word& w);
std::string to_string(const NCPoly& p);
std::string to_string(const CPoly& p);

}  // namespace nsymkit
