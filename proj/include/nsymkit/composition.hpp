#pragma once

#include "nsymkit/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsymkit {

// Compositions are limited to size 64 so that set(alpha) fits in one word.
inline constexpr int kMaxCompositionSize = 64;

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  // Composition of n whose set is encoded by mask (bit j-1 set iff j in set).
  static Composition from_mask(int n, std::uint64_t mask);

  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  std::uint64_t set_mask() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  // Canonical order: by size, then by the binary encoding of set(alpha).
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

class SubsetOfRange {
 public:
  SubsetOfRange(int n, std::vector<int> members);
  static SubsetOfRange from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::uint64_t mask() const;
  bool contains(const SubsetOfRange& other) const;

  friend bool operator==(const SubsetOfRange&, const SubsetOfRange&) = default;

 private:
  int n_;
  std::vector<int> members_;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(Composition parts);
  Partition(std::initializer_list<int> parts) : Partition(Composition(parts)) {}

  const Composition& composition() const { return parts_; }
  int size() const { return parts_.size(); }
  std::size_t length() const { return parts_.length(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }
  // Multiplicity m_i of the part i.
  int multiplicity(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Reverse lexicographic: (n) first, (1^n) last.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  Composition parts_;
};

std::vector<Composition> enumerate_compositions(int n);
std::vector<Partition> enumerate_partitions(int n);

SubsetOfRange set_of(const Composition& alpha);
Composition set_inverse(const SubsetOfRange& s);

enum class Involution { Reverse, Complement, Transpose };

Composition involution(const Composition& alpha, Involution kind);
Composition reverse(const Composition& alpha);
Composition complement(const Composition& alpha);
Composition transpose(const Composition& alpha);

Composition concat(const Composition& a, const Composition& b);
// Fuses the last part of a with the first part of b.
Composition near_concat(const Composition& a, const Composition& b);

// Blocks beta^(i) of beta with |beta^(i)| = alpha_i, or nullopt if beta does not refine alpha.
std::optional<std::vector<Composition>> refines(const Composition& beta, const Composition& alpha);
// Cheap predicate form of refines(): set(beta) contains set(alpha).
bool is_refinement(const Composition& beta, const Composition& alpha);

Rational mobius(const SubsetOfRange& s, const SubsetOfRange& t);

struct SortedWithZ {
  Partition sorted;
  Rational z;
};
SortedWithZ sort_and_z(const Composition& alpha);
Rational z_coefficient(const Composition& alpha);

enum class Stat { LastPart, Product, PartialSumProduct, SpecialProduct };
Rational stat(const Composition& alpha, Stat kind);

enum class RefinedStat { LastPart, FirstPart, Length, PartialSumProduct, SpecialProduct, LengthFactorial };
Rational refined_stat(const Composition& beta, const Composition& alpha, RefinedStat kind);

Rational binomial_partial_sum(int n, int c);

// (1^k, s) with k >= 0, s >= 1.
bool is_hook(const Composition& gamma);

std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);
std::string to_string(const SubsetOfRange& s);
// "[2,3,2,1]" or "2,3,2,1"; "[]" is the empty composition.
Composition parse_composition(std::string_view text);
// "{2,5,7}|n=8".
SubsetOfRange parse_subset(std::string_view text);

}  // namespace nsymkit
