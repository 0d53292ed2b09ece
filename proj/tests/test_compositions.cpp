#include "nsymkit/composition.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace nsymkit;

namespace {

// Greedy grouping of beta's parts into blocks of sizes alpha_i.
bool refines_by_grouping(const Composition& beta, const Composition& alpha) {
  std::size_t j = 0;
  for (int target : alpha) {
    int sum = 0;
    while (sum < target && j < beta.length()) sum += beta[j++];
    if (sum != target) return false;
  }
  return j == beta.length();
}

// n! / |conjugacy class|, counting cycle types over all of S_n.
std::map<Partition, Integer> centralizer_sizes(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, Integer> class_size;
  do {
    std::vector<bool> seen(n);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<>());
    ++class_size[Partition(Composition(cycles))];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<Partition, Integer> z;
  for (const auto& [lambda, size] : class_size) z[lambda] = factorial(n) / size;
  return z;
}

}  // namespace

TEST_SUITE("compositions") {
  TEST_CASE("enumeration in canonical order") {
    CHECK(enumerate_compositions(0) == std::vector<Composition>{Composition{}});
    CHECK(enumerate_compositions(2) == std::vector<Composition>{{2}, {1, 1}});
    CHECK(enumerate_compositions(3) == std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
    for (int n = 1; n <= 10; ++n) {
      const auto all = enumerate_compositions(n);
      CHECK(all.size() == (std::size_t{1} << (n - 1)));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].set_mask() == i);
    }
    CHECK_THROWS_AS(enumerate_compositions(-1), std::invalid_argument);
  }

  TEST_CASE("set bijection") {
    CHECK(set_of({2, 3, 2, 1}) == SubsetOfRange(8, {2, 5, 7}));
    CHECK(set_of({5}).size() == 0);
    CHECK(set_inverse(SubsetOfRange(8, {1, 3, 4, 6})) == Composition{1, 2, 1, 2, 2});
    CHECK(to_string(set_of({2, 3, 2, 1})) == "{2,5,7}|n=8");
    CHECK(parse_subset("{2,5,7}|n=8") == SubsetOfRange(8, {2, 5, 7}));
    CHECK_THROWS_AS(SubsetOfRange(4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetOfRange(4, {2, 2}), std::invalid_argument);
    for (int n = 1; n <= 10; ++n)
      for (const auto& a : enumerate_compositions(n)) CHECK(set_inverse(set_of(a)) == a);
  }

  TEST_CASE("involutions on the worked example") {
    const Composition a{2, 3, 2, 1};
    CHECK(reverse(a) == Composition{1, 2, 3, 2});
    CHECK(complement(a) == Composition{1, 2, 1, 2, 2});
    CHECK(transpose(a) == Composition{2, 2, 1, 2, 1});
    CHECK(a.length() + complement(a).length() - 1 == 8);
    CHECK(complement(Composition{}) == Composition{});
    CHECK(transpose(Composition{}) == Composition{});
  }

  TEST_CASE("involution laws") {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& a : enumerate_compositions(n)) {
        for (auto kind : {Involution::Reverse, Involution::Complement, Involution::Transpose})
          CHECK(involution(involution(a, kind), kind) == a);
        CHECK(static_cast<int>(a.length() + complement(a).length()) - 1 == n);
        CHECK(reverse(complement(a)) == transpose(a));
        CHECK(complement(reverse(a)) == transpose(a));
      }
    }
  }

  TEST_CASE("concatenation") {
    CHECK(concat({2, 1}, {3}) == Composition{2, 1, 3});
    CHECK(near_concat({2, 1}, {3}) == Composition{2, 4});
    CHECK_THROWS_AS(near_concat({}, {3}), std::invalid_argument);
  }

  TEST_CASE("refinement blocks") {
    const auto blocks = refines({1, 3, 1, 2, 2, 1, 1, 3}, {1, 6, 3, 4});
    REQUIRE(blocks);
    CHECK(*blocks == std::vector<Composition>{{1}, {3, 1, 2}, {2, 1}, {1, 3}});
    const auto self = refines({2, 3, 2, 1}, {2, 3, 2, 1});
    REQUIRE(self);
    CHECK(*self == std::vector<Composition>{{2}, {3}, {2}, {1}});
    CHECK_FALSE(refines({2, 1}, {1, 2}));
  }

  TEST_CASE("refinement agrees with set containment") {
    for (int n = 1; n <= 8; ++n) {
      const auto all = enumerate_compositions(n);
      for (const auto& b : all) {
        for (const auto& a : all) {
          const bool by_sets = set_of(b).contains(set_of(a));
          CHECK(refines_by_grouping(b, a) == by_sets);
          CHECK(is_refinement(b, a) == by_sets);
          CHECK(refines(b, a).has_value() == by_sets);
        }
      }
    }
  }

  TEST_CASE("mobius function of the Boolean lattice") {
    const SubsetOfRange s12(4, {1, 2}), s1(4, {1});
    CHECK(mobius(s12, s12) == 1);
    CHECK(mobius(s12, s1) == -1);
    CHECK(mobius(s1, s12) == 0);

    // mobius(T, U) is the nonzero one for S <= U <= T.
    const SubsetOfRange s(4, {1}), t(4, {1, 3});
    Rational sum = 0;
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      const auto u = SubsetOfRange::from_mask(4, mask);
      if (u.contains(s) && t.contains(u)) sum += mobius(t, u);
    }
    CHECK(sum == 0);
    CHECK_THROWS_AS(mobius(SubsetOfRange(4, {}), SubsetOfRange(5, {})), std::invalid_argument);
  }

  TEST_CASE("sort and z") {
    auto r = sort_and_z({1, 1});
    CHECK(r.sorted == Partition{1, 1});
    CHECK(r.z == 2);
    r = sort_and_z({1, 2, 1});
    CHECK(r.sorted == Partition{2, 1, 1});
    CHECK(r.z == 4);
    CHECK(sort_and_z({7}).z == 7);
  }

  TEST_CASE("z is the centralizer order") {
    for (int n = 1; n <= 7; ++n) {
      const auto z = centralizer_sizes(n);
      for (const auto& a : enumerate_compositions(n)) {
        const auto sz = sort_and_z(a);
        CHECK(sz.z == Rational(z.at(sz.sorted)));
      }
    }
    for (int n = 1; n <= 9; ++n)
      for (const auto& a : enumerate_compositions(n))
        CHECK(z_coefficient(a) == z_coefficient(sort_and_z(a).sorted.composition()));
  }

  TEST_CASE("statistics") {
    CHECK(stat({1, 3, 1, 2}, Stat::PartialSumProduct) == 140);
    CHECK(stat({2, 3, 2, 1}, Stat::LastPart) == 1);
    CHECK(stat({2, 2}, Stat::SpecialProduct) == 8);
    CHECK(stat({2, 3, 2, 1}, Stat::Product) == 12);
    CHECK_THROWS_AS(stat({}, Stat::Product), std::invalid_argument);

    const Composition beta{1, 1, 3, 2, 2, 3, 1}, alpha{1, 6, 2, 4};
    CHECK(refined_stat(beta, alpha, RefinedStat::Length) == 6);
    CHECK(refined_stat(beta, alpha, RefinedStat::LengthFactorial) == 12);
    CHECK(refined_stat(beta, alpha, RefinedStat::LastPart) == 4);
    CHECK(refined_stat(beta, alpha, RefinedStat::FirstPart) == 6);
    CHECK(refined_stat(alpha, alpha, RefinedStat::LastPart) == stat(alpha, Stat::Product));
    CHECK_THROWS_AS(refined_stat({2, 1}, {1, 2}, RefinedStat::Length), std::invalid_argument);
  }

  TEST_CASE("binomial partial sum") {
    CHECK(binomial_partial_sum(0, 4) == 1);
    CHECK(binomial_partial_sum(2, 1) == 2);
    CHECK(binomial_partial_sum(5, 3) == Rational(9, 4));
    for (int n = 0; n <= 25; ++n)
      for (int c = 0; c <= 25; ++c) CHECK(binomial_partial_sum(n, c) == fraction(n + c + 1, c + 1));
    CHECK_THROWS_AS(binomial_partial_sum(-1, 0), std::invalid_argument);
  }

  TEST_CASE("hooks") {
    CHECK(is_hook({4}));
    CHECK(is_hook({1, 1, 3}));
    CHECK_FALSE(is_hook({2, 1}));
    CHECK_FALSE(is_hook({}));
  }

  TEST_CASE("text notation") {
    CHECK(parse_composition("[2,3,2,1]") == Composition{2, 3, 2, 1});
    CHECK(parse_composition("2,3,2,1") == Composition{2, 3, 2, 1});
    CHECK(parse_composition("[]") == Composition{});
    CHECK(to_string(Composition{2, 3, 2, 1}) == "[2,3,2,1]");
    CHECK_THROWS_AS(parse_composition("[2,0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("[2,x]"), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, -2}), std::invalid_argument);
  }

  TEST_CASE("partitions") {
    CHECK(enumerate_partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(Partition{3, 1, 1}.multiplicity(1) == 2);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  }
}
