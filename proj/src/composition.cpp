#include "nsymkit/composition.hpp"

#include "nsymkit/coverage.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace nsymkit {

using coverage::Op;

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  long total = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total += p;
  }
  if (total > kMaxCompositionSize) throw std::invalid_argument("composition size exceeds 64");
  size_ = static_cast<int>(total);
}

Composition Composition::from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > kMaxCompositionSize) throw std::invalid_argument("composition size out of range");
  if (n == 0) return Composition();
  std::vector<int> parts;
  int last = 0;
  for (int j = 1; j < n; ++j) {
    if (mask >> (j - 1) & 1) {
      parts.push_back(j - last);
      last = j;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

std::uint64_t Composition::set_mask() const {
  std::uint64_t mask = 0;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    partial += parts_[i];
    mask |= std::uint64_t{1} << (partial - 1);
  }
  return mask;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.set_mask() <=> b.set_mask();
}

SubsetOfRange::SubsetOfRange(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kMaxCompositionSize) throw std::invalid_argument("subset ambient n out of range");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n - 1)
      throw std::invalid_argument("subset member " + std::to_string(members_[i]) + " outside [1," +
                                  std::to_string(n - 1) + "]");
    if (i > 0 && members_[i] <= members_[i - 1])
      throw std::invalid_argument("subset members must be strictly increasing");
  }
}

SubsetOfRange SubsetOfRange::from_mask(int n, std::uint64_t mask) {
  std::vector<int> members;
  for (int j = 1; j < n; ++j)
    if (mask >> (j - 1) & 1) members.push_back(j);
  return SubsetOfRange(n, std::move(members));
}

std::uint64_t SubsetOfRange::mask() const {
  std::uint64_t m = 0;
  for (int j : members_) m |= std::uint64_t{1} << (j - 1);
  return m;
}

bool SubsetOfRange::contains(const SubsetOfRange& other) const {
  return n_ == other.n_ && (other.mask() & ~mask()) == 0;
}

Partition::Partition(Composition parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.length(); ++i)
    if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto& x = a.composition().parts();
  const auto& y = b.composition().parts();
  // Larger lexicographic partitions sort first.
  return std::lexicographical_compare_three_way(y.begin(), y.end(), x.begin(), x.end());
}

std::vector<Composition> enumerate_compositions(int n) {
  coverage::touch(Op::EnumerateCompositions);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return {Composition()};
  if (n > 30) throw std::invalid_argument("refusing to enumerate 2^(n-1) compositions for n > 30");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
    out.push_back(Composition::from_mask(n, mask));
  return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(Composition(cur));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

SubsetOfRange set_of(const Composition& alpha) {
  coverage::touch(Op::SetOf);
  if (alpha.empty()) throw std::invalid_argument("set_of: the empty composition has no ambient [n-1]");
  return SubsetOfRange::from_mask(alpha.size(), alpha.set_mask());
}

Composition set_inverse(const SubsetOfRange& s) {
  coverage::touch(Op::SetInverse);
  return Composition::from_mask(s.n(), s.mask());
}

Composition involution(const Composition& alpha, Involution kind) {
  coverage::touch(Op::Involution);
  switch (kind) {
    case Involution::Reverse:
      return Composition(std::vector<int>(alpha.parts().rbegin(), alpha.parts().rend()));
    case Involution::Complement: {
      const int n = alpha.size();
      if (n == 0) return alpha;
      const std::uint64_t full = (n == 1) ? 0 : ((std::uint64_t{1} << (n - 1)) - 1);
      return Composition::from_mask(n, ~alpha.set_mask() & full);
    }
    case Involution::Transpose:
      return involution(involution(alpha, Involution::Reverse), Involution::Complement);
  }
  throw std::logic_error("unreachable");
}

Composition reverse(const Composition& alpha) { return involution(alpha, Involution::Reverse); }
Composition complement(const Composition& alpha) { return involution(alpha, Involution::Complement); }
Composition transpose(const Composition& alpha) { return involution(alpha, Involution::Transpose); }

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("near_concat needs nonempty compositions");
  std::vector<int> parts = a.parts();
  parts.back() += b.front();
  parts.insert(parts.end(), b.begin() + 1, b.end());
  return Composition(std::move(parts));
}

std::optional<std::vector<Composition>> refines(const Composition& beta, const Composition& alpha) {
  coverage::touch(Op::Refines);
  if (!is_refinement(beta, alpha)) return std::nullopt;
  std::vector<Composition> blocks;
  blocks.reserve(alpha.length());
  std::size_t j = 0;
  for (int target : alpha) {
    std::vector<int> block;
    int sum = 0;
    while (sum < target) {
      block.push_back(beta[j]);
      sum += beta[j++];
    }
    blocks.emplace_back(std::move(block));
  }
  return blocks;
}

bool is_refinement(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  return (alpha.set_mask() & ~beta.set_mask()) == 0;
}

Rational mobius(const SubsetOfRange& s, const SubsetOfRange& t) {
  coverage::touch(Op::Mobius);
  if (s.n() != t.n()) throw std::invalid_argument("mobius: ambient n mismatch");
  if (!s.contains(t)) return 0;
  return sign_pow(static_cast<long>(s.size()) - static_cast<long>(t.size()));
}

SortedWithZ sort_and_z(const Composition& alpha) {
  coverage::touch(Op::SortAndZ);
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::map<int, unsigned long> mult;
  for (int p : parts) ++mult[p];
  Integer z = 1;
  for (auto [part, m] : mult) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= power * factorial(m);
  }
  return {Partition(Composition(std::move(parts))), Rational(z)};
}

Rational z_coefficient(const Composition& alpha) { return sort_and_z(alpha).z; }

Rational stat(const Composition& alpha, Stat kind) {
  coverage::touch(Op::Stat);
  if (alpha.empty()) throw std::invalid_argument("stat of the empty composition");
  Integer r = 1;
  switch (kind) {
    case Stat::LastPart:
      return alpha.back();
    case Stat::Product:
      for (int p : alpha) r *= p;
      return r;
    case Stat::PartialSumProduct: {
      long partial = 0;
      for (int p : alpha) {
        partial += p;
        r *= partial;
      }
      return r;
    }
    case Stat::SpecialProduct:
      for (int p : alpha) r *= p;
      return factorial(alpha.length()) * r;
  }
  throw std::logic_error("unreachable");
}

Rational refined_stat(const Composition& beta, const Composition& alpha, RefinedStat kind) {
  coverage::touch(Op::RefinedStat);
  if (kind == RefinedStat::FirstPart) return refined_stat(reverse(beta), reverse(alpha), RefinedStat::LastPart);
  auto blocks = refines(beta, alpha);
  if (!blocks)
    throw std::invalid_argument("refined_stat: " + to_string(beta) + " does not refine " + to_string(alpha));
  Rational r = 1;
  for (const auto& b : *blocks) {
    switch (kind) {
      case RefinedStat::LastPart: r *= b.back(); break;
      case RefinedStat::Length: r *= static_cast<long>(b.length()); break;
      case RefinedStat::PartialSumProduct: r *= stat(b, Stat::PartialSumProduct); break;
      case RefinedStat::SpecialProduct: r *= stat(b, Stat::SpecialProduct); break;
      case RefinedStat::LengthFactorial: r *= factorial(b.length()); break;
      case RefinedStat::FirstPart: break;
    }
  }
  return r;
}

Rational binomial_partial_sum(int n, int c) {
  coverage::touch(Op::BinomialPartialSum);
  if (n < 0 || c < 0) throw std::invalid_argument("binomial_partial_sum needs n, c >= 0");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) sum += fraction(binomial(n, k), binomial(n + c, k + c));
  return sum;
}

bool is_hook(const Composition& gamma) {
  if (gamma.empty()) return false;
  for (std::size_t i = 0; i + 1 < gamma.length(); ++i)
    if (gamma[i] != 1) return false;
  return true;
}

namespace {
std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view body, std::string_view what) {
  std::vector<int> out;
  body = trim(body);
  if (body.empty()) return out;
  while (true) {
    auto comma = body.find(',');
    std::string_view tok = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}
}  // namespace

std::string to_string(const Composition& alpha) { return "[" + join(alpha.parts()) + "]"; }

std::string to_string(const Partition& lambda) { return to_string(lambda.composition()); }

std::string to_string(const SubsetOfRange& s) {
  return "{" + join(s.members()) + "}|n=" + std::to_string(s.n());
}

Composition parse_composition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("composition missing ']'");
    text = text.substr(1, text.size() - 2);
  }
  return Composition(parse_int_list(text, "composition"));
}

SubsetOfRange parse_subset(std::string_view text) {
  text = trim(text);
  auto bar = text.find("|n=");
  if (text.empty() || text.front() != '{' || bar == std::string_view::npos || bar == 0 || text[bar - 1] != '}')
    throw std::invalid_argument("subset must look like {2,5,7}|n=8");
  auto members = parse_int_list(text.substr(1, bar - 2), "subset");
  auto ns = parse_int_list(text.substr(bar + 3), "subset ambient n");
  if (ns.size() != 1) throw std::invalid_argument("subset ambient n missing");
  return SubsetOfRange(ns[0], std::move(members));
}

}  // namespace nsymkit
