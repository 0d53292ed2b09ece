#include "nsymkit/polyreal.hpp"

#include "nsymkit/coverage.hpp"
#include "nsymkit/lambda.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace nsymkit {

using coverage::Op;

Word::Word(const std::vector<int>& letters) {
  if (letters.size() > 16) throw std::invalid_argument("word longer than 16 letters");
  for (int a : letters) {
    if (a < 1 || a > kMaxVariables) throw std::invalid_argument("word letter out of range 1..15");
    code_ = (code_ << 4) | static_cast<std::uint64_t>(a);
  }
}

std::size_t Word::length() const {
  return code_ == 0 ? 0 : (64 - static_cast<std::size_t>(std::countl_zero(code_)) + 3) / 4;
}

int Word::letter(std::size_t i) const {
  return static_cast<int>(code_ >> (4 * (length() - 1 - i)) & 15);
}

std::vector<int> Word::letters() const {
  const std::size_t len = length();
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<int>(code_ >> (4 * (len - 1 - i)) & 15);
  return out;
}

std::uint64_t Word::descent_mask() const {
  std::uint64_t mask = 0;
  const auto ls = letters();
  for (std::size_t j = 1; j < ls.size(); ++j)
    if (ls[j - 1] > ls[j]) mask |= std::uint64_t{1} << (j - 1);
  return mask;
}

Word operator+(Word u, Word v) {
  const std::size_t lu = u.length(), lv = v.length();
  if (lu + lv > 16) throw std::invalid_argument("word longer than 16 letters");
  if (lu == 0) return v;
  return Word::from_code((u.code_ << (4 * lv)) | v.code_);
}

NCPoly::NCPoly(int m) : m_(m) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("variable count must be in 1..15");
}

NCPoly NCPoly::unit(int m) {
  NCPoly p(m);
  p.add(Word(), 1);
  return p;
}

NCPoly NCPoly::word(int m, const std::vector<int>& letters, const Rational& coeff) {
  NCPoly p(m);
  for (int a : letters)
    if (a > m) throw std::invalid_argument("word letter exceeds variable count");
  p.add(Word(letters), coeff);
  return p;
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void NCPoly::add_scaled(const NCPoly& p, const Rational& c) {
  if (p.m_ != m_) throw std::invalid_argument("variable count mismatch");
  if (sgn(c) == 0) return;
  for (const auto& [w, v] : p.terms_) add(w, v * c);
}

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
    throw std::invalid_argument("too many variables in exponent vector");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 15) throw std::invalid_argument("exponent out of range 0..15");
    code_ |= static_cast<std::uint64_t>(exponents[i]) << (4 * (15 - i));
  }
}

std::vector<int> Monomial::exponents(int m) const {
  std::vector<int> out(m);
  for (int v = 1; v <= m; ++v) out[v - 1] = exponent(v);
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (int v = 1; v <= 16; ++v) d += exponent(v);
  return d;
}

Monomial Monomial::times_var(int var) const {
  if (exponent(var) == 15) throw std::overflow_error("exponent overflow");
  Monomial r = *this;
  r.code_ += std::uint64_t{1} << (4 * (16 - var));
  return r;
}

Monomial operator*(Monomial a, Monomial b) {
  Monomial r;
  for (int v = 1; v <= 16; ++v) {
    const int e = a.exponent(v) + b.exponent(v);
    if (e > 15) throw std::overflow_error("exponent overflow");
    r.code_ |= static_cast<std::uint64_t>(e) << (4 * (16 - v));
  }
  return r;
}

CPoly::CPoly(int m) : m_(m) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("variable count must be in 1..15");
}

CPoly CPoly::unit(int m) {
  CPoly p(m);
  p.add(Monomial(), 1);
  return p;
}

Rational CPoly::coeff(const Monomial& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CPoly::add(const Monomial& x, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void CPoly::add_scaled(const CPoly& p, const Rational& c) {
  if (p.m_ != m_) throw std::invalid_argument("variable count mismatch");
  if (sgn(c) == 0) return;
  for (const auto& [x, v] : p.terms_) add(x, v * c);
}

std::vector<Word> words_with_descents(int n, std::uint64_t mask, int m) {
  std::vector<Word> out;
  std::vector<int> cur(n);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.emplace_back(cur);
      return;
    }
    int lo = 1, hi = m;
    if (pos > 0) {
      if (mask >> (pos - 1) & 1)
        hi = cur[pos - 1] - 1;
      else
        lo = cur[pos - 1];
    }
    for (int a = lo; a <= hi; ++a) {
      cur[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

void check_realization_args(int degree, int m, int cap) {
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("variable count must be in 1..15");
  if (cap < 1 || cap > kMaxDegree) throw std::invalid_argument("degree cap must be in 1..15");
  if (degree > cap)
    throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
}

void add_ribbon(NCPoly& p, int n, std::uint64_t mask, const Rational& c) {
  for (const Word& w : words_with_descents(n, mask, p.m())) p.add(w, c);
}

}  // namespace

NCPoly realize_nc(const NcGenerator& gen, int m, int cap) {
  coverage::touch(Op::RealizeNc);
  const int n = gen.degree();
  check_realization_args(n, m, cap);
  NCPoly p(m);
  switch (gen.kind) {
    case NcGenerator::Kind::Ribbon:
      add_ribbon(p, n, gen.index.set_mask(), 1);
      break;
    case NcGenerator::Kind::H:
      add_ribbon(p, n, 0, 1);
      break;
    case NcGenerator::Kind::E:
      add_ribbon(p, n, (std::uint64_t{1} << (n - 1)) - 1, 1);
      break;
    case NcGenerator::Kind::Psi:
      // Hooks (1^k, n-k) have set {1..k}.
      for (int k = 0; k < n; ++k) add_ribbon(p, n, (std::uint64_t{1} << k) - 1, sign_pow(k));
      break;
    case NcGenerator::Kind::Phi: {
      std::vector<Rational> by_descents(n);
      for (int d = 0; d < n; ++d) {
        by_descents[d] = Rational(sign_pow(d), binomial(n - 1, d));
        by_descents[d].canonicalize();
      }
      std::vector<int> cur(n);
      std::function<void(int, int)> rec = [&](int pos, int descents) {
        if (pos == n) {
          p.add(Word(cur), by_descents[descents]);
          return;
        }
        for (int a = 1; a <= m; ++a) {
          cur[pos] = a;
          rec(pos + 1, descents + (pos > 0 && cur[pos - 1] > a ? 1 : 0));
        }
      };
      rec(0, 0);
      break;
    }
  }
  return p;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q, int cap) {
  coverage::touch(Op::NcMul);
  if (p.m() != q.m()) throw std::invalid_argument("nc_mul: variable count mismatch");
  NCPoly r(p.m());
  Rational t;
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      if (static_cast<int>(u.length() + v.length()) > cap)
        throw std::invalid_argument("nc_mul: product degree exceeds cap " + std::to_string(cap));
      mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      r.add(u + v, t);
    }
  }
  return r;
}

NCPoly nc_linear(const std::vector<std::pair<Rational, const NCPoly*>>& combination) {
  coverage::touch(Op::NcLinear);
  if (combination.empty()) throw std::invalid_argument("nc_linear of an empty combination");
  NCPoly r(combination.front().second->m());
  for (const auto& [c, p] : combination) r.add_scaled(*p, c);
  return r;
}

MembershipResult is_nsym(const NCPoly& p, int n, int m) {
  coverage::touch(Op::IsNsym);
  if (m < n) throw std::invalid_argument("is_nsym: need m >= n for a sound membership test");
  if (p.m() != m) throw std::invalid_argument("is_nsym: polynomial has a different variable count");
  std::set<std::uint64_t> classes;
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.length()) != n) throw std::invalid_argument("is_nsym: polynomial is not homogeneous of degree n");
    classes.insert(w.descent_mask());
  }
  for (std::uint64_t mask : classes) {
    const auto words = words_with_descents(n, mask, m);
    const Rational ref = p.coeff(words.front());
    for (const Word& w : words)
      if (p.coeff(w) != ref) return {false, std::make_pair(words.front(), w)};
  }
  return {};
}

CPoly chi(const NCPoly& p) {
  coverage::touch(Op::Chi);
  CPoly r(p.m());
  for (const auto& [w, c] : p.terms()) {
    Monomial x;
    for (int a : w.letters()) x = x.times_var(a);
    r.add(x, c);
  }
  return r;
}

CPoly c_mul(const CPoly& p, const CPoly& q) {
  if (p.m() != q.m()) throw std::invalid_argument("c_mul: variable count mismatch");
  CPoly r(p.m());
  Rational t;
  for (const auto& [x, a] : p.terms())
    for (const auto& [y, b] : q.terms()) {
      mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      r.add(x * y, t);
    }
  return r;
}

namespace {

CPoly monomial_quasisymmetric(const Composition& alpha, int m) {
  CPoly p(m);
  const int len = static_cast<int>(alpha.length());
  std::vector<int> exps(m, 0);
  std::function<void(int, int)> rec = [&](int k, int next_var) {
    if (k == len) {
      p.add(Monomial(exps), 1);
      return;
    }
    for (int v = next_var; v <= m - (len - k - 1); ++v) {
      exps[v - 1] = alpha[k];
      rec(k + 1, v + 1);
      exps[v - 1] = 0;
    }
  };
  rec(0, 1);
  return p;
}

CPoly fundamental_quasisymmetric(const Composition& alpha, int m) {
  CPoly p(m);
  const int n = alpha.size();
  const std::uint64_t strict = alpha.set_mask();
  std::vector<int> exps(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int prev) {
    if (pos == n) {
      p.add(Monomial(exps), 1);
      return;
    }
    const int lo = pos == 0 ? 1 : ((strict >> (pos - 1) & 1) ? prev + 1 : prev);
    for (int v = lo; v <= m; ++v) {
      ++exps[v - 1];
      rec(pos + 1, v);
      --exps[v - 1];
    }
  };
  rec(0, 1);
  return p;
}

}  // namespace

CPoly realize_c(const CGenerator& gen, int m) {
  coverage::touch(Op::RealizeC);
  if (m < 1 || m > kMaxVariables) throw std::invalid_argument("variable count must be in 1..15");
  const int n = gen.degree();
  if (n > kMaxDegree) throw std::invalid_argument("degree exceeds 15");
  switch (gen.kind) {
    case CGenerator::Kind::E:
      return fundamental_quasisymmetric(Composition(std::vector<int>(n, 1)), m);
    case CGenerator::Kind::H:
      return fundamental_quasisymmetric(Composition{n}, m);
    case CGenerator::Kind::P:
      return monomial_quasisymmetric(Composition{n}, m);
    case CGenerator::Kind::M:
      return monomial_quasisymmetric(gen.index, m);
    case CGenerator::Kind::F:
      return fundamental_quasisymmetric(gen.index, m);
    case CGenerator::Kind::SymMonomial: {
      Partition lambda(gen.index);
      std::vector<int> parts(lambda.begin(), lambda.end());
      std::sort(parts.begin(), parts.end());
      CPoly p(m);
      do {
        p.add_scaled(monomial_quasisymmetric(Composition(parts), m), 1);
      } while (std::next_permutation(parts.begin(), parts.end()));
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_symmetric(const CPoly& p) {
  std::map<std::vector<int>, std::size_t> class_sizes;
  for (const auto& [x, c] : p.terms()) {
    auto e = x.exponents(p.m());
    std::sort(e.begin(), e.end(), std::greater<>());
    if (p.coeff(Monomial(e)) != c) return false;
    ++class_sizes[e];
  }
  for (const auto& [e, count] : class_sizes) {
    // Number of distinct rearrangements of e: m! / prod(multiplicity!).
    std::map<int, unsigned long> mult;
    for (int v : e) ++mult[v];
    Integer expected = factorial(e.size());
    for (auto [v, k] : mult) expected /= factorial(k);
    if (expected != count) return false;
  }
  return true;
}

CPoly realize_sym(SymFamily family, const Partition& lambda, int m) {
  switch (family) {
    case SymFamily::M:
      return realize_c({CGenerator::Kind::SymMonomial, lambda.composition()}, m);
    case SymFamily::F:
      return omega(realize_sym(SymFamily::M, lambda, m), m);
    default: {
      const auto kind = family == SymFamily::E   ? CGenerator::Kind::E
                        : family == SymFamily::H ? CGenerator::Kind::H
                                                 : CGenerator::Kind::P;
      CPoly p = CPoly::unit(m);
      for (int part : lambda) p = c_mul(p, realize_c({kind, Composition{part}}, m));
      return p;
    }
  }
}

std::map<Partition, Rational> sym_expand(const CPoly& target, SymFamily family, int m) {
  coverage::touch(Op::SymExpand);
  if (target.m() != m) throw std::invalid_argument("sym_expand: polynomial has a different variable count");
  if (target.terms().empty()) return {};
  const int n = target.terms().begin()->first.degree();
  return LambdaOracle(n, m).expand(target, family);
}

CPoly omega(const CPoly& target, int m) {
  CPoly r(m);
  for (const auto& [lambda, c] : sym_expand(target, SymFamily::E, m))
    r.add_scaled(realize_sym(SymFamily::H, lambda, m), c);
  return r;
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::pair<std::string, Composition> split_generator(std::string_view text) {
  text = trim(text);
  const auto space = text.find(' ');
  if (space == std::string_view::npos) throw std::invalid_argument("generator must look like 'psi 3' or 'ribbon 2,1'");
  return {std::string(text.substr(0, space)), parse_composition(text.substr(space + 1))};
}

int single_index(const std::string& name, const Composition& c) {
  if (c.length() != 1) throw std::invalid_argument("generator '" + name + "' takes a single degree");
  return c[0];
}
}  // namespace

NcGenerator parse_nc_generator(std::string_view text) {
  auto [name, c] = split_generator(text);
  if (name == "ribbon" || name == "r") return NcGenerator::ribbon(c);
  if (name == "h") return NcGenerator::h(single_index(name, c));
  if (name == "e") return NcGenerator::e(single_index(name, c));
  if (name == "psi") return NcGenerator::psi(single_index(name, c));
  if (name == "phi") return NcGenerator::phi(single_index(name, c));
  throw std::invalid_argument("unknown noncommutative generator '" + name + "'");
}

CGenerator parse_c_generator(std::string_view text) {
  auto [name, c] = split_generator(text);
  if (name == "e") return {CGenerator::Kind::E, Composition{single_index(name, c)}};
  if (name == "h") return {CGenerator::Kind::H, Composition{single_index(name, c)}};
  if (name == "p") return {CGenerator::Kind::P, Composition{single_index(name, c)}};
  if (name == "m") return {CGenerator::Kind::SymMonomial, Partition(c).composition()};
  if (name == "M") return {CGenerator::Kind::M, c};
  if (name == "F") return {CGenerator::Kind::F, c};
  throw std::invalid_argument("unknown commutative generator '" + name + "'");
}

std::string to_string(const Word& w) {
  if (w.length() == 0) return "1";
  std::string s;
  for (int a : w.letters()) s += "x" + std::to_string(a);
  return s;
}

namespace {
template <typename Key, typename Render>
std::string render_terms(const std::map<Key, Rational>& terms, Render render) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string body = render(k);
    if (mag != 1)
      s += to_string(mag) + (body == "1" ? "" : " " + body);
    else
      s += body;
    first = false;
  }
  return s;
}
}  // namespace

std::string to_string(const NCPoly& p) {
  return render_terms(p.terms(), [](const Word& w) { return to_string(w); });
}

std::string to_string(const CPoly& p) {
  const int m = p.m();
  return render_terms(p.terms(), [m](const Monomial& x) {
    std::string s;
    for (int v = 1; v <= m; ++v) {
      const int e = x.exponent(v);
      if (e == 0) continue;
      s += "x" + std::to_string(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? std::string("1") : s;
  });
}

}  // namespace nsymkit
