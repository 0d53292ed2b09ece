#include "nsymkit/verify.hpp"

#include "nsymkit/nsym.hpp"
#include "nsymkit/polyreal.hpp"
#include "nsymkit/qsym.hpp"
#include "nsymkit/transmat.hpp"
#include "nsymkit/walls.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsymkit {

Suite parse_suite(std::string_view name) {
  std::string s(name);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "all") return Suite::All;
  if (s == "series") return Suite::Series;
  if (s == "matrices") return Suite::Matrices;
  if (s == "walls") return Suite::Walls;
  if (s == "bricks") return Suite::Bricks;
  if (s == "duality") return Suite::Duality;
  if (s == "oracle") return Suite::Oracle;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Series: return "series";
    case Suite::Matrices: return "matrices";
    case Suite::Walls: return "walls";
    case Suite::Bricks: return "bricks";
    case Suite::Duality: return "duality";
    case Suite::Oracle: return "oracle";
  }
  throw std::logic_error("unreachable");
}

namespace {

// Accumulates one pass/fail line per identity, keeping the first failure's detail.
class Checker {
 public:
  Checker(Report& report, std::string suite, int n) : report_(report), suite_(std::move(suite)), n_(n) {}
  ~Checker() {
    for (auto& [name, c] : order_) report_.add(std::move(checks_.at(c)));
  }
  void expect(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      order_.emplace_back(name, checks_.size());
      checks_.push_back(Check{suite_, name, n_, true, {}, false});
    }
    Check& c = checks_[it->second];
    if (!ok && c.passed) {
      c.passed = false;
      c.detail = detail();
    }
  }

 private:
  Report& report_;
  std::string suite_;
  int n_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::size_t>> order_;
  std::vector<Check> checks_;
};

std::string tag(NSymBasis b) { return std::string(basis_tag(b)); }
std::string tag(QSymBasis b) { return std::string(basis_tag(b)); }

NcGenerator generator(NSymBasis b, int part) {
  switch (b) {
    case NSymBasis::H: return NcGenerator::h(part);
    case NSymBasis::E: return NcGenerator::e(part);
    case NSymBasis::Psi: return NcGenerator::psi(part);
    case NSymBasis::Phi: return NcGenerator::phi(part);
    case NSymBasis::R: break;
  }
  throw std::logic_error("ribbons are not multiplicative");
}

NCPoly realize(NSymBasis b, const Composition& alpha, int m) {
  const int n = alpha.size();
  if (b == NSymBasis::R) return realize_nc(NcGenerator::ribbon(alpha), m, n);
  NCPoly p = NCPoly::unit(m);
  for (int part : alpha) p = nc_mul(p, realize_nc(generator(b, part), m, n), n);
  return p;
}

// One representative word per descent class: letter i is 1 + #{descents at or after i}.
std::vector<Word> class_representatives(int n) {
  std::vector<Word> reps;
  for (const auto& alpha : enumerate_compositions(n)) {
    const std::uint64_t mask = alpha.set_mask();
    std::vector<int> letters(n);
    for (int i = 1; i <= n; ++i) {
      int count = 1;
      for (int j = i; j < n; ++j)
        if (mask >> (j - 1) & 1) ++count;
      letters[i - 1] = count;
    }
    reps.emplace_back(letters);
  }
  return reps;
}

}  // namespace

Report verify_duality(int n) {
  if (n < 1) throw std::invalid_argument("duality checks need n >= 1");
  Report report;
  {
    Checker check(report, "duality", n);
    const auto comps = enumerate_compositions(n);
    auto q = [](QSymBasis b, const Composition& a) { return QSymElem::basis_element(b, a); };
    auto x = [](NSymBasis b, const Composition& a) { return NSymElem::basis_element(b, a); };
    const std::pair<QSymBasis, NSymBasis> unit_pairs[] = {
        {QSymBasis::M, NSymBasis::H}, {QSymBasis::F, NSymBasis::R}, {QSymBasis::For, NSymBasis::E}};
    const std::pair<QSymBasis, NSymBasis> z_pairs[] = {{QSymBasis::QPsi, NSymBasis::Psi},
                                                       {QSymBasis::QPhi, NSymBasis::Phi}};
    const AlgebraInvolution invs[] = {AlgebraInvolution::Rho, AlgebraInvolution::Psi, AlgebraInvolution::Omega};
    const char* inv_names[] = {"rho", "psi", "omega"};

    for (const auto& a : comps)
      for (const auto& b : comps) {
        for (const auto& [qb, nb] : unit_pairs) {
          const Rational v = pair(q(qb, a), x(nb, b));
          const Rational want = a == b ? 1 : 0;
          check.expect("<" + tag(qb) + "_a, " + tag(nb) + "_b> = [a=b]", v == want, [&] {
            return "a=" + to_string(a) + ", b=" + to_string(b) + ": " + to_string(v);
          });
        }
        for (const auto& [qb, nb] : z_pairs) {
          const Rational v = pair(q(qb, a), x(nb, b));
          const Rational want = a == b ? z_coefficient(a) : Rational(0);
          check.expect("<" + tag(qb) + "_a, " + tag(nb) + "_b> = z_a [a=b]", v == want, [&] {
            return "a=" + to_string(a) + ", b=" + to_string(b) + ": " + to_string(v);
          });
          for (int k = 0; k < 3; ++k) {
            const Rational w = pair(qinvolution(q(qb, a), invs[k]), apply_involution(x(nb, b), invs[k]));
            check.expect(std::string("<") + inv_names[k] + "(" + tag(qb) + "_a), " + inv_names[k] + "(" + tag(nb) +
                             "_b)> = <" + tag(qb) + "_a, " + tag(nb) + "_b>",
                         w == v, [&] { return "a=" + to_string(a) + ", b=" + to_string(b); });
          }
        }
      }

    for (const auto& a : comps) {
      const auto ar = reverse(a);
      const Rational s = sign_pow(n - static_cast<long>(a.length()));
      auto same = [&](const std::string& name, const auto& lhs, const auto& rhs) {
        check.expect(name, lhs == rhs, [&] { return "a=" + to_string(a); });
      };
      const auto H = NSymBasis::H;
      same("psi(h_a) = e_a", apply_involution(x(H, a), AlgebraInvolution::Psi), convert(x(NSymBasis::E, a), H));
      same("rho(h_a) = h_(a^r)", apply_involution(x(H, a), AlgebraInvolution::Rho), x(H, ar));
      same("omega(h_a) = e_(a^r)", apply_involution(x(H, a), AlgebraInvolution::Omega),
           convert(x(NSymBasis::E, ar), H));
      same("rho(phi_a) = phi_(a^r)", apply_involution(x(NSymBasis::Phi, a), AlgebraInvolution::Rho),
           x(NSymBasis::Phi, ar));
      same("psi(phi_a) = (-1)^(n-l(a)) phi_a", apply_involution(x(NSymBasis::Phi, a), AlgebraInvolution::Psi),
           s * x(NSymBasis::Phi, a));
      same("omega(psi_a) = (-1)^(n-l(a)) psi_(a^r)", apply_involution(x(NSymBasis::Psi, a), AlgebraInvolution::Omega),
           s * x(NSymBasis::Psi, ar));
      same("omega(phi_a) = (-1)^(n-l(a)) phi_(a^r)", apply_involution(x(NSymBasis::Phi, a), AlgebraInvolution::Omega),
           s * x(NSymBasis::Phi, ar));
      same("psi(M_a) = For_a", qinvolution(q(QSymBasis::M, a), AlgebraInvolution::Psi),
           qconvert(q(QSymBasis::For, a), QSymBasis::M));
      same("rho(M_a) = M_(a^r)", qinvolution(q(QSymBasis::M, a), AlgebraInvolution::Rho), q(QSymBasis::M, ar));
      same("psi(Phi_a) = (-1)^(n-l(a)) Phi_a", qinvolution(q(QSymBasis::QPhi, a), AlgebraInvolution::Psi),
           s * q(QSymBasis::QPhi, a));
      same("omega(Psi_a) = (-1)^(n-l(a)) Psi_(a^r)", qinvolution(q(QSymBasis::QPsi, a), AlgebraInvolution::Omega),
           s * q(QSymBasis::QPsi, ar));
    }
  }
  return report;
}

Report verify_oracle(int n, int m) {
  if (n < 1) throw std::invalid_argument("oracle checks need n >= 1");
  if (m < n) throw std::invalid_argument("oracle checks need at least as many variables as the degree");
  Report report;
  {
    Checker check(report, "oracle", n);
    const auto comps = enumerate_compositions(n);
    const auto reps = class_representatives(n);
    const std::size_t d = comps.size();

    std::vector<NCPoly> ribbons;
    for (const auto& g : comps) ribbons.push_back(realize(NSymBasis::R, g, m));

    // values[b][i]: coefficients of the realized b_alpha_i on the class representatives.
    std::map<NSymBasis, std::vector<std::vector<Rational>>> values;
    for (NSymBasis b : kNSymBases) {
      auto& rows = values[b];
      for (const auto& a : comps) {
        const NCPoly p = b == NSymBasis::R ? ribbons[rows.size()] : realize(b, a, m);
        const auto mem = is_nsym(p, n, m);
        check.expect("realized " + tag(b) + "_a lies in NSym", mem.member, [&] {
          return "a=" + to_string(a) + ", words " + to_string(mem.witness->first) + " and " +
                 to_string(mem.witness->second);
        });
        const NSymElem in_r = convert(NSymElem::basis_element(b, a), NSymBasis::R);
        std::vector<std::pair<Rational, const NCPoly*>> combo;
        for (const auto& [g, c] : in_r.terms())
          combo.emplace_back(c, &ribbons[static_cast<std::size_t>(
                                    std::lower_bound(comps.begin(), comps.end(), g) - comps.begin())]);
        const NCPoly lin = combo.empty() ? NCPoly(m) : nc_linear(combo);
        check.expect("realized " + tag(b) + "_a = sum_g [r_g]" + tag(b) + "_a realized r_g", lin == p,
                     [&] { return "a=" + to_string(a); });
        std::vector<Rational> v;
        for (const Word& w : reps) v.push_back(p.coeff(w));
        rows.push_back(std::move(v));
      }
    }
    for (NSymBasis from : kNSymBases)
      for (NSymBasis to : kNSymBases) {
        if (from == to) continue;
        for (std::size_t i = 0; i < d; ++i) {
          const NSymElem y = convert(NSymElem::basis_element(from, comps[i]), to);
          std::vector<Rational> v(d);
          for (const auto& [g, c] : y.terms()) {
            const auto& row =
                values[to][static_cast<std::size_t>(std::lower_bound(comps.begin(), comps.end(), g) - comps.begin())];
            for (std::size_t k = 0; k < d; ++k) v[k] += c * row[k];
          }
          check.expect("realized " + tag(from) + "_a = realized expansion in " + tag(to), v == values[from][i],
                       [&] { return "a=" + to_string(comps[i]); });
        }
      }

    // Products: mul against nc_mul of realizations, on ribbons of complementary degrees.
    for (int i = 1; i < n; ++i)
      for (const auto& a : enumerate_compositions(i))
        for (const auto& b : enumerate_compositions(n - i)) {
          const NSymElem prod = mul(NSymElem::basis_element(NSymBasis::R, a), NSymElem::basis_element(NSymBasis::R, b));
          const NCPoly real = nc_mul(realize(NSymBasis::R, a, m), realize(NSymBasis::R, b, m), n);
          std::vector<std::pair<Rational, const NCPoly*>> combo;
          for (const auto& [g, c] : prod.terms())
            combo.emplace_back(c, &ribbons[static_cast<std::size_t>(
                                      std::lower_bound(comps.begin(), comps.end(), g) - comps.begin())]);
          check.expect("realized r_a r_b = realized r_(a.b) + r_(a|b)", nc_linear(combo) == real,
                       [&] { return "a=" + to_string(a) + ", b=" + to_string(b); });
        }

    for (const auto& a : comps)
      for (const auto& b : comps) {
        if (!is_refinement(a, b)) continue;
        const auto rd = ribbon_decomposition(a, b);
        const Rational psr = convert(NSymElem::basis_element(NSymBasis::Psi, b), NSymBasis::R).coeff(a);
        const Rational phr = convert(NSymElem::basis_element(NSymBasis::Phi, b), NSymBasis::R).coeff(a);
        check.expect("ribbon decomposition gives [r_a]psi_b and [r_a]phi_b", rd.psr == psr && rd.phr == phr,
                     [&] { return "a=" + to_string(a) + ", b=" + to_string(b); });
      }

    // Commutative images.
    for (const auto& a : comps) {
      std::vector<int> sorted(a.begin(), a.end());
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      const Partition lambda{Composition(sorted)};
      check.expect("chi(h_a) = h_sort(a)", chi(realize(NSymBasis::H, a, m)) == realize_sym(SymFamily::H, lambda, m),
                   [&] { return "a=" + to_string(a); });
      check.expect("chi(e_a) = e_sort(a)", chi(realize(NSymBasis::E, a, m)) == realize_sym(SymFamily::E, lambda, m),
                   [&] { return "a=" + to_string(a); });
    }
    const std::map<Partition, Rational> pn{{Partition{n}, Rational(1)}};
    check.expect("chi(psi_n) = p_n", sym_expand(chi(realize(NSymBasis::Psi, Composition{n}, m)), SymFamily::P, m) == pn,
                 [] { return std::string("expansion differs"); });
    check.expect("chi(phi_n) = p_n", sym_expand(chi(realize(NSymBasis::Phi, Composition{n}, m)), SymFamily::P, m) == pn,
                 [] { return std::string("expansion differs"); });

    // QSym: M and F realized as quasisymmetric polynomials.
    std::vector<CPoly> mono, fund;
    for (const auto& a : comps) {
      mono.push_back(realize_c({CGenerator::Kind::M, a}, m));
      fund.push_back(realize_c({CGenerator::Kind::F, a}, m));
    }
    auto expand = [&](const QSymElem& y, const std::vector<CPoly>& basis) {
      CPoly out(m);
      for (const auto& [g, c] : y.terms())
        out.add_scaled(basis[static_cast<std::size_t>(std::lower_bound(comps.begin(), comps.end(), g) - comps.begin())], c);
      return out;
    };
    for (std::size_t i = 0; i < d; ++i) {
      check.expect("realized F_a = realized expansion in M",
                   expand(qconvert(QSymElem::basis_element(QSymBasis::F, comps[i]), QSymBasis::M), mono) == fund[i],
                   [&] { return "a=" + to_string(comps[i]); });
      check.expect("realized M_a = realized expansion in F",
                   expand(qconvert(QSymElem::basis_element(QSymBasis::M, comps[i]), QSymBasis::F), fund) == mono[i],
                   [&] { return "a=" + to_string(comps[i]); });
    }

    // For restricted to Lambda: summing For_a over the rearrangements of l gives the forgotten function f_l.
    std::map<Partition, CPoly> forgotten;
    for (std::size_t i = 0; i < d; ++i) {
      const CPoly p = expand(qconvert(QSymElem::basis_element(QSymBasis::For, comps[i]), QSymBasis::M), mono);
      auto it = forgotten.try_emplace(sort_and_z(comps[i]).sorted, m).first;
      it->second.add_scaled(p, 1);
    }
    for (const auto& [lambda, p] : forgotten)
      check.expect("sum_{sort(a)=l} For_a = f_l", p == realize_sym(SymFamily::F, lambda, m),
                   [&] { return "l=" + to_string(lambda); });

    // Composition statistics through their generating-function identities.
    Rational sum_sp = 0, sum_piu = 0;
    std::map<Partition, Rational> by_type;
    for (const auto& b : comps) {
      sum_sp += 1 / stat(b, Stat::SpecialProduct);
      sum_piu += 1 / stat(b, Stat::PartialSumProduct);
      by_type[sort_and_z(b).sorted] += 1 / stat(b, Stat::PartialSumProduct);
    }
    check.expect("sum_{b |= n} 1/sp(b) = 1", sum_sp == 1, [&] { return to_string(sum_sp); });
    check.expect("sum_{b |= n} 1/pi_u(b) = 1", sum_piu == 1, [&] { return to_string(sum_piu); });
    for (const auto& [lambda, v] : by_type)
      check.expect("sum over rearrangements b of l of 1/pi_u(b) = 1/z_l",
                   v == 1 / sort_and_z(lambda.composition()).z, [&] { return "l=" + to_string(lambda); });
    for (int c = 0; c <= n; ++c)
      check.expect("binomial partial sum (n,c) = (n+c+1)/(c+1)",
                   binomial_partial_sum(n, c) == fraction(n + c + 1, c + 1),
                   [&] { return "c=" + std::to_string(c); });
    const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t t = 0; t <= full; ++t)
      for (std::uint64_t s = t;; s = (s - 1) & t) {
        Rational total = 0;
        for (std::uint64_t u = t;; u = (u - 1) & t) {
          if ((u & s) == s) total += mobius(SubsetOfRange::from_mask(n, t), SubsetOfRange::from_mask(n, u));
          if (u == 0) break;
        }
        check.expect("sum_{S <= U <= T} mu(T,U) = [S=T]", total == (s == t ? 1 : 0),
                     [&] { return to_string(SubsetOfRange::from_mask(n, s)); });
        if (s == 0) break;
      }
    for (const auto& a : comps) {
      const Composition back = set_inverse(set_of(a));
      check.expect("set^-1(set(a)) = a and involutions square to the identity",
                   back == a && reverse(reverse(a)) == a && complement(complement(a)) == a &&
                       transpose(transpose(a)) == a && refines(a, a).has_value(),
                   [&] { return "a=" + to_string(a); });
    }
  }
  return report;
}

Report run_suite(Suite s, int n_max, int m) {
  if (n_max < 1) throw std::invalid_argument("--n must be at least 1");
  Report report;
  const bool all = s == Suite::All;
  if (all || s == Suite::Series) report.merge(verify_series(n_max));
  for (int n = 1; n <= n_max; ++n) {
    if (all || s == Suite::Matrices) report.merge(check_identities(n));
    if (all || s == Suite::Walls) report.merge(verify_wall_theorems(n));
    if (all || s == Suite::Bricks) report.merge(verify_brick_theorems(n));
    if (all || s == Suite::Duality) report.merge(verify_duality(n));
    if (all || s == Suite::Oracle) report.merge(verify_oracle(n, m));
  }
  return report;
}

}  // namespace nsymkit
