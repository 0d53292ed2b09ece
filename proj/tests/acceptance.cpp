// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: nsymkit_acceptance [criterion...]; no arguments runs all twelve.

#include "nsymkit/composition.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/polyreal.hpp"
#include "nsymkit/qsym.hpp"
#include "nsymkit/transmat.hpp"
#include "nsymkit/verify.hpp"
#include "nsymkit/walls.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace nsymkit;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_ms;
  std::function<Outcome()> run;
};

using Terms = std::vector<std::pair<std::vector<int>, Rational>>;

NCPoly from_terms(int m, const Terms& terms) {
  NCPoly p(m);
  for (const auto& [w, c] : terms) p.add(Word(w), c);
  return p;
}

// Lists the failing identity names of a report, misprints first.
std::string failing_names(const Report& r, bool errata) {
  std::set<std::string> names;
  for (const auto& c : r.checks())
    if (!c.passed && c.printed_erratum == errata) names.insert(c.name);
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : "; ") + n;
  return s;
}

Outcome example_reproduction() {
  Outcome o;
  const Composition a{2, 3, 2, 1};
  o.require(reverse(a) == Composition{1, 2, 3, 2}, "reverse");
  o.require(complement(a) == Composition{1, 2, 1, 2, 2}, "complement");
  o.require(transpose(a) == Composition{2, 2, 1, 2, 1}, "transpose");
  o.require(a.length() + complement(a).length() - 1 == 8, "length identity");
  return o;
}

Outcome monomial_goldens() {
  Outcome o;
  const Rational h(-1, 2);
  const Terms psi3 = {
      {{1, 1, 1}, 1},  {{1, 1, 2}, 1},  {{1, 1, 3}, 1},  {{1, 2, 2}, 1},  {{1, 2, 3}, 1},
      {{1, 3, 3}, 1},  {{2, 1, 1}, -1}, {{2, 1, 2}, -1}, {{2, 1, 3}, -1}, {{2, 2, 2}, 1},
      {{2, 2, 3}, 1},  {{2, 3, 3}, 1},  {{3, 1, 1}, -1}, {{3, 1, 2}, -1}, {{3, 1, 3}, -1},
      {{3, 2, 1}, 1},  {{3, 2, 2}, -1}, {{3, 2, 3}, -1}, {{3, 3, 3}, 1},
  };
  const Terms phi3 = {
      {{1, 1, 1}, 1}, {{1, 1, 2}, 1}, {{1, 1, 3}, 1}, {{1, 2, 1}, h}, {{1, 2, 2}, 1}, {{1, 2, 3}, 1},
      {{1, 3, 1}, h}, {{1, 3, 2}, h}, {{1, 3, 3}, 1}, {{2, 1, 1}, h}, {{2, 1, 2}, h}, {{2, 1, 3}, h},
      {{2, 2, 1}, h}, {{2, 2, 2}, 1}, {{2, 2, 3}, 1}, {{2, 3, 1}, h}, {{2, 3, 2}, h}, {{2, 3, 3}, 1},
      {{3, 1, 1}, h}, {{3, 1, 2}, h}, {{3, 1, 3}, h}, {{3, 2, 1}, 1}, {{3, 2, 2}, h}, {{3, 2, 3}, h},
      {{3, 3, 1}, h}, {{3, 3, 2}, h}, {{3, 3, 3}, 1},
  };
  o.require(realize_nc(NcGenerator::psi(3), 3) == from_terms(3, psi3), "psi_3 term list");
  o.require(realize_nc(NcGenerator::phi(3), 3) == from_terms(3, phi3), "phi_3 term list");
  return o;
}

Outcome membership() {
  Outcome o;
  NCPoly squares(2);
  for (int i = 1; i <= 2; ++i) squares.add(Word({i, i}), 1);
  const auto r = is_nsym(squares, 2, 2);
  o.require(!r.member, "sum of squares reported as a member");
  if (r.witness) {
    const auto& [u, v] = *r.witness;
    o.require(u.descent_mask() == v.descent_mask() && squares.coeff(u) != squares.coeff(v), "invalid witness");
  } else {
    o.require(false, "no witness");
  }

  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      o.require(is_nsym(realize_nc(NcGenerator::ribbon(a), n), n, n).member, "r" + to_string(a));
      for (auto kind : {NcGenerator::Kind::H, NcGenerator::Kind::E, NcGenerator::Kind::Psi, NcGenerator::Kind::Phi}) {
        NCPoly p = NCPoly::unit(n);
        for (int part : a) p = nc_mul(p, realize_nc({kind, Composition{part}}, n), n);
        o.require(is_nsym(p, n, n).member, "product basis element " + to_string(a));
      }
    }
  }
  return o;
}

Outcome brick_numbers() {
  Outcome o;
  const auto ts = brick_tabloids({6, 3}, {3, 3, 2, 1});
  Integer total = 0;
  for (const auto& t : ts) total += weight(t);
  o.require(ts.size() == 8, "|B| = " + std::to_string(ts.size()));
  o.require(total == 45, "total weight " + total.get_str());
  o.require(ordered_count({6, 3}, {3, 3, 2, 1}) == 3, "|OB|");
  return o;
}

Outcome wall_numbers() {
  Outcome o;
  const Wall w = make_wall({1, 6, 2, 4}, {1, 1, 3, 2, 2, 3, 1});
  o.require(wall_stat(w, WallStat::Bricks) == 6, "pb");
  o.require(wall_stat(w, WallStat::BrickFactorial) == 12, "fb");
  o.require(indexed_wall_count({2, 4, 3}, {2, 2, 1, 1, 3}) == 4, "indexed wall count");
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      for (auto from : kNSymBases)
        for (auto to : kNSymBases) {
          const auto x = NSymElem::basis_element(from, a);
          o.require(convert(convert(x, to), from) == x, "NSym " + std::string(basis_tag(from)) + to_string(a));
        }
      for (auto from : kQSymBases)
        for (auto to : kQSymBases) {
          const auto x = QSymElem::basis_element(from, a);
          o.require(qconvert(qconvert(x, to), from) == x, "QSym " + std::string(basis_tag(from)) + to_string(a));
        }
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const Report r = verify_oracle(n, 6);
    o.require(r.all_passed(), "n=" + std::to_string(n) + ": " + failing_names(r, false));
  }
  return o;
}

Outcome series_identities() {
  Outcome o;
  const Report r = verify_series(8);
  o.require(r.all_passed(), failing_names(r, false));
  return o;
}

Outcome matrix_suite() {
  Outcome o;
  Report all;
  for (int n = 1; n <= 7; ++n) all.merge(check_identities(n));
  o.require(all.passed(), "identities failing: " + failing_names(all, false));
  o.require(all.all_passed(), "printed forms that do not hold: " + failing_names(all, true) +
                                  " (their corrected forms pass)");
  return o;
}

Outcome wall_and_brick_suite() {
  Outcome o;
  Report walls, bricks;
  for (int n = 1; n <= 8; ++n) walls.merge(verify_wall_theorems(n));
  for (int n = 1; n <= 7; ++n) bricks.merge(verify_brick_theorems(n));
  o.require(walls.passed() && bricks.passed(),
            "equations failing: " + failing_names(walls, false) + failing_names(bricks, false));
  o.require(walls.all_passed() && bricks.all_passed(),
            "printed forms that do not hold: " + failing_names(walls, true) + "; " + failing_names(bricks, true) +
                " (their corrected forms pass)");
  return o;
}

Outcome duality() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_compositions(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const Rational delta = a == b ? 1 : 0;
        const auto q = [&](QSymBasis basis) { return QSymElem::basis_element(basis, a); };
        const auto ns = [&](NSymBasis basis) { return NSymElem::basis_element(basis, b); };
        const std::string at = " at " + to_string(a) + ", " + to_string(b);
        o.require(pair(q(QSymBasis::QPsi), ns(NSymBasis::Psi)) == z_coefficient(a) * delta, "<Psi, psi>" + at);
        o.require(pair(q(QSymBasis::QPhi), ns(NSymBasis::Phi)) == z_coefficient(a) * delta, "<Phi, phi>" + at);
        o.require(pair(q(QSymBasis::M), ns(NSymBasis::H)) == delta, "<M, h>" + at);
        o.require(pair(q(QSymBasis::F), ns(NSymBasis::R)) == delta, "<F, r>" + at);
      }
    }
    o.require(verify_duality(n).all_passed(), "duality suite n=" + std::to_string(n));
  }
  return o;
}

Outcome binomial_lemma() {
  Outcome o;
  for (int n = 0; n <= 25; ++n)
    for (int c = 0; c <= 25; ++c)
      o.require(binomial_partial_sum(n, c) == fraction(n + c + 1, c + 1),
                "n=" + std::to_string(n) + " c=" + std::to_string(c));
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "composition involutions on (2,3,2,1)", 1, example_reproduction},
      {2, "psi_3 and phi_3 monomial expansions", 1000, monomial_goldens},
      {3, "NSym membership counterexample and basis membership", 10000, membership},
      {4, "brick tabloid numbers for (6,3)/(3,3,2,1)", 1000, brick_numbers},
      {5, "wall numbers pb, fb and indexed wall count", 1, wall_numbers},
      {6, "change-of-basis round trips, n <= 8", 60000, round_trips},
      {7, "abstract conversions agree with realizations, n <= 6, m = 6", 120000, oracle_equivalence},
      {8, "generating series identities, degree <= 8", 30000, series_identities},
      {9, "transition matrix identities, n <= 7", 60000, matrix_suite},
      {10, "wall equations n <= 8 and brick equations n <= 7", 120000, wall_and_brick_suite},
      {11, "power sum and unit dualities, n <= 6", 30000, duality},
      {12, "binomial partial sum closed form, n, c <= 25", 1000, binomial_lemma},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      selected.insert(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: " << argv[0] << " [criterion...]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.budget_ms) o.require(false, "over time budget");
    char line[160];
    std::snprintf(line, sizeof line, "criterion %2d %s  %-62s %10.1f ms (budget %.0f ms)", c.id,
                  o.passed ? "PASS" : "FAIL", c.title, ms, c.budget_ms);
    std::cout << line << '\n';
    if (!o.passed) {
      std::cout << "    " << o.detail << '\n';
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
