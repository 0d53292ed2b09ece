#include "nsymkit/walls.hpp"

#include "nsymkit/coverage.hpp"
#include "nsymkit/graded.hpp"
#include "nsymkit/lambda.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/qsym.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nsymkit {

Wall make_wall(const Composition& shape, const Composition& type) {
  coverage::touch(coverage::Op::MakeWall);
  if (shape.size() != type.size())
    throw std::invalid_argument("wall of shape " + to_string(shape) + " and type " + to_string(type) +
                                ": sizes differ");
  Wall w{shape, type, {}};
  std::size_t j = 0;
  for (std::size_t i = 0; i < shape.length(); ++i) {
    std::vector<int> course;
    int filled = 0;
    while (filled < shape[i]) {
      filled += type[j];
      course.push_back(type[j++]);
    }
    if (filled != shape[i])
      throw std::invalid_argument("type " + to_string(type) + " does not refine shape " + to_string(shape) +
                                  ": course " + std::to_string(i + 1) + " of length " + std::to_string(shape[i]) +
                                  " is overrun by a brick of length " + std::to_string(course.back()));
    w.courses.emplace_back(std::move(course));
  }
  return w;
}

std::vector<Wall> enumerate_walls(WallMode mode, const Composition& c) {
  coverage::touch(coverage::Op::EnumerateWalls);
  std::vector<Wall> out;
  if (mode == WallMode::OfShape)
    for_each_refinement(c, [&](const Composition& beta) { out.push_back(make_wall(c, beta)); });
  else
    for_each_coarsening(c, [&](const Composition& alpha) { out.push_back(make_wall(alpha, c)); });
  return out;
}

Rational wall_stat(const Wall& w, WallStat kind) {
  coverage::touch(coverage::Op::WallStat);
  switch (kind) {
    case WallStat::LastPart: return refined_stat(w.type, w.shape, RefinedStat::LastPart);
    case WallStat::FirstPart: return refined_stat(w.type, w.shape, RefinedStat::FirstPart);
    case WallStat::Bricks: return refined_stat(w.type, w.shape, RefinedStat::Length);
    case WallStat::BrickFactorial: return refined_stat(w.type, w.shape, RefinedStat::LengthFactorial);
  }
  throw std::logic_error("unreachable");
}

namespace {

Integer multiplicity_factorials(const Composition& c) {
  std::map<int, unsigned long> mult;
  for (int p : c) ++mult[p];
  Integer r = 1;
  for (const auto& [part, m] : mult) r *= factorial(m);
  return r;
}

}  // namespace

Integer indexed_wall_count(const Composition& shape, const Composition& type) {
  coverage::touch(coverage::Op::IndexedWallCount);
  make_wall(shape, type);
  return multiplicity_factorials(type);
}

std::vector<IndexedWall> enumerate_indexed_walls(const Composition& shape, const Composition& type) {
  coverage::touch(coverage::Op::EnumerateIndexedWalls);
  const Wall w = make_wall(shape, type);
  // Bricks of size s take the labels after those of all smaller sizes.
  std::map<int, std::vector<int>> labels_of_size;
  std::vector<int> sorted(type.begin(), type.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) labels_of_size[sorted[i]].push_back(static_cast<int>(i) + 1);

  std::vector<IndexedWall> out;
  std::vector<int> flat(type.length());
  std::map<int, std::vector<bool>> used;
  for (const auto& [s, ls] : labels_of_size) used[s].assign(ls.size(), false);

  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == flat.size()) {
      IndexedWall iw{w, {}};
      std::size_t k = 0;
      for (const auto& course : w.courses) {
        std::vector<int> ls;
        for (std::size_t b = 0; b < course.length(); ++b) ls.push_back(flat[k++]);
        iw.labels.push_back(std::move(ls));
      }
      out.push_back(std::move(iw));
      return;
    }
    const int s = type[j];
    auto& u = used[s];
    for (std::size_t t = 0; t < u.size(); ++t) {
      if (u[t]) continue;
      u[t] = true;
      flat[j] = labels_of_size[s][t];
      rec(j + 1);
      u[t] = false;
    }
  };
  rec(0);
  return out;
}

std::vector<BrickTabloid> brick_tabloids(const Partition& shape, const Partition& type) {
  coverage::touch(coverage::Op::BrickTabloids);
  if (shape.size() != type.size())
    throw std::invalid_argument("brick tabloids need |shape| = |type|, got " + to_string(shape) + " and " +
                                to_string(type));
  std::map<int, int> remaining;
  for (int p : type) ++remaining[p];
  std::vector<BrickTabloid> out;
  std::vector<std::vector<int>> rows(shape.length());

  std::function<void(std::size_t, int)> fill = [&](std::size_t row, int left) {
    if (row == shape.length()) {
      out.push_back({shape, type, rows});
      return;
    }
    if (left == 0) {
      fill(row + 1, row + 1 < shape.length() ? shape[row + 1] : 0);
      return;
    }
    for (auto& [size, count] : remaining) {
      if (size > left) break;
      if (count == 0) continue;
      --count;
      rows[row].push_back(size);
      fill(row, left - size);
      rows[row].pop_back();
      ++count;
    }
  };
  if (shape.length() == 0)
    out.push_back({shape, type, {}});
  else
    fill(0, shape[0]);
  return out;
}

Integer weight(const BrickTabloid& t) {
  coverage::touch(coverage::Op::BrickWeight);
  Integer w = 1;
  for (const auto& row : t.rows) w *= row.back();
  return w;
}

Integer ordered_count(const Partition& shape, const Partition& type) {
  coverage::touch(coverage::Op::OrderedCount);
  if (shape.size() != type.size())
    throw std::invalid_argument("ordered brick tabloids need |shape| = |type|, got " + to_string(shape) + " and " +
                                to_string(type));
  // A labelled tabloid is determined by which row each labelled brick lands in.
  std::vector<int> bricks(type.begin(), type.end());
  std::sort(bricks.begin(), bricks.end(), std::greater<>());
  std::vector<int> left(shape.begin(), shape.end());
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == bricks.size()) {
      ++count;
      return;
    }
    for (auto& l : left) {
      if (l < bricks[j]) continue;
      l -= bricks[j];
      rec(j + 1);
      l += bricks[j];
    }
  };
  rec(0);
  return count;
}

namespace {

struct WallEquation {
  std::string name;
  bool nsym;
  int from, to;  // basis enum values
  WallMode mode;
  bool complement_index;  // enumerate walls of the complement of alpha
  // Adds the contribution of wall w to the expansion of the alpha-th left-hand element.
  std::function<void(const Wall&, const Composition& alpha, std::map<Composition, Rational>&)> term;
  bool erratum = false;
};

long len(const Composition& c) { return static_cast<long>(c.length()); }

Rational prod_parts(const Composition& c) {
  Rational r = 1;
  for (int p : c) r *= p;
  return r;
}

void acc(std::map<Composition, Rational>& m, const Composition& key, const Rational& c) {
  auto& slot = m[key];
  slot += c;
  if (sgn(slot) == 0) m.erase(key);
}

std::vector<WallEquation> wall_equations() {
  using NB = NSymBasis;
  using QB = QSymBasis;
  const auto N = [](NB b) { return static_cast<int>(b); };
  const auto Q = [](QB b) { return static_cast<int>(b); };
  using M = std::map<Composition, Rational>;
  std::vector<WallEquation> eqs;
  auto lp = [](const Wall& w) { return wall_stat(w, WallStat::LastPart); };
  auto fp = [](const Wall& w) { return wall_stat(w, WallStat::FirstPart); };
  auto pb = [](const Wall& w) { return wall_stat(w, WallStat::Bricks); };
  auto fb = [](const Wall& w) { return wall_stat(w, WallStat::BrickFactorial); };
  auto iw = [](const Wall& w) { return Rational(indexed_wall_count(w.shape, w.type)); };
  auto nn = [](const Wall& w) { return static_cast<long>(w.shape.size()); };

  eqs.push_back({"e_a = sum_{sh(W)=a} (-1)^(l(type)-n) h_type", true, N(NB::E), N(NB::H), WallMode::OfShape,
                 false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - nn(w)));
                 }});
  eqs.push_back({"h_a = sum_{sh(W)=a} (-1)^(l(type)-n) e_type", true, N(NB::H), N(NB::E), WallMode::OfShape,
                 false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - nn(w)));
                 }});
  eqs.push_back({"For_a = sum_{type(W)=a} (-1)^(l(a)-n) M_sh", false, Q(QB::For), Q(QB::M), WallMode::OfType,
                 false, [=](const Wall& w, const Composition& a, M& m) {
                   acc(m, w.shape, sign_pow(len(a) - nn(w)));
                 }});
  eqs.push_back({"M_a = sum_{type(W)=a} (-1)^(l(a)-n) For_sh", false, Q(QB::M), Q(QB::For), WallMode::OfType,
                 false, [=](const Wall& w, const Composition& a, M& m) {
                   acc(m, w.shape, sign_pow(len(a) - nn(w)));
                 }});
  eqs.push_back({"h_a = sum_{type(W)=a} r_sh", true, N(NB::H), N(NB::R), WallMode::OfType, false,
                 [](const Wall& w, const Composition&, M& m) { acc(m, w.shape, 1); }});
  eqs.push_back({"r_a = sum_{type(W)=a} (-1)^(l(sh)-l(type)) h_sh", true, N(NB::R), N(NB::H), WallMode::OfType,
                 false, [](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(len(w.shape) - len(w.type)));
                 }});
  eqs.push_back({"e_a = sum_{type(W)=a} r_(sh^c)", true, N(NB::E), N(NB::R), WallMode::OfType, false,
                 [](const Wall& w, const Composition&, M& m) { acc(m, complement(w.shape), 1); }});
  eqs.push_back({"r_a = sum_{type(W)=a^c} (-1)^(l(sh)-l(type)) e_sh", true, N(NB::R), N(NB::E),
                 WallMode::OfType, true, [](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(len(w.shape) - len(w.type)));
                 }});
  eqs.push_back({"F_a = sum_{sh(W)=a} M_type", false, Q(QB::F), Q(QB::M), WallMode::OfShape, false,
                 [](const Wall& w, const Composition&, M& m) { acc(m, w.type, 1); }});
  eqs.push_back({"M_a = sum_{sh(W)=a} (-1)^(l(type)-l(sh)) F_type", false, Q(QB::M), Q(QB::F),
                 WallMode::OfShape, false, [](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - len(w.shape)));
                 }});
  eqs.push_back({"F_a = sum_{sh(W)=a^c} For_type", false, Q(QB::F), Q(QB::For), WallMode::OfShape, true,
                 [](const Wall& w, const Composition&, M& m) { acc(m, w.type, 1); }});
  eqs.push_back({"For_a = sum_{sh(W)=a} (-1)^(l(type)-l(sh)) F_(type^c)", false, Q(QB::For), Q(QB::F),
                 WallMode::OfShape, false, [](const Wall& w, const Composition&, M& m) {
                   acc(m, complement(w.type), sign_pow(len(w.type) - len(w.shape)));
                 }});

  eqs.push_back({"psi_a = sum_{sh(W)=a} (-1)^(l(type)-l(sh)) lp(W) h_type", true, N(NB::Psi), N(NB::H),
                 WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - len(w.shape)) * lp(w));
                 }});
  eqs.push_back({"psi_a = sum_{sh(W)=a} (-1)^(l(type)-l(sh)) fp(W) e_type", true, N(NB::Psi), N(NB::E),
                 WallMode::OfShape, false,
                 [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - len(w.shape)) * fp(w));
                 },
                 true});
  eqs.push_back({"psi_a = sum_{sh(W)=a} (-1)^(n-l(type)) fp(W) e_type", true, N(NB::Psi), N(NB::E),
                 WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(nn(w) - len(w.type)) * fp(w));
                 }});
  eqs.push_back({"M_a = sum_{type(W)=a} (-1)^(l(a)-l(sh)) lp(W) Psi_sh / z_sh", false, Q(QB::M), Q(QB::QPsi),
                 WallMode::OfType, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(len(w.type) - len(w.shape)) * lp(w) / z_coefficient(w.shape));
                 }});
  eqs.push_back({"For_a = sum_{type(W)=a} (-1)^(l(a)-l(sh)) fp(W) Psi_sh / z_sh", false, Q(QB::For),
                 Q(QB::QPsi), WallMode::OfType, false,
                 [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(len(w.type) - len(w.shape)) * fp(w) / z_coefficient(w.shape));
                 },
                 true});
  eqs.push_back({"For_a = sum_{type(W)=a} (-1)^(n-l(a)) fp(W) Psi_sh / z_sh", false, Q(QB::For), Q(QB::QPsi),
                 WallMode::OfType, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(nn(w) - len(w.type)) * fp(w) / z_coefficient(w.shape));
                 }});
  eqs.push_back({"phi_a = sum_{sh(W)=a} (-1)^(l(type)-l(sh)) prod(sh)/pb(W) h_type", true, N(NB::Phi),
                 N(NB::H), WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(len(w.type) - len(w.shape)) * prod_parts(w.shape) / pb(w));
                 }});
  eqs.push_back({"phi_a = sum_{sh(W)=a} (-1)^(n-l(type)) prod(sh)/pb(W) e_type", true, N(NB::Phi), N(NB::E),
                 WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(nn(w) - len(w.type)) * prod_parts(w.shape) / pb(w));
                 }});
  eqs.push_back({"M_a = sum_{type(W)=a} (-1)^(l(a)-l(sh)) prod(sh)/pb(W) Phi_sh / z_sh", false, Q(QB::M),
                 Q(QB::QPhi), WallMode::OfType, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape,
                       sign_pow(len(w.type) - len(w.shape)) * prod_parts(w.shape) / (pb(w) * z_coefficient(w.shape)));
                 }});
  eqs.push_back({"For_a = sum_{type(W)=a} (-1)^(n-l(a)) prod(sh)/pb(W) Phi_sh / z_sh", false, Q(QB::For),
                 Q(QB::QPhi), WallMode::OfType, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape,
                       sign_pow(nn(w) - len(w.type)) * prod_parts(w.shape) / (pb(w) * z_coefficient(w.shape)));
                 }});

  // Sums over indexed walls: every wall of type b carries m_1(b)! m_2(b)! ... indexings.
  eqs.push_back({"h_a = sum_{IW: sh=a} 1/fb(W) phi_type / z_type", true, N(NB::H), N(NB::Phi),
                 WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, iw(w) / (fb(w) * z_coefficient(w.type)));
                 }});
  eqs.push_back({"e_a = sum_{IW: sh=a} (-1)^(n-l(type)) 1/fb(W) phi_type / z_type", true, N(NB::E),
                 N(NB::Phi), WallMode::OfShape, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.type, sign_pow(nn(w) - len(w.type)) * iw(w) / (fb(w) * z_coefficient(w.type)));
                 }});
  eqs.push_back({"Phi_a = sum_{IW: type=a} 1/fb(W) M_sh", false, Q(QB::QPhi), Q(QB::M), WallMode::OfType, false,
                 [=](const Wall& w, const Composition&, M& m) { acc(m, w.shape, iw(w) / fb(w)); }});
  eqs.push_back({"Phi_a = sum_{IW: type=a} (-1)^(n-l(a)) 1/fb(W) For_sh", false, Q(QB::QPhi), Q(QB::For),
                 WallMode::OfType, false, [=](const Wall& w, const Composition&, M& m) {
                   acc(m, w.shape, sign_pow(nn(w) - len(w.type)) * iw(w) / fb(w));
                 }});
  return eqs;
}

}  // namespace

Report verify_wall_theorems(int n) {
  coverage::touch(coverage::Op::VerifyWallTheorems);
  if (n < 1) throw std::invalid_argument("wall verification needs n >= 1");
  Report report;
  const auto comps = enumerate_compositions(n);
  for (const auto& eq : wall_equations()) {
    Check c{"walls", eq.name, n, true, {}, eq.erratum};
    for (const auto& alpha : comps) {
      std::map<Composition, Rational> rhs;
      const Composition key = eq.complement_index ? complement(alpha) : alpha;
      for (const auto& w : enumerate_walls(eq.mode, key)) eq.term(w, alpha, rhs);
      std::map<Composition, Rational> expected;
      if (eq.nsym)
        expected = convert(NSymElem::basis_element(static_cast<NSymBasis>(eq.from), alpha),
                           static_cast<NSymBasis>(eq.to))
                       .terms();
      else
        expected = qconvert(QSymElem::basis_element(static_cast<QSymBasis>(eq.from), alpha),
                            static_cast<QSymBasis>(eq.to))
                       .terms();
      if (rhs != expected) {
        c.passed = false;
        for (const auto& beta : comps) {
          auto get = [&](const std::map<Composition, Rational>& m) {
            auto it = m.find(beta);
            return it == m.end() ? Rational(0) : it->second;
          };
          if (get(rhs) != get(expected)) {
            c.detail = "a=" + to_string(alpha) + ", coefficient at " + to_string(beta) + ": walls give " +
                       to_string(get(rhs)) + ", conversion gives " + to_string(get(expected));
            break;
          }
        }
        break;
      }
    }
    report.add(std::move(c));
  }

  Check count{"walls", "|walls of shape a| = prod_i 2^(a_i - 1)", n, true, {}, false};
  Check indexed{"walls", "indexed_wall_count = number of indexed walls", n, true, {}, false};
  for (const auto& alpha : comps) {
    const auto ws = enumerate_walls(WallMode::OfShape, alpha);
    if (count.passed && ws.size() != (std::size_t{1} << (n - static_cast<int>(alpha.length())))) {
      count.passed = false;
      count.detail = "a=" + to_string(alpha) + ": " + std::to_string(ws.size()) + " walls";
    }
    // Enumeration is factorial in the multiplicities; the closed form is checked on small degrees only.
    if (n > 6) continue;
    for (const auto& w : ws)
      if (indexed.passed && indexed_wall_count(w.shape, w.type) !=
                                static_cast<long>(enumerate_indexed_walls(w.shape, w.type).size())) {
        indexed.passed = false;
        indexed.detail = "shape " + to_string(w.shape) + ", type " + to_string(w.type);
      }
  }
  report.add(std::move(count));
  if (n <= 6) report.add(std::move(indexed));
  return report;
}

namespace {

struct BrickEquation {
  std::string name;
  SymFamily from, to;
  // Coefficient of to_mu in from_lambda.
  std::function<Rational(std::size_t l, std::size_t u)> coeff;
  bool erratum = false;
};

}  // namespace

Report verify_brick_theorems(int n) {
  coverage::touch(coverage::Op::VerifyBrickTheorems);
  if (n < 1) throw std::invalid_argument("brick verification needs n >= 1");
  const LambdaOracle oracle(n, n);
  const auto& parts = oracle.partitions();
  const std::size_t d = parts.size();

  // B[l][u] = |B_l^u| (shape l, type u), W = total weight, OB = ordered count.
  std::vector<std::vector<Rational>> B(d, std::vector<Rational>(d)), W = B, OB = B;
  std::vector<Rational> z(d);
  std::vector<long> len(d);
  for (std::size_t i = 0; i < d; ++i) {
    z[i] = z_coefficient(parts[i].composition());
    len[i] = static_cast<long>(parts[i].length());
    for (std::size_t j = 0; j < d; ++j) {
      const auto ts = brick_tabloids(parts[i], parts[j]);
      B[i][j] = static_cast<long>(ts.size());
      for (const auto& t : ts) W[i][j] += Rational(weight(t));
      OB[i][j] = Rational(ordered_count(parts[i], parts[j]));
    }
  }
  auto sg = [](long k) { return Rational(sign_pow(k)); };
  const long N = n;
  using F = SymFamily;
  const std::vector<BrickEquation> eqs = {
      {"e_l = sum_u (-1)^(n-l(u)) |B_l^u| h_u", F::E, F::H,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[u]) * B[l][u]; }},
      {"h_l = sum_u (-1)^(n-l(u)) |B_l^u| e_u", F::H, F::E,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[u]) * B[l][u]; }},
      {"m_l = sum_u (-1)^(n-l(l)) |B_u^l| f_u", F::M, F::F,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[l]) * B[u][l]; }},
      {"f_l = sum_u (-1)^(n-l(l)) |B_u^l| m_u", F::F, F::M,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[l]) * B[u][l]; }},
      {"p_l = sum_u (-1)^(n-l(u)) w(B_l^u) e_u", F::P, F::E,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[u]) * W[l][u]; }},
      {"p_l = sum_u (-1)^(l(l)-l(u)) w(B_l^u) h_u", F::P, F::H,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(len[l] - len[u]) * W[l][u]; }},
      {"f_l = sum_u (-1)^(n-l(l)) w(B_u^l) p_u / z_u", F::F, F::P,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[l]) * W[u][l] / z[u]; }},
      {"m_l = sum_u (-1)^(l(l)-l(u)) w(B_l^u) p_u / z_u", F::M, F::P,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(len[l] - len[u]) * W[l][u] / z[u]; }, true},
      {"m_l = sum_u (-1)^(l(l)-l(u)) w(B_u^l) p_u / z_u", F::M, F::P,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(len[l] - len[u]) * W[u][l] / z[u]; }},
      {"p_l = sum_u |OB_u^l| m_u", F::P, F::M, [&](std::size_t l, std::size_t u) -> Rational { return OB[u][l]; }},
      {"p_l = sum_u (-1)^(n-l(l)) |OB_u^l| f_u", F::P, F::F,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[l]) * OB[u][l]; }},
      {"h_l = sum_u |OB_l^u| p_u / z_u", F::H, F::P,
       [&](std::size_t l, std::size_t u) -> Rational { return OB[l][u] / z[u]; }},
      {"e_l = sum_u (-1)^(n-l(u)) |OB_l^u| p_u / z_u", F::E, F::P,
       [&](std::size_t l, std::size_t u) -> Rational { return sg(N - len[u]) * OB[l][u] / z[u]; }},
  };

  Report report;
  for (const auto& eq : eqs) {
    const RationalMatrix t = oracle.transition(eq.from, eq.to);
    Check c{"bricks", eq.name, n, true, {}, eq.erratum};
    for (std::size_t l = 0; l < d && c.passed; ++l)
      for (std::size_t u = 0; u < d; ++u) {
        const Rational v = eq.coeff(l, u);
        if (v != t(l, u)) {
          c.passed = false;
          c.detail = "l=" + to_string(parts[l]) + ", u=" + to_string(parts[u]) + ": tabloids give " + to_string(v) +
                     ", oracle gives " + to_string(t(l, u));
          break;
        }
      }
    report.add(std::move(c));
  }
  return report;
}

std::string render(const Wall& w) {
  std::ostringstream out;
  for (auto it = w.courses.rbegin(); it != w.courses.rend(); ++it) {
    for (int b : *it) out << '[' << b << ']';
    out << '\n';
  }
  return out.str();
}

std::string render(const IndexedWall& w) {
  std::ostringstream out;
  for (std::size_t i = w.wall.courses.size(); i-- > 0;) {
    const auto& course = w.wall.courses[i];
    for (std::size_t b = 0; b < course.length(); ++b) out << '[' << course[b] << '#' << w.labels[i][b] << ']';
    out << '\n';
  }
  return out.str();
}

std::string render(const BrickTabloid& t) {
  std::ostringstream out;
  for (const auto& row : t.rows) {
    for (int b : row) out << '[' << b << ']';
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Wall& w) {
  nlohmann::ordered_json j;
  j["shape"] = w.shape.parts();
  j["type"] = w.type.parts();
  auto courses = nlohmann::json::array();
  for (const auto& c : w.courses) courses.push_back(c.parts());
  j["courses"] = courses;
  j["stats"] = {{"lp", to_string(wall_stat(w, WallStat::LastPart))},
                {"fp", to_string(wall_stat(w, WallStat::FirstPart))},
                {"pb", to_string(wall_stat(w, WallStat::Bricks))},
                {"fb", to_string(wall_stat(w, WallStat::BrickFactorial))}};
  return j.dump();
}

std::string to_json(const BrickTabloid& t) {
  nlohmann::ordered_json j;
  j["shape"] = t.shape.composition().parts();
  j["type"] = t.type.composition().parts();
  j["rows"] = t.rows;
  j["weight"] = weight(t).get_str();
  return j.dump();
}

}  // namespace nsymkit
