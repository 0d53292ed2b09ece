#include "nsymkit/transmat.hpp"

#include "nsymkit/coverage.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nsymkit {

namespace {

void check_degree(int n) {
  if (n < 1) throw std::invalid_argument("matrix degree must be at least 1");
  if (n > kMaxMatrixDegree)
    throw std::invalid_argument("matrix degree " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxMatrixDegree));
}

template <typename Basis, typename Convert>
TransitionMatrix build(Basis from, Basis to, int n, Convert&& conv) {
  check_degree(n);
  TransitionMatrix t{n, enumerate_compositions(n), {}};
  const std::size_t d = t.index.size();
  t.entries = RationalMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto x = conv(GradedElement<Basis>::basis_element(from, t.index[i]), to);
    for (const auto& [beta, c] : x.terms()) {
      auto it = std::lower_bound(t.index.begin(), t.index.end(), beta);
      t.entries(i, static_cast<std::size_t>(it - t.index.begin())) = c;
    }
  }
  return t;
}

RationalMatrix permutation(const std::vector<Composition>& idx, Involution kind) {
  RationalMatrix p(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto it = std::lower_bound(idx.begin(), idx.end(), involution(idx[i], kind));
    p(i, static_cast<std::size_t>(it - idx.begin())) = 1;
  }
  return p;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

TransitionMatrix cob_matrix(NSymBasis from, NSymBasis to, int n) {
  coverage::touch(coverage::Op::CobMatrix);
  return build(from, to, n, [](const NSymElem& x, NSymBasis b) { return convert(x, b); });
}

TransitionMatrix cob_matrix(QSymBasis from, QSymBasis to, int n) {
  coverage::touch(coverage::Op::CobMatrix);
  return build(from, to, n, [](const QSymElem& x, QSymBasis b) { return qconvert(x, b); });
}

TransitionMatrix named_matrix(NamedMatrix name, int n) {
  coverage::touch(coverage::Op::NamedMatrix);
  check_degree(n);
  TransitionMatrix t{n, enumerate_compositions(n), {}};
  const auto& idx = t.index;
  const std::size_t d = idx.size();
  switch (name) {
    case NamedMatrix::K:
      t.entries = RationalMatrix(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (is_refinement(idx[j], idx[i])) t.entries(i, j) = 1;
      break;
    case NamedMatrix::Eps: {
      std::vector<Rational> v;
      for (const auto& a : idx) v.emplace_back(sign_pow(n - static_cast<long>(a.length())));
      t.entries = RationalMatrix::diagonal(v);
      break;
    }
    case NamedMatrix::Z: {
      std::vector<Rational> v;
      for (const auto& a : idx) v.push_back(z_coefficient(a));
      t.entries = RationalMatrix::diagonal(v);
      break;
    }
    case NamedMatrix::JPsi: t.entries = permutation(idx, Involution::Complement); break;
    case NamedMatrix::JRho: t.entries = permutation(idx, Involution::Reverse); break;
    case NamedMatrix::JOmega: t.entries = permutation(idx, Involution::Transpose); break;
    case NamedMatrix::LPsi: t.entries = cob_matrix(QSymBasis::QPsi, QSymBasis::M, n).entries; break;
    case NamedMatrix::LPhi: t.entries = cob_matrix(QSymBasis::QPhi, QSymBasis::M, n).entries; break;
  }
  return t;
}

NamedMatrix parse_named_matrix(std::string_view name) {
  const std::string s = lower(name);
  if (s == "k") return NamedMatrix::K;
  if (s == "eps" || s == "epsilon") return NamedMatrix::Eps;
  if (s == "z") return NamedMatrix::Z;
  if (s == "j_psi" || s == "jpsi") return NamedMatrix::JPsi;
  if (s == "j_rho" || s == "jrho") return NamedMatrix::JRho;
  if (s == "j_omega" || s == "jomega") return NamedMatrix::JOmega;
  if (s == "l_psi" || s == "lpsi") return NamedMatrix::LPsi;
  if (s == "l_phi" || s == "lphi") return NamedMatrix::LPhi;
  throw std::invalid_argument("unknown matrix name '" + std::string(name) + "'");
}

Report check_identities(int n) {
  coverage::touch(coverage::Op::CheckIdentities);
  check_degree(n);
  Report report;
  const auto idx = enumerate_compositions(n);
  const std::size_t d = idx.size();

  auto add = [&](const std::string& name, const RationalMatrix& lhs, const RationalMatrix& rhs,
                 bool erratum = false) {
    Check c{"matrices", name, n, lhs == rhs, {}, erratum};
    if (!c.passed) {
      for (std::size_t i = 0; i < d && c.detail.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (lhs(i, j) != rhs(i, j)) {
            c.detail = "entry (" + to_string(idx[i]) + ", " + to_string(idx[j]) + "): " + to_string(lhs(i, j)) +
                       " vs " + to_string(rhs(i, j));
            break;
          }
    }
    report.add(std::move(c));
  };

  const RationalMatrix K = named_matrix(NamedMatrix::K, n).entries;
  const RationalMatrix Kt = K.transpose();
  const RationalMatrix eps = named_matrix(NamedMatrix::Eps, n).entries;
  const RationalMatrix zinv = inverse(named_matrix(NamedMatrix::Z, n).entries);
  const RationalMatrix Jpsi = named_matrix(NamedMatrix::JPsi, n).entries;
  const RationalMatrix Jrho = named_matrix(NamedMatrix::JRho, n).entries;
  const RationalMatrix Jomega = named_matrix(NamedMatrix::JOmega, n).entries;
  const RationalMatrix Lpsi = named_matrix(NamedMatrix::LPsi, n).entries;
  const RationalMatrix Lphi = named_matrix(NamedMatrix::LPhi, n).entries;
  const RationalMatrix I = RationalMatrix::identity(d);
  const RationalMatrix eKe = eps * K * eps;
  const RationalMatrix eKte = eps * Kt * eps;

  std::map<std::pair<NSymBasis, NSymBasis>, RationalMatrix> nm;
  std::map<std::pair<QSymBasis, QSymBasis>, RationalMatrix> qm;
  auto N = [&](NSymBasis a, NSymBasis b) -> const RationalMatrix& {
    auto it = nm.find({a, b});
    if (it == nm.end()) it = nm.emplace(std::pair{a, b}, cob_matrix(a, b, n).entries).first;
    return it->second;
  };
  auto Q = [&](QSymBasis a, QSymBasis b) -> const RationalMatrix& {
    auto it = qm.find({a, b});
    if (it == qm.end()) it = qm.emplace(std::pair{a, b}, cob_matrix(a, b, n).entries).first;
    return it->second;
  };
  using NB = NSymBasis;
  using QB = QSymBasis;

  add("K = M(F,M)", K, Q(QB::F, QB::M));
  add("K^-1 = eps K eps", inverse(K), eKe);
  add("M(M,F) = eps K eps", Q(QB::M, QB::F), eKe);
  add("M(r,h) = eps K^t eps", N(NB::R, NB::H), eKte);
  add("M(h,r) = K^t", N(NB::H, NB::R), Kt);

  add("M(M,For) = eps K eps J_psi K", Q(QB::M, QB::For), eKe * Jpsi * K);
  add("M(For,M) = eps K eps J_psi K", Q(QB::For, QB::M), eKe * Jpsi * K);
  add("M(For,F) = eps K eps J_psi", Q(QB::For, QB::F), eKe * Jpsi);
  add("M(F,For) = J_psi K", Q(QB::F, QB::For), Jpsi * K);
  add("M(h,e) = K^t J_psi eps K^t eps", N(NB::H, NB::E), Kt * Jpsi * eKte);
  add("M(e,h) = K^t J_psi eps K^t eps", N(NB::E, NB::H), Kt * Jpsi * eKte);
  add("M(e,r) = K^t J_psi", N(NB::E, NB::R), Kt * Jpsi);
  add("M(r,e) = J_psi eps K^t eps", N(NB::R, NB::E), Jpsi * eKte);

  add("M(phi,For) = eps L_phi", Q(QB::QPhi, QB::For), eps * Lphi);
  add("M(psi,For) = eps L_psi J_rho", Q(QB::QPsi, QB::For), eps * Lpsi * Jrho, true);
  add("M(psi,For) = eps J_rho L_psi J_rho", Q(QB::QPsi, QB::For), eps * Jrho * Lpsi * Jrho);
  add("M(phi,F) = L_phi eps K eps", Q(QB::QPhi, QB::F), Lphi * eKe);
  add("M(psi,F) = L_psi eps K eps", Q(QB::QPsi, QB::F), Lpsi * eKe);

  const RationalMatrix Lphit = Lphi.transpose();
  const RationalMatrix Lpsit = Lpsi.transpose();
  add("M(h,phi) = z^-1 L_phi^t", N(NB::H, NB::Phi), zinv * Lphit, true);
  add("M(h,phi) = L_phi^t z^-1", N(NB::H, NB::Phi), Lphit * zinv);
  add("M(h,psi) = z^-1 L_psi^t", N(NB::H, NB::Psi), zinv * Lpsit, true);
  add("M(h,psi) = L_psi^t z^-1", N(NB::H, NB::Psi), Lpsit * zinv);
  add("M(e,phi) = eps z^-1 L_phi^t", N(NB::E, NB::Phi), eps * zinv * Lphit, true);
  add("M(e,phi) = L_phi^t z^-1 eps", N(NB::E, NB::Phi), Lphit * zinv * eps);
  add("M(e,psi) = eps z^-1 J_rho L_psi^t", N(NB::E, NB::Psi), eps * zinv * Jrho * Lpsit, true);
  add("M(e,psi) = J_rho L_psi^t J_rho z^-1 eps", N(NB::E, NB::Psi), Jrho * Lpsit * Jrho * zinv * eps);
  add("M(r,phi) = z^-1 eps K^t eps L_phi^t", N(NB::R, NB::Phi), zinv * eKte * Lphit, true);
  add("M(r,phi) = z^-1 L_phi eps K eps", N(NB::R, NB::Phi), zinv * Lphi * eKe, true);
  add("M(r,phi) = eps K^t eps L_phi^t z^-1", N(NB::R, NB::Phi), eKte * Lphit * zinv);
  add("M(r,psi) = z^-1 eps K^t eps L_psi^t", N(NB::R, NB::Psi), zinv * eKte * Lpsit, true);
  add("M(r,psi) = eps K^t eps L_psi^t z^-1", N(NB::R, NB::Psi), eKte * Lpsit * zinv);

  add("M(F,M) = M(h,r)^t", Q(QB::F, QB::M), N(NB::H, NB::R).transpose());
  add("M(M,F) = M(r,h)^t", Q(QB::M, QB::F), N(NB::R, NB::H).transpose());
  add("M(For,M) = M(h,e)^t", Q(QB::For, QB::M), N(NB::H, NB::E).transpose());
  add("M(phi,psi) = L_phi L_psi^-1", Q(QB::QPhi, QB::QPsi), Lphi * inverse(Lpsi));

  add("M(e,r) = M(h,r) J_psi", N(NB::E, NB::R), N(NB::H, NB::R) * Jpsi);
  add("M(For,F) = M(M,F) J_psi", Q(QB::For, QB::F), Q(QB::M, QB::F) * Jpsi);

  const std::pair<const char*, const RationalMatrix*> js[] = {
      {"J_psi", &Jpsi}, {"J_rho", &Jrho}, {"J_omega", &Jomega}};
  for (const auto& [name, J] : js) {
    add(std::string(name) + "^2 = I", *J * *J, I);
    add(std::string(name) + "^t = " + name, J->transpose(), *J);
  }
  RationalMatrix anti(d, d);
  for (std::size_t i = 0; i < d; ++i) anti(i, d - 1 - i) = 1;
  add("J_psi is antidiagonal", Jpsi, anti);

  for (NB a : kNSymBases)
    for (NB b : kNSymBases)
      if (a < b)
        add("M(" + std::string(basis_tag(a)) + "," + std::string(basis_tag(b)) + ") M(" +
                std::string(basis_tag(b)) + "," + std::string(basis_tag(a)) + ") = I",
            N(a, b) * N(b, a), I);
  for (QB a : kQSymBases)
    for (QB b : kQSymBases)
      if (a < b)
        add("M(" + std::string(basis_tag(a)) + "," + std::string(basis_tag(b)) + ") M(" +
                std::string(basis_tag(b)) + "," + std::string(basis_tag(a)) + ") = I",
            Q(a, b) * Q(b, a), I);
  if (n <= 6) {
    for (NB a : kNSymBases)
      for (NB b : kNSymBases)
        for (NB c : kNSymBases)
          if (a != b && b != c && a != c)
            add("M(" + std::string(basis_tag(a)) + "," + std::string(basis_tag(b)) + ") M(" +
                    std::string(basis_tag(b)) + "," + std::string(basis_tag(c)) + ") = M(" +
                    std::string(basis_tag(a)) + "," + std::string(basis_tag(c)) + ")",
                N(a, b) * N(b, c), N(a, c));
    for (QB a : kQSymBases)
      for (QB b : kQSymBases)
        for (QB c : kQSymBases)
          if (a != b && b != c && a != c)
            add("M(" + std::string(basis_tag(a)) + "," + std::string(basis_tag(b)) + ") M(" +
                    std::string(basis_tag(b)) + "," + std::string(basis_tag(c)) + ") = M(" +
                    std::string(basis_tag(a)) + "," + std::string(basis_tag(c)) + ")",
                Q(a, b) * Q(b, c), Q(a, c));
  }
  return report;
}

std::string to_csv(const TransitionMatrix& m) {
  std::ostringstream out;
  out << "index";
  for (const auto& c : m.index) out << ",\"" << to_string(c) << '"';
  out << '\n';
  for (std::size_t i = 0; i < m.index.size(); ++i) {
    out << '"' << to_string(m.index[i]) << '"';
    for (std::size_t j = 0; j < m.index.size(); ++j) out << ',' << to_string(m.entries(i, j));
    out << '\n';
  }
  return out.str();
}

std::string to_json(const TransitionMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  auto labels = nlohmann::json::array();
  for (const auto& c : m.index) labels.push_back(to_string(c));
  j["rows"] = labels;
  j["cols"] = labels;
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.index.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.index.size(); ++k) row.push_back(to_string(m.entries(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump(2);
}

std::string to_text(const TransitionMatrix& m) {
  const std::size_t d = m.index.size();
  std::vector<std::vector<std::string>> cells(d + 1, std::vector<std::string>(d + 1));
  for (std::size_t j = 0; j < d; ++j) cells[0][j + 1] = to_string(m.index[j]);
  for (std::size_t i = 0; i < d; ++i) {
    cells[i + 1][0] = to_string(m.index[i]);
    for (std::size_t j = 0; j < d; ++j) cells[i + 1][j + 1] = to_string(m.entries(i, j));
  }
  std::vector<std::size_t> width(d + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j <= d; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= d; ++j) {
      if (j) out << "  ";
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace nsymkit
