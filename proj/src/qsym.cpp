#include "nsymkit/qsym.hpp"

#include "nsymkit/blockstats.hpp"
#include "nsymkit/coverage.hpp"

#include <stdexcept>
#include <string>

namespace nsymkit {

using coverage::Op;

std::string_view basis_tag(QSymBasis b) {
  switch (b) {
    case QSymBasis::M: return "M";
    case QSymBasis::F: return "F";
    case QSymBasis::For: return "For";
    case QSymBasis::QPsi: return "Psi";
    case QSymBasis::QPhi: return "Phi";
  }
  throw std::logic_error("unreachable");
}

QSymBasis parse_qsym_basis(std::string_view tag) {
  std::string t(tag);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "m") return QSymBasis::M;
  if (t == "f") return QSymBasis::F;
  if (t == "for") return QSymBasis::For;
  if (t == "psi" || t == "qpsi") return QSymBasis::QPsi;
  if (t == "phi" || t == "qphi") return QSymBasis::QPhi;
  throw std::invalid_argument("unknown QSym basis '" + std::string(tag) + "'");
}

namespace {

bool has_direct_line(QSymBasis from, QSymBasis to) {
  using B = QSymBasis;
  auto power = [](B b) { return b == B::QPsi || b == B::QPhi; };
  if (power(from) && power(to)) return false;
  if ((from == B::F && power(to)) || (power(from) && to == B::F)) return false;
  return true;
}

void expand_direct(QSymBasis from, QSymBasis to, const Composition& alpha, const Rational& c, QSymElem& out) {
  using B = QSymBasis;
  const long n = alpha.size();
  const long la = static_cast<long>(alpha.length());
  auto put = [&](const Composition& beta, const Rational& coef) { out.add(beta, c * coef); };
  auto len = [](const Composition& b) { return static_cast<long>(b.length()); };
  // Lines indexed by coarsenings beta of alpha; alpha is the finer composition in the block statistics.
  auto over_coarsenings = [&](auto&& coef_of) {
    for_each_coarsening(alpha, [&](const Composition& beta) { put(beta, coef_of(beta, block_stats(alpha, beta))); });
  };

  if (from == B::F && to == B::M) {
    for_each_refinement(alpha, [&](const Composition& b) { put(b, 1); });
  } else if (from == B::M && to == B::F) {
    for_each_refinement(alpha, [&](const Composition& b) { put(b, sign_pow(len(b) - la)); });
  } else if (from == B::F && to == B::For) {
    // beta^r refines alpha^t.
    for_each_refinement(transpose(alpha), [&](const Composition& g) { put(reverse(g), 1); });
  } else if (from == B::For && to == B::F) {
    // beta^t refines alpha^r.
    for_each_refinement(reverse(alpha), [&](const Composition& g) { put(transpose(g), sign_pow(len(g) - la)); });
  } else if ((from == B::For && to == B::M) || (from == B::M && to == B::For)) {
    over_coarsenings([&](const Composition&, const BlockStats&) -> Rational { return Rational(sign_pow(la - n)); });
  } else if (from == B::QPsi && to == B::M) {
    const Rational z = z_coefficient(alpha);
    over_coarsenings([&](const Composition&, const BlockStats& s) -> Rational { return z * ratio(1, s.piu); });
  } else if (from == B::M && to == B::QPsi) {
    over_coarsenings([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(la - len(b)) * s.lp, 1) / z_coefficient(b);
    });
  } else if (from == B::QPhi && to == B::M) {
    const Rational z = z_coefficient(alpha);
    over_coarsenings([&](const Composition&, const BlockStats& s) -> Rational { return z * ratio(1, s.sp); });
  } else if (from == B::M && to == B::QPhi) {
    over_coarsenings([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(la - len(b)) * s.prod_outer, s.len) / z_coefficient(b);
    });
  } else if (from == B::QPsi && to == B::For) {
    const Rational z = z_coefficient(alpha);
    over_coarsenings([&](const Composition&, const BlockStats& s) -> Rational { return z * ratio(sign_pow(n - la), s.piu_rev); });
  } else if (from == B::For && to == B::QPsi) {
    over_coarsenings([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(n - la) * s.fp, 1) / z_coefficient(b);
    });
  } else if (from == B::QPhi && to == B::For) {
    const Rational z = z_coefficient(alpha);
    over_coarsenings([&](const Composition&, const BlockStats& s) -> Rational { return z * ratio(sign_pow(n - la), s.sp); });
  } else if (from == B::For && to == B::QPhi) {
    over_coarsenings([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(n - la) * s.prod_outer, s.len) / z_coefficient(b);
    });
  } else {
    throw std::logic_error("no direct change-of-basis line");
  }
}

}  // namespace

QSymElem qconvert(const QSymElem& x, QSymBasis to) {
  coverage::touch(Op::QConvert);
  if (x.basis() == to) return x;
  if (x.degree() > kMaxConversionDegree)
    throw std::invalid_argument("qconvert: degree above " + std::to_string(kMaxConversionDegree));
  QSymElem out(x.degree(), to);
  if (x.degree() == 0) {
    for (const auto& [a, c] : x.terms()) out.add(a, c);
    return out;
  }
  if (!has_direct_line(x.basis(), to)) return qconvert(qconvert(x, QSymBasis::M), to);
  for (const auto& [alpha, c] : x.terms()) expand_direct(x.basis(), to, alpha, c, out);
  return out;
}

QSymElem qinvolution(const QSymElem& x, AlgebraInvolution kind) {
  coverage::touch(Op::QInvolution);
  const QSymElem f = qconvert(x, QSymBasis::F);
  QSymElem image(x.degree(), QSymBasis::F);
  const Involution on_index = index_involution(kind);
  for (const auto& [alpha, c] : f.terms()) image.add(involution(alpha, on_index), c);
  return qconvert(image, x.basis());
}

Rational pair(const QSymElem& q, const NSymElem& ns) {
  coverage::touch(Op::Pair);
  if (q.degree() != ns.degree()) return 0;
  const QSymElem f = qconvert(q, QSymBasis::F);
  const NSymElem r = convert(ns, NSymBasis::R);
  Rational total = 0;
  for (const auto& [alpha, c] : f.terms()) total += c * r.coeff(alpha);
  return total;
}

}  // namespace nsymkit
