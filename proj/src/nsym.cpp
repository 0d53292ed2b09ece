#include "nsymkit/nsym.hpp"

#include "nsymkit/blockstats.hpp"
#include "nsymkit/coverage.hpp"

#include <stdexcept>
#include <string>

namespace nsymkit {

using coverage::Op;

std::string_view basis_tag(NSymBasis b) {
  switch (b) {
    case NSymBasis::R: return "r";
    case NSymBasis::H: return "h";
    case NSymBasis::E: return "e";
    case NSymBasis::Psi: return "psi";
    case NSymBasis::Phi: return "phi";
  }
  throw std::logic_error("unreachable");
}

NSymBasis parse_nsym_basis(std::string_view tag) {
  std::string t(tag);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "r" || t == "ribbon") return NSymBasis::R;
  if (t == "h") return NSymBasis::H;
  if (t == "e") return NSymBasis::E;
  if (t == "psi") return NSymBasis::Psi;
  if (t == "phi") return NSymBasis::Phi;
  throw std::invalid_argument("unknown NSym basis '" + std::string(tag) + "'");
}

RibbonDecomposition ribbon_decomposition(const Composition& alpha, const Composition& beta) {
  coverage::touch(Op::RibbonDecomposition);
  if (alpha.size() != beta.size()) throw std::invalid_argument("ribbon_decomposition: size mismatch");
  const int n = alpha.size();
  const Composition gamma = Composition::from_mask(n, alpha.set_mask() | beta.set_mask());
  RibbonDecomposition rd{*refines(gamma, beta), 1, 1};
  for (std::size_t j = 0; j < rd.blocks.size(); ++j) {
    const auto& block = rd.blocks[j];
    const long len = static_cast<long>(block.length());
    // Coefficient of r_block in psi_{beta_j} and phi_{beta_j}.
    rd.psr *= is_hook(block) ? sign_pow(len - 1) : 0;
    rd.phr *= Rational(sign_pow(len - 1), binomial(beta[j] - 1, len - 1));
  }
  rd.psr.canonicalize();
  rd.phr.canonicalize();
  return rd;
}

namespace {

bool has_direct_line(NSymBasis from, NSymBasis to) {
  if (from == NSymBasis::R) return to == NSymBasis::H || to == NSymBasis::E;
  if ((from == NSymBasis::Psi || from == NSymBasis::Phi) && (to == NSymBasis::Psi || to == NSymBasis::Phi))
    return false;
  return true;
}

// Adds c * (from_alpha expanded in to) into out, using the closed-form change-of-basis lines.
void expand_direct(NSymBasis from, NSymBasis to, const Composition& alpha, const Rational& c, NSymElem& out) {
  const long n = alpha.size();
  const long la = static_cast<long>(alpha.length());
  auto put = [&](const Composition& beta, const Rational& coef) { out.add(beta, c * coef); };
  auto over_refinements = [&](auto&& coef_of) {
    for_each_refinement(alpha, [&](const Composition& beta) { put(beta, coef_of(beta, block_stats(beta, alpha))); });
  };
  auto len = [](const Composition& b) { return static_cast<long>(b.length()); };

  using B = NSymBasis;
  if (from == B::H && to == B::E) {
    over_refinements([&](const Composition& b, const BlockStats&) -> Rational { return Rational(sign_pow(n - len(b))); });
  } else if (from == B::E && to == B::H) {
    over_refinements([&](const Composition& b, const BlockStats&) -> Rational { return Rational(sign_pow(n - len(b))); });
  } else if (from == B::H && to == B::R) {
    for_each_coarsening(alpha, [&](const Composition& b) { put(b, 1); });
  } else if (from == B::R && to == B::H) {
    for_each_coarsening(alpha, [&](const Composition& b) { put(b, sign_pow(la - len(b))); });
  } else if (from == B::E && to == B::R) {
    // beta^t coarser than alpha^r.
    for_each_coarsening(reverse(alpha), [&](const Composition& g) { put(transpose(g), 1); });
  } else if (from == B::R && to == B::E) {
    // beta^r coarser than alpha^t.
    const Composition at = transpose(alpha);
    const long lat = static_cast<long>(at.length());
    for_each_coarsening(at, [&](const Composition& g) { put(reverse(g), sign_pow(lat - len(g))); });
  } else if (from == B::H && to == B::Psi) {
    over_refinements([](const Composition&, const BlockStats& s) -> Rational { return ratio(1, s.piu); });
  } else if (from == B::Psi && to == B::H) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational { return ratio(sign_pow(len(b) - la) * s.lp, 1); });
  } else if (from == B::H && to == B::Phi) {
    over_refinements([](const Composition&, const BlockStats& s) -> Rational { return ratio(1, s.sp); });
  } else if (from == B::Phi && to == B::H) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(len(b) - la) * s.prod_outer, s.len);
    });
  } else if (from == B::E && to == B::Psi) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational { return ratio(sign_pow(n - len(b)), s.piu_rev); });
  } else if (from == B::Psi && to == B::E) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational { return ratio(sign_pow(n - len(b)) * s.fp, 1); });
  } else if (from == B::E && to == B::Phi) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational { return ratio(sign_pow(n - len(b)), s.sp); });
  } else if (from == B::Phi && to == B::E) {
    over_refinements([&](const Composition& b, const BlockStats& s) -> Rational {
      return ratio(sign_pow(n - len(b)) * s.prod_outer, s.len);
    });
  } else if ((from == B::Psi || from == B::Phi) && to == B::R) {
    const std::uint64_t count = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Composition beta = Composition::from_mask(static_cast<int>(n), mask);
      const auto rd = ribbon_decomposition(beta, alpha);
      put(beta, from == B::Psi ? rd.psr : rd.phr);
    }
  } else {
    throw std::logic_error("no direct change-of-basis line");
  }
}

}  // namespace

NSymElem convert(const NSymElem& x, NSymBasis to) {
  coverage::touch(Op::Convert);
  if (x.basis() == to) return x;
  if (x.degree() > kMaxConversionDegree)
    throw std::invalid_argument("convert: degree above " + std::to_string(kMaxConversionDegree));
  NSymElem out(x.degree(), to);
  if (x.degree() == 0) {
    for (const auto& [a, c] : x.terms()) out.add(a, c);
    return out;
  }
  if (!has_direct_line(x.basis(), to)) return convert(convert(x, NSymBasis::H), to);
  for (const auto& [alpha, c] : x.terms()) expand_direct(x.basis(), to, alpha, c, out);
  return out;
}

namespace {
NSymElem ribbon_product(const NSymElem& a, const NSymElem& b) {
  NSymElem out(a.degree() + b.degree(), NSymBasis::R);
  for (const auto& [alpha, x] : a.terms())
    for (const auto& [beta, y] : b.terms()) {
      const Rational c = x * y;
      if (alpha.empty() || beta.empty()) {
        out.add(concat(alpha, beta), c);
        continue;
      }
      out.add(concat(alpha, beta), c);
      out.add(near_concat(alpha, beta), c);
    }
  return out;
}
}  // namespace

NSymElem mul(const NSymElem& a, const NSymElem& b) {
  coverage::touch(Op::Mul);
  const NSymElem bb = convert(b, a.basis());
  if (a.basis() == NSymBasis::R) return ribbon_product(a, bb);
  NSymElem out(a.degree() + b.degree(), a.basis());
  for (const auto& [alpha, x] : a.terms())
    for (const auto& [beta, y] : bb.terms()) out.add(concat(alpha, beta), x * y);
  return out;
}

NSymElem apply_involution(const NSymElem& x, AlgebraInvolution kind) {
  coverage::touch(Op::ApplyInvolution);
  const NSymElem r = convert(x, NSymBasis::R);
  NSymElem image(x.degree(), NSymBasis::R);
  const Involution on_index = index_involution(kind);
  for (const auto& [alpha, c] : r.terms()) image.add(involution(alpha, on_index), c);
  return convert(image, x.basis());
}

namespace {

using Series = std::vector<NSymElem>;  // degree-indexed, ribbon basis

NSymElem ribbon_generator(NSymBasis b, int n) {
  return convert(NSymElem::basis_element(b, n == 0 ? Composition() : Composition{n}), NSymBasis::R);
}

Series series_mul(const Series& a, const Series& b, int max_degree) {
  Series out;
  for (int d = 0; d <= max_degree; ++d) out.emplace_back(d, NSymBasis::R);
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += mul(a[i], b[j]);
  return out;
}

std::string first_difference(const NSymElem& lhs, const NSymElem& rhs) {
  const NSymElem diff = lhs - rhs;
  if (diff.is_zero()) return {};
  const auto& [alpha, c] = *diff.terms().begin();
  return "coefficient of r" + to_string(alpha) + " differs by " + to_string(c);
}

}  // namespace

Report verify_series(int max_degree) {
  coverage::touch(Op::VerifySeries);
  if (max_degree < 1) throw std::invalid_argument("verify_series needs N >= 1");
  const int N = max_degree;
  Series h, e, psi, phi;
  for (int d = 0; d <= N; ++d) {
    h.push_back(ribbon_generator(NSymBasis::H, d));
    e.push_back(ribbon_generator(NSymBasis::E, d));
    psi.push_back(d == 0 ? NSymElem(0, NSymBasis::R) : ribbon_generator(NSymBasis::Psi, d));
    phi.push_back(d == 0 ? NSymElem(0, NSymBasis::R) : ribbon_generator(NSymBasis::Phi, d));
  }

  Report report;
  auto record = [&](const std::string& name, int n, const NSymElem& lhs, const NSymElem& rhs) {
    const std::string diff = first_difference(lhs, rhs);
    report.add({"series", name, n, diff.empty(), diff});
  };

  // E(-t)H(t) = 1 = H(t)E(-t), degree by degree.
  for (int n = 1; n <= N; ++n) {
    NSymElem eh(n, NSymBasis::R), he(n, NSymBasis::R);
    for (int i = 0; i <= n; ++i) {
      eh += Rational(sign_pow(i)) * mul(e[i], h[n - i]);
      he += Rational(sign_pow(i)) * mul(h[n - i], e[i]);
    }
    record("sum_i (-1)^i e_i h_(n-i) = 0", n, eh, NSymElem(n, NSymBasis::R));
    record("sum_i (-1)^i h_(n-i) e_i = 0", n, he, NSymElem(n, NSymBasis::R));
  }

  for (int n = 1; n <= N; ++n) {
    NSymElem lhs(n, NSymBasis::R);
    for (int i = 0; i < n; ++i) lhs += mul(h[i], psi[n - i]);
    record("sum_{i<n} h_i psi_(n-i) = n h_n", n, lhs, Rational(n) * h[n]);
  }

  // exp(X) with X = sum_k phi_k t^k / k, truncated at degree N.
  Series x;
  x.emplace_back(0, NSymBasis::R);
  for (int k = 1; k <= N; ++k) x.push_back(Rational(1, k) * phi[k]);
  Series power;
  power.push_back(h[0]);
  for (int d = 1; d <= N; ++d) power.emplace_back(d, NSymBasis::R);
  Series exp_x = power;
  for (int j = 1; j <= N; ++j) {
    power = series_mul(power, x, N);
    Rational inv_fact(1, factorial(j));
    for (int d = 0; d <= N; ++d) exp_x[d] += inv_fact * power[d];
  }
  for (int n = 1; n <= N; ++n) record("[t^n] exp(sum_k phi_k t^k / k) = h_n", n, exp_x[n], h[n]);

  // log(1 + X) with X = sum_{k>=1} h_k t^k.
  Series xh;
  xh.emplace_back(0, NSymBasis::R);
  for (int k = 1; k <= N; ++k) xh.push_back(h[k]);
  Series log_h;
  for (int d = 0; d <= N; ++d) log_h.emplace_back(d, NSymBasis::R);
  power = xh;
  for (int j = 1; j <= N; ++j) {
    const Rational c(sign_pow(j + 1), j);
    for (int d = 0; d <= N; ++d) log_h[d] += c * power[d];
    power = series_mul(power, xh, N);
  }
  for (int n = 1; n <= N; ++n) record("[t^n] log(1 + sum_k h_k t^k) = phi_n / n", n, log_h[n], Rational(1, n) * phi[n]);

  // d/dt H(t) = H(t) psi'(t) with psi(t) = sum_k psi_k t^k / k; the t^(n-1) coefficients have degree n.
  for (int n = 1; n <= N; ++n) {
    NSymElem rhs(n, NSymBasis::R);
    for (int i = 0; i < n; ++i) rhs += mul(h[i], psi[n - i]);
    record("[t^(n-1)] dH/dt = H(t) psi'(t)", n, Rational(n) * h[n], rhs);
  }

  return report;
}

}  // namespace nsymkit
