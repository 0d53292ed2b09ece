#pragma once

#include "nsymkit/graded.hpp"
#include "nsymkit/report.hpp"

#include <string_view>
#include <vector>

namespace nsymkit {

enum class NSymBasis { R, H, E, Psi, Phi };

using NSymElem = GradedElement<NSymBasis>;

inline constexpr NSymBasis kNSymBases[] = {NSymBasis::R, NSymBasis::H, NSymBasis::E, NSymBasis::Psi,
                                           NSymBasis::Phi};

NSymElem convert(const NSymElem& x, NSymBasis to);
NSymElem mul(const NSymElem& a, const NSymElem& b);
NSymElem apply_involution(const NSymElem& x, AlgebraInvolution kind);

struct RibbonDecomposition {
  std::vector<Composition> blocks;
  Rational psr;  // coefficient of r_alpha in psi_beta
  Rational phr;  // coefficient of r_alpha in phi_beta
};
RibbonDecomposition ribbon_decomposition(const Composition& alpha, const Composition& beta);

Report verify_series(int max_degree);

std::string_view basis_tag(NSymBasis b);
NSymBasis parse_nsym_basis(std::string_view tag);

}  // namespace nsymkit
