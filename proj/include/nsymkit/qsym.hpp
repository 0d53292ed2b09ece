#pragma once

#include "nsymkit/graded.hpp"
#include "nsymkit/nsym.hpp"

#include <string_view>

namespace nsymkit {

enum class QSymBasis { M, F, For, QPsi, QPhi };

using QSymElem = GradedElement<QSymBasis>;

inline constexpr QSymBasis kQSymBases[] = {QSymBasis::M, QSymBasis::F, QSymBasis::For, QSymBasis::QPsi,
                                           QSymBasis::QPhi};

QSymElem qconvert(const QSymElem& x, QSymBasis to);
QSymElem qinvolution(const QSymElem& x, AlgebraInvolution kind);

// <F_alpha, r_beta> = 1 iff alpha = beta, extended bilinearly. Zero across degrees.
Rational pair(const QSymElem& q, const NSymElem& ns);

std::string_view basis_tag(QSymBasis b);
QSymBasis parse_qsym_basis(std::string_view tag);

}  // namespace nsymkit
