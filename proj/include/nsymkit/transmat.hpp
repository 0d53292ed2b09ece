#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/matrix.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/qsym.hpp"
#include "nsymkit/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nsymkit {

inline constexpr int kMaxMatrixDegree = 12;

// Row alpha of M(a,b) lists the coefficients of a_alpha in the b basis; rows and columns in canonical order.
struct TransitionMatrix {
  int n = 0;
  std::vector<Composition> index;
  RationalMatrix entries;
};

TransitionMatrix cob_matrix(NSymBasis from, NSymBasis to, int n);
TransitionMatrix cob_matrix(QSymBasis from, QSymBasis to, int n);

enum class NamedMatrix { K, Eps, Z, JPsi, JRho, JOmega, LPsi, LPhi };
TransitionMatrix named_matrix(NamedMatrix name, int n);
NamedMatrix parse_named_matrix(std::string_view name);

Report check_identities(int n);

std::string to_csv(const TransitionMatrix& m);
std::string to_json(const TransitionMatrix& m);
std::string to_text(const TransitionMatrix& m);

}  // namespace nsymkit
