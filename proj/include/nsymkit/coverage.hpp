#pragma once

#include <string_view>
#include <vector>

namespace nsymkit::coverage {

// Library operations, tracked so a verification run can prove it reached all of them.
enum class Op : unsigned {
  EnumerateCompositions,
  SetOf,
  SetInverse,
  Involution,
  Refines,
  Mobius,
  SortAndZ,
  Stat,
  RefinedStat,
  BinomialPartialSum,
  RealizeNc,
  NcMul,
  NcLinear,
  IsNsym,
  Chi,
  RealizeC,
  SymExpand,
  Convert,
  Mul,
  ApplyInvolution,
  RibbonDecomposition,
  VerifySeries,
  QConvert,
  QInvolution,
  Pair,
  CobMatrix,
  NamedMatrix,
  CheckIdentities,
  MakeWall,
  EnumerateWalls,
  WallStat,
  IndexedWallCount,
  EnumerateIndexedWalls,
  BrickTabloids,
  BrickWeight,
  OrderedCount,
  VerifyWallTheorems,
  VerifyBrickTheorems,
  kCount
};

void touch(Op op) noexcept;
void reset() noexcept;
bool touched(Op op) noexcept;
std::string_view name(Op op);
std::vector<Op> untouched();

}  // namespace nsymkit::coverage
