#pragma once

#include "nsymkit/composition.hpp"
#include "nsymkit/rational.hpp"
#include "nsymkit/report.hpp"

#include <string>
#include <vector>

namespace nsymkit {

// The type-wall of a given shape: course i holds the block of type whose parts sum to shape_i.
struct Wall {
  Composition shape;
  Composition type;
  std::vector<Composition> courses;
};

// Throws std::invalid_argument naming the first course that cannot be filled.
Wall make_wall(const Composition& shape, const Composition& type);

enum class WallMode { OfShape, OfType };
// OfShape: every wall of shape c, one per refinement. OfType: every wall of type c, one per coarsening.
std::vector<Wall> enumerate_walls(WallMode mode, const Composition& c);

enum class WallStat { LastPart, FirstPart, Bricks, BrickFactorial };
Rational wall_stat(const Wall& w, WallStat kind);

// Bricks labelled 1..l(type) in order of increasing size; labels[i] runs parallel to courses[i].
struct IndexedWall {
  Wall wall;
  std::vector<std::vector<int>> labels;
};

Integer indexed_wall_count(const Composition& shape, const Composition& type);
std::vector<IndexedWall> enumerate_indexed_walls(const Composition& shape, const Composition& type);

// Rows of the shape, each an ordered sequence of brick lengths; equal bricks are indistinguishable.
struct BrickTabloid {
  Partition shape;
  Partition type;
  std::vector<std::vector<int>> rows;
};

std::vector<BrickTabloid> brick_tabloids(const Partition& shape, const Partition& type);
// Product of the rightmost brick length in each row.
Integer weight(const BrickTabloid& t);
// Tabloids with bricks labelled smallest-first, labels increasing along each row.
Integer ordered_count(const Partition& shape, const Partition& type);

Report verify_wall_theorems(int n);
Report verify_brick_theorems(int n);

std::string render(const Wall& w);
std::string render(const IndexedWall& w);
std::string render(const BrickTabloid& t);
std::string to_json(const Wall& w);
std::string to_json(const BrickTabloid& t);

}  // namespace nsymkit
