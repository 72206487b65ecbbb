#pragma once

#include "cox/ball.hpp"
#include "cox/wall.hpp"

namespace cox {

struct HullResult {
  std::vector<Word> chambers;  // sorted in (length, ShortLex) order
  bool ball_relative = true;   // the true hull may exceed the ball
  int radius = 0;
};

// Combinatorial convex hull of a chamber set, relative to the ball: keep the
// chambers that lie on the same side as C of every ball wall that does not
// separate C from itself.
HullResult convex_hull(const Group& g, const std::vector<Word>& c, const Ball& ball);

struct SplitResult {
  Word z;
  WallSet m;     // = separating_walls(y, z)
  WallSet mbar;  // = separating_walls(x, z)
};

// Constructive splitting: given a subset M of M(x,y) whose reflections
// commute with those of the complement, produce z in Conv{x,y} with
// M(y,z) = M and M(x,z) = M(x,y) \ M. Rejects inputs violating the
// commutation hypothesis, naming an offending pair.
SplitResult split_convex(const Group& g, const Word& x, const Word& y, const WallSet& m);

}  // namespace cox
