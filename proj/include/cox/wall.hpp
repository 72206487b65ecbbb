#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cox/ball.hpp"
#include "cox/group.hpp"

namespace cox {

// A wall is the fixed locus of a reflection; it is identified by the positive
// root of that reflection. The canonical word of the reflection (an odd
// palindromic word) is cached alongside.
struct Wall {
  Group::Vec root;  // positive, exact
  Word reflection;  // canonical word of r_m

  friend bool operator==(const Wall& a, const Wall& b) { return root_compare(a.root, b.root) == 0; }
  friend bool operator<(const Wall& a, const Wall& b) { return root_compare(a.root, b.root) < 0; }
};

enum class Side { Inside, Outside, OnWall };

// A half-space: one of the two sides of a wall. sign = +1 names the side
// containing the base chamber.
struct HalfSpace {
  Wall wall;
  int sign = +1;
};

// Ordered duplicate-free set of walls.
class WallSet {
 public:
  WallSet() = default;
  explicit WallSet(std::vector<Wall> walls);

  void insert(Wall w);
  bool contains(const Wall& w) const;
  std::size_t size() const { return walls_.size(); }
  bool empty() const { return walls_.empty(); }
  const Wall& operator[](std::size_t i) const { return walls_[i]; }
  auto begin() const { return walls_.begin(); }
  auto end() const { return walls_.end(); }

  WallSet set_minus(const WallSet& o) const;
  WallSet set_union(const WallSet& o) const;
  bool operator==(const WallSet& o) const;

 private:
  std::vector<Wall> walls_;  // sorted by root order
};

// Wall of a given positive root; derives the reflection word by depth descent.
Wall wall_of_root(const Group& g, Group::Vec root);

// Wall of a reflection given as an arbitrary word; validates that the element
// is a reflection.
Wall wall_of_reflection(const Group& g, const Word& w);

Wall simple_wall(const Group& g, int s);

// All positive roots of depth <= depth (simple roots have depth 0), as walls.
std::vector<Wall> reflections_up_to(const Group& g, int depth,
                                    std::size_t cap = kDefaultBallCap);

// Which side of the half-space the chamber u*c0 lies on. Chambers are never
// on a wall.
Side side_of(const Group& g, const HalfSpace& h, const Word& u);

// Side query for a spherical residue u*W_U: OnWall when the reflection
// stabilizes the coset (then the wall contains the residue's face), otherwise
// the common side of all its chambers.
Side side_of_residue(const Group& g, const HalfSpace& h, const Word& u,
                     const std::vector<int>& types);

// M(u*c0, v*c0): the walls separating the two chambers; its size is the
// gallery distance l(u^{-1} v).
WallSet separating_walls(const Group& g, const Word& u, const Word& v);

// The same walls identified by their positive roots only (no reflection
// words); the cheap core of separating_walls.
std::vector<Group::Vec> separating_wall_roots(const Group& g, const Word& u, const Word& v);

// Roots of the walls crossed by the gallery that starts at u and follows the
// word w, i.e. M(u, u*w) when w is reduced; duplicates are checked.
std::vector<Group::Vec> gallery_wall_roots(const Group& g, const Word& u, const Word& w);

int gallery_distance(const Group& g, const Word& u, const Word& v);

// The ordered chambers of the ShortLex geodesic gallery from u to v,
// including both endpoints.
std::vector<Word> geodesic_gallery(const Group& g, const Word& u, const Word& v);

// A chamber adjacent to the wall (one of the two whose shared panel the wall
// carries).
Word adjacent_chamber(const Group& g, const Wall& w);

// True when the reflections commute (equal walls or orthogonal roots).
bool walls_commute(const Group& g, const Wall& a, const Wall& b);

// True when `sep` separates `x` from `y` (all distinct walls).
bool wall_separates(const Group& g, const Wall& sep, const Wall& x, const Wall& y);

}  // namespace cox
