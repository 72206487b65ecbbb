#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cox/ball.hpp"
#include "cox/classify.hpp"
#include "cox/wall.hpp"

namespace cox {

inline constexpr int kOrderIterationCap = 10000;
inline constexpr int kDefaultSubgroupDepth = 8;

// Order of r_m r_{m'}: infinite (encoded 0) iff |B(alpha, beta)| >= 1,
// otherwise the finite rotation order found by iterating on roots.
int order_of_product(const Group& g, const Wall& m, const Wall& mprime);

enum class Certification { Certified, DepthExhausted };

// A reflection subgroup W(M) presented by its canonical (Dyer) generators.
struct ReflectionSubgroup {
  std::vector<Wall> canonical;     // canonical generators, sorted by root
  CoxeterMatrix induced;           // Coxeter matrix over the canonical generators
  Certification certification = Certification::DepthExhausted;
  // For each input wall, a word over canonical-generator indices expressing
  // its reflection (certification evidence).
  std::vector<std::vector<int>> input_expressions;
};

// Canonical generators by pairwise dihedral canonicalization, verified by the
// windowed Dyer criterion; the induced matrix entries are orders of products
// of canonical pairs. `depth` bounds the verification window and the
// membership descents.
ReflectionSubgroup reflection_subgroup(const Group& g, const WallSet& m,
                                       int depth = kDefaultSubgroupDepth);

struct EuclideanTriangle {
  bool is_triangle = false;
  std::string type;  // "(3,3,3)", "(2,4,4)" or "(2,3,6)"
};

// True iff the certified subgroup has exactly three canonical generators and
// its induced off-diagonal multiset is {3,3,3}, {2,4,4} or {2,3,6}.
EuclideanTriangle is_euclidean_triangle(const ReflectionSubgroup& g);

enum class ChainClass { Segment, Ray, Line, NotAChain };

struct ChainKind {
  ChainClass kind = ChainClass::NotAChain;
  std::vector<Wall> ordered;           // inclusion order when a chain
  std::optional<std::pair<Wall, Wall>> witness;  // offending pair otherwise
};

// Finite wall families: Segment with the betweenness order, or NotAChain with
// a witness (an intersecting pair, or an incomparable configuration).
ChainKind chain_kind(const Group& g, const WallSet& p);

// Window-certified classification of an indexed family: Ray when it marches
// off in one direction, Line in two. Only the inspected window is certified.
ChainKind chain_kind_indexed(const Group& g, const std::vector<Wall>& window_ordered,
                             bool extends_left, bool extends_right);

struct ParabolicCoset {
  Word base;               // minimal-length coset representative
  std::vector<int> types;  // T
  bool ball_relative = true;
};

// Smallest parabolic w W_T w^{-1} containing all the reflections, searched
// over base elements in the ball. Minimality is certified relative to the
// searched range.
ParabolicCoset parabolic_closure(const Group& g, const std::vector<Wall>& r, const Ball& ball);

// Does w W_T w^{-1} contain the reflection?
bool parabolic_contains(const Group& g, const ParabolicCoset& p, const Wall& r);

}  // namespace cox
