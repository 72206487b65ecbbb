#pragma once

#include <vector>

#include "cox/classify.hpp"
#include "cox/matrix.hpp"

namespace cox {

struct ComponentContribution {
  std::vector<int> component;
  Classification classification;
  int contribution = 0;
};

struct FlatRankReport {
  int rank = 0;
  std::vector<int> witness;  // maximizing subset T, smallest such in (size, lex) order
  std::vector<ComponentContribution> contributions;
};

// Maximal rank of a free abelian subgroup, maximized over standard subsets:
// an affine component of size k+1 contributes k, an indefinite component
// contributes 1, a spherical component contributes 0.
FlatRankReport flat_rank(const CoxeterMatrix& m);

// The Davis complex is hyperbolic exactly when the group has no Z x Z,
// i.e. flat rank <= 1.
bool is_hyperbolic(const CoxeterMatrix& m);

}  // namespace cox
