#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cox/flat_rank.hpp"
#include "cox/subgroup.hpp"

namespace cox {

// A standard affine-parabolic flat F = w * |W_T|_0: a coset representative
// together with a subset T all of whose diagram components are affine.
struct StandardFlat {
  Word base;
  std::vector<int> type_set;  // T, sorted
};

// Validates the affineness invariant and returns the flat with its component
// decomposition and dimension (sum of |C| - 1).
StandardFlat make_standard_flat(const Group& g, Word base, std::vector<int> type_set);
int flat_dimension(const Group& g, const StandardFlat& f);

// Walls separating chambers of the flat, window-relative: the base-conjugates
// of the W_T reflections up to the window depth.
WallSet flat_walls(const Group& g, const StandardFlat& f, int window);

// Index of the component of T carrying the wall's reflection; throws
// precondition_error when the wall does not belong to M(F).
int flat_component_of(const Group& g, const StandardFlat& f, const Wall& w);

// F-parallelism for standard flats: equal walls, or walls of the same
// component whose reflections generate an infinite dihedral group.
bool f_parallel(const Group& g, const StandardFlat& f, const Wall& m, const Wall& mprime);

struct ParallelClassReport {
  Wall pivot;
  std::vector<Wall> members;  // chain-ordered within the window
  int component = 0;
  ChainClass chain = ChainClass::Segment;
};

// All window walls globally parallel to the pivot, in chain order.
ParallelClassReport parallel_class(const Group& g, const StandardFlat& f, const Wall& mu,
                                   int window);

// The walls whose parallel class extends to a Euclidean triangle subgroup by
// one further wall of M(F): on standard flats, exactly the walls of the
// affine components of size >= 3.
WallSet m_eucl(const Group& g, const StandardFlat& f, int window);

struct DichotomyReport {
  // Case (i): an infinite F-parallel family M outside M_Eucl whose reflection
  // group centralizes the rest. Case (ii): W(M(F)) is affine.
  enum class Case { CentralizedFamily, Affine } which;
  WallSet m;                   // case (i): the family M
  WallSet walls;               // M(F) on the window
  std::vector<std::string> verification;  // human-readable checks performed
};

DichotomyReport dichotomy(const Group& g, const StandardFlat& f, int window);

// One generator of a free abelian witness, with its certification data.
struct WitnessBlock {
  enum class Kind { AffineTranslations, IndefiniteElement } kind;
  std::vector<int> component;          // ambient generator indices
  std::vector<Word> generators;        // ambient canonical words
  // Affine blocks: exact translation functionals, one row per generator,
  // coordinates over the component's simple roots.
  std::vector<std::vector<QF>> translation_rows;
  // Indefinite blocks: the certified-disjoint wall pair.
  std::vector<Word> pair_reflections;
  std::string certificate;
};

struct ZnWitness {
  int rank = 0;
  std::vector<Word> generators;
  bool commutators_trivial = false;
  bool translation_rank_ok = false;
  std::vector<WitnessBlock> blocks;
};

// Constructive free abelian subgroup of rank dim F inside w W_T w^{-1}:
// per affine component of rank k+1, k translations r_m r_{m'} along
// independent simple-root directions, with exact translation functionals and
// normal-form commutator certificates.
ZnWitness extract_free_abelian(const Group& g, const StandardFlat& f);

// Witness for the flat-rank formula on a whole matrix: translations for the
// affine components of the maximizing subset, a certified infinite-order
// element for each indefinite component. Works on matrices with labels
// outside the exact field (certification through the word problem).
ZnWitness rank_witness(const CoxeterMatrix& m);

// Exact rank of the stacked translation rows of a witness.
int witness_translation_rank(const ZnWitness& w);

}  // namespace cox
