#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cox/field.hpp"
#include "cox/matrix.hpp"

namespace cox {

enum class Kind { Spherical, Affine, Indefinite };

struct Classification {
  Kind kind = Kind::Indefinite;
  // For Affine: dimension of the Euclidean space the group acts on,
  // i.e. |component| - 1.
  int euclidean_dimension = 0;
  // Catalog name when the diagram matches a known family, e.g. "A3", "C~2".
  std::string family;
};

std::string kind_name(Kind k);

using GramMatrix = Eigen::Matrix<QF, Eigen::Dynamic, Eigen::Dynamic>;

// Gram form of the restriction to `subset`: B_ss = 1, B_st = -cos(pi/m_st).
// Requires every label of the subset to live in the exact field.
GramMatrix gram_matrix(const CoxeterMatrix& m, const std::vector<int>& subset);

// Signature of a symmetric exact matrix, by symmetric elimination.
struct GramSignature {
  bool positive_definite = false;
  bool positive_semidefinite = false;
  int corank = 0;
};
GramSignature gram_signature(GramMatrix b);

// Recognize an irreducible diagram against the catalog of finite and affine
// families (A..I, H and their affine extensions). Works for every label,
// including those outside the exact field. Returns the classification with
// the family name filled in; anything that matches neither catalog is
// Indefinite.
Classification classify_by_catalog(const CoxeterMatrix& m, const std::vector<int>& component);

// classify() = catalog recognition, cross-checkable against the Gram
// signature when the labels are exact-field. Contract: `component` must be a
// single diagram component.
Classification classify(const CoxeterMatrix& m, const std::vector<int>& component);

// |W_T| for a spherical subset (product over components); nullopt when the
// subset is not spherical. Exact (cpp_int) to survive E8-sized factors.
std::optional<boost::multiprecision::cpp_int> spherical_order(const CoxeterMatrix& m,
                                                              const std::vector<int>& subset);

// Upper bound for the order of any finite-order product of two reflections:
// every finite subgroup lies in a conjugate of a finite standard parabolic,
// and a dihedral subgroup of order 2k needs |W_T| >= 2k. Returns
// max over spherical T of |W_T| / 2, clamped to `cap`.
long torsion_order_bound(const CoxeterMatrix& m, long cap = 1000000);

}  // namespace cox
