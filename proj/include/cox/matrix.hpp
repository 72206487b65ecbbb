#pragma once

#include <string>
#include <vector>

#include "cox/errors.hpp"

namespace cox {

// The defining data of a Coxeter system (W, S): generator labels and the
// symmetric order matrix. The label 0 encodes an infinite order m_st.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> orders);

  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& label(int i) const { return generators_[i]; }
  int order(int i, int j) const { return orders_[i][j]; }
  const std::vector<std::vector<int>>& orders() const { return orders_; }

  int index_of(const std::string& label) const;  // throws validation_error

  // Every finite label in {2,3,4,6}: Gram entries lie in Q(sqrt2, sqrt3).
  bool exact_field() const;

  // Submatrix on the given generator subset (indices preserved order).
  CoxeterMatrix restrict_to(const std::vector<int>& subset) const;

  bool operator==(const CoxeterMatrix& o) const {
    return generators_ == o.generators_ && orders_ == o.orders_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> orders_;
};

// Parse and validate the JSON document {"generators": [...], "orders": [[...]]}.
// 0 encodes infinity. Errors name the offending cell.
CoxeterMatrix parse_matrix(const std::string& json_text);

// Connected components of the diagram restricted to `subset`: s and t are
// joined when m_st >= 3 or m_st = inf. Components come out sorted, each
// sorted internally.
std::vector<std::vector<int>> components(const CoxeterMatrix& m, const std::vector<int>& subset);

inline std::vector<int> all_generators(const CoxeterMatrix& m) {
  std::vector<int> v(m.rank());
  for (int i = 0; i < m.rank(); ++i) v[i] = i;
  return v;
}

// Convenience builders used across tests and the CLI.
CoxeterMatrix make_matrix(const std::vector<std::string>& gens,
                          const std::vector<std::vector<int>>& orders);

// Rank-3 matrix with pairwise orders (p, q, r) = (m_01, m_02, m_12).
CoxeterMatrix triangle_matrix(int p, int q, int r);

// Orthogonal join: all cross orders 2.
CoxeterMatrix orthogonal_join(const CoxeterMatrix& a, const CoxeterMatrix& b);

}  // namespace cox
