#pragma once

#include <cstddef>

#include "cox/element.hpp"
#include "cox/matrix.hpp"

namespace cox {

// Word-problem solution by elementary rewriting: nil moves (delete ss) and
// braid moves (flip an alternating run of length m_st). Pure word
// combinatorics, valid for every label including those outside the exact
// field. Exponentially slower than the root-vector route; used as an
// independent oracle and for certification on non exact-field matrices.
//
// Returns the ShortLex-least reduced word. Throws resource_error when the
// same-length braid closure exceeds `state_cap`.
Word tits_normal_form(const CoxeterMatrix& m, Word w, std::size_t state_cap = 2000000);

inline bool tits_equal(const CoxeterMatrix& m, const Word& u, const Word& v,
                       std::size_t state_cap = 2000000) {
  return tits_normal_form(m, u, state_cap) == tits_normal_form(m, v, state_cap);
}

}  // namespace cox
