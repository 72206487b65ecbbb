#pragma once

#include <sstream>

#include "cox/element.hpp"
#include "cox/matrix.hpp"
#include "cox/rep.hpp"

namespace cox {

// Immutable bundle of a Coxeter matrix with its exact geometric
// representation. Every operation on it is a pure function; concurrent use
// needs no coordination.
class Group {
 public:
  explicit Group(CoxeterMatrix m) : matrix_(std::move(m)), rep_(matrix_) {}

  const CoxeterMatrix& matrix() const { return matrix_; }
  const GeometricRep<QF>& rep() const { return rep_; }
  int rank() const { return matrix_.rank(); }

  using Vec = GeometricRep<QF>::Vec;

  Word nf(Word w) const { return normal_form(rep_, std::move(w)); }
  Word mul(const Word& u, const Word& v) const { return multiply(rep_, u, v); }
  Word inv(const Word& u) const { return inverse(rep_, u); }
  Word conj(const Word& u, const Word& w) const { return conjugate(rep_, u, w); }
  int len(const Word& u) const { return static_cast<int>(nf(u).size()); }

  // Space-separated generator labels; "e" (or nothing) is the identity.
  Word parse_word(const std::string& text) const {
    Word out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      if (tok == "e" || tok == "1") continue;
      out.push_back(matrix_.index_of(tok));
    }
    return out;
  }

  std::string str(const Word& w) const { return word_str(matrix_, w); }

 private:
  CoxeterMatrix matrix_;
  GeometricRep<QF> rep_;
};

}  // namespace cox
