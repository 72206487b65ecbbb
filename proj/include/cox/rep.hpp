#pragma once

#include <Eigen/Core>

#include <vector>

#include "cox/field.hpp"
#include "cox/interval.hpp"
#include "cox/matrix.hpp"

namespace cox {

// Standard geometric representation on the simple-root basis, templated on
// the coordinate scalar: QF for labels in {2,3,4,6,inf} (exact), IV for the
// uncertified interval fallback.
template <class S>
class GeometricRep {
 public:
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

  explicit GeometricRep(const CoxeterMatrix& m) : n_(m.rank()), gram_(m.rank(), m.rank()) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        gram_(i, j) = (i == j) ? S(1) : gram_entry(m.order(i, j));
  }

  int rank() const { return n_; }
  const Mat& gram() const { return gram_; }

  Vec simple_root(int i) const {
    Vec v = Vec::Zero(n_);
    v(i) = S(1);
    return v;
  }

  S pairing(const Vec& u, const Vec& v) const {
    S acc = S(0);
    for (int i = 0; i < n_; ++i) {
      if (is_zero(u(i))) continue;
      S row = S(0);
      for (int j = 0; j < n_; ++j)
        if (!is_zero(v(j))) row += gram_(i, j) * v(j);
      acc += u(i) * row;
    }
    return acc;
  }

  // v <- s_i(v) = v - 2 <alpha_i, v> alpha_i ; only coordinate i changes.
  void reflect(int i, Vec& v) const {
    S coef = S(0);
    for (int j = 0; j < n_; ++j)
      if (!is_zero(v(j))) coef += gram_(i, j) * v(j);
    v(i) -= (coef + coef);
  }

  // Apply a word as the group element it spells: w = c1 c2 ... ck acts by
  // c1(c2(...ck(v))), so the last letter acts first.
  void apply_word(const std::vector<int>& word, Vec& v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(*it, v);
  }
  // Apply the inverse of the word: first letter acts first.
  void apply_word_inverse(const std::vector<int>& word, Vec& v) const {
    for (int c : word) reflect(c, v);
  }

  // In this representation every root is positive or negative coordinatewise,
  // so any coordinate of decidable sign settles it. (For the interval scalar
  // this sidesteps coordinates that are exactly zero up to rounding.)
  int root_sign(const Vec& v) const {
    bool saw_ambiguous = false;
    for (int i = 0; i < n_; ++i) {
      int s;
      try {
        s = sign_of(v(i));
      } catch (const ambiguous_sign_error&) {
        saw_ambiguous = true;
        continue;
      }
      if (s != 0) return s;
    }
    if (saw_ambiguous)
      throw ambiguous_sign_error("root sign: no coordinate has a decidable nonzero sign");
    return 0;
  }

  Vec positive_normal_form(Vec v) const {
    if (root_sign(v) < 0)
      for (int i = 0; i < n_; ++i) v(i) = -v(i);
    return v;
  }

 private:
  static S gram_entry(int order);

  int n_;
  Mat gram_;
};

template <>
inline QF GeometricRep<QF>::gram_entry(int order) {
  if (!label_in_exact_field(order))
    throw precondition_error("geometric representation over Q(sqrt2,sqrt3) needs labels in "
                             "{2,3,4,6,inf}; got " + std::to_string(order));
  return minus_cos_pi_over(order);
}

template <>
inline IV GeometricRep<IV>::gram_entry(int order) {
  return minus_cos_pi_over_iv(order);
}

// Deterministic total order on exact root vectors (container key).
inline int root_compare(const Eigen::Matrix<QF, Eigen::Dynamic, 1>& a,
                        const Eigen::Matrix<QF, Eigen::Dynamic, 1>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (int i = 0; i < a.size(); ++i) {
    const int c = QF::lex_compare(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

struct RootLess {
  bool operator()(const Eigen::Matrix<QF, Eigen::Dynamic, 1>& a,
                  const Eigen::Matrix<QF, Eigen::Dynamic, 1>& b) const {
    return root_compare(a, b) < 0;
  }
};

}  // namespace cox
