#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cox/rep.hpp"

namespace cox {

// A group element is carried around as its ShortLex-least reduced word over
// the generator indices; the empty word is the identity. Chambers of the
// Davis complex are identified with elements throughout.
using Word = std::vector<int>;

inline std::string word_str(const CoxeterMatrix& m, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += m.label(w[i]);
  }
  return out;
}

// ShortLex is inherited from the generator order of the input matrix.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Coordinate comparison against a small integer target: exact for QF,
// possibly-equal for the interval scalar (whose results are uncertified by
// contract).
inline bool coord_is(const QF& x, int target) { return x == QF(target); }
inline bool coord_is(const IV& x, int target) {
  return IV::possibly_equal(x, IV(target));
}

template <class S>
bool is_left_descent(const GeometricRep<S>& rep, const Word& w, int s) {
  // l(sw) < l(w)  iff  w^{-1}(alpha_s) is a negative root.
  typename GeometricRep<S>::Vec v = rep.simple_root(s);
  rep.apply_word_inverse(w, v);
  return rep.root_sign(v) < 0;
}

// Delete a strong-exchange position of the left descent s from the word w,
// producing a word for s*w one letter shorter. Valid for unreduced words,
// where the exchange root may appear with either sign.
template <class S>
Word left_descent_quotient(const GeometricRep<S>& rep, const Word& w, int s) {
  typename GeometricRep<S>::Vec t = rep.simple_root(s);
  for (size_t i = 0; i < w.size(); ++i) {
    // Position i qualifies when c1...c_{i-1}(alpha_{c_i}) = +-alpha_s,
    // equivalently (c_{i-1}...c1)(alpha_s) = +-alpha_{c_i}.
    bool hit_pos = true, hit_neg = true;
    for (int j = 0; j < rep.rank(); ++j) {
      const bool on_axis = (j == w[i]);
      if (on_axis ? !coord_is(t(j), 1) : !coord_is(t(j), 0)) hit_pos = false;
      if (on_axis ? !coord_is(t(j), -1) : !coord_is(t(j), 0)) hit_neg = false;
      if (!hit_pos && !hit_neg) break;
    }
    if (hit_pos || hit_neg) {
      Word out;
      out.reserve(w.size() - 1);
      out.insert(out.end(), w.begin(), w.begin() + i);
      out.insert(out.end(), w.begin() + i + 1, w.end());
      return out;
    }
    rep.reflect(w[i], t);
  }
  throw internal_error("left_descent_quotient: no exchange position for the given descent");
}

// ShortLex normal form by greedy left-descent extraction. Accepts arbitrary
// words; a nonempty remainder with no left descent must spell the identity.
// The inverse images w^{-1}(alpha_s) of all simple roots are maintained
// incrementally: extracting the descent s replaces each v_t by
// v_t - 2 B(alpha_s, alpha_t) v_s.
template <class S>
Word normal_form(const GeometricRep<S>& rep, Word w) {
  const int n = rep.rank();
  std::vector<typename GeometricRep<S>::Vec> v;
  v.reserve(n);
  for (int s = 0; s < n; ++s) {
    v.push_back(rep.simple_root(s));
    rep.apply_word_inverse(w, v.back());
  }
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    int chosen = -1;
    for (int s = 0; s < n; ++s) {
      if (rep.root_sign(v[s]) < 0) { chosen = s; break; }
    }
    if (chosen < 0) {
      // Only the identity has no left descent; verify before dropping w.
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t)
          if (!coord_is(v[j](t), t == j ? 1 : 0))
            throw internal_error("normal_form: remainder has no descent but is not the identity");
      break;
    }
    out.push_back(chosen);
    w = left_descent_quotient(rep, w, chosen);
    const typename GeometricRep<S>::Vec vs = v[chosen];
    for (int t = 0; t < n; ++t) {
      S c = rep.gram()(chosen, t);
      c += c;
      for (int k = 0; k < n; ++k) v[t](k) -= c * vs(k);
    }
  }
  return out;
}

template <class S>
Word multiply(const GeometricRep<S>& rep, const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return normal_form(rep, std::move(w));
}

template <class S>
Word inverse(const GeometricRep<S>& rep, const Word& u) {
  Word w(u.rbegin(), u.rend());
  return normal_form(rep, std::move(w));
}

inline int length(const Word& canonical) { return static_cast<int>(canonical.size()); }

// The positive roots sent negative by u^{-1}: the walls separating the base
// chamber from u. Exactly l(u) of them for reduced u.
template <class S>
std::vector<typename GeometricRep<S>::Vec> inversion_roots(const GeometricRep<S>& rep,
                                                           const Word& u) {
  std::vector<typename GeometricRep<S>::Vec> out;
  out.reserve(u.size());
  for (size_t j = 0; j < u.size(); ++j) {
    typename GeometricRep<S>::Vec v = rep.simple_root(u[j]);
    for (size_t i = j; i-- > 0;) rep.reflect(u[i], v);
    out.push_back(std::move(v));
  }
  return out;
}

// Conjugation u w u^{-1}, normalized.
template <class S>
Word conjugate(const GeometricRep<S>& rep, const Word& u, const Word& w) {
  Word x = u;
  x.insert(x.end(), w.begin(), w.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) x.push_back(*it);
  return normal_form(rep, std::move(x));
}

}  // namespace cox
