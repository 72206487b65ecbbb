#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cox/group.hpp"

namespace cox {

inline constexpr int kDefaultRadius = 12;
inline constexpr std::size_t kDefaultBallCap = 2000000;

// All elements of length <= radius with the right-multiplication adjacency,
// enumerated breadth-first in (length, ShortLex) order. Node 0 is the
// identity; canonical words are prefix-closed. Immutable once built.
class Ball {
 public:
  Ball(const Group& g, int radius, std::size_t cap = kDefaultBallCap);

  const Group& group() const { return *group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(int id) const { return words_[id]; }
  int length(int id) const { return static_cast<int>(words_[id].size()); }

  // Right multiplication by generator s; -1 when the product leaves the ball.
  int step(int id, int s) const { return adj_[id][s]; }

  // Node of a canonical word, or -1.
  int find(const Word& canonical) const;

  // Walk an arbitrary word letterwise from the identity. Throws
  // resource_error when a partial product leaves the ball.
  int walk(const Word& w) const;

  std::vector<int> elements_of_length(int l) const;

  std::string to_dot() const;

 private:
  const Group* group_;
  int radius_;
  std::vector<Word> words_;
  std::map<Word, int> index_;
  std::vector<std::vector<int>> adj_;
};

// Ball enumeration over the interval representation, for matrices with
// labels outside Q(sqrt2, sqrt3). Every sign decision is interval-strict or
// the enumeration refuses; results are uncertified by contract.
std::vector<Word> enumerate_ball_uncertified(const CoxeterMatrix& m, int radius,
                                             std::size_t cap = kDefaultBallCap);

// Normal form over the interval representation (uncertified by contract).
Word normal_form_uncertified(const CoxeterMatrix& m, const Word& w);

}  // namespace cox
