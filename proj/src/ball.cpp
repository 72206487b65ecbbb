#include "cox/ball.hpp"

#include <sstream>

namespace cox {

Ball::Ball(const Group& g, int radius, std::size_t cap) : group_(&g), radius_(radius) {
  if (radius < 0) throw precondition_error("ball: radius must be >= 0");
  words_.push_back({});
  index_.emplace(Word{}, 0);
  adj_.push_back(std::vector<int>(g.rank(), -1));

  for (std::size_t head = 0; head < words_.size(); ++head) {
    const Word w = words_[head];  // copy: words_ may reallocate
    for (int s = 0; s < g.rank(); ++s) {
      if (adj_[head][s] >= 0) continue;
      Word t = w;
      t.push_back(s);
      t = g.nf(std::move(t));
      if (static_cast<int>(t.size()) > radius_) continue;  // leaves the ball
      auto it = index_.find(t);
      int id;
      if (it != index_.end()) {
        id = it->second;
      } else {
        if (words_.size() >= cap)
          throw resource_error("ball: element cap exceeded at radius " +
                                   std::to_string(static_cast<int>(w.size())),
                               static_cast<int>(w.size()));
        id = static_cast<int>(words_.size());
        words_.push_back(t);
        index_.emplace(t, id);
        adj_.push_back(std::vector<int>(g.rank(), -1));
      }
      adj_[head][s] = id;
      adj_[id][s] = static_cast<int>(head);  // s is an involution
    }
  }
}

int Ball::find(const Word& canonical) const {
  auto it = index_.find(canonical);
  return it == index_.end() ? -1 : it->second;
}

int Ball::walk(const Word& w) const {
  int cur = 0;
  for (int s : w) {
    if (s < 0 || s >= group_->rank()) throw precondition_error("ball walk: letter out of range");
    cur = adj_[cur][s];
    if (cur < 0)
      throw resource_error("ball walk: partial product leaves the ball of radius " +
                               std::to_string(radius_),
                           radius_);
  }
  return cur;
}

std::vector<int> Ball::elements_of_length(int l) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (static_cast<int>(words_[i].size()) == l) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Word> enumerate_ball_uncertified(const CoxeterMatrix& m, int radius,
                                             std::size_t cap) {
  if (radius < 0) throw precondition_error("ball: radius must be >= 0");
  const GeometricRep<IV> rep(m);
  std::vector<Word> words{{}};
  std::map<Word, int> index{{Word{}, 0}};
  for (std::size_t head = 0; head < words.size(); ++head) {
    const Word w = words[head];
    for (int s = 0; s < m.rank(); ++s) {
      Word t = w;
      t.push_back(s);
      t = normal_form(rep, std::move(t));
      if (static_cast<int>(t.size()) > radius) continue;
      if (index.emplace(t, static_cast<int>(words.size())).second) {
        if (words.size() >= cap)
          throw resource_error("ball: element cap exceeded", static_cast<int>(w.size()));
        words.push_back(std::move(t));
      }
    }
  }
  return words;
}

Word normal_form_uncertified(const CoxeterMatrix& m, const Word& w) {
  const GeometricRep<IV> rep(m);
  return normal_form(rep, w);
}

std::string Ball::to_dot() const {
  std::ostringstream os;
  os << "graph cayley {\n";
  for (std::size_t i = 0; i < words_.size(); ++i)
    os << "  n" << i << " [label=\"" << group_->str(words_[i]) << "\"];\n";
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (int s = 0; s < group_->rank(); ++s) {
      const int j = adj_[i][s];
      if (j >= 0 && static_cast<int>(i) < j)
        os << "  n" << i << " -- n" << j << " [label=\"" << group_->matrix().label(s)
           << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace cox
