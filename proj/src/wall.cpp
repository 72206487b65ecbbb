#include "cox/wall.hpp"

#include <algorithm>

namespace cox {

WallSet::WallSet(std::vector<Wall> walls) : walls_(std::move(walls)) {
  std::sort(walls_.begin(), walls_.end());
  walls_.erase(std::unique(walls_.begin(), walls_.end()), walls_.end());
}

void WallSet::insert(Wall w) {
  auto it = std::lower_bound(walls_.begin(), walls_.end(), w);
  if (it == walls_.end() || !(*it == w)) walls_.insert(it, std::move(w));
}

bool WallSet::contains(const Wall& w) const {
  return std::binary_search(walls_.begin(), walls_.end(), w);
}

WallSet WallSet::set_minus(const WallSet& o) const {
  std::vector<Wall> out;
  for (const auto& w : walls_)
    if (!o.contains(w)) out.push_back(w);
  return WallSet(std::move(out));
}

WallSet WallSet::set_union(const WallSet& o) const {
  std::vector<Wall> out = walls_;
  out.insert(out.end(), o.walls_.begin(), o.walls_.end());
  return WallSet(std::move(out));
}

bool WallSet::operator==(const WallSet& o) const {
  if (walls_.size() != o.walls_.size()) return false;
  for (std::size_t i = 0; i < walls_.size(); ++i)
    if (!(walls_[i] == o.walls_[i])) return false;
  return true;
}

Wall wall_of_root(const Group& g, Group::Vec root) {
  const auto& rep = g.rep();
  root = rep.positive_normal_form(std::move(root));
  if (rep.root_sign(root) == 0) throw precondition_error("wall_of_root: zero vector");
  // Descend to a simple root: while beta is not simple, some simple s has
  // B(alpha_s, beta) > 0 and s(beta) is strictly shallower.
  Word prefix;
  Group::Vec beta = root;
  const std::size_t guard = kDefaultBallCap;
  while (true) {
    int simple = -1;
    for (int j = 0; j < rep.rank(); ++j) {
      bool is_simple = true;
      for (int k = 0; k < rep.rank(); ++k) {
        const bool want_one = (k == j);
        if (want_one ? !(beta(k) == QF(1)) : !beta(k).is_zero()) { is_simple = false; break; }
      }
      if (is_simple) { simple = j; break; }
    }
    if (simple >= 0) {
      // r = prefix * s * prefix^{-1}
      Word w = prefix;
      w.push_back(simple);
      for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) w.push_back(*it);
      Wall out{g.rep().positive_normal_form(root), g.nf(std::move(w))};
      return out;
    }
    int s = -1;
    for (int j = 0; j < rep.rank(); ++j) {
      if (rep.pairing(rep.simple_root(j), beta).sign() > 0) { s = j; break; }
    }
    if (s < 0) throw internal_error("wall_of_root: positive non-simple root with no descent");
    prefix.push_back(s);
    rep.reflect(s, beta);
    if (prefix.size() > guard) throw internal_error("wall_of_root: descent did not terminate");
  }
}

Wall wall_of_reflection(const Group& g, const Word& word) {
  const Word w = g.nf(word);
  if (w.empty() || w.size() % 2 == 0)
    throw precondition_error("wall_of_reflection: '" + g.str(word) + "' is not a reflection");
  const std::size_t k = w.size() / 2;
  Group::Vec beta = g.rep().simple_root(w[k]);
  for (std::size_t i = k; i-- > 0;) g.rep().reflect(w[i], beta);
  Wall cand = wall_of_root(g, beta);
  if (!(cand.reflection == w))
    throw precondition_error("wall_of_reflection: '" + g.str(word) + "' is not a reflection");
  return cand;
}

Wall simple_wall(const Group& g, int s) {
  return Wall{g.rep().simple_root(s), Word{s}};
}

std::vector<Wall> reflections_up_to(const Group& g, int depth, std::size_t cap) {
  if (depth < 0) throw precondition_error("reflections_up_to: depth must be >= 0");
  const auto& rep = g.rep();
  std::set<Group::Vec, RootLess> seen;
  std::vector<Group::Vec> frontier;
  for (int s = 0; s < rep.rank(); ++s) {
    frontier.push_back(rep.simple_root(s));
    seen.insert(frontier.back());
  }
  for (int d = 0; d < depth; ++d) {
    std::vector<Group::Vec> next;
    for (const auto& beta : frontier) {
      for (int s = 0; s < rep.rank(); ++s) {
        Group::Vec v = beta;
        rep.reflect(s, v);
        if (rep.root_sign(v) < 0) continue;  // only the root's own simple flips it
        if (seen.insert(v).second) {
          if (seen.size() > cap)
            throw resource_error("reflections_up_to: cap exceeded at depth " + std::to_string(d),
                                 d);
          next.push_back(std::move(v));
        }
      }
    }
    if (next.empty()) break;  // orbit stabilized (finite group)
    frontier = std::move(next);
  }
  std::vector<Wall> out;
  out.reserve(seen.size());
  for (const auto& r : seen) out.push_back(wall_of_root(g, r));
  std::sort(out.begin(), out.end());
  return out;
}

Side side_of(const Group& g, const HalfSpace& h, const Word& u) {
  Group::Vec v = h.wall.root;
  g.rep().apply_word_inverse(u, v);
  const int s = g.rep().root_sign(v);
  if (s == 0) throw internal_error("side_of: root image degenerate");
  // u^{-1}(root) negative  <=>  the wall separates c0 from u*c0.
  const bool separated = s < 0;
  const bool inside = (h.sign > 0) ? !separated : separated;
  return inside ? Side::Inside : Side::Outside;
}

Side side_of_residue(const Group& g, const HalfSpace& h, const Word& u,
                     const std::vector<int>& types) {
  // The residue u*W_U lies on the wall iff r stabilizes the coset,
  // i.e. u^{-1} r u is a word over U.
  const Word conj = g.conj(g.inv(u), h.wall.reflection);
  bool in_wu = true;
  for (int c : conj)
    if (std::find(types.begin(), types.end(), c) == types.end()) { in_wu = false; break; }
  if (in_wu) return Side::OnWall;
  return side_of(g, h, u);
}

std::vector<Group::Vec> gallery_wall_roots(const Group& g, const Word& u, const Word& w) {
  std::set<Group::Vec, RootLess> roots;
  for (std::size_t j = 0; j < w.size(); ++j) {
    // Root of the j-th wall crossed by the gallery, in ambient coordinates:
    // u * (w_prefix)(alpha_{w_j}).
    Group::Vec beta = g.rep().simple_root(w[j]);
    for (std::size_t i = j; i-- > 0;) g.rep().reflect(w[i], beta);
    g.rep().apply_word(u, beta);
    roots.insert(g.rep().positive_normal_form(std::move(beta)));
  }
  if (roots.size() != w.size())
    throw internal_error("separating_walls: duplicate wall along a geodesic gallery");
  return {roots.begin(), roots.end()};
}

std::vector<Group::Vec> separating_wall_roots(const Group& g, const Word& u, const Word& v) {
  return gallery_wall_roots(g, u, g.mul(g.inv(u), v));
}

WallSet separating_walls(const Group& g, const Word& u, const Word& v) {
  std::vector<Wall> out;
  for (auto& r : separating_wall_roots(g, u, v)) out.push_back(wall_of_root(g, std::move(r)));
  return WallSet(std::move(out));
}

int gallery_distance(const Group& g, const Word& u, const Word& v) {
  return static_cast<int>(g.mul(g.inv(u), v).size());
}

std::vector<Word> geodesic_gallery(const Group& g, const Word& u, const Word& v) {
  const Word w = g.mul(g.inv(u), v);
  std::vector<Word> out{u};
  Word cur = u;
  for (int c : w) {
    cur = g.mul(cur, Word{c});
    out.push_back(cur);
  }
  return out;
}

Word adjacent_chamber(const Group& g, const Wall& w) {
  const std::size_t k = w.reflection.size() / 2;
  Word prefix(w.reflection.begin(), w.reflection.begin() + k);
  return g.nf(std::move(prefix));
}

bool walls_commute(const Group& g, const Wall& a, const Wall& b) {
  if (a == b) return true;
  return g.rep().pairing(a.root, b.root).is_zero();
}

bool wall_separates(const Group& g, const Wall& sep, const Wall& x, const Wall& y) {
  if (sep == x || sep == y || x == y)
    throw precondition_error("wall_separates: walls must be distinct");
  const HalfSpace h{sep, +1};
  const Side sx = side_of(g, h, adjacent_chamber(g, x));
  const Side sy = side_of(g, h, adjacent_chamber(g, y));
  return sx != sy;
}

}  // namespace cox
