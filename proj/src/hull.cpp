#include "cox/hull.hpp"

#include <algorithm>

namespace cox {

HullResult convex_hull(const Group& g, const std::vector<Word>& c, const Ball& ball) {
  if (c.empty()) throw precondition_error("convex_hull: empty chamber set");
  std::vector<int> cnodes;
  for (const auto& u : c) {
    const int id = ball.find(g.nf(u));
    if (id < 0)
      throw precondition_error("convex_hull: chamber '" + g.str(u) + "' is outside the ball");
    cnodes.push_back(id);
  }

  // Every wall separating two ball chambers separates the base chamber from
  // some ball chamber, so the inversion sets of the ball cover them all.
  std::set<Group::Vec, RootLess> roots;
  for (std::size_t id = 0; id < ball.size(); ++id)
    for (auto& r : inversion_roots(g.rep(), ball.word(static_cast<int>(id))))
      roots.insert(std::move(r));

  std::vector<bool> keep(ball.size(), true);
  for (const auto& root : roots) {
    const HalfSpace h{Wall{root, {}}, +1};
    const Side first = side_of(g, h, ball.word(cnodes[0]));
    bool uniform = true;
    for (std::size_t i = 1; i < cnodes.size() && uniform; ++i)
      uniform = side_of(g, h, ball.word(cnodes[i])) == first;
    if (!uniform) continue;
    for (std::size_t id = 0; id < ball.size(); ++id)
      if (keep[id] && side_of(g, h, ball.word(static_cast<int>(id))) != first) keep[id] = false;
  }

  HullResult out;
  out.radius = ball.radius();
  for (std::size_t id = 0; id < ball.size(); ++id)
    if (keep[id]) out.chambers.push_back(ball.word(static_cast<int>(id)));
  std::sort(out.chambers.begin(), out.chambers.end(), shortlex_less);
  return out;
}

namespace {

Wall wall_between(const Group& g, const Word& a, const Word& b) {
  const WallSet m = separating_walls(g, a, b);
  if (m.size() != 1) throw internal_error("wall_between: chambers are not adjacent");
  return m[0];
}

// One step of the constructive proof, on an explicit geodesic gallery.
Word split_on_gallery(const Group& g, const std::vector<Word>& gallery, const WallSet& m) {
  const std::size_t n = gallery.size() - 1;
  if (n == 0) return gallery.back();
  const Word& last = gallery[n];
  const Word& prev = gallery[n - 1];
  const Wall mu = wall_between(g, prev, last);

  WallSet m_rest = m;
  const bool mu_in_m = m.contains(mu);
  if (mu_in_m) {
    std::vector<Wall> rest;
    for (const auto& w : m)
      if (!(w == mu)) rest.push_back(w);
    m_rest = WallSet(std::move(rest));
  }

  std::vector<Word> prefix(gallery.begin(), gallery.end() - 1);
  const Word d = split_on_gallery(g, prefix, m_rest);

  if (mu_in_m) return d;

  // mu lies in the complement. If the inductive chamber already reached
  // gallery[n-1], the subset was empty and z = y works.
  if (d == prev) return last;

  // M(d, prev) = M. Take a minimal gallery d -> prev with last crossed wall
  // m* (in M) and second-to-last chamber e. Since r_{m*} and r_mu commute,
  // e -> r_mu(e) -> last is a gallery crossing mu then m*, so the rebuilt
  // geodesic from x to y ends with a crossing in M and case one applies.
  const auto fix = geodesic_gallery(g, d, prev);
  const Wall mstar = wall_between(g, fix[fix.size() - 2], fix.back());
  if (!m.contains(mstar))
    throw internal_error("split_convex: last crossed wall escaped the subset");

  const Word& e = fix[fix.size() - 2];
  const Word dprime = g.mul(mu.reflection, e);
  std::vector<Word> regallery = geodesic_gallery(g, gallery.front(), d);
  regallery.insert(regallery.end(), fix.begin() + 1, fix.end() - 1);  // d ... e
  regallery.push_back(dprime);
  regallery.push_back(last);
  if (regallery.size() != gallery.size())
    throw internal_error("split_convex: rebuilt gallery has the wrong length");
  for (std::size_t i = 0; i + 1 < regallery.size(); ++i)
    if (gallery_distance(g, regallery[i], regallery[i + 1]) != 1)
      throw internal_error("split_convex: rebuilt gallery is not a gallery");
  return split_on_gallery(g, regallery, m);
}

}  // namespace

SplitResult split_convex(const Group& g, const Word& x, const Word& y, const WallSet& m) {
  const WallSet all = separating_walls(g, x, y);
  for (const auto& w : m)
    if (!all.contains(w))
      throw precondition_error("split_convex: wall '" + g.str(w.reflection) +
                               "' does not separate x from y");
  const WallSet mbar = all.set_minus(m);
  for (const auto& a : m)
    for (const auto& b : mbar)
      if (!walls_commute(g, a, b))
        throw precondition_error("split_convex: reflections of '" + g.str(a.reflection) +
                                 "' (in M) and '" + g.str(b.reflection) +
                                 "' (in the complement) do not commute");

  std::vector<Word> gallery;
  for (const auto& ch : geodesic_gallery(g, x, y)) gallery.push_back(ch);
  const Word z = split_on_gallery(g, gallery, m);

  SplitResult out{z, separating_walls(g, y, z), separating_walls(g, x, z)};
  if (!(out.m == m) || !(out.mbar == mbar))
    throw internal_error("split_convex: postcondition failed");
  return out;
}

}  // namespace cox
