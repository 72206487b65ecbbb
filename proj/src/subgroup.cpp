#include "cox/subgroup.hpp"

#include <algorithm>
#include <map>

namespace cox {

namespace {

using Vec = Group::Vec;

void reflect_by_root(const GeometricRep<QF>& rep, const Vec& alpha, Vec& v) {
  QF coef = rep.pairing(alpha, v);
  coef += coef;
  for (int i = 0; i < rep.rank(); ++i) v(i) -= coef * alpha(i);
}

}  // namespace

int order_of_product(const Group& g, const Wall& m, const Wall& mprime) {
  if (m == mprime) return 1;
  const auto& rep = g.rep();
  const QF b = rep.pairing(m.root, mprime.root);
  if (b.abs() >= QF(1)) return 0;  // disjoint walls, infinite order
  // |B| < 1: the pair generates a finite dihedral group; iterate the rotation
  // r_m r_{m'} on a root of the plane until it returns.
  const Vec start = mprime.root;
  Vec v = start;
  for (int k = 1; k <= kOrderIterationCap; ++k) {
    reflect_by_root(rep, mprime.root, v);
    reflect_by_root(rep, m.root, v);
    if (root_compare(v, start) == 0) return k;
  }
  throw internal_error("order_of_product: rotation did not close with |B| < 1");
}

namespace {

// Positive roots of the rank-2 subsystem spanned by two roots with |B| < 1:
// the orbit of the pair under the dihedral group it generates.
std::vector<Vec> dihedral_positive_roots(const GeometricRep<QF>& rep, const Vec& a,
                                         const Vec& b) {
  std::set<Vec, RootLess> seen{a, b};
  std::vector<Vec> frontier{a, b};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& r : frontier) {
      for (const Vec* gen : {&a, &b}) {
        Vec v = r;
        reflect_by_root(rep, *gen, v);
        v = rep.positive_normal_form(std::move(v));
        if (seen.insert(v).second) next.push_back(std::move(v));
        if (seen.size() > 4 * kOrderIterationCap)
          throw internal_error("dihedral_positive_roots: subsystem did not close");
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// The canonical generator pair of the dihedral subsystem of two roots:
// for |B| >= 1 the pair itself (after reflecting an acute pair), for |B| < 1
// the most obtuse pair of the finite subsystem.
std::pair<Vec, Vec> canonical_dihedral_pair(const GeometricRep<QF>& rep, Vec a, Vec b) {
  QF pab = rep.pairing(a, b);
  if (pab >= QF(1)) {
    // Acute-parallel: replace b by its reflection, making the pair obtuse.
    reflect_by_root(rep, a, b);
    b = rep.positive_normal_form(std::move(b));
    pab = rep.pairing(a, b);
  }
  if (pab <= QF(-1)) {
    if (root_compare(a, b) > 0) std::swap(a, b);
    return {a, b};
  }
  const auto roots = dihedral_positive_roots(rep, a, b);
  QF best;
  std::pair<Vec, Vec> out;
  bool first = true;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const QF p = rep.pairing(roots[i], roots[j]);
      if (first || p < best) {
        best = p;
        out = {roots[i], roots[j]};
        first = false;
      }
    }
  if (first) throw internal_error("canonical_dihedral_pair: degenerate subsystem");
  return out;
}

bool pair_is_canonical(const GeometricRep<QF>& rep, const Vec& a, const Vec& b) {
  const auto [ca, cb] = canonical_dihedral_pair(rep, a, b);
  return (root_compare(a, ca) == 0 && root_compare(b, cb) == 0) ||
         (root_compare(a, cb) == 0 && root_compare(b, ca) == 0);
}

}  // namespace

ReflectionSubgroup reflection_subgroup(const Group& g, const WallSet& m, int depth) {
  if (m.empty()) throw precondition_error("reflection_subgroup: empty wall set");
  const auto& rep = g.rep();

  std::vector<Vec> n;
  for (const auto& w : m) n.push_back(w.root);
  std::sort(n.begin(), n.end(), RootLess{});
  n.erase(std::unique(n.begin(), n.end(),
                      [](const Vec& x, const Vec& y) { return root_compare(x, y) == 0; }),
          n.end());

  // Pairwise dihedral canonicalization.
  bool stable = false;
  for (int round = 0; round <= kOrderIterationCap && !stable; ++round) {
    stable = true;
    for (std::size_t i = 0; i < n.size() && stable; ++i) {
      for (std::size_t j = i + 1; j < n.size() && stable; ++j) {
        if (pair_is_canonical(rep, n[i], n[j])) continue;
        const auto [ca, cb] = canonical_dihedral_pair(rep, n[i], n[j]);
        n.erase(n.begin() + j);
        n.erase(n.begin() + i);
        n.push_back(ca);
        n.push_back(cb);
        std::sort(n.begin(), n.end(), RootLess{});
        n.erase(std::unique(n.begin(), n.end(),
                            [](const Vec& x, const Vec& y) { return root_compare(x, y) == 0; }),
                n.end());
        stable = false;
      }
    }
    if (round == kOrderIterationCap)
      throw internal_error("reflection_subgroup: canonicalization did not stabilize");
  }

  ReflectionSubgroup out;
  for (const auto& r : n) out.canonical.push_back(wall_of_root(g, r));
  std::sort(out.canonical.begin(), out.canonical.end());

  // Windowed Dyer criterion: enumerate subsystem roots to the depth bound and
  // check that every canonical generator keeps the others positive.
  std::set<Vec, RootLess> window;
  std::vector<Vec> frontier;
  for (const auto& w : out.canonical) {
    window.insert(w.root);
    frontier.push_back(w.root);
  }
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Vec> next;
    for (const auto& r : frontier)
      for (const auto& wgen : out.canonical) {
        Vec v = r;
        reflect_by_root(rep, wgen.root, v);
        v = rep.positive_normal_form(std::move(v));
        if (window.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  for (const auto& wgen : out.canonical)
    for (const auto& r : window) {
      if (root_compare(wgen.root, r) == 0) continue;
      Vec v = r;
      reflect_by_root(rep, wgen.root, v);
      if (rep.root_sign(v) <= 0)
        throw internal_error("reflection_subgroup: canonical generator fails the Dyer "
                             "criterion on the window");
    }

  // Express every input root in the canonical generators by depth descent.
  bool all_expressed = true;
  for (const auto& w : m) {
    std::vector<int> expr;
    Vec gamma = w.root;
    bool done = false;
    for (int it = 0; it <= kOrderIterationCap; ++it) {
      int hit = -1;
      for (std::size_t k = 0; k < out.canonical.size(); ++k)
        if (root_compare(gamma, out.canonical[k].root) == 0) { hit = static_cast<int>(k); break; }
      if (hit >= 0) {
        expr.push_back(hit);
        done = true;
        break;
      }
      int desc = -1;
      for (std::size_t k = 0; k < out.canonical.size(); ++k)
        if (rep.pairing(out.canonical[k].root, gamma).sign() > 0) { desc = static_cast<int>(k); break; }
      if (desc < 0) break;
      expr.push_back(desc);
      reflect_by_root(rep, out.canonical[desc].root, gamma);
      gamma = rep.positive_normal_form(std::move(gamma));
    }
    if (!done) all_expressed = false;
    out.input_expressions.push_back(std::move(expr));
  }

  out.certification = all_expressed ? Certification::Certified : Certification::DepthExhausted;

  // Induced Coxeter matrix over the canonical generators.
  const int k = static_cast<int>(out.canonical.size());
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("r" + std::to_string(i + 1));
  std::vector<std::vector<int>> orders(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int ord = order_of_product(g, out.canonical[i], out.canonical[j]);
      orders[i][j] = orders[j][i] = ord;
      if (ord == 1) throw internal_error("reflection_subgroup: duplicate canonical generators");
    }
  out.induced = CoxeterMatrix(std::move(labels), std::move(orders));
  return out;
}

EuclideanTriangle is_euclidean_triangle(const ReflectionSubgroup& g) {
  if (g.certification != Certification::Certified)
    throw precondition_error("is_euclidean_triangle: subgroup is not certified");
  if (g.canonical.size() != 3) return {false, ""};
  std::vector<int> offdiag{g.induced.order(0, 1), g.induced.order(0, 2), g.induced.order(1, 2)};
  std::sort(offdiag.begin(), offdiag.end());
  if (offdiag == std::vector<int>{3, 3, 3}) return {true, "(3,3,3)"};
  if (offdiag == std::vector<int>{2, 4, 4}) return {true, "(2,4,4)"};
  if (offdiag == std::vector<int>{2, 3, 6}) return {true, "(2,3,6)"};
  return {false, ""};
}

ChainKind chain_kind(const Group& g, const WallSet& p) {
  ChainKind out;
  const std::size_t n = p.size();
  if (n == 0) throw precondition_error("chain_kind: empty wall set");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order_of_product(g, p[i], p[j]) != 0) {
        out.kind = ChainClass::NotAChain;
        out.witness = {p[i], p[j]};
        return out;
      }
  if (n == 1) {
    out.kind = ChainClass::Segment;
    out.ordered = {p[0]};
    return out;
  }
  // Betweenness: sep[i][j][k]... stored as: does p[i] separate p[j] from p[k].
  auto separates = [&](std::size_t i, std::size_t j, std::size_t k) {
    return wall_separates(g, p[i], p[j], p[k]);
  };
  // An endpoint separates no pair.
  std::vector<int> between_count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (j == i || k == i) continue;
        if (separates(i, j, k)) ++between_count[i];
      }
  std::size_t endpoint = n;
  for (std::size_t i = 0; i < n; ++i)
    if (between_count[i] == 0) { endpoint = i; break; }
  if (endpoint == n) {
    out.kind = ChainClass::NotAChain;
    out.witness = {p[0], p[1]};
    return out;
  }
  // Order by the number of family walls separating the endpoint from each.
  std::vector<std::pair<int, std::size_t>> keyed;
  for (std::size_t i = 0; i < n; ++i) {
    int cnt = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && i != endpoint && j != endpoint && separates(j, endpoint, i)) ++cnt;
    keyed.push_back({i == endpoint ? -1 : cnt, i});
  }
  std::sort(keyed.begin(), keyed.end());
  // Validate: consecutive ranks distinct and betweenness consistent.
  for (std::size_t t = 0; t + 1 < n; ++t)
    if (t > 0 && keyed[t].first == keyed[t + 1].first) {
      out.kind = ChainClass::NotAChain;
      out.witness = {p[keyed[t].second], p[keyed[t + 1].second]};
      return out;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (!separates(keyed[b].second, keyed[a].second, keyed[c].second)) {
          out.kind = ChainClass::NotAChain;
          out.witness = {p[keyed[a].second], p[keyed[c].second]};
          return out;
        }
  out.kind = ChainClass::Segment;
  for (const auto& [key, idx] : keyed) out.ordered.push_back(p[idx]);
  return out;
}

ChainKind chain_kind_indexed(const Group& g, const std::vector<Wall>& window_ordered,
                             bool extends_left, bool extends_right) {
  ChainKind base = chain_kind(g, WallSet(window_ordered));
  if (base.kind != ChainClass::Segment) return base;
  if (extends_left && extends_right) base.kind = ChainClass::Line;
  else if (extends_left || extends_right) base.kind = ChainClass::Ray;
  return base;
}

bool parabolic_contains(const Group& g, const ParabolicCoset& p, const Wall& r) {
  const Word conj = g.conj(g.inv(p.base), r.reflection);
  for (int c : conj)
    if (std::find(p.types.begin(), p.types.end(), c) == p.types.end()) return false;
  return true;
}

namespace {

bool coset_contains_coset(const Group& g, const ParabolicCoset& outer,
                          const ParabolicCoset& inner) {
  for (int t : inner.types) {
    const Word refl = g.conj(inner.base, Word{t});
    if (!parabolic_contains(g, outer, Wall{{}, refl})) return false;
  }
  return true;
}

}  // namespace

ParabolicCoset parabolic_closure(const Group& g, const std::vector<Wall>& r, const Ball& ball) {
  if (r.empty()) throw precondition_error("parabolic_closure: empty reflection set");

  std::map<std::pair<Word, std::vector<int>>, ParabolicCoset> candidates;
  for (std::size_t id = 0; id < ball.size(); ++id) {
    const Word& w = ball.word(static_cast<int>(id));
    const Word winv = g.inv(w);
    std::set<int> letters;
    for (const auto& refl : r) {
      const Word conj = g.conj(winv, refl.reflection);
      letters.insert(conj.begin(), conj.end());
    }
    std::vector<int> types(letters.begin(), letters.end());
    // Minimal-length representative of the coset w W_T.
    Word base = w;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int t : types) {
        Word cand = g.mul(base, Word{t});
        if (cand.size() < base.size()) {
          base = std::move(cand);
          moved = true;
          break;
        }
      }
    }
    candidates.insert({{base, types}, ParabolicCoset{base, types, true}});
  }

  std::vector<ParabolicCoset> list;
  for (auto& [k, v] : candidates) list.push_back(v);
  std::vector<bool> minimal(list.size(), true);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i == j || !minimal[i]) continue;
      if (coset_contains_coset(g, list[i], list[j]) && !coset_contains_coset(g, list[j], list[i]))
        minimal[i] = false;
    }
  const ParabolicCoset* best = nullptr;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!minimal[i]) continue;
    if (!best || list[i].types.size() < best->types.size() ||
        (list[i].types.size() == best->types.size() && shortlex_less(list[i].base, best->base)))
      best = &list[i];
  }
  if (!best) throw internal_error("parabolic_closure: no containing parabolic in range");
  return *best;
}

}  // namespace cox
