#include "cox/flats.hpp"

#include <algorithm>
#include <sstream>

#include "cox/tits.hpp"

namespace cox {

namespace {

using Vec = Group::Vec;

// Exact rank of a QF matrix given as rows.
int qf_matrix_rank(std::vector<std::vector<QF>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const QF inv = rows[r][col].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const QF f = rows[i][col] * inv;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// One-dimensional kernel vector of a corank-1 Gram matrix.
std::vector<QF> kernel_vector(const GramMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  std::vector<std::vector<QF>> rows(n, std::vector<QF>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = gram(i, j);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const QF inv = rows[r][col].inverse();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const QF f = rows[i][col] * inv;
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) != n - 1)
    throw internal_error("kernel_vector: Gram matrix is not corank 1");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<QF> v(n, QF(0));
  v[free_col] = QF(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const QF piv = rows[i][pivot_col[i]];
    v[pivot_col[i]] = -(rows[i][free_col] / piv);
  }
  return v;
}

Word embed_word(const std::vector<int>& comp, const Word& local) {
  Word out;
  out.reserve(local.size());
  for (int c : local) out.push_back(comp[c]);
  return out;
}

// Translations along independent simple-root directions of one affine
// component, computed inside the component's own group.
struct ComponentTranslations {
  std::vector<Word> local_generators;          // words over local indices
  std::vector<std::vector<QF>> rows;           // translation functionals
};

ComponentTranslations component_translations(const CoxeterMatrix& ambient,
                                             const std::vector<int>& comp) {
  const CoxeterMatrix sub = ambient.restrict_to(comp);
  const Group gc(sub);
  const auto& rep = gc.rep();
  const int n = sub.rank();
  const std::vector<QF> delta = kernel_vector(rep.gram());
  int anchor = 0;
  while (anchor < n && delta[anchor].is_zero()) ++anchor;
  if (anchor == n) throw internal_error("component_translations: zero kernel vector");

  // w is a translation iff w(alpha_j) - alpha_j is proportional to delta for
  // every j; the proportionality factors are the translation functional.
  auto translation_row = [&](const Word& w) -> std::optional<std::vector<QF>> {
    std::vector<QF> row(n);
    for (int j = 0; j < n; ++j) {
      Vec v = rep.simple_root(j);
      rep.apply_word(w, v);
      for (int t = 0; t < n; ++t) v(t) -= (j == t ? QF(1) : QF(0));
      const QF c = v(anchor) / delta[anchor];
      for (int t = 0; t < n; ++t)
        if (!(v(t) == c * delta[t])) return std::nullopt;
      row[j] = c;
    }
    return row;
  };

  ComponentTranslations out;
  const int k = n - 1;
  for (int j = 0; j < k; ++j) {
    const Wall alpha = simple_wall(gc, j);
    bool found = false;
    for (int depth = 1; depth <= 8 && !found; ++depth) {
      for (const Wall& rho : reflections_up_to(gc, depth)) {
        if (rho == alpha) continue;
        if (rep.pairing(alpha.root, rho.root).abs() < QF(1)) continue;
        const Word t = gc.mul(alpha.reflection, rho.reflection);
        auto row = translation_row(t);
        if (!row) continue;
        // Reject directions already covered: the row must increase the rank.
        auto trial = out.rows;
        trial.push_back(*row);
        if (qf_matrix_rank(trial) != static_cast<int>(trial.size())) continue;
        out.local_generators.push_back(t);
        out.rows.push_back(*row);
        found = true;
        break;
      }
    }
    if (!found)
      throw internal_error("component_translations: no parallel partner found for direction " +
                           std::to_string(j));
  }
  if (qf_matrix_rank(out.rows) != k)
    throw internal_error("component_translations: translation rows are rank deficient");
  return out;
}

}  // namespace

StandardFlat make_standard_flat(const Group& g, Word base, std::vector<int> type_set) {
  std::sort(type_set.begin(), type_set.end());
  type_set.erase(std::unique(type_set.begin(), type_set.end()), type_set.end());
  if (type_set.empty()) throw precondition_error("standard flat: empty type set");
  for (int t : type_set)
    if (t < 0 || t >= g.rank()) throw precondition_error("standard flat: type out of range");
  for (const auto& comp : components(g.matrix(), type_set)) {
    const Classification c = classify(g.matrix(), comp);
    if (c.kind != Kind::Affine)
      throw precondition_error("standard flat: component containing generator '" +
                               g.matrix().label(comp[0]) + "' is " + kind_name(c.kind) +
                               ", not affine");
  }
  return StandardFlat{g.nf(std::move(base)), std::move(type_set)};
}

int flat_dimension(const Group& g, const StandardFlat& f) {
  int dim = 0;
  for (const auto& comp : components(g.matrix(), f.type_set))
    dim += static_cast<int>(comp.size()) - 1;
  return dim;
}

WallSet flat_walls(const Group& g, const StandardFlat& f, int window) {
  if (window < 1) throw precondition_error("flat_walls: window must be >= 1");
  const CoxeterMatrix sub = g.matrix().restrict_to(f.type_set);
  const Group gc(sub);
  std::vector<Wall> out;
  for (const Wall& w : reflections_up_to(gc, window)) {
    Vec full = Vec::Zero(g.rank());
    for (int a = 0; a < sub.rank(); ++a) full(f.type_set[a]) = w.root(a);
    g.rep().apply_word(f.base, full);
    out.push_back(wall_of_root(g, std::move(full)));
  }
  return WallSet(std::move(out));
}

int flat_component_of(const Group& g, const StandardFlat& f, const Wall& w) {
  Vec v = w.root;
  g.rep().apply_word_inverse(f.base, v);
  v = g.rep().positive_normal_form(std::move(v));
  const auto comps = components(g.matrix(), f.type_set);
  int found = -1;
  for (int i = 0; i < g.rank(); ++i) {
    if (v(i).is_zero()) continue;
    int owner = -1;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::find(comps[c].begin(), comps[c].end(), i) != comps[c].end())
        owner = static_cast<int>(c);
    if (owner < 0)
      throw precondition_error("wall '" + g.str(w.reflection) + "' is not a wall of the flat");
    if (found >= 0 && owner != found)
      throw internal_error("flat_component_of: root support crosses components");
    found = owner;
  }
  if (found < 0) throw precondition_error("flat_component_of: zero root");
  return found;
}

bool f_parallel(const Group& g, const StandardFlat& f, const Wall& m, const Wall& mprime) {
  const int cm = flat_component_of(g, f, m);
  const int cm2 = flat_component_of(g, f, mprime);
  if (m == mprime) return true;
  if (cm != cm2) return false;
  return order_of_product(g, m, mprime) == 0;
}

ParallelClassReport parallel_class(const Group& g, const StandardFlat& f, const Wall& mu,
                                   int window) {
  const WallSet walls = flat_walls(g, f, window);
  if (!walls.contains(mu))
    throw precondition_error("parallel_class: pivot wall is not in the window wall set");
  ParallelClassReport out;
  out.pivot = mu;
  out.component = flat_component_of(g, f, mu);
  std::vector<Wall> members;
  for (const Wall& m : walls)
    if (m == mu || order_of_product(g, m, mu) == 0) members.push_back(m);
  ChainKind ck = chain_kind(g, WallSet(members));
  if (ck.kind != ChainClass::Segment)
    throw internal_error("parallel_class: the global-parallel family is not a chain");
  out.members = ck.ordered;
  out.chain = ChainClass::Segment;
  return out;
}

WallSet m_eucl(const Group& g, const StandardFlat& f, int window) {
  if (window < 2) throw precondition_error("m_eucl: window must be >= 2");
  const WallSet walls = flat_walls(g, f, window);
  std::vector<Wall> result;
  std::set<Wall> assigned;
  for (const Wall& mu : walls) {
    if (assigned.count(mu)) continue;
    // The global-parallel class of mu within the window.
    std::vector<Wall> cls;
    for (const Wall& m : walls)
      if (m == mu || order_of_product(g, m, mu) == 0) cls.push_back(m);
    for (const Wall& m : cls) assigned.insert(m);
    bool euclidean = false;
    for (const Wall& cand : walls) {
      if (std::find(cls.begin(), cls.end(), cand) != cls.end()) continue;
      std::vector<Wall> gens = cls;
      gens.push_back(cand);
      const ReflectionSubgroup sub = reflection_subgroup(g, WallSet(gens));
      if (sub.certification == Certification::Certified &&
          is_euclidean_triangle(sub).is_triangle) {
        euclidean = true;
        break;
      }
    }
    if (euclidean)
      for (const Wall& m : cls) result.push_back(m);
  }
  return WallSet(std::move(result));
}

DichotomyReport dichotomy(const Group& g, const StandardFlat& f, int window) {
  if (window < 2) throw precondition_error("dichotomy: window must be >= 2");
  DichotomyReport out;
  out.walls = flat_walls(g, f, window);
  const WallSet eucl = m_eucl(g, f, window);

  if (eucl == out.walls) {
    out.which = DichotomyReport::Case::Affine;
    const ReflectionSubgroup sub = reflection_subgroup(g, out.walls);
    if (sub.certification != Certification::Certified)
      throw internal_error("dichotomy: W(M(F)) subgroup computation not certified");
    for (const auto& comp : components(sub.induced, all_generators(sub.induced))) {
      const Classification c = classify(sub.induced, comp);
      if (c.kind != Kind::Affine) {
        std::ostringstream os;
        os << "dichotomy: case (ii) verification failed: component of the induced matrix is "
           << kind_name(c.kind);
        throw internal_error(os.str());
      }
    }
    out.verification.push_back("W(M(F)) certified as a direct product of irreducible affine "
                               "Coxeter groups");
    return out;
  }

  out.which = DichotomyReport::Case::CentralizedFamily;
  // M = all walls outside M_Eucl that are F-parallel to a fixed one of them.
  const WallSet outside = out.walls.set_minus(eucl);
  const Wall& m0 = outside[0];
  std::vector<Wall> family;
  for (const Wall& m : outside)
    if (f_parallel(g, f, m0, m)) family.push_back(m);
  out.m = WallSet(std::move(family));
  const WallSet rest = out.walls.set_minus(out.m);
  for (const Wall& a : out.m)
    for (const Wall& b : rest)
      if (!walls_commute(g, a, b)) {
        std::ostringstream os;
        os << "dichotomy: case (i) verification failed: '" << g.str(a.reflection) << "' and '"
           << g.str(b.reflection) << "' do not commute";
        throw internal_error(os.str());
      }
  out.verification.push_back("W(M) and W(M(F) \\ M) centralize each other on the window");
  return out;
}

ZnWitness extract_free_abelian(const Group& g, const StandardFlat& f) {
  ZnWitness out;
  const auto comps = components(g.matrix(), f.type_set);
  for (const auto& comp : comps) {
    const ComponentTranslations ct = component_translations(g.matrix(), comp);
    WitnessBlock block;
    block.kind = WitnessBlock::Kind::AffineTranslations;
    block.component = comp;
    block.translation_rows = ct.rows;
    block.certificate = "translation functionals of exact rank " +
                        std::to_string(static_cast<int>(ct.rows.size()));
    for (const Word& local : ct.local_generators) {
      Word ambient = embed_word(comp, local);
      ambient = g.conj(f.base, ambient);
      block.generators.push_back(ambient);
      out.generators.push_back(ambient);
    }
    out.rank += static_cast<int>(ct.rows.size());
    out.blocks.push_back(std::move(block));
  }

  out.commutators_trivial = true;
  for (std::size_t i = 0; i < out.generators.size(); ++i)
    for (std::size_t j = i + 1; j < out.generators.size(); ++j) {
      const Word comm = g.mul(g.mul(out.generators[i], out.generators[j]),
                              g.mul(g.inv(out.generators[i]), g.inv(out.generators[j])));
      if (!comm.empty()) out.commutators_trivial = false;
    }
  out.translation_rank_ok = witness_translation_rank(out) == out.rank;
  return out;
}

ZnWitness rank_witness(const CoxeterMatrix& m) {
  const FlatRankReport report = flat_rank(m);
  ZnWitness out;
  std::vector<std::pair<std::vector<int>, Word>> local_gens;  // (component, local word)

  for (const auto& part : report.contributions) {
    if (part.classification.kind == Kind::Spherical) continue;
    if (part.classification.kind == Kind::Affine) {
      const ComponentTranslations ct = component_translations(m, part.component);
      WitnessBlock block;
      block.kind = WitnessBlock::Kind::AffineTranslations;
      block.component = part.component;
      block.translation_rows = ct.rows;
      block.certificate = "translation functionals of exact rank " +
                          std::to_string(static_cast<int>(ct.rows.size()));
      for (const Word& local : ct.local_generators) {
        const Word ambient = embed_word(part.component, local);
        block.generators.push_back(ambient);
        out.generators.push_back(ambient);
        local_gens.push_back({part.component, local});
      }
      out.rank += static_cast<int>(ct.rows.size());
      out.blocks.push_back(std::move(block));
      continue;
    }

    // Indefinite component: one generator of certified infinite order, the
    // product of the reflections of a disjoint wall pair.
    const CoxeterMatrix sub = m.restrict_to(part.component);
    WitnessBlock block;
    block.kind = WitnessBlock::Kind::IndefiniteElement;
    block.component = part.component;
    bool found = false;
    if (sub.exact_field()) {
      const Group gc(sub);
      for (int depth = 1; depth <= 6 && !found; ++depth) {
        const auto walls = reflections_up_to(gc, depth);
        for (std::size_t i = 0; i < walls.size() && !found; ++i)
          for (std::size_t j = i + 1; j < walls.size() && !found; ++j) {
            if (gc.rep().pairing(walls[i].root, walls[j].root).abs() < QF(1)) continue;
            const Word gamma = gc.mul(walls[i].reflection, walls[j].reflection);
            block.generators.push_back(embed_word(part.component, gamma));
            block.pair_reflections = {embed_word(part.component, walls[i].reflection),
                                      embed_word(part.component, walls[j].reflection)};
            block.certificate = "exact |B| >= 1: the walls are disjoint, r r' has infinite order";
            found = true;
          }
      }
    } else {
      // Interval search for a strictly disjoint pair, then a word-problem
      // certificate: a finite-order product embeds in a finite standard
      // parabolic, so surviving powers up to the torsion bound proves
      // infinite order.
      const GeometricRep<IV> rep(sub);
      struct IRoot { Eigen::Matrix<IV, Eigen::Dynamic, 1> v; Word refl; };
      std::vector<IRoot> roots;
      for (int s = 0; s < sub.rank(); ++s) roots.push_back({rep.simple_root(s), Word{s}});
      for (int depth = 0; depth < 3; ++depth) {
        const auto snapshot = roots;
        for (const auto& r : snapshot)
          for (int s = 0; s < sub.rank(); ++s) {
            auto v = r.v;
            rep.reflect(s, v);
            bool negative = false;
            try {
              negative = rep.root_sign(v) < 0;
            } catch (const ambiguous_sign_error&) { continue; }
            if (negative) continue;
            bool known = false;
            for (const auto& o : roots) {
              bool same = true;
              for (int t = 0; t < sub.rank(); ++t)
                if (!IV::possibly_equal(v(t), o.v(t))) { same = false; break; }
              if (same) { known = true; break; }
            }
            if (known) continue;
            Word refl{s};
            refl.insert(refl.end(), r.refl.begin(), r.refl.end());
            refl.push_back(s);
            roots.push_back({v, tits_normal_form(sub, refl)});
          }
      }
      const long bound = torsion_order_bound(sub);
      for (std::size_t i = 0; i < roots.size() && !found; ++i)
        for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
          const IV b = rep.pairing(roots[i].v, roots[j].v);
          if (!(b.lo > 1.0 || b.hi < -1.0)) continue;
          Word prod = roots[i].refl;
          prod.insert(prod.end(), roots[j].refl.begin(), roots[j].refl.end());
          const Word gamma = tits_normal_form(sub, prod);
          bool infinite = true;
          Word power;
          for (long k = 1; k <= bound && infinite; ++k) {
            power.insert(power.end(), gamma.begin(), gamma.end());
            if (tits_normal_form(sub, power).empty()) infinite = false;
          }
          if (!infinite) continue;
          block.generators.push_back(embed_word(part.component, gamma));
          block.pair_reflections = {embed_word(part.component, roots[i].refl),
                                    embed_word(part.component, roots[j].refl)};
          block.certificate = "interval-certain |B| > 1; (r r')^k != 1 verified by word "
                              "rewriting for k <= " + std::to_string(bound) +
                              " (torsion bound from the finite parabolics)";
          found = true;
        }
    }
    if (!found)
      throw resource_error("rank_witness: no certified disjoint wall pair found in an "
                           "indefinite component");
    out.generators.push_back(block.generators[0]);
    local_gens.push_back({part.component, {}});
    out.rank += 1;
    out.blocks.push_back(std::move(block));
  }

  // Commutator certificates: exact normal forms when the ambient matrix is
  // exact-field, Tits rewriting otherwise.
  out.commutators_trivial = true;
  if (m.exact_field()) {
    const Group g(m);
    for (std::size_t i = 0; i < out.generators.size(); ++i)
      for (std::size_t j = i + 1; j < out.generators.size(); ++j) {
        const Word comm = g.mul(g.mul(out.generators[i], out.generators[j]),
                                g.mul(g.inv(out.generators[i]), g.inv(out.generators[j])));
        if (!comm.empty()) out.commutators_trivial = false;
      }
  } else {
    for (std::size_t i = 0; i < out.generators.size(); ++i)
      for (std::size_t j = i + 1; j < out.generators.size(); ++j) {
        Word comm = out.generators[i];
        comm.insert(comm.end(), out.generators[j].begin(), out.generators[j].end());
        Word gi(out.generators[i].rbegin(), out.generators[i].rend());
        Word gj(out.generators[j].rbegin(), out.generators[j].rend());
        comm.insert(comm.end(), gi.begin(), gi.end());
        comm.insert(comm.end(), gj.begin(), gj.end());
        if (!tits_normal_form(m, comm).empty()) out.commutators_trivial = false;
      }
  }
  out.translation_rank_ok =
      witness_translation_rank(out) + static_cast<int>(std::count_if(
          out.blocks.begin(), out.blocks.end(), [](const WitnessBlock& b) {
            return b.kind == WitnessBlock::Kind::IndefiniteElement;
          })) == out.rank;
  return out;
}

int witness_translation_rank(const ZnWitness& w) {
  // The affine blocks live on disjoint component coordinates, so the stacked
  // matrix is block diagonal and the rank adds up; computed exactly anyway.
  int total_cols = 0;
  std::vector<std::pair<const WitnessBlock*, int>> offsets;
  for (const auto& b : w.blocks) {
    if (b.kind != WitnessBlock::Kind::AffineTranslations) continue;
    offsets.push_back({&b, total_cols});
    total_cols += static_cast<int>(b.component.size());
  }
  std::vector<std::vector<QF>> rows;
  for (const auto& [b, off] : offsets)
    for (const auto& r : b->translation_rows) {
      std::vector<QF> row(total_cols, QF(0));
      for (std::size_t t = 0; t < r.size(); ++t) row[off + t] = r[t];
      rows.push_back(std::move(row));
    }
  return qf_matrix_rank(std::move(rows));
}

}  // namespace cox
