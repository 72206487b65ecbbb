#include "cox/building.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cox {

namespace {

bool commute(const CoxeterMatrix& m, int a, int b) { return a != b && m.order(a, b) == 2; }

// Items movable to the front of the decorated word by commutation moves:
// position i qualifies when every earlier letter commutes with it. At most
// one per generator.
std::vector<std::size_t> movable_front(const CoxeterMatrix& m, const Address& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = commute(m, a[j].first, a[i].first);
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> movable_back(const CoxeterMatrix& m, const Address& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < a.size() && ok; ++j) ok = commute(m, a[j].first, a[i].first);
    if (ok) out.push_back(i);
  }
  return out;
}

// Reduced in the right-angled sense: no same-generator pair separated only by
// commuting letters.
bool reduced_right_angled(const CoxeterMatrix& m, const Address& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i].first != a[j].first) continue;
      bool blocked = false;
      for (std::size_t k = i + 1; k < j && !blocked; ++k)
        blocked = !commute(m, a[k].first, a[i].first);
      if (!blocked) return false;
    }
  return true;
}

Address trace_canonical(const CoxeterMatrix& m, Address a) {
  Address out;
  while (!a.empty()) {
    std::size_t best = a.size();
    for (std::size_t i : movable_front(m, a))
      if (best == a.size() || a[i].first < a[best].first) best = i;
    out.push_back(a[best]);
    a.erase(a.begin() + best);
  }
  return out;
}

Word types_of(const Address& a) {
  Word w;
  w.reserve(a.size());
  for (const auto& [s, d] : a) w.push_back(s);
  return w;
}

}  // namespace

Address address_of_element(const Word& w) {
  Address a;
  a.reserve(w.size());
  for (int s : w) a.push_back({s, 1});
  return a;
}

BuildingModel make_building(CoxeterMatrix matrix, std::vector<int> thickness) {
  if (static_cast<int>(thickness.size()) != matrix.rank())
    throw validation_error("building: thickness needs one entry per generator");
  bool thick = false;
  for (int q : thickness) {
    if (q < 1) throw validation_error("building: thickness must be >= 1");
    if (q > 1) thick = true;
  }
  if (thick) {
    for (int i = 0; i < matrix.rank(); ++i)
      for (int j = i + 1; j < matrix.rank(); ++j) {
        const int ord = matrix.order(i, j);
        if (ord != 2 && ord != 0)
          throw validation_error("building: thick models require a right-angled matrix "
                                 "(labels 2 or infinity); offending cell (" +
                                 matrix.label(i) + "," + matrix.label(j) + ")");
      }
  }
  return BuildingModel{std::move(matrix), std::move(thickness)};
}

ChamberGraph::ChamberGraph(BuildingModel model, int radius, std::size_t cap)
    : model_(std::move(model)), weyl_(model_.matrix), radius_(radius) {
  if (radius < 0) throw precondition_error("chamber graph: radius must be >= 0");
  addr_.push_back({});
  index_.emplace(Address{}, 0);
  adj_.push_back(std::vector<std::vector<int>>(model_.matrix.rank()));

  auto find_or_create = [&](const Address& a) -> int {
    auto it = index_.find(a);
    if (it != index_.end()) return it->second;
    if (addr_.size() >= cap)
      throw resource_error("chamber graph: element cap exceeded", radius_);
    const int id = static_cast<int>(addr_.size());
    addr_.push_back(a);
    index_.emplace(a, id);
    adj_.push_back(std::vector<std::vector<int>>(model_.matrix.rank()));
    return id;
  };

  for (std::size_t head = 0; head < addr_.size(); ++head) {
    for (int s = 0; s < model_.matrix.rank(); ++s) {
      if (!adj_[head][s].empty()) continue;
      const Address a = addr_[head];
      std::vector<Address> members;
      if (model_.thick()) {
        // Locate an s-item movable to the back: the panel's gate drops it.
        Address gate = a;
        bool descent = false;
        for (std::size_t i : movable_back(model_.matrix, a))
          if (a[i].first == s) {
            gate.erase(gate.begin() + i);
            descent = true;
            break;
          }
        if (!descent && static_cast<int>(a.size()) + 1 > radius_)
          continue;  // ascent children would leave the ball; panel stays incomplete
        gate = trace_canonical(model_.matrix, gate);
        members.push_back(gate);
        for (int d = 1; d <= model_.thickness[s]; ++d) {
          Address child = gate;
          child.push_back({s, d});
          members.push_back(trace_canonical(model_.matrix, child));
        }
      } else {
        Word other = types_of(a);
        other.push_back(s);
        other = weyl_.nf(std::move(other));
        if (other.size() > a.size() && static_cast<int>(other.size()) > radius_)
          continue;  // ascent neighbour outside the ball
        members.push_back(a);
        members.push_back(address_of_element(other));
      }
      std::vector<int> ids;
      for (const auto& mem : members) ids.push_back(find_or_create(mem));
      for (int id : ids) {
        std::vector<int> rest;
        for (int other : ids)
          if (other != id) rest.push_back(other);
        adj_[id][s] = std::move(rest);
      }
    }
  }
}

int ChamberGraph::find(const Address& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

ChamberGraph::Panel ChamberGraph::panel(int id, int s) const {
  Panel p;
  p.chambers.push_back(id);
  for (int x : adj_[id][s]) p.chambers.push_back(x);
  std::sort(p.chambers.begin(), p.chambers.end());
  p.chambers.erase(std::unique(p.chambers.begin(), p.chambers.end()), p.chambers.end());
  p.complete = static_cast<int>(p.chambers.size()) == model_.thickness[s] + 1;
  return p;
}

Address ChamberGraph::canonical(Address a) const {
  for (const auto& [s, d] : a) {
    if (s < 0 || s >= model_.matrix.rank())
      throw validation_error("address: generator index out of range");
    if (d < 1 || d > model_.thickness[s])
      throw validation_error("address: digit " + std::to_string(d) + " exceeds thickness of '" +
                             model_.matrix.label(s) + "'");
  }
  if (model_.thick()) {
    if (!reduced_right_angled(model_.matrix, a))
      throw validation_error("address: underlying word is not reduced");
    return trace_canonical(model_.matrix, a);
  }
  const Word w = weyl_.nf(types_of(a));
  if (w.size() != a.size()) throw validation_error("address: underlying word is not reduced");
  return address_of_element(w);
}

std::string ChamberGraph::address_str(const Address& a) const {
  if (a.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += " ";
    out += model_.matrix.label(a[i].first) + ":" + std::to_string(a[i].second);
  }
  return out;
}

void ChamberGraph::corrupt_panel_for_tests(int id, int s) {
  if (adj_[id][s].empty()) throw precondition_error("corrupt_panel_for_tests: empty panel");
  // Redirect one directed panel edge to the deepest chamber in the graph.
  int deepest = 0;
  for (std::size_t i = 0; i < addr_.size(); ++i)
    if (addr_[i].size() > addr_[deepest].size()) deepest = static_cast<int>(i);
  adj_[id][s][0] = deepest;
}

Word w_distance(const ChamberGraph& g, int x, int y) {
  const CoxeterMatrix& m = g.model().matrix;
  Address ax = g.address(x), ay = g.address(y);
  Word folds;
  // Strip common first crossings; fold a shared frontier panel whose digits
  // differ into a single letter. Once panels have been folded, a generator
  // can only reach the junction when it commutes with every folded type.
  bool progress = true;
  while (progress) {
    progress = false;
    const auto lx = movable_front(m, ax);
    const auto ly = movable_front(m, ay);
    for (std::size_t i : lx) {
      bool reaches = true;
      for (int fgen : folds)
        if (!commute(m, fgen, ax[i].first)) { reaches = false; break; }
      if (!reaches) continue;
      for (std::size_t j : ly) {
        if (ax[i].first != ay[j].first) continue;
        if (ax[i].second != ay[j].second) folds.push_back(ax[i].first);
        ax.erase(ax.begin() + i);
        ay.erase(ay.begin() + j);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  Word result;
  const Word tx = types_of(ax);
  result.insert(result.end(), tx.rbegin(), tx.rend());
  result.insert(result.end(), folds.begin(), folds.end());
  const Word ty = types_of(ay);
  result.insert(result.end(), ty.begin(), ty.end());
  return g.weyl().nf(std::move(result));
}

int numerical_distance(const ChamberGraph& g, int x, int y) {
  return static_cast<int>(w_distance(g, x, y).size());
}

AxiomReport check_axioms(const ChamberGraph& g, int samples, int radius, std::uint64_t seed) {
  if (samples < 1 || radius < 1)
    throw precondition_error("check_axioms: samples and radius must be >= 1");
  if (radius + 1 > g.radius())
    throw precondition_error("check_axioms: the chamber graph must be materialized one step "
                             "past the sampling radius");
  std::vector<int> pool;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.depth(static_cast<int>(i)) <= radius) pool.push_back(static_cast<int>(i));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_s(0, g.model().matrix.rank() - 1);

  AxiomReport report;
  report.samples = samples;
  auto note = [&](const std::string& axiom, const std::string& detail) {
    if (report.violations.size() < 64) report.violations.push_back({axiom, detail});
  };

  for (int it = 0; it < samples; ++it) {
    const int x = pool[pick(rng)];
    const int y = pool[pick(rng)];
    const int s = pick_s(rng);
    const Word w = w_distance(g, x, y);

    if (w.empty() != (x == y))
      note("Bu1", "delta(x,y) = 1 iff x = y fails for x=" + g.address_str(g.address(x)) +
                      " y=" + g.address_str(g.address(y)));

    const Word ws = g.weyl().mul(w, Word{s});
    const bool ascending = ws.size() == w.size() + 1;

    const auto panel = g.panel(y, s);
    bool bu3_found = false;
    for (int z : panel.chambers) {
      if (z == y) continue;
      const Word dyz = w_distance(g, y, z);
      if (dyz != Word{s}) {
        note("Bu2", "panel member has delta(y,z) != s at y=" + g.address_str(g.address(y)) +
                        " z=" + g.address_str(g.address(z)));
        continue;
      }
      const Word dxz = w_distance(g, x, z);
      if (!(dxz == w || dxz == ws))
        note("Bu2", "delta(x,z) is neither w nor ws at x=" + g.address_str(g.address(x)) +
                        " z=" + g.address_str(g.address(z)));
      if (ascending && dxz != ws)
        note("Bu2", "l(ws) = l(w)+1 but delta(x,z) != ws at z=" + g.address_str(g.address(z)));
      if (dxz == ws) bu3_found = true;
    }
    if (!bu3_found)
      note("Bu3", "no chamber z with delta(y,z) = s and delta(x,z) = ws at x=" +
                      g.address_str(g.address(x)) + " y=" + g.address_str(g.address(y)) +
                      " s=" + g.model().matrix.label(s));
  }
  return report;
}

std::vector<int> residue_chambers(const ChamberGraph& g, const ResidueRef& r) {
  if (!spherical_order(g.model().matrix, r.types))
    throw precondition_error("residue: type set is not spherical");
  std::vector<int> out{r.anchor};
  std::set<int> seen{r.anchor};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s : r.types) {
      const auto p = g.panel(out[head], s);
      if (!p.complete)
        throw resource_error("residue: panel truncated by the materialization radius",
                             g.radius());
      for (int z : p.chambers)
        if (seen.insert(z).second) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int project(const ChamberGraph& g, const ResidueRef& r, int x) {
  const auto chambers = residue_chambers(g, r);
  int best = -1, best_len = -1;
  bool unique = true;
  for (int c : chambers) {
    const int l = numerical_distance(g, x, c);
    if (best < 0 || l < best_len) {
      best = c;
      best_len = l;
      unique = true;
    } else if (l == best_len) {
      unique = false;
    }
  }
  if (!unique) throw internal_error("project: gate is not unique");
  // Gate property against every chamber of the residue.
  const Word wc = w_distance(g, x, best);
  for (int d : chambers) {
    const Word wd = w_distance(g, x, d);
    const Word cd = w_distance(g, best, d);
    if (wd != g.weyl().mul(wc, cd) || wd.size() != wc.size() + cd.size())
      throw internal_error("project: gate property fails inside the residue");
  }
  return best;
}

Apartment extend_apartment(const ChamberGraph& g, const std::vector<int>& chambers,
                           const std::vector<Word>& images, int radius, int budget) {
  if (chambers.empty() || chambers.size() != images.size())
    throw precondition_error("extend_apartment: need matching chambers and images");
  // Normalize the map so the first chamber sits at the identity.
  std::vector<Word> f;
  const Word shift = g.weyl().inv(images[0]);
  for (const auto& w : images) f.push_back(g.weyl().mul(shift, w));
  for (std::size_t i = 0; i < chambers.size(); ++i)
    for (std::size_t j = 0; j < chambers.size(); ++j) {
      const Word expect = g.weyl().mul(g.weyl().inv(f[i]), f[j]);
      if (w_distance(g, chambers[i], chambers[j]) != expect)
        throw precondition_error(
            "extend_apartment: the map does not preserve the W-distance on the pair (" +
            g.address_str(g.address(chambers[i])) + ", " +
            g.address_str(g.address(chambers[j])) + ")");
    }

  std::map<Word, int> placed;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    auto [it, fresh] = placed.emplace(f[i], chambers[i]);
    if (!fresh && it->second != chambers[i])
      throw precondition_error("extend_apartment: two chambers share an image");
  }

  const Ball wball(g.weyl(), radius);
  std::vector<Word> todo;
  for (std::size_t id = 0; id < wball.size(); ++id) {
    const Word& w = wball.word(static_cast<int>(id));
    if (!placed.count(w)) todo.push_back(w);
  }

  // Greedy with chronological backtracking over the BFS order.
  int trials = 0;
  std::vector<std::vector<int>> options(todo.size());
  std::vector<std::size_t> cursor(todo.size(), 0);
  std::vector<bool> fresh_level(todo.size(), true);
  std::size_t k = 0;
  while (k < todo.size()) {
    const Word& w = todo[k];
    if (fresh_level[k]) {
      Word parent = w;
      const int s = parent.back();
      parent.pop_back();
      auto pit = placed.find(parent);
      if (pit == placed.end())
        throw internal_error("extend_apartment: parent not placed in BFS order");
      options[k].clear();
      cursor[k] = 0;
      for (int z : g.panel(pit->second, s).chambers) {
        if (z == pit->second) continue;
        bool ok = true;
        for (const auto& [v, cv] : placed) {
          if (w_distance(g, cv, z) != g.weyl().mul(g.weyl().inv(v), w)) { ok = false; break; }
        }
        if (ok) options[k].push_back(z);
      }
      fresh_level[k] = false;
    }
    if (++trials > budget)
      throw resource_error("extend_apartment: backtracking budget exhausted", budget);
    if (cursor[k] < options[k].size()) {
      placed.emplace(w, options[k][cursor[k]++]);
      ++k;
      if (k < todo.size()) fresh_level[k] = true;
    } else {
      if (k == 0)
        throw resource_error("extend_apartment: no apartment extends the given set", budget);
      fresh_level[k] = true;
      --k;
      placed.erase(todo[k]);
    }
  }

  Apartment out;
  out.radius = radius;
  out.chamber_of = std::move(placed);
  out.certified = true;
  return out;
}

Apartment extend_by_projection(const ChamberGraph& g, const Apartment& a,
                               const std::vector<int>& c_set, const ResidueRef& rho, int c, int d,
                               int radius) {
  if (std::find(c_set.begin(), c_set.end(), c) == c_set.end())
    throw precondition_error("extend_by_projection: c must belong to C");
  const auto rho_chambers = residue_chambers(g, rho);
  if (!std::binary_search(rho_chambers.begin(), rho_chambers.end(), c))
    throw precondition_error("extend_by_projection: c must belong to the residue");
  if (!std::binary_search(rho_chambers.begin(), rho_chambers.end(), d) || d == c)
    throw precondition_error("extend_by_projection: d must belong to the residue and differ "
                             "from c");
  for (int cp : c_set)
    if (project(g, rho, cp) != c)
      throw precondition_error("extend_by_projection: chamber " + g.address_str(g.address(cp)) +
                               " does not project onto c");

  auto image_of = [&](int chamber) -> Word {
    for (const auto& [w, id] : a.chamber_of)
      if (id == chamber) return w;
    throw precondition_error("extend_by_projection: a chamber of C is not in the apartment");
  };
  std::vector<int> chambers = c_set;
  std::vector<Word> images;
  for (int cp : c_set) images.push_back(image_of(cp));
  const Word wd = w_distance(g, c, d);
  chambers.push_back(d);
  images.push_back(g.weyl().mul(image_of(c), wd));
  return extend_apartment(g, chambers, images, radius);
}

Apartment standard_apartment(const ChamberGraph& g, int radius) {
  Apartment out;
  out.radius = radius;
  const Ball wball(g.weyl(), radius);
  for (std::size_t id = 0; id < wball.size(); ++id) {
    const Word& w = wball.word(static_cast<int>(id));
    const int chamber = g.find(address_of_element(w));
    if (chamber < 0)
      throw resource_error("standard_apartment: radius exceeds the materialized graph",
                           g.radius());
    out.chamber_of.emplace(w, chamber);
  }
  return out;
}

FlatProjectionResult flat_projection_set(const ChamberGraph& g, const StandardFlat& flat,
                                         int c0, int window) {
  const CoxeterMatrix& m = g.model().matrix;
  FlatProjectionResult out;

  // Chambers of the flat inside the standard apartment, out to the window.
  const CoxeterMatrix sub = m.restrict_to(flat.type_set);
  const Group subgroup(sub);
  const Ball subball(subgroup, window);
  const Group& weyl = g.weyl();
  std::vector<int> flat_chambers;
  for (std::size_t id = 0; id < subball.size(); ++id) {
    const Word& local = subball.word(static_cast<int>(id));
    Word ambient;
    for (int c : local) ambient.push_back(flat.type_set[c]);
    const Word element = weyl.mul(flat.base, ambient);
    const int chamber = g.find(address_of_element(element));
    if (chamber < 0) {
      out.partial = true;
      continue;
    }
    flat_chambers.push_back(chamber);
  }

  // Spherical subsets of S: the types of the residues rho(x), x in F.
  std::vector<std::vector<int>> spherical_subsets;
  for (unsigned mask = 0; mask < (1u << m.rank()); ++mask) {
    std::vector<int> u;
    for (int i = 0; i < m.rank(); ++i)
      if (mask & (1u << i)) u.push_back(i);
    if (spherical_order(m, u)) spherical_subsets.push_back(std::move(u));
  }

  std::set<int> projections;
  for (int c : flat_chambers) {
    for (const auto& u : spherical_subsets) {
      try {
        projections.insert(project(g, ResidueRef{c, u}, c0));
      } catch (const resource_error&) {
        out.partial = true;
      }
    }
  }
  out.projections.assign(projections.begin(), projections.end());

  // Theorem-style verdict: the projection set embeds in an apartment.
  std::vector<int> chambers(out.projections.begin(), out.projections.end());
  std::vector<Word> images;
  for (int c : chambers) images.push_back(w_distance(g, chambers[0], c));
  try {
    out.apartment = extend_apartment(g, chambers, images, window);
    out.verdict = true;
  } catch (const precondition_error&) {
    out.verdict = false;
  } catch (const resource_error&) {
    out.verdict = false;
  }
  return out;
}

}  // namespace cox
