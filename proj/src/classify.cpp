#include "cox/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cox {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Spherical: return "spherical";
    case Kind::Affine: return "affine";
    case Kind::Indefinite: return "indefinite";
  }
  throw internal_error("kind_name: bad enum");
}

GramMatrix gram_matrix(const CoxeterMatrix& m, const std::vector<int>& subset) {
  const int n = static_cast<int>(subset.size());
  GramMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b(i, j) = QF(1);
      } else {
        const int ord = m.order(subset[i], subset[j]);
        if (!label_in_exact_field(ord))
          throw precondition_error("gram_matrix: label " + std::to_string(ord) +
                                   " lies outside Q(sqrt2, sqrt3)");
        b(i, j) = minus_cos_pi_over(ord);
      }
    }
  }
  return b;
}

GramSignature gram_signature(GramMatrix b) {
  const int n = static_cast<int>(b.rows());
  std::vector<int> rem(n);
  std::iota(rem.begin(), rem.end(), 0);
  int positive = 0;

  while (!rem.empty()) {
    int pivot = -1;
    for (int r : rem) {
      const int s = b(r, r).sign();
      if (s < 0) return {false, false, 0};  // negative diagonal: indefinite
      if (s > 0) { pivot = r; break; }
    }
    if (pivot < 0) {
      // All remaining diagonal entries vanish. Any nonzero off-diagonal entry
      // gives a negative 2x2 principal minor.
      for (size_t x = 0; x < rem.size(); ++x)
        for (size_t y = x + 1; y < rem.size(); ++y)
          if (!b(rem[x], rem[y]).is_zero()) return {false, false, 0};
      const int corank = static_cast<int>(rem.size());
      return {false, true, corank};
    }
    const QF piv = b(pivot, pivot);
    rem.erase(std::find(rem.begin(), rem.end(), pivot));
    for (int i : rem)
      for (int j : rem) b(i, j) = b(i, j) - b(i, pivot) * b(pivot, j) / piv;
    ++positive;
  }
  return {true, true, 0};
}

namespace {

struct Diagram {
  int n = 0;
  std::vector<std::vector<int>> adj;                 // neighbours (edges with m >= 3 or inf)
  std::map<std::pair<int, int>, int> label;          // edge labels
  int edge(int i, int j) const { return label.at({std::min(i, j), std::max(i, j)}); }
};

Diagram build_diagram(const CoxeterMatrix& m, const std::vector<int>& comp) {
  Diagram d;
  d.n = static_cast<int>(comp.size());
  d.adj.resize(d.n);
  for (int i = 0; i < d.n; ++i) {
    for (int j = i + 1; j < d.n; ++j) {
      const int ord = m.order(comp[i], comp[j]);
      if (ord >= 3 || ord == 0) {
        d.adj[i].push_back(j);
        d.adj[j].push_back(i);
        d.label[{i, j}] = ord;
      }
    }
  }
  return d;
}

bool all_labels_equal(const Diagram& d, int value) {
  for (const auto& [e, l] : d.label)
    if (l != value) return false;
  return true;
}

Classification spherical(const std::string& family) { return {Kind::Spherical, 0, family}; }
Classification affine(const std::string& family, int dim) { return {Kind::Affine, dim, family}; }
Classification indefinite() { return {Kind::Indefinite, 0, ""}; }

// Path helper: nodes of the path in order, starting from a degree<=1 node.
std::vector<int> path_order(const Diagram& d) {
  int start = 0;
  for (int i = 0; i < d.n; ++i)
    if (d.adj[i].size() <= 1) { start = i; break; }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < d.n) {
    int next = -1;
    for (int nb : d.adj[cur])
      if (nb != prev) { next = nb; break; }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

Classification classify_path(const Diagram& d) {
  const int n = d.n;
  const auto order = path_order(d);
  std::vector<int> labels;
  for (int i = 0; i + 1 < n; ++i) labels.push_back(d.edge(order[i], order[i + 1]));
  auto rev = labels;
  std::reverse(rev.begin(), rev.end());
  if (std::lexicographical_compare(rev.begin(), rev.end(), labels.begin(), labels.end()))
    labels = rev;  // canonical direction

  std::vector<int> big;  // positions with label != 3
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] != 3) big.push_back(i);

  if (big.empty()) return spherical("A" + std::to_string(n));

  const int last = static_cast<int>(labels.size()) - 1;
  if (big.size() == 1) {
    const int pos = big[0];
    const int l = labels[pos];
    const bool at_end = (pos == 0 || pos == last);
    if (l == 4) {
      if (at_end) return spherical("B" + std::to_string(n));
      if (n == 4 && pos == 1) return spherical("F4");
      if (n == 5 && (pos == 1 || pos == 2)) return affine("F~4", 4);
      return indefinite();
    }
    if (l == 5 && at_end) {
      if (n == 3) return spherical("H3");
      if (n == 4) return spherical("H4");
      return indefinite();
    }
    if (l == 6 && at_end && n == 3) return affine("G~2", 2);
    return indefinite();
  }
  if (big.size() == 2 && big[0] == 0 && big[1] == last && labels[0] == 4 && labels[last] == 4)
    return affine("C~" + std::to_string(n - 1), n - 1);
  return indefinite();
}

// Arms of a single branch node: sorted lists of edge labels walking outward.
std::vector<std::vector<int>> arms_of(const Diagram& d, int center) {
  std::vector<std::vector<int>> arms;
  for (int nb : d.adj[center]) {
    std::vector<int> labels{d.edge(center, nb)};
    int prev = center, cur = nb;
    while (true) {
      int next = -1;
      for (int x : d.adj[cur])
        if (x != prev) { next = x; break; }
      if (next < 0) break;
      labels.push_back(d.edge(cur, next));
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(labels));
  }
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    return x.size() < y.size() || (x.size() == y.size() && x < y);
  });
  return arms;
}

Classification classify_single_fork(const Diagram& d, int center) {
  auto arms = arms_of(d, center);
  if (arms.size() != 3) return indefinite();
  std::vector<size_t> len{arms[0].size(), arms[1].size(), arms[2].size()};

  int non3 = 0;
  bool four_at_far_end_of_long_arm = false;
  for (size_t k = 0; k < 3; ++k) {
    for (size_t i = 0; i < arms[k].size(); ++i) {
      if (arms[k][i] != 3) {
        ++non3;
        if (k == 2 && i + 1 == arms[k].size() && arms[k][i] == 4 && len[0] == 1 && len[1] == 1)
          four_at_far_end_of_long_arm = true;
      }
    }
  }
  const int n = d.n;
  if (non3 == 0) {
    if (len[0] == 1 && len[1] == 1) return spherical("D" + std::to_string(n));
    if (len[0] == 1 && len[1] == 2 && len[2] == 2) return spherical("E6");
    if (len[0] == 1 && len[1] == 2 && len[2] == 3) return spherical("E7");
    if (len[0] == 1 && len[1] == 2 && len[2] == 4) return spherical("E8");
    if (len[0] == 2 && len[1] == 2 && len[2] == 2) return affine("E~6", 6);
    if (len[0] == 1 && len[1] == 3 && len[2] == 3) return affine("E~7", 7);
    if (len[0] == 1 && len[1] == 2 && len[2] == 5) return affine("E~8", 8);
    return indefinite();
  }
  if (non3 == 1 && four_at_far_end_of_long_arm)
    return affine("B~" + std::to_string(n - 1), n - 1);
  return indefinite();
}

Classification classify_two_forks(const Diagram& d, int f1, int f2) {
  if (!all_labels_equal(d, 3)) return indefinite();
  // Both branch nodes must carry exactly two leaves; the remainder is the
  // connecting path.
  for (int f : {f1, f2}) {
    int leaves = 0;
    for (int nb : d.adj[f])
      if (d.adj[nb].size() == 1) ++leaves;
    if (leaves != 2) return indefinite();
  }
  // Tree with exactly two degree-3 nodes, all other degrees <= 2, four leaves.
  int leaf_count = 0;
  for (int i = 0; i < d.n; ++i)
    if (d.adj[i].size() == 1) ++leaf_count;
  if (leaf_count != 4) return indefinite();
  return affine("D~" + std::to_string(d.n - 1), d.n - 1);
}

}  // namespace

Classification classify_by_catalog(const CoxeterMatrix& m, const std::vector<int>& component) {
  const int n = static_cast<int>(component.size());
  if (n == 0) throw precondition_error("classify: empty component");
  if (components(m, component).size() != 1)
    throw precondition_error("classify: subset is not a single diagram component");

  if (n == 1) return spherical("A1");
  if (n == 2) {
    const int ord = m.order(component[0], component[1]);
    if (ord == 0) return affine("A~1", 1);
    if (ord == 3) return spherical("A2");
    if (ord == 4) return spherical("B2");
    if (ord == 6) return spherical("G2");
    return spherical("I2(" + std::to_string(ord) + ")");
  }

  const Diagram d = build_diagram(m, component);
  // An infinite label in rank >= 3 never appears in the finite or affine
  // catalog.
  for (const auto& [e, l] : d.label)
    if (l == 0) return indefinite();

  int edges = static_cast<int>(d.label.size());
  if (edges >= n) {
    // Contains a cycle; the only catalog entry is the all-3 full cycle.
    bool all_deg2 = true;
    for (int i = 0; i < n; ++i)
      if (d.adj[i].size() != 2) all_deg2 = false;
    if (edges == n && all_deg2 && all_labels_equal(d, 3))
      return affine("A~" + std::to_string(n - 1), n - 1);
    return indefinite();
  }

  // Tree.
  int maxdeg = 0;
  std::vector<int> forks;
  for (int i = 0; i < n; ++i) {
    maxdeg = std::max(maxdeg, static_cast<int>(d.adj[i].size()));
    if (d.adj[i].size() >= 3) forks.push_back(i);
  }
  if (maxdeg >= 5) return indefinite();
  if (maxdeg == 4) {
    if (n == 5 && forks.size() == 1 && all_labels_equal(d, 3)) return affine("D~4", 4);
    return indefinite();
  }
  if (forks.size() >= 3) return indefinite();
  if (forks.size() == 2) return classify_two_forks(d, forks[0], forks[1]);
  if (forks.size() == 1) return classify_single_fork(d, forks[0]);
  return classify_path(d);
}

Classification classify(const CoxeterMatrix& m, const std::vector<int>& component) {
  Classification cat = classify_by_catalog(m, component);
  bool exact = true;
  for (size_t i = 0; i < component.size() && exact; ++i)
    for (size_t j = i + 1; j < component.size() && exact; ++j)
      if (!label_in_exact_field(m.order(component[i], component[j]))) exact = false;
  if (exact) {
    const GramSignature sig = gram_signature(gram_matrix(m, component));
    Kind by_sig = Kind::Indefinite;
    if (sig.positive_definite) by_sig = Kind::Spherical;
    else if (sig.positive_semidefinite && sig.corank == 1) by_sig = Kind::Affine;
    else if (sig.positive_semidefinite)
      throw internal_error("classify: connected diagram with Gram corank > 1");
    if (by_sig != cat.kind)
      throw internal_error("classify: catalog and Gram signature disagree on component");
  }
  return cat;
}

std::optional<boost::multiprecision::cpp_int> spherical_order(const CoxeterMatrix& m,
                                                              const std::vector<int>& subset) {
  using boost::multiprecision::cpp_int;
  if (subset.empty()) return cpp_int(1);
  cpp_int total = 1;
  for (const auto& comp : components(m, subset)) {
    const Classification c = classify(m, comp);
    if (c.kind != Kind::Spherical) return std::nullopt;
    const int n = static_cast<int>(comp.size());
    cpp_int ord;
    auto factorial = [](int k) {
      cpp_int f = 1;
      for (int i = 2; i <= k; ++i) f *= i;
      return f;
    };
    if (c.family[0] == 'A') ord = factorial(n + 1);
    else if (c.family[0] == 'B') ord = factorial(n) << n;
    else if (c.family[0] == 'D') ord = factorial(n) << (n - 1);
    else if (c.family == "E6") ord = 51840;
    else if (c.family == "E7") ord = 2903040;
    else if (c.family == "E8") ord = 696729600;
    else if (c.family == "F4") ord = 1152;
    else if (c.family == "G2") ord = 12;
    else if (c.family == "H3") ord = 120;
    else if (c.family == "H4") ord = 14400;
    else if (c.family.rfind("I2(", 0) == 0)
      ord = 2 * std::stoi(c.family.substr(3, c.family.size() - 4));
    else
      throw internal_error("spherical_order: unhandled family " + c.family);
    total *= ord;
  }
  return total;
}

long torsion_order_bound(const CoxeterMatrix& m, long cap) {
  const int n = m.rank();
  if (n > 16)
    throw resource_error("torsion_order_bound: rank too large for subset enumeration", n);
  boost::multiprecision::cpp_int best = 2;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t.push_back(i);
    auto ord = spherical_order(m, t);
    if (ord && *ord > best) best = *ord;
  }
  best /= 2;
  if (best > cap) return cap;
  return static_cast<long>(best);
}

}  // namespace cox
