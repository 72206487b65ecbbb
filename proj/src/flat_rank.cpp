#include "cox/flat_rank.hpp"

#include <map>

namespace cox {

namespace {

int contribution_of(const Classification& c, int size) {
  switch (c.kind) {
    case Kind::Affine: return size - 1;
    case Kind::Indefinite: return 1;
    case Kind::Spherical: return 0;
  }
  throw internal_error("contribution_of: bad enum");
}

}  // namespace

FlatRankReport flat_rank(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n > 24)
    throw resource_error("flat_rank: rank limited to 24 for exhaustive subset search", n);

  std::map<std::vector<int>, Classification> memo;
  auto classify_memo = [&](const std::vector<int>& comp) -> const Classification& {
    auto it = memo.find(comp);
    if (it == memo.end()) it = memo.emplace(comp, classify(m, comp)).first;
    return it->second;
  };

  FlatRankReport best;
  best.rank = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) subset.push_back(i);
    int total = 0;
    std::vector<ComponentContribution> parts;
    for (const auto& comp : components(m, subset)) {
      const Classification& c = classify_memo(comp);
      const int f = contribution_of(c, static_cast<int>(comp.size()));
      total += f;
      parts.push_back({comp, c, f});
    }
    // Masks are visited in increasing (numeric) order, so a strict improvement
    // keeps the smallest witness.
    if (total > best.rank) {
      best.rank = total;
      best.witness = subset;
      best.contributions = std::move(parts);
    }
  }
  return best;
}

bool is_hyperbolic(const CoxeterMatrix& m) { return flat_rank(m).rank <= 1; }

}  // namespace cox
