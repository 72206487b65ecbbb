#include "cox/matrix.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cox/field.hpp"

namespace cox {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators,
                             std::vector<std::vector<int>> orders)
    : generators_(std::move(generators)), orders_(std::move(orders)) {
  const int n = static_cast<int>(generators_.size());
  if (n == 0) throw validation_error("matrix: empty generator list");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw validation_error("matrix: empty generator label");
    if (!seen.insert(g).second)
      throw validation_error("matrix: duplicate generator label '" + g + "'");
  }
  if (static_cast<int>(orders_.size()) != n)
    throw validation_error("matrix: orders must be " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(orders_[i].size()) != n)
      throw validation_error("matrix: row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) {
      const int m = orders_[i][j];
      if (i == j && m != 1)
        throw validation_error("matrix: diagonal must be 1 at cell (" + generators_[i] +
                               "," + generators_[j] + ")");
      if (i != j) {
        if (m == 1 || m < 0)
          throw validation_error("matrix: off-diagonal order must be >= 2 or 0 (infinity) at cell (" +
                                 generators_[i] + "," + generators_[j] + ")");
        if (orders_[j][i] != m)
          throw validation_error("matrix: not symmetric at cell (" + generators_[i] + "," +
                                 generators_[j] + ")");
      }
    }
  }
}

int CoxeterMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (generators_[i] == label) return i;
  throw validation_error("matrix: unknown generator '" + label + "'");
}

bool CoxeterMatrix::exact_field() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (!label_in_exact_field(orders_[i][j])) return false;
  return true;
}

CoxeterMatrix CoxeterMatrix::restrict_to(const std::vector<int>& subset) const {
  std::vector<std::string> gens;
  std::vector<std::vector<int>> ord(subset.size(), std::vector<int>(subset.size()));
  for (int a = 0; a < static_cast<int>(subset.size()); ++a) {
    gens.push_back(generators_.at(subset[a]));
    for (int b = 0; b < static_cast<int>(subset.size()); ++b)
      ord[a][b] = orders_.at(subset[a]).at(subset[b]);
  }
  return CoxeterMatrix(std::move(gens), std::move(ord));
}

CoxeterMatrix parse_matrix(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("matrix: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("orders"))
    throw validation_error("matrix: document needs fields 'generators' and 'orders'");
  if (!doc["generators"].is_array() || !doc["orders"].is_array())
    throw validation_error("matrix: 'generators' and 'orders' must be arrays");

  std::vector<std::string> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw validation_error("matrix: generator labels must be strings");
    gens.push_back(g.get<std::string>());
  }
  std::vector<std::vector<int>> orders;
  for (const auto& row : doc["orders"]) {
    if (!row.is_array()) throw validation_error("matrix: each orders row must be an array");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw validation_error("matrix: orders entries must be integers (0 = infinity)");
      r.push_back(e.get<int>());
    }
    orders.push_back(std::move(r));
  }
  return CoxeterMatrix(std::move(gens), std::move(orders));
}

std::vector<std::vector<int>> components(const CoxeterMatrix& m, const std::vector<int>& subset) {
  for (int s : subset)
    if (s < 0 || s >= m.rank())
      throw precondition_error("components: generator index out of range");
  std::vector<int> nodes = subset;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<std::vector<int>> out;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = left.begin(); it != left.end();) {
        const int ord = m.order(comp[k], *it);
        if (ord >= 3 || ord == 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterMatrix make_matrix(const std::vector<std::string>& gens,
                          const std::vector<std::vector<int>>& orders) {
  return CoxeterMatrix(gens, orders);
}

CoxeterMatrix triangle_matrix(int p, int q, int r) {
  return CoxeterMatrix({"a", "b", "c"}, {{1, p, q}, {p, 1, r}, {q, r, 1}});
}

CoxeterMatrix orthogonal_join(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  std::vector<std::string> gens;
  for (const auto& g : a.generators()) gens.push_back(g + "1");
  for (const auto& g : b.generators()) gens.push_back(g + "2");
  const int n = a.rank() + b.rank();
  std::vector<std::vector<int>> ord(n, std::vector<int>(n, 2));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) ord[i][j] = a.order(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) ord[a.rank() + i][a.rank() + j] = b.order(i, j);
  return CoxeterMatrix(std::move(gens), std::move(ord));
}

}  // namespace cox
