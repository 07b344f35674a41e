#include "prodquot/permutation.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "prodquot/error.hpp"

namespace prodquot {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

}  // namespace

void PermGenSet::validate() const {
  if (degree == 0) throw Error(ErrorCode::invalid_parameters, "permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree)
      throw Error(ErrorCode::invalid_parameters, "generator length differs from degree");
    std::vector<char> hit(degree, 0);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw Error(ErrorCode::invalid_parameters, "generator is not a bijection");
      hit[x] = 1;
    }
  }
}

PermGroup perm_group_from_permutations(const PermGenSet& p, std::size_t order_cap) {
  p.validate();
  Permutation id(p.degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});

  PermGroup out;
  std::unordered_map<Permutation, Element, PermHash> index;
  // Breadth-first tree: element b = parent[b] * generators[via[b]].
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Element>> right;  // right[x][j] = x * generators[j]
  out.elements.push_back(id);
  index.emplace(id, 0);
  const std::size_t k = p.generators.size();
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    right.emplace_back(k);
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = compose(out.elements[i], p.generators[j]);
      auto it = index.find(y);
      if (it != index.end()) {
        right[i][j] = it->second;
        continue;
      }
      if (out.elements.size() >= order_cap)
        throw Error(ErrorCode::cap_exceeded,
                    "generated group exceeds order cap " + std::to_string(order_cap));
      const auto idx = static_cast<Element>(out.elements.size());
      right[i][j] = idx;
      index.emplace(y, idx);
      out.elements.push_back(std::move(y));
      parent.push_back(static_cast<Element>(i));
      via.push_back(j);
    }
  }

  const std::size_t n = out.elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      table[a * n + b] = right[table[a * n + parent[b]]][via[b]];

  std::vector<Element> hint;
  for (const auto& g : p.generators) hint.push_back(index.at(g));
  out.table = GroupTable::from_table(n, std::move(table), std::move(hint));
  return out;
}

GroupTable group_from_permutations(const PermGenSet& p, std::size_t order_cap) {
  return perm_group_from_permutations(p, order_cap).table;
}

}  // namespace prodquot
