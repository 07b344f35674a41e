#include "prodquot/freeness.hpp"

#include "prodquot/group_ops.hpp"

namespace prodquot {

bool check_condition_U(const GroupTable& g, const GeneratingVector& v, const GeneratingVector& w) {
  ElementSet common = stabilizer_union(g, v) & stabilizer_union(g, w);
  common.erase(g.identity());
  return common.empty();
}

bool is_nonsplit_extension(const GroupTable& g, const ElementSet& sub) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!sub.contains(static_cast<Element>(x)) && g.elem_order(static_cast<Element>(x)) == 2) return false;
  return true;
}

bool check_M1(const GroupTable& g, const ElementSet& sub, const GeneratingVector& w) {
  ElementSet ls(g.order());
  for (auto l : w.branch) ls.insert(l);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    if (sub.contains(e)) continue;
    for (auto l : w.branch)
      if (ls.contains(g.conjugate(e, l))) return false;
  }
  return true;
}

bool check_M2(const GroupTable& g, const ElementSet& sub, const GeneratingVector& w) {
  // Union over sigma in sub of <sigma l_j sigma^-1>.
  ElementSet forbidden(g.order());
  forbidden.insert(g.identity());
  for (auto l : w.branch)
    sub.for_each([&](Element s) {
      const Element c = g.conjugate(s, l);
      Element p = c;
      do {
        forbidden.insert(p);
        p = g.mul(p, c);
      } while (p != c);
    });
  if (w.branch.empty()) return true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    if (!sub.contains(e) && forbidden.contains(g.mul(e, e))) return false;
  }
  return true;
}

bool lemma_deriv2_prune(const GroupTable& g, const ElementSet& sub) {
  const ElementSet z = center(g);
  bool central = true;
  derived_subgroup(g).for_each([&](Element x) {
    if (g.elem_order(x) == 2 && !z.contains(x)) central = false;
  });
  if (central) return true;

  std::vector<Element> invols;
  derived_subgroup(g, sub).for_each([&](Element x) {
    if (g.elem_order(x) == 2) invols.push_back(x);
  });
  for (std::size_t y = 0; y < g.order(); ++y) {
    const auto e = static_cast<Element>(y);
    if (sub.contains(e)) continue;
    bool commutes = true;
    for (auto x : invols)
      if (g.mul(e, x) != g.mul(x, e)) {
        commutes = false;
        break;
      }
    if (commutes) return true;
  }
  return false;
}

}  // namespace prodquot
