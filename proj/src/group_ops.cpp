#include "prodquot/group_ops.hpp"

#include <algorithm>
#include <unordered_set>

namespace prodquot {

std::size_t count_elements_of_order(const GroupTable& g, int k) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elem_order(static_cast<Element>(x)) == k) ++c;
  return c;
}

std::map<int, std::size_t> order_spectrum(const GroupTable& g) {
  std::map<int, std::size_t> m;
  for (std::size_t x = 0; x < g.order(); ++x) ++m[g.elem_order(static_cast<Element>(x))];
  return m;
}

ElementSet subgroup_closure(const GroupTable& g, std::span<const Element> gens) {
  ElementSet s(g.order());
  std::vector<Element> queue;
  queue.reserve(g.order());
  s.insert(g.identity());
  queue.push_back(g.identity());
  // Right multiplication by the generators suffices in a finite group.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (auto a : gens) {
      const Element y = g.mul(x, a);
      if (s.insert_new(y)) queue.push_back(y);
    }
  }
  return s;
}

bool generates(const GroupTable& g, std::span<const Element> gens) {
  return subgroup_closure(g, gens).size() == g.order();
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.contains(g.identity())) return false;
  const auto m = s.members();
  for (auto a : m) {
    if (!s.contains(g.inv(a))) return false;
    for (auto b : m)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  const auto m = s.members();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto a : m)
      if (!s.contains(g.conjugate(static_cast<Element>(x), a))) return false;
  return true;
}

bool is_abelian(const GroupTable& g) {
  return g.class_count() == g.order();
}

ElementSet center(const GroupTable& g) {
  ElementSet z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.class_size(static_cast<Element>(x)) == 1) z.insert(static_cast<Element>(x));
  return z;
}

ElementSet derived_subgroup(const GroupTable& g) {
  return derived_subgroup(g, g.all());
}

ElementSet derived_subgroup(const GroupTable& g, const ElementSet& h) {
  ElementSet comms(g.order());
  const auto m = h.members();
  for (auto a : m)
    for (auto b : m) comms.insert(g.commutator(a, b));
  const auto gens = comms.members();
  return subgroup_closure(g, gens);
}

std::vector<std::size_t> derived_series_orders(const GroupTable& g) {
  std::vector<std::size_t> out;
  ElementSet cur = g.all();
  out.push_back(cur.size());
  while (true) {
    ElementSet next = derived_subgroup(g, cur);
    if (next.size() == cur.size()) break;
    out.push_back(next.size());
    cur = std::move(next);
  }
  return out;
}

ElementSet conjugacy_class(const GroupTable& g, Element x) {
  ElementSet s(g.order());
  for (auto c : g.class_members(g.class_index(x))) s.insert(c);
  return s;
}

ElementSet conjugacy_class(const GroupTable& g, Element x, const ElementSet& by) {
  ElementSet s(g.order());
  by.for_each([&](Element a) { s.insert(g.conjugate(a, x)); });
  return s;
}

ElementSet centralizer(const GroupTable& g, Element x) {
  ElementSet s(g.order());
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, static_cast<Element>(y)) == g.mul(static_cast<Element>(y), x))
      s.insert(static_cast<Element>(y));
  return s;
}

ElementSet cyclic_subgroup(const GroupTable& g, Element x) {
  ElementSet s(g.order());
  Element p = g.identity();
  do {
    s.insert(p);
    p = g.mul(p, x);
  } while (p != g.identity());
  return s;
}

namespace {

// Product set N*K of two normal subgroups, itself a normal subgroup.
ElementSet normal_product(const GroupTable& g, const ElementSet& n, const ElementSet& k) {
  ElementSet out(g.order());
  const auto km = k.members();
  n.for_each([&](Element a) {
    for (auto b : km) out.insert(g.mul(a, b));
  });
  return out;
}

bool set_less(const ElementSet& a, const ElementSet& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const GroupTable& g) {
  // Every normal subgroup is the join of the normal closures of the classes it
  // contains, and the normal closure of a class is the subgroup it generates.
  std::vector<ElementSet> class_closures;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      ElementSet k = subgroup_closure(g, g.class_members(static_cast<int>(c)));
      if (seen.insert(k).second) class_closures.push_back(std::move(k));
    }
  }
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet trivial(g.order());
  trivial.insert(g.identity());
  found.push_back(trivial);
  seen.insert(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& k : class_closures) {
      if (k.is_subset_of(found[i])) continue;
      ElementSet j = normal_product(g, found[i], k);
      if (seen.insert(j).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), set_less);
  return found;
}

std::vector<ElementSet> index_two_subgroups(const GroupTable& g) {
  // Every index-2 subgroup contains all squares; G/<squares> is elementary abelian.
  std::vector<Element> squares;
  for (std::size_t x = 0; x < g.order(); ++x)
    squares.push_back(g.mul(static_cast<Element>(x), static_cast<Element>(x)));
  ElementSet span = subgroup_closure(g, squares);
  std::vector<std::uint32_t> coord(g.order(), 0);
  int rank = 0;
  for (std::size_t b = 0; b < g.order() && span.size() < g.order(); ++b) {
    if (span.contains(static_cast<Element>(b))) continue;
    ElementSet next = span;
    span.for_each([&](Element x) {
      const Element y = g.mul(x, static_cast<Element>(b));
      next.insert(y);
      coord[y] = coord[x] | (1u << rank);
    });
    span = std::move(next);
    ++rank;
  }
  std::vector<ElementSet> out;
  for (std::uint32_t f = 1; f < (1u << rank); ++f) {
    ElementSet h(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      if (std::popcount(coord[x] & f) % 2 == 0) h.insert(static_cast<Element>(x));
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

Subgroup induced_subgroup(const GroupTable& g, const ElementSet& h) {
  Subgroup out;
  out.embedding = h.members();
  const std::size_t m = out.embedding.size();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i) index[out.embedding[i]] = static_cast<int>(i);
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = static_cast<Element>(index[g.mul(out.embedding[a], out.embedding[b])]);
  std::vector<Element> gens;
  ElementSet cur(g.order());
  cur.insert(g.identity());
  std::vector<Element> parent_gens;
  for (std::size_t i = 0; i < m && cur.size() < m; ++i) {
    if (cur.contains(out.embedding[i])) continue;
    parent_gens.push_back(out.embedding[i]);
    gens.push_back(static_cast<Element>(i));
    cur = subgroup_closure(g, parent_gens);
  }
  out.group = GroupTable::from_table(m, std::move(table), std::move(gens));
  return out;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<int> abelian_invariants_of_quotient(const GroupTable& g, const ElementSet& n) {
  const int nsize = static_cast<int>(n.size());
  const int qorder = static_cast<int>(g.order()) / nsize;
  std::vector<int> inv;
  for (int p : prime_factors(qorder)) {
    // log_p |{xN : (xN)^(p^j) = N}| for j = 0,1,2,...
    std::vector<int> e{0};
    long long pj = 1;
    int exponent_total = 0;
    for (int t = qorder; t % p == 0; t /= p) ++exponent_total;
    while (e.back() < exponent_total) {
      pj *= p;
      std::size_t cnt = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (n.contains(g.power(static_cast<Element>(x), pj))) ++cnt;
      int q = static_cast<int>(cnt) / nsize;
      int lg = 0;
      while (q > 1) {
        q /= p;
        ++lg;
      }
      e.push_back(lg);
    }
    e.push_back(e.back());
    for (std::size_t j = 1; j + 1 < e.size(); ++j) {
      const int at_least_j = e[j] - e[j - 1];
      const int at_least_next = e[j + 1] - e[j];
      int q = 1;
      for (std::size_t t = 0; t < j; ++t) q *= p;
      for (int c = 0; c < at_least_j - at_least_next; ++c) inv.push_back(q);
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::vector<int> abelianization_type(const GroupTable& g) {
  return abelian_invariants_of_quotient(g, derived_subgroup(g));
}

std::vector<Element> greedy_generating_set(const GroupTable& g) {
  std::vector<Element> gens;
  ElementSet cur(g.order());
  cur.insert(g.identity());
  while (cur.size() < g.order()) {
    std::size_t best_size = 0;
    Element best = 0;
    ElementSet best_set;
    gens.push_back(0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (cur.contains(static_cast<Element>(x))) continue;
      gens.back() = static_cast<Element>(x);
      ElementSet s = subgroup_closure(g, gens);
      if (s.size() > best_size) {
        best_size = s.size();
        best = static_cast<Element>(x);
        best_set = std::move(s);
        if (best_size == g.order()) break;
      }
    }
    gens.back() = best;
    cur = std::move(best_set);
  }
  return gens;
}

}  // namespace prodquot
