#include "prodquot/isomorphism.hpp"

#include <algorithm>
#include <unordered_set>

#include "prodquot/error.hpp"
#include "prodquot/group_ops.hpp"

namespace prodquot {

std::vector<std::uint64_t> element_colors(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> roots2(n, 0), roots3(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    const Element y2 = g.mul(static_cast<Element>(y), static_cast<Element>(y));
    ++roots2[y2];
    ++roots3[g.mul(y2, static_cast<Element>(y))];
  }
  const ElementSet derived = derived_subgroup(g);
  std::vector<std::uint64_t> colors(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    const Element sq = g.mul(e, e);
    const Element cu = g.mul(sq, e);
    std::uint64_t c = static_cast<std::uint64_t>(g.elem_order(e));
    c = c * 1000003u + g.class_size(e);
    c = c * 1000003u + roots2[x];
    c = c * 1000003u + roots3[x];
    c = c * 1000003u + (derived.contains(e) ? 1u : 0u);
    c = c * 1000003u + g.class_size(sq);
    c = c * 1000003u + g.class_size(cu);
    colors[x] = c;
  }
  return colors;
}

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  f.order = g.order();
  f.order_spectrum = order_spectrum(g);
  f.center_order = center(g).size();
  f.derived_series_orders = derived_series_orders(g);
  f.abelianization_type = abelianization_type(g);
  for (std::size_t c = 0; c < g.class_count(); ++c)
    f.class_size_multiset.push_back(g.class_members(static_cast<int>(c)).size());
  std::sort(f.class_size_multiset.begin(), f.class_size_multiset.end());
  f.element_colors = element_colors(g);
  std::sort(f.element_colors.begin(), f.element_colors.end());
  return f;
}

namespace {

// Backtracking over images of a fixed generating set of `g`. A partial
// assignment is accepted only if it extends to an injective homomorphism on the
// subgroup generated by the generators assigned so far.
class MapSearch {
public:
  MapSearch(const GroupTable& g, const GroupTable& h, bool find_all, std::size_t cap)
      : g_(g), h_(h), find_all_(find_all), cap_(cap) {
    gens_ = greedy_generating_set(g_);
    const auto gc = element_colors(g_);
    const auto hc = element_colors(h_);
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t y = 0; y < h_.order(); ++y)
        if (hc[y] == gc[gens_[i]]) candidates_[i].push_back(static_cast<Element>(y));
    images_.assign(gens_.size(), 0);
  }

  void run() {
    if (g_.order() != h_.order()) return;
    recurse(0);
  }

  std::vector<std::vector<Element>> results;

private:
  // Extends the map over <gens[0..k)>; returns false on inconsistency.
  bool consistent(std::size_t k, std::vector<int>& phi) {
    const std::size_t n = g_.order();
    phi.assign(n, -1);
    used_.assign(n, 0);
    std::vector<Element> queue{g_.identity()};
    phi[g_.identity()] = h_.identity();
    used_[h_.identity()] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element x = queue[q];
      const auto px = static_cast<Element>(phi[x]);
      for (std::size_t j = 0; j < k; ++j) {
        const Element y = g_.mul(x, gens_[j]);
        const Element py = h_.mul(px, images_[j]);
        if (phi[y] < 0) {
          if (used_[py]) return false;
          used_[py] = 1;
          phi[y] = py;
          queue.push_back(y);
        } else if (phi[y] != py) {
          return false;
        }
      }
    }
    return true;
  }

  bool recurse(std::size_t k) {
    std::vector<int> phi;
    if (k == gens_.size()) {
      if (!consistent(k, phi)) return false;
      std::vector<Element> map(phi.begin(), phi.end());
      results.push_back(std::move(map));
      if (results.size() > cap_)
        throw Error(ErrorCode::cap_exceeded, "automorphism enumeration exceeded cap");
      return !find_all_;
    }
    for (auto c : candidates_[k]) {
      images_[k] = c;
      if (!consistent(k + 1, phi)) continue;
      if (recurse(k + 1)) return true;
    }
    return false;
  }

  const GroupTable& g_;
  const GroupTable& h_;
  bool find_all_;
  std::size_t cap_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<char> used_;
};

struct VecHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 131 + x;
    return h;
  }
};

}  // namespace

std::optional<std::vector<Element>> isomorphism_test(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  MapSearch search(g, h, false, 1);
  search.run();
  if (search.results.empty()) return std::nullopt;
  return std::move(search.results.front());
}

std::vector<Automorphism> automorphism_group(const GroupTable& g, std::size_t cap) {
  MapSearch search(g, g, true, cap);
  search.run();
  std::vector<Automorphism> out;
  out.reserve(search.results.size());
  for (auto& r : search.results) out.push_back(Automorphism{std::move(r)});
  return out;
}

std::vector<Automorphism> automorphism_generators(const GroupTable& g,
                                                  const std::vector<Automorphism>& auts) {
  std::vector<Automorphism> gens;
  std::unordered_set<std::vector<Element>, VecHash> closure;
  closure.insert(Automorphism::identity(g.order()).image);
  for (const auto& a : auts) {
    if (closure.count(a.image)) continue;
    gens.push_back(a);
    std::vector<std::vector<Element>> queue(closure.begin(), closure.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& s : gens) {
        Automorphism c = s * Automorphism{queue[i]};
        if (closure.insert(c.image).second) queue.push_back(std::move(c.image));
      }
    }
  }
  return gens;
}

}  // namespace prodquot
