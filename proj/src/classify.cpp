#include "prodquot/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <unordered_set>

#include "prodquot/error.hpp"
#include "prodquot/freeness.hpp"
#include "prodquot/group_ops.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/parallel.hpp"

namespace prodquot {

bool record_less(const SurfaceRecord& a, const SurfaceRecord& b) {
  const GroupId none{0, 0};
  return std::tuple(a.kind, a.g_F, a.group_id, a.m, a.n, a.subgroup_id.value_or(none)) <
         std::tuple(b.kind, b.g_F, b.group_id, b.m, b.n, b.subgroup_id.value_or(none));
}

UnmixedCase unmixed_case(int g_F) {
  // alpha caps follow |Aut(F)| <= 168, 120, 192 for g(F) = 3, 4, 5.
  switch (g_F) {
    case 3: return {3, {2, 2}, 2, 84};
    case 4: return {4, {3}, 3, 40};
    case 5: return {5, {2}, 4, 48};
    default:
      throw Error(ErrorCode::invalid_parameters, "g(F) must be 3, 4 or 5");
  }
}

const std::vector<MixedCase>& mixed_cases() {
  static const std::vector<MixedCase> cases{{5, {2, 2}, 16}, {7, {3}, 36}, {9, {2}, 64}};
  return cases;
}

namespace {

bool has_orders(const GroupTable& g, const std::vector<int>& periods) {
  const auto spec = order_spectrum(g);
  return std::all_of(periods.begin(), periods.end(), [&](int p) { return spec.contains(p); });
}

struct SetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace

std::optional<SurfaceRecord> evaluate_unmixed(const GroupTable& g, GroupId id, const std::vector<int>& m,
                                              const UnmixedCase& c) {
  if (!has_orders(g, m) || !has_orders(g, c.n)) return std::nullopt;
  const BranchSignature sig_v{0, m}, sig_w{1, c.n};
  if (!find_generating_vector(g, sig_v) || !find_generating_vector(g, sig_w)) return std::nullopt;

  // Stabilizer unions are unions of conjugacy classes and invariant under
  // conjugating the whole vector, so conjugacy-reduced enumeration sees them all.
  std::vector<ElementSet> w_sets;
  std::vector<GeneratingVector> w_wit;
  {
    std::unordered_set<ElementSet, SetHash> seen;
    enumerate_generating_vectors(g, sig_w, true, [&](const GeneratingVector& w) {
      ElementSet s = stabilizer_classes(g, w);
      if (seen.insert(s).second) {
        w_sets.push_back(std::move(s));
        w_wit.push_back(w);
      }
      return true;
    });
  }
  const auto id_class = static_cast<Element>(g.class_index(g.identity()));
  std::optional<std::pair<GeneratingVector, GeneratingVector>> pair;
  std::unordered_set<ElementSet, SetHash> seen_v;
  enumerate_generating_vectors(g, sig_v, true, [&](const GeneratingVector& v) {
    ElementSet s = stabilizer_classes(g, v);
    if (!seen_v.insert(s).second) return true;
    for (std::size_t j = 0; j < w_sets.size(); ++j) {
      ElementSet common = s & w_sets[j];
      common.erase(id_class);
      if (common.empty()) {
        pair.emplace(v, w_wit[j]);
        return false;
      }
    }
    return true;
  });
  if (!pair) return std::nullopt;

  SurfaceRecord r;
  r.kind = SurfaceKind::unmixed;
  r.group_id = id;
  r.m = sig_v;
  r.n = sig_w;
  const auto order = static_cast<std::int64_t>(g.order());
  r.g_F = rh_genus(0, order, m);
  r.g_C = rh_genus(1, order, c.n);
  const auto inv = surface_invariants(r.g_C, r.g_F, order);
  r.chi = inv.chi;
  r.K2 = inv.K2;
  r.g_alb = r.g_F;
  r.dimension = dimension(SurfaceKind::unmixed, static_cast<int>(m.size()), static_cast<int>(c.n.size()));
  r.witness_v = pair->first;
  r.witness_w = pair->second;
  return r;
}

std::vector<SurfaceRecord> evaluate_mixed(const GroupTable& g, GroupId id, const MixedCase& c,
                                          const Catalog& catalog, bool deriv2_prune) {
  std::map<GroupId, SurfaceRecord> by_subgroup;
  // (M1) fails for every vector when G is abelian.
  if (deriv2_prune && is_abelian(g)) return {};
  const BranchSignature sig{1, c.n};
  for (const auto& h : index_two_subgroups(g)) {
    if (!is_nonsplit_extension(g, h)) continue;
    if (deriv2_prune && c.n == std::vector<int>{2} && lemma_deriv2_prune(g, h)) continue;
    const Subgroup sg = induced_subgroup(g, h);
    if (!has_orders(sg.group, c.n)) continue;
    std::optional<GeneratingVector> found;
    enumerate_generating_vectors(sg.group, sig, true, [&](const GeneratingVector& w) {
      GeneratingVector wg = w;
      for (auto& x : wg.branch) x = sg.embedding[x];
      for (auto& x : wg.handles) x = sg.embedding[x];
      if (!check_M1(g, h, wg) || !check_M2(g, h, wg)) return true;
      found = std::move(wg);
      return false;
    });
    if (!found) continue;
    const GroupId sub_id = catalog.identify(sg.group);
    if (by_subgroup.contains(sub_id)) continue;

    SurfaceRecord r;
    r.kind = SurfaceKind::mixed;
    r.group_id = id;
    r.subgroup_id = sub_id;
    r.n = sig;
    r.g_C = rh_genus(1, static_cast<std::int64_t>(sg.group.order()), c.n);
    r.g_F = r.g_C;
    const auto inv = surface_invariants(r.g_C, r.g_C, static_cast<std::int64_t>(g.order()));
    r.chi = inv.chi;
    r.K2 = inv.K2;
    r.g_alb = r.g_C;
    r.dimension = dimension(SurfaceKind::mixed, 0, static_cast<int>(c.n.size()));
    r.witness_w = *found;
    r.subgroup_members = h.members();
    by_subgroup.emplace(sub_id, std::move(r));
  }
  std::vector<SurfaceRecord> out;
  for (auto& [sid, r] : by_subgroup) out.push_back(std::move(r));
  return out;
}

void attach_component_count(SurfaceRecord& record, const GroupTable& g, const OrbitOptions& options) {
  const auto auts = automorphism_group(g);
  const auto gens = automorphism_generators(g, auts);
  if (record.kind == SurfaceKind::unmixed) {
    record.components = count_components_unmixed(g, record.m.periods, record.n.periods, gens, options).components;
  } else {
    ElementSet sub(g.order());
    for (auto x : record.subgroup_members) sub.insert(x);
    const auto count = count_components_mixed(g, sub, record.n.periods, gens, options);
    record.components = count.components;
    record.aut_filter_rejections = count.aut_filter_rejections;
  }
}

namespace {

void finish(ClassificationResult& result, const Catalog& catalog, const ClassifyOptions& options) {
  if (options.with_orbits) {
    parallel_for(result.records.size(), options.threads, [&](std::size_t i) {
      auto& r = result.records[i];
      attach_component_count(r, *catalog.group(r.group_id), options.orbit);
    });
  }
  std::sort(result.records.begin(), result.records.end(), record_less);
  std::sort(result.incomplete_orders.begin(), result.incomplete_orders.end());
  result.incomplete_orders.erase(std::unique(result.incomplete_orders.begin(), result.incomplete_orders.end()),
                                 result.incomplete_orders.end());
}

}  // namespace

ClassificationResult classify_unmixed(int g_F, const Catalog& catalog, const ClassifyOptions& options) {
  UnmixedCase c = unmixed_case(g_F);
  if (options.alpha_cap > 0) c.alpha_cap = options.alpha_cap;

  ClassificationResult result;
  std::vector<std::pair<std::vector<int>, GroupId>> tasks;
  for (const auto& t : enumerate_admissible_tuples(c.alpha_cap)) {
    const int order = c.k * t.alpha;
    if (!catalog.is_complete(order)) result.incomplete_orders.push_back(order);
    for (const auto& id : catalog.ids_of_order(order)) tasks.emplace_back(t.m, id);
  }
  result.candidates = tasks.size();

  std::vector<std::optional<SurfaceRecord>> found(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) {
    const GroupTable g = catalog.build_group(tasks[i].second);
    found[i] = evaluate_unmixed(g, tasks[i].second, tasks[i].first, c);
  });
  for (auto& f : found)
    if (f) result.records.push_back(std::move(*f));
  finish(result, catalog, options);
  return result;
}

ClassificationResult classify_mixed(const Catalog& catalog, const ClassifyOptions& options) {
  ClassificationResult result;
  std::vector<std::pair<std::size_t, GroupId>> tasks;
  for (std::size_t ci = 0; ci < mixed_cases().size(); ++ci) {
    const auto& c = mixed_cases()[ci];
    const int sub_order = c.order / 2;
    if (!catalog.is_complete(c.order)) result.incomplete_orders.push_back(c.order);
    if (!catalog.is_complete(sub_order)) result.incomplete_orders.push_back(sub_order);
    for (const auto& id : catalog.ids_of_order(c.order)) tasks.emplace_back(ci, id);
  }
  result.candidates = tasks.size();

  std::vector<std::vector<SurfaceRecord>> found(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) {
    const GroupTable g = catalog.build_group(tasks[i].second);
    found[i] = evaluate_mixed(g, tasks[i].second, mixed_cases()[tasks[i].first], catalog, options.deriv2_prune);
  });
  for (auto& f : found)
    for (auto& r : f) result.records.push_back(std::move(r));
  finish(result, catalog, options);
  return result;
}

}  // namespace prodquot
