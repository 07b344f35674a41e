#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodquot/catalog.hpp"
#include "prodquot/generating_vector.hpp"
#include "prodquot/orbits.hpp"
#include "prodquot/signature.hpp"

namespace prodquot {

/// One classification row.
struct SurfaceRecord {
  SurfaceKind kind = SurfaceKind::unmixed;
  int g_F = 0;
  int g_C = 0;
  GroupId group_id;
  /// Mixed case: the index-2 subgroup G°.
  std::optional<GroupId> subgroup_id;
  /// Unmixed: the (0|m) signature of the F-cover. Mixed: empty.
  BranchSignature m;
  /// (1|n) signature of the C-cover (of G° in the mixed case).
  BranchSignature n;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  int g_alb = 0;
  int dimension = 0;
  std::optional<std::size_t> components;
  std::size_t aut_filter_rejections = 0;
  /// Witnesses in the element indexing of the catalog group table.
  std::optional<GeneratingVector> witness_v;
  GeneratingVector witness_w;
  /// Mixed case: members of G° in the same indexing.
  std::vector<Element> subgroup_members;
};

/// Deterministic output order: kind, g_F, group, m, n, subgroup.
bool record_less(const SurfaceRecord& a, const SurfaceRecord& b);

/// Unmixed case data: n, |G| = k * alpha(m), and the alpha cap.
struct UnmixedCase {
  int g_F = 0;
  std::vector<int> n;
  int k = 0;
  int alpha_cap = 0;
};
/// Throws Error(invalid_parameters) unless g_F is 3, 4 or 5.
UnmixedCase unmixed_case(int g_F);

struct MixedCase {
  int g_C = 0;
  std::vector<int> n;
  int order = 0;
};
const std::vector<MixedCase>& mixed_cases();

struct ClassifyOptions {
  unsigned threads = 0;
  bool with_orbits = false;
  /// 0 keeps the case default.
  int alpha_cap = 0;
  bool deriv2_prune = true;
  OrbitOptions orbit;
};

struct ClassificationResult {
  std::vector<SurfaceRecord> records;
  /// Orders the search touched that the catalog does not mark complete.
  std::vector<int> incomplete_orders;
  std::size_t candidates = 0;
  bool exhaustive() const { return incomplete_orders.empty(); }
};

/// Decides one (G, m) candidate: both vectors must exist and some pair must
/// satisfy (U). The returned record has no component count.
std::optional<SurfaceRecord> evaluate_unmixed(const GroupTable& g, GroupId id, const std::vector<int>& m,
                                              const UnmixedCase& c);

/// Mixed rows contributed by one group: one per isomorphism type of G°.
std::vector<SurfaceRecord> evaluate_mixed(const GroupTable& g, GroupId id, const MixedCase& c,
                                          const Catalog& catalog, bool deriv2_prune = true);

ClassificationResult classify_unmixed(int g_F, const Catalog& catalog, const ClassifyOptions& options = {});
ClassificationResult classify_mixed(const Catalog& catalog, const ClassifyOptions& options = {});

/// Fills record.components from the orbit count (g is the record's group).
void attach_component_count(SurfaceRecord& record, const GroupTable& g, const OrbitOptions& options = {});

}  // namespace prodquot
