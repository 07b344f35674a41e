#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "prodquot/group_table.hpp"

namespace prodquot {

/// Isomorphism invariants used to rule out isomorphism cheaply. Equal groups
/// always have equal fingerprints; the converse does not hold.
struct Fingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> order_spectrum;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series_orders;
  std::vector<int> abelianization_type;
  std::vector<std::size_t> class_size_multiset;
  /// Sorted per-element invariant codes (see element_colors()).
  std::vector<std::uint64_t> element_colors;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GroupTable& g);

/// Per-element isomorphism invariant: combines element order, class size,
/// the number of square and cube roots, membership in the derived subgroup and
/// the class sizes of the square and cube.
std::vector<std::uint64_t> element_colors(const GroupTable& g);

/// A multiplication-preserving bijection g -> h, if one exists.
std::optional<std::vector<Element>> isomorphism_test(const GroupTable& g, const GroupTable& h);

/// Every automorphism of g. Throws Error(cap_exceeded) past `cap` automorphisms.
std::vector<Automorphism> automorphism_group(const GroupTable& g, std::size_t cap = 200000);

/// A subset of `auts` generating the same group, chosen greedily in list order.
std::vector<Automorphism> automorphism_generators(const GroupTable& g,
                                                  const std::vector<Automorphism>& auts);

}  // namespace prodquot
