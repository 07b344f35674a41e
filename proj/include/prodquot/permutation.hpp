#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prodquot/group_table.hpp"

namespace prodquot {

/// 0-based image array; composition reads left to right, (p*q)(i) = q(p(i)).
using Permutation = std::vector<std::uint16_t>;

/// A list of permutation generators on {0..degree-1}.
struct PermGenSet {
  std::size_t degree = 1;
  std::vector<Permutation> generators;

  /// Throws Error(invalid_parameters) unless every generator is a bijection of the right size.
  void validate() const;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 192;

/// Enumerates the generated group by closure and tabulates multiplication.
/// Element 0 is the identity; generator_hint() holds the indices of the generators.
/// Throws Error(cap_exceeded) if the group has more than `order_cap` elements.
GroupTable group_from_permutations(const PermGenSet& p, std::size_t order_cap = kDefaultGroupOrderCap);

/// Like group_from_permutations, also returning the permutation of every element.
struct PermGroup {
  GroupTable table;
  std::vector<Permutation> elements;
};
PermGroup perm_group_from_permutations(const PermGenSet& p,
                                       std::size_t order_cap = kDefaultGroupOrderCap);

}  // namespace prodquot
