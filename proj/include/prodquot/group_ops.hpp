#pragma once

#include <map>
#include <span>
#include <vector>

#include "prodquot/group_table.hpp"

namespace prodquot {

std::size_t count_elements_of_order(const GroupTable& g, int k);
/// element order -> number of elements of that order
std::map<int, std::size_t> order_spectrum(const GroupTable& g);

/// Smallest subgroup containing `gens`.
ElementSet subgroup_closure(const GroupTable& g, std::span<const Element> gens);
bool generates(const GroupTable& g, std::span<const Element> gens);

bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& s);

bool is_abelian(const GroupTable& g);
ElementSet center(const GroupTable& g);
ElementSet derived_subgroup(const GroupTable& g);
/// Commutator subgroup [H,H] of a subgroup H.
ElementSet derived_subgroup(const GroupTable& g, const ElementSet& h);
/// Orders of G = G^(0) > G^(1) > ... down to the first repeated term.
std::vector<std::size_t> derived_series_orders(const GroupTable& g);

ElementSet conjugacy_class(const GroupTable& g, Element x);
/// Conjugacy class of x under the elements of `by` (a subgroup).
ElementSet conjugacy_class(const GroupTable& g, Element x, const ElementSet& by);
ElementSet centralizer(const GroupTable& g, Element x);

/// Cyclic subgroup <x>.
ElementSet cyclic_subgroup(const GroupTable& g, Element x);

/// All normal subgroups, sorted by (order, members).
std::vector<ElementSet> normal_subgroups(const GroupTable& g);
/// All subgroups of index 2 (kernels of surjections onto the group of order 2).
std::vector<ElementSet> index_two_subgroups(const GroupTable& g);

/// The subgroup H as a group in its own right, with `embedding[i]` the parent
/// element for index i of the new table.
struct Subgroup {
  GroupTable group;
  std::vector<Element> embedding;
};
Subgroup induced_subgroup(const GroupTable& g, const ElementSet& h);

/// Abelian invariants (elementary-divisor form, sorted prime powers) of G/N for normal N
/// with abelian quotient.
std::vector<int> abelian_invariants_of_quotient(const GroupTable& g, const ElementSet& n);
std::vector<int> abelianization_type(const GroupTable& g);

/// Greedy small generating set: repeatedly add the element whose closure with the
/// current set is largest, ties going to the lowest index.
std::vector<Element> greedy_generating_set(const GroupTable& g);

}  // namespace prodquot
