#pragma once

#include "prodquot/generating_vector.hpp"
#include "prodquot/group_table.hpp"

namespace prodquot {

/// Condition (U): the stabilizer unions of V and W meet only in the identity.
bool check_condition_U(const GroupTable& g, const GeneratingVector& v, const GeneratingVector& w);

/// No element of order 2 lies outside the index-2 subgroup `sub`.
bool is_nonsplit_extension(const GroupTable& g, const ElementSet& sub);

/// In the checks below, `w` is a base-genus-1 vector for the index-2 subgroup
/// `sub`, written with element indices of g.

/// (M1): for every g outside sub, {l_j} and {g l_j g^-1} are disjoint.
bool check_M1(const GroupTable& g, const ElementSet& sub, const GeneratingVector& w);

/// (M2): for every g outside sub, g^2 lies in no sub-conjugate of any <l_j>.
bool check_M2(const GroupTable& g, const ElementSet& sub, const GeneratingVector& w);

/// True when (M1) is unsatisfiable for every (1|2) vector of sub because the
/// involutions of [G,G] are central, or some y outside sub centralizes every
/// involution of [sub,sub].
bool lemma_deriv2_prune(const GroupTable& g, const ElementSet& sub);

}  // namespace prodquot
