#pragma once

#include <vector>

#include "prodquot/group_table.hpp"

namespace prodquot {

GroupTable cyclic(int n);
/// Dihedral group of order 2n.
GroupTable dihedral(int n);
/// Split metacyclic group <x,y | x^p = y^q = 1, x y x^-1 = y^r> of order p*q.
/// Element a*q + b is y^b x^a; generator_hint() is {x, y}.
/// Throws Error(invalid_parameters) unless r^p = 1 (mod q).
GroupTable metacyclic(int p, int q, int r);
GroupTable quaternion8();
GroupTable symmetric(int n);
GroupTable alternating(int n);
/// Element a*|h| + b is the pair (a, b).
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
/// B x| A with a acting on B through action[a]; element a*|B| + b is the pair b*a.
/// Throws Error(invalid_parameters) unless `action` is a homomorphism A -> Aut(B).
GroupTable semidirect_product(const GroupTable& a, const GroupTable& b,
                              const std::vector<Automorphism>& action);

}  // namespace prodquot
