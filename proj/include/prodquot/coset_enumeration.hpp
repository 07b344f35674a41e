#pragma once

#include <cstddef>

#include "prodquot/permutation.hpp"
#include "prodquot/presentation.hpp"

namespace prodquot {

inline constexpr std::size_t kDefaultCosetCap = 50000;

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup (HLT
/// strategy: cosets are defined while scanning relators from each coset in
/// order, coincidences are merged with union-find).
///
/// Returns the action of each generator on the final cosets, i.e. the regular
/// representation of the presented group. Coset 0 is the identity coset.
/// Deterministic for a given presentation.
/// Throws Error(cap_exceeded) once more than `coset_cap` cosets are live.
PermGenSet coset_enumeration(const Presentation& p, std::size_t coset_cap = kDefaultCosetCap);

}  // namespace prodquot
