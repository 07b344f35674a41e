#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prodquot/group_table.hpp"
#include "prodquot/signature.hpp"

namespace prodquot {

/// Branch elements g_1..g_r (or l_1..l_s) and, for base genus 1, the two
/// handle elements h_1, h_2. signature.periods[i] is the order of branch[i].
struct GeneratingVector {
  BranchSignature signature;
  std::vector<Element> branch;
  std::vector<Element> handles;

  auto operator<=>(const GeneratingVector&) const = default;
};

/// Product g_1...g_r (genus 0) or l_1...l_s [h_1,h_2] (genus 1).
Element long_relation_product(const GroupTable& g, const GeneratingVector& v);

/// Checks element orders, the long relation and generation.
bool is_generating_vector(const GroupTable& g, const GeneratingVector& v);

/// Visits generating vectors of the given signature in a fixed deterministic
/// order. With `up_to_conjugacy`, the first free coordinate (g_1 in genus 0,
/// h_1 in genus 1) only runs over conjugacy class representatives, so every
/// vector is conjugate to at least one visited vector. `visit` returns false
/// to stop early.
void enumerate_generating_vectors(const GroupTable& g, const BranchSignature& sig, bool up_to_conjugacy,
                                  const std::function<bool(const GeneratingVector&)>& visit);

/// First vector in the conjugacy-reduced search order, if any exists.
std::optional<GeneratingVector> find_generating_vector(const GroupTable& g, const BranchSignature& sig);

/// Every generating vector of the signature (no symmetry reduction).
std::vector<GeneratingVector> all_generating_vectors(const GroupTable& g, const BranchSignature& sig);

/// Union of all conjugates of the cyclic subgroups <branch[i]>; handles are ignored.
ElementSet stabilizer_union(const GroupTable& g, const GeneratingVector& v);

/// The same union as a set of conjugacy class indices (it is a union of classes).
ElementSet stabilizer_classes(const GroupTable& g, const GeneratingVector& v);

/// Images under an automorphism.
GeneratingVector apply_automorphism(const Automorphism& phi, const GeneratingVector& v);

}  // namespace prodquot
