#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prodquot/generating_vector.hpp"
#include "prodquot/group_table.hpp"

namespace prodquot {

enum class SurfaceKind { unmixed, mixed };

/// Dimension of the moduli space: r + s - 3 (unmixed) or s (mixed).
/// Throws Error(invalid_parameters) if r < 3 (unmixed) or s < 1.
int dimension(SurfaceKind kind, int r, int s);

inline constexpr std::size_t kDefaultStateCap = 10'000'000;

struct OrbitOptions {
  /// Abort with Error(cap_exceeded) once this many tuples have been visited.
  std::size_t state_cap = kDefaultStateCap;
  /// Re-check after every move that the image is again a valid member.
  bool verify_moves = false;
};

struct OrbitCount {
  std::size_t components = 0;
  /// Tuples visited while closing the seeds under the moves.
  std::size_t states = 0;
  std::size_t v_orbits = 0;
  std::size_t w_orbits = 0;
  /// Automorphism images that left the candidate set (mixed case only).
  std::size_t aut_filter_rejections = 0;
};

/// Orbits of the Hurwitz moves on generating vectors, seeded by `seeds`
/// (closed under the moves of each tuple's own period arrangement).
struct HurwitzOrbits {
  std::vector<GeneratingVector> seeds;
  /// seed index -> orbit number in 0..orbit_count-1
  std::vector<std::uint32_t> seed_orbit;
  std::size_t orbit_count = 0;
  std::size_t states = 0;
};
HurwitzOrbits hurwitz_orbits(const GroupTable& g, std::vector<GeneratingVector> seeds,
                             const OrbitOptions& options = {});

/// Number of classes of pairs (V, W) of types (0|m), (1|n) satisfying (U),
/// under Hurwitz moves on V, Hurwitz moves on W and simultaneous automorphisms.
///
/// Both move groups and the automorphisms preserve (U), and automorphisms
/// permute Hurwitz orbits, so this counts automorphism orbits on the
/// admissible pairs of (V-orbit, W-orbit).
/// `aut_gens` must generate Aut(G). Throws Error(empty_orbit_problem) if no
/// admissible pair exists.
OrbitCount count_components_unmixed(const GroupTable& g, const std::vector<int>& m,
                                    const std::vector<int>& n, const std::vector<Automorphism>& aut_gens,
                                    const OrbitOptions& options = {});

/// The same count by breadth-first search over explicit pairs. Much slower;
/// kept as an independent check for small instances.
OrbitCount count_components_unmixed_bfs(const GroupTable& g, const std::vector<int>& m,
                                        const std::vector<int>& n, const std::vector<Automorphism>& aut_gens,
                                        const OrbitOptions& options = {});

/// Classes of (1|n) vectors for index-2 subgroups H of g that are isomorphic
/// to `sub`, give a nonsplit extension and satisfy (M1) and (M2), under the
/// genus-1 Hurwitz moves and automorphisms of g. Membership is re-checked
/// after every automorphism; images outside the set are counted in
/// aut_filter_rejections and not followed.
/// Throws Error(empty_orbit_problem) if the candidate set is empty.
OrbitCount count_components_mixed(const GroupTable& g, const ElementSet& sub, const std::vector<int>& n,
                                  const std::vector<Automorphism>& aut_gens,
                                  const OrbitOptions& options = {});

}  // namespace prodquot
