#pragma once

#include <string>
#include <vector>

#include "prodquot/generating_vector.hpp"

namespace prodquot {

enum class MoveKind { sigma, t_alpha, t_beta, t_gamma, rho };

struct HurwitzMove {
  MoveKind kind = MoveKind::sigma;
  /// 1-based position i for sigma(i); unused otherwise.
  int index = 0;

  bool applicable(const GeneratingVector& v) const;
  std::string to_string() const;
  bool operator==(const HurwitzMove&) const = default;
};

/// sigma_i: g_i -> g_{i+1}, g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}; the periods move along.
/// Throws Error(inapplicable_move) for a genus-1 vector and
/// Error(index_out_of_range) unless 1 <= i <= r-1.
GeneratingVector apply_sigma(const GroupTable& g, int i, const GeneratingVector& v);

/// t_alpha, t_beta (s = 1 or 2), t_gamma and rho (s = 2) on a genus-1 vector.
/// Throws Error(inapplicable_move) when the move does not apply to v's shape.
GeneratingVector apply_genus1_move(const GroupTable& g, MoveKind kind, const GeneratingVector& v);

GeneratingVector apply_move(const GroupTable& g, const HurwitzMove& move, const GeneratingVector& v);

/// The generating moves for vectors of this shape: sigma_1..sigma_{r-1} in
/// genus 0; t_alpha, t_beta (and t_gamma, rho when s = 2) in genus 1.
std::vector<HurwitzMove> hurwitz_generators(const BranchSignature& sig);

}  // namespace prodquot
