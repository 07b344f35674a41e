#include "prodquot/hurwitz.hpp"

#include <utility>

#include "prodquot/error.hpp"

namespace prodquot {

bool HurwitzMove::applicable(const GeneratingVector& v) const {
  const std::size_t n = v.branch.size();
  switch (kind) {
    case MoveKind::sigma:
      return v.signature.base_genus == 0 && index >= 1 && static_cast<std::size_t>(index) < n;
    case MoveKind::t_alpha:
    case MoveKind::t_beta:
      return v.signature.base_genus == 1 && v.handles.size() == 2 && (n == 1 || n == 2);
    case MoveKind::t_gamma:
    case MoveKind::rho:
      return v.signature.base_genus == 1 && v.handles.size() == 2 && n == 2;
  }
  return false;
}

std::string HurwitzMove::to_string() const {
  switch (kind) {
    case MoveKind::sigma: return "sigma" + std::to_string(index);
    case MoveKind::t_alpha: return "t_alpha";
    case MoveKind::t_beta: return "t_beta";
    case MoveKind::t_gamma: return "t_gamma";
    case MoveKind::rho: return "rho";
  }
  return "?";
}

GeneratingVector apply_sigma(const GroupTable& g, int i, const GeneratingVector& v) {
  if (v.signature.base_genus != 0)
    throw Error(ErrorCode::inapplicable_move, "sigma moves act on base-genus-0 vectors");
  const std::size_t r = v.branch.size();
  if (i < 1 || static_cast<std::size_t>(i) >= r)
    throw Error(ErrorCode::index_out_of_range,
                "sigma" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(r) + "-1");
  GeneratingVector out = v;
  const std::size_t a = static_cast<std::size_t>(i) - 1, b = a + 1;
  const Element gi = v.branch[a], gj = v.branch[b];
  out.branch[a] = gj;
  out.branch[b] = g.mul(g.mul(g.inv(gj), gi), gj);
  std::swap(out.signature.periods[a], out.signature.periods[b]);
  return out;
}

GeneratingVector apply_genus1_move(const GroupTable& g, MoveKind kind, const GeneratingVector& v) {
  const HurwitzMove move{kind, 0};
  if (kind == MoveKind::sigma || !move.applicable(v))
    throw Error(ErrorCode::inapplicable_move,
                move.to_string() + " does not apply to a vector of type " + v.signature.to_string());
  GeneratingVector out = v;
  const Element h1 = v.handles[0], h2 = v.handles[1];
  const Element h1i = g.inv(h1), h2i = g.inv(h2);
  switch (kind) {
    case MoveKind::t_alpha:
      out.handles[1] = g.mul(h2, h1);
      break;
    case MoveKind::t_beta:
      out.handles[0] = g.mul(h1, h2i);
      break;
    case MoveKind::t_gamma: {
      // l2 -> (h1 h2^-1 h1^-1) l2 (h1 h2 h1^-1), h1 -> h2^-1 l1 h1
      const Element c = g.mul(g.mul(h1, h2i), h1i);
      out.branch[1] = g.mul(g.mul(c, v.branch[1]), g.inv(c));
      out.handles[0] = g.mul(g.mul(h2i, v.branch[0]), h1);
      break;
    }
    case MoveKind::rho: {
      // l1 -> (h1 h2)^-1 l2 (h1 h2), l2 -> (h2 h1)^-1 l1 (h2 h1)
      const Element c1 = g.mul(h1, h2), c2 = g.mul(h2, h1);
      out.branch[0] = g.mul(g.mul(g.inv(c1), v.branch[1]), c1);
      out.branch[1] = g.mul(g.mul(g.inv(c2), v.branch[0]), c2);
      std::swap(out.signature.periods[0], out.signature.periods[1]);
      out.handles[0] = h1i;
      out.handles[1] = h2i;
      break;
    }
    case MoveKind::sigma:
      break;
  }
  return out;
}

GeneratingVector apply_move(const GroupTable& g, const HurwitzMove& move, const GeneratingVector& v) {
  if (move.kind == MoveKind::sigma) return apply_sigma(g, move.index, v);
  return apply_genus1_move(g, move.kind, v);
}

std::vector<HurwitzMove> hurwitz_generators(const BranchSignature& sig) {
  std::vector<HurwitzMove> out;
  const std::size_t n = sig.periods.size();
  if (sig.base_genus == 0) {
    for (std::size_t i = 1; i < n; ++i) out.push_back({MoveKind::sigma, static_cast<int>(i)});
  } else if (n == 1 || n == 2) {
    out.push_back({MoveKind::t_alpha, 0});
    out.push_back({MoveKind::t_beta, 0});
    if (n == 2) {
      out.push_back({MoveKind::t_gamma, 0});
      out.push_back({MoveKind::rho, 0});
    }
  }
  return out;
}

}  // namespace prodquot
