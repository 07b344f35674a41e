#include "prodquot/orbits.hpp"

#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "prodquot/error.hpp"
#include "prodquot/freeness.hpp"
#include "prodquot/group_ops.hpp"
#include "prodquot/hurwitz.hpp"
#include "prodquot/isomorphism.hpp"

namespace prodquot {

int dimension(SurfaceKind kind, int r, int s) {
  if (s < 1) throw Error(ErrorCode::invalid_parameters, "dimension needs s >= 1");
  if (kind == SurfaceKind::mixed) return s;
  if (r < 3) throw Error(ErrorCode::invalid_parameters, "dimension needs r >= 3 in the unmixed case");
  return r + s - 3;
}

namespace {

using Key = std::vector<Element>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : k) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

class UnionFind {
public:
  std::uint32_t add() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    return parent_.back();
  }
  void resize(std::size_t n) {
    while (parent_.size() < n) add();
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::uint32_t> parent_;
};

/// Interned tuples with a union-find over their indices.
class StateSpace {
public:
  explicit StateSpace(std::size_t cap) : cap_(cap) {}

  // Index of k, and whether it was new.
  std::pair<std::uint32_t, bool> intern(Key k) {
    const auto it = index_.find(k);
    if (it != index_.end()) return {it->second, false};
    if (keys_.size() >= cap_)
      throw Error(ErrorCode::cap_exceeded,
                  "orbit search visited more than " + std::to_string(cap_) + " tuples");
    const auto id = uf_.add();
    index_.emplace(k, id);
    keys_.push_back(std::move(k));
    return {id, true};
  }

  const Key& key(std::uint32_t i) const { return keys_[i]; }
  std::size_t size() const { return keys_.size(); }
  UnionFind& uf() { return uf_; }

  std::size_t component_count() {
    std::size_t c = 0;
    for (std::uint32_t i = 0; i < keys_.size(); ++i)
      if (uf_.find(i) == i) ++c;
    return c;
  }

private:
  std::size_t cap_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
  std::vector<Key> keys_;
  UnionFind uf_;
};

Key key_of(const GeneratingVector& v) {
  Key k = v.branch;
  k.insert(k.end(), v.handles.begin(), v.handles.end());
  return k;
}

GeneratingVector vector_of(const GroupTable& g, const Key& k, std::size_t offset, std::size_t nbranch,
                           int base_genus) {
  GeneratingVector v;
  v.signature.base_genus = base_genus;
  v.branch.assign(k.begin() + static_cast<std::ptrdiff_t>(offset),
                  k.begin() + static_cast<std::ptrdiff_t>(offset + nbranch));
  for (auto x : v.branch) v.signature.periods.push_back(g.elem_order(x));
  const std::size_t nh = 2 * static_cast<std::size_t>(base_genus);
  v.handles.assign(k.begin() + static_cast<std::ptrdiff_t>(offset + nbranch),
                   k.begin() + static_cast<std::ptrdiff_t>(offset + nbranch + nh));
  return v;
}

[[noreturn]] void move_left_set(const HurwitzMove& m) {
  throw Error(ErrorCode::invalid_group, "move " + m.to_string() + " produced an invalid generating vector");
}

}  // namespace

HurwitzOrbits hurwitz_orbits(const GroupTable& g, std::vector<GeneratingVector> seeds,
                             const OrbitOptions& options) {
  HurwitzOrbits out;
  out.seeds = std::move(seeds);
  if (out.seeds.empty()) return out;
  const int genus = out.seeds.front().signature.base_genus;
  const std::size_t nbranch = out.seeds.front().branch.size();
  const auto moves = hurwitz_generators(out.seeds.front().signature);

  StateSpace space(options.state_cap);
  std::deque<std::uint32_t> queue;
  std::vector<std::uint32_t> seed_state;
  for (const auto& s : out.seeds) {
    const auto [id, fresh] = space.intern(key_of(s));
    seed_state.push_back(id);
    if (fresh) queue.push_back(id);
  }
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    const GeneratingVector v = vector_of(g, space.key(id), 0, nbranch, genus);
    for (const auto& m : moves) {
      GeneratingVector w = apply_move(g, m, v);
      if (options.verify_moves && !is_generating_vector(g, w)) move_left_set(m);
      const auto [j, fresh] = space.intern(key_of(w));
      space.uf().unite(id, j);
      if (fresh) queue.push_back(j);
    }
  }
  out.states = space.size();

  std::unordered_map<std::uint32_t, std::uint32_t> number;
  for (auto s : seed_state) {
    const auto root = space.uf().find(s);
    const auto [it, fresh] = number.emplace(root, static_cast<std::uint32_t>(number.size()));
    out.seed_orbit.push_back(it->second);
  }
  out.orbit_count = number.size();
  return out;
}

OrbitCount count_components_unmixed(const GroupTable& g, const std::vector<int>& m,
                                    const std::vector<int>& n, const std::vector<Automorphism>& aut_gens,
                                    const OrbitOptions& options) {
  const auto vs = all_generating_vectors(g, BranchSignature{0, m});
  const auto ws = all_generating_vectors(g, BranchSignature{1, n});
  if (vs.empty() || ws.empty())
    throw Error(ErrorCode::empty_orbit_problem, "no surface of this type: a generating vector is missing");

  const HurwitzOrbits ov = hurwitz_orbits(g, vs, options);
  const HurwitzOrbits ow = hurwitz_orbits(g, ws, options);

  auto orbit_data = [&](const HurwitzOrbits& o) {
    std::vector<std::size_t> rep(o.orbit_count, SIZE_MAX);
    std::unordered_map<Key, std::uint32_t, KeyHash> seed_index;
    for (std::size_t i = 0; i < o.seeds.size(); ++i) {
      seed_index.emplace(key_of(o.seeds[i]), static_cast<std::uint32_t>(i));
      if (rep[o.seed_orbit[i]] == SIZE_MAX) rep[o.seed_orbit[i]] = i;
    }
    std::vector<ElementSet> sigma;
    for (auto r : rep) sigma.push_back(stabilizer_classes(g, o.seeds[r]));
    // orbit image under each automorphism generator
    std::vector<std::vector<std::uint32_t>> act;
    for (const auto& phi : aut_gens) {
      std::vector<std::uint32_t> img(o.orbit_count);
      for (std::size_t i = 0; i < o.orbit_count; ++i) {
        const auto it = seed_index.find(key_of(apply_automorphism(phi, o.seeds[rep[i]])));
        if (it == seed_index.end())
          throw Error(ErrorCode::invalid_parameters, "automorphism image is not a generating vector");
        img[i] = o.seed_orbit[it->second];
      }
      act.push_back(std::move(img));
    }
    return std::make_pair(std::move(sigma), std::move(act));
  };
  const auto [sigma_v, act_v] = orbit_data(ov);
  const auto [sigma_w, act_w] = orbit_data(ow);

  const std::size_t nv = ov.orbit_count, nw = ow.orbit_count;
  const Element id_class = static_cast<Element>(g.class_index(g.identity()));
  std::vector<char> admissible(nv * nw, 0);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nw; ++j) {
      ElementSet common = sigma_v[i] & sigma_w[j];
      common.erase(id_class);
      admissible[i * nw + j] = common.empty();
    }

  UnionFind uf;
  uf.resize(nv * nw);
  for (std::size_t k = 0; k < aut_gens.size(); ++k)
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nw; ++j)
        if (admissible[i * nw + j])
          uf.unite(static_cast<std::uint32_t>(i * nw + j),
                   static_cast<std::uint32_t>(act_v[k][i] * nw + act_w[k][j]));

  OrbitCount out;
  out.states = ov.states + ow.states;
  out.v_orbits = nv;
  out.w_orbits = nw;
  for (std::uint32_t p = 0; p < nv * nw; ++p)
    if (admissible[p] && uf.find(p) == p) ++out.components;
  if (out.components == 0)
    throw Error(ErrorCode::empty_orbit_problem, "no surface of this type: condition (U) never holds");
  return out;
}

OrbitCount count_components_unmixed_bfs(const GroupTable& g, const std::vector<int>& m,
                                        const std::vector<int>& n, const std::vector<Automorphism>& aut_gens,
                                        const OrbitOptions& options) {
  const auto vs = all_generating_vectors(g, BranchSignature{0, m});
  const auto ws = all_generating_vectors(g, BranchSignature{1, n});
  const std::size_t r = m.size(), s = n.size();
  const auto v_moves = hurwitz_generators(BranchSignature{0, m});
  const auto w_moves = hurwitz_generators(BranchSignature{1, n});

  StateSpace space(options.state_cap);
  std::deque<std::uint32_t> queue;
  for (const auto& v : vs)
    for (const auto& w : ws) {
      if (!check_condition_U(g, v, w)) continue;
      Key k = key_of(v);
      const Key kw = key_of(w);
      k.insert(k.end(), kw.begin(), kw.end());
      const auto [id, fresh] = space.intern(std::move(k));
      if (fresh) queue.push_back(id);
    }
  if (space.size() == 0)
    throw Error(ErrorCode::empty_orbit_problem, "no surface of this type");

  auto join = [](const GeneratingVector& v, const GeneratingVector& w) {
    Key k = key_of(v);
    const Key kw = key_of(w);
    k.insert(k.end(), kw.begin(), kw.end());
    return k;
  };
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    const GeneratingVector v = vector_of(g, space.key(id), 0, r, 0);
    const GeneratingVector w = vector_of(g, space.key(id), r, s, 1);
    auto follow = [&](Key k) {
      const auto [j, fresh] = space.intern(std::move(k));
      space.uf().unite(id, j);
      if (fresh) queue.push_back(j);
    };
    for (const auto& mv : v_moves) {
      GeneratingVector v2 = apply_move(g, mv, v);
      if (options.verify_moves && (!is_generating_vector(g, v2) || !check_condition_U(g, v2, w)))
        move_left_set(mv);
      follow(join(v2, w));
    }
    for (const auto& mw : w_moves) {
      GeneratingVector w2 = apply_move(g, mw, w);
      if (options.verify_moves && (!is_generating_vector(g, w2) || !check_condition_U(g, v, w2)))
        move_left_set(mw);
      follow(join(v, w2));
    }
    for (const auto& phi : aut_gens) follow(join(apply_automorphism(phi, v), apply_automorphism(phi, w)));
  }

  OrbitCount out;
  out.states = space.size();
  out.components = space.component_count();
  return out;
}

OrbitCount count_components_mixed(const GroupTable& g, const ElementSet& sub, const std::vector<int>& n,
                                  const std::vector<Automorphism>& aut_gens, const OrbitOptions& options) {
  const Subgroup model = induced_subgroup(g, sub);
  std::vector<ElementSet> subs;
  for (const auto& h : index_two_subgroups(g)) {
    if (!is_nonsplit_extension(g, h)) continue;
    if (h == sub || isomorphism_test(induced_subgroup(g, h).group, model.group)) subs.push_back(h);
  }

  const BranchSignature sig{1, n};
  auto member = [&](const GeneratingVector& w) {
    if (w.branch.size() != n.size() || w.handles.size() != 2) return false;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (g.elem_order(w.branch[j]) != n[j]) return false;
    if (long_relation_product(g, w) != g.identity()) return false;
    const Key k = key_of(w);
    const ElementSet span = subgroup_closure(g, k);
    for (const auto& h : subs)
      if (span == h) return check_M1(g, h, w) && check_M2(g, h, w);
    return false;
  };

  StateSpace space(options.state_cap);
  std::deque<std::uint32_t> queue;
  for (const auto& h : subs) {
    const Subgroup sg = induced_subgroup(g, h);
    for (const auto& w : all_generating_vectors(sg.group, sig)) {
      GeneratingVector wg = w;
      for (auto& x : wg.branch) x = sg.embedding[x];
      for (auto& x : wg.handles) x = sg.embedding[x];
      if (!check_M1(g, h, wg) || !check_M2(g, h, wg)) continue;
      const auto [id, fresh] = space.intern(key_of(wg));
      if (fresh) queue.push_back(id);
    }
  }
  if (space.size() == 0)
    throw Error(ErrorCode::empty_orbit_problem, "no surface of this type: no vector passes (M1) and (M2)");

  const auto moves = hurwitz_generators(sig);
  OrbitCount out;
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    const GeneratingVector w = vector_of(g, space.key(id), 0, n.size(), 1);
    auto follow = [&](const GeneratingVector& w2) {
      const auto [j, fresh] = space.intern(key_of(w2));
      space.uf().unite(id, j);
      if (fresh) queue.push_back(j);
    };
    for (const auto& mv : moves) {
      GeneratingVector w2 = apply_move(g, mv, w);
      if (options.verify_moves && !member(w2)) move_left_set(mv);
      follow(w2);
    }
    for (const auto& phi : aut_gens) {
      GeneratingVector w2 = apply_automorphism(phi, w);
      if (!member(w2)) {
        ++out.aut_filter_rejections;
        continue;
      }
      follow(w2);
    }
  }
  out.states = space.size();
  out.components = space.component_count();
  out.w_orbits = out.components;
  return out;
}

}  // namespace prodquot
