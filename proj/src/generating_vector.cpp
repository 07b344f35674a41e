#include "prodquot/generating_vector.hpp"

#include "prodquot/error.hpp"
#include "prodquot/group_ops.hpp"

namespace prodquot {

Element long_relation_product(const GroupTable& g, const GeneratingVector& v) {
  Element p = g.product(v.branch);
  if (v.handles.size() == 2) p = g.mul(p, g.commutator(v.handles[0], v.handles[1]));
  return p;
}

bool is_generating_vector(const GroupTable& g, const GeneratingVector& v) {
  const auto& sig = v.signature;
  if (sig.base_genus != 0 && sig.base_genus != 1) return false;
  if (v.branch.size() != sig.periods.size()) return false;
  if (v.handles.size() != static_cast<std::size_t>(2 * sig.base_genus)) return false;
  for (auto x : v.branch)
    if (x >= g.order()) return false;
  for (auto x : v.handles)
    if (x >= g.order()) return false;
  for (std::size_t i = 0; i < v.branch.size(); ++i)
    if (g.elem_order(v.branch[i]) != sig.periods[i]) return false;
  if (long_relation_product(g, v) != g.identity()) return false;
  std::vector<Element> all = v.branch;
  all.insert(all.end(), v.handles.begin(), v.handles.end());
  return generates(g, all);
}

namespace {

std::vector<Element> elements_of_order(const GroupTable& g, int k) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elem_order(static_cast<Element>(x)) == k) out.push_back(static_cast<Element>(x));
  return out;
}

std::vector<Element> class_representatives(const GroupTable& g, const std::vector<Element>& pool) {
  std::vector<Element> out;
  std::vector<char> seen(g.class_count(), 0);
  for (auto x : pool) {
    const int c = g.class_index(x);
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(x);
    }
  }
  return out;
}

class Search {
public:
  Search(const GroupTable& g, const BranchSignature& sig, bool reduced,
         const std::function<bool(const GeneratingVector&)>& visit)
      : g_(g), visit_(visit) {
    v_.signature = sig;
    const std::size_t r = sig.periods.size();
    v_.branch.assign(r, g.identity());
    v_.handles.assign(2 * sig.base_genus, g.identity());
    for (int m : sig.periods) pools_.push_back(elements_of_order(g, m));
    all_ = g.elements();
    if (sig.base_genus == 0) {
      if (reduced && r >= 2) pools_[0] = class_representatives(g, pools_[0]);
    } else {
      first_handles_ = reduced ? class_representatives(g, all_) : all_;
    }
  }

  void run() {
    if (v_.signature.base_genus == 0)
      genus0(0, g_.identity());
    else
      genus1();
  }

private:
  bool emit() {
    std::vector<Element> gens = v_.branch;
    gens.insert(gens.end(), v_.handles.begin(), v_.handles.end());
    if (!generates(g_, gens)) return true;
    return visit_(v_);
  }

  // Returns false when the visitor asked to stop.
  bool genus0(std::size_t pos, Element prefix) {
    const std::size_t r = v_.branch.size();
    if (r == 0) return g_.order() == 1 ? visit_(v_) : true;
    if (pos + 1 == r) {
      const Element last = g_.inv(prefix);
      if (g_.elem_order(last) != v_.signature.periods[pos]) return true;
      v_.branch[pos] = last;
      return emit();
    }
    for (auto x : pools_[pos]) {
      v_.branch[pos] = x;
      if (!genus0(pos + 1, g_.mul(prefix, x))) return false;
    }
    return true;
  }

  void genus1() {
    for (auto h1 : first_handles_) {
      v_.handles[0] = h1;
      for (auto h2 : all_) {
        v_.handles[1] = h2;
        // l_1 ... l_s = [h1,h2]^-1 = [h2,h1]
        if (!branch1(0, g_.identity(), g_.commutator(h2, h1))) return;
      }
    }
  }

  bool branch1(std::size_t pos, Element prefix, Element target) {
    const std::size_t s = v_.branch.size();
    if (s == 0) return target == g_.identity() ? emit() : true;
    if (pos + 1 == s) {
      const Element last = g_.mul(g_.inv(prefix), target);
      if (g_.elem_order(last) != v_.signature.periods[pos]) return true;
      v_.branch[pos] = last;
      return emit();
    }
    for (auto x : pools_[pos]) {
      v_.branch[pos] = x;
      if (!branch1(pos + 1, g_.mul(prefix, x), target)) return false;
    }
    return true;
  }

  const GroupTable& g_;
  const std::function<bool(const GeneratingVector&)>& visit_;
  GeneratingVector v_;
  std::vector<std::vector<Element>> pools_;
  std::vector<Element> all_;
  std::vector<Element> first_handles_;
};

}  // namespace

void enumerate_generating_vectors(const GroupTable& g, const BranchSignature& sig, bool up_to_conjugacy,
                                  const std::function<bool(const GeneratingVector&)>& visit) {
  sig.validate();
  Search(g, sig, up_to_conjugacy, visit).run();
}

std::optional<GeneratingVector> find_generating_vector(const GroupTable& g, const BranchSignature& sig) {
  std::optional<GeneratingVector> found;
  enumerate_generating_vectors(g, sig, true, [&](const GeneratingVector& v) {
    found = v;
    return false;
  });
  return found;
}

std::vector<GeneratingVector> all_generating_vectors(const GroupTable& g, const BranchSignature& sig) {
  std::vector<GeneratingVector> out;
  enumerate_generating_vectors(g, sig, false, [&](const GeneratingVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

ElementSet stabilizer_classes(const GroupTable& g, const GeneratingVector& v) {
  ElementSet classes(g.class_count());
  for (auto x : v.branch) {
    Element p = x;
    do {
      classes.insert(static_cast<Element>(g.class_index(p)));
      p = g.mul(p, x);
    } while (p != x);
  }
  classes.insert(static_cast<Element>(g.class_index(g.identity())));
  return classes;
}

ElementSet stabilizer_union(const GroupTable& g, const GeneratingVector& v) {
  ElementSet out(g.order());
  out.insert(g.identity());
  stabilizer_classes(g, v).for_each([&](Element c) {
    for (auto x : g.class_members(c)) out.insert(x);
  });
  return out;
}

GeneratingVector apply_automorphism(const Automorphism& phi, const GeneratingVector& v) {
  GeneratingVector out = v;
  for (auto& x : out.branch) x = phi(x);
  for (auto& x : out.handles) x = phi(x);
  return out;
}

}  // namespace prodquot
