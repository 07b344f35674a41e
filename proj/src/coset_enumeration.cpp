#include "prodquot/coset_enumeration.hpp"

#include <deque>
#include <string>

#include "prodquot/error.hpp"

namespace prodquot {

namespace {

constexpr int kUndef = -1;

class CosetTable {
public:
  CosetTable(std::size_t ngens, std::size_t cap) : cols_(2 * ngens), cap_(cap) { new_coset(); }

  // Column of letter l: 2*gen for x, 2*gen+1 for x^-1.
  static int col(const Letter& l) { return 2 * l.generator + (l.sign < 0 ? 1 : 0); }
  static int inv_col(int c) { return c ^ 1; }

  int get(int coset, int c) const { return table_[static_cast<std::size_t>(coset) * cols_ + c]; }
  void set(int coset, int c, int v) { table_[static_cast<std::size_t>(coset) * cols_ + c] = v; }

  bool alive(int c) const { return parent_[c] == c; }
  std::size_t size() const { return parent_.size(); }
  std::size_t live() const { return live_; }
  std::size_t cols() const { return cols_; }

  int new_coset() {
    if (live_ >= cap_ || parent_.size() >= 16 * cap_ + 16)
      throw Error(ErrorCode::cap_exceeded,
                  "coset enumeration exceeded " + std::to_string(cap_) + " live cosets");
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    ++live_;
    return c;
  }

  void define(int coset, int c) {
    const int d = new_coset();
    set(coset, c, d);
    set(d, inv_col(c), coset);
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int g = queue.front();
      queue.pop_front();
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        const int d = get(g, x);
        if (d == kUndef) continue;
        if (get(d, inv_col(x)) == g) set(d, inv_col(x), kUndef);
        const int mu = rep(g), nu = rep(d);
        if (get(mu, x) != kUndef) {
          merge(nu, get(mu, x), queue);
        } else if (get(nu, inv_col(x)) != kUndef) {
          merge(mu, get(nu, inv_col(x)), queue);
        } else {
          set(mu, x, nu);
          set(nu, inv_col(x), mu);
        }
      }
    }
  }

  void scan_and_fill(int coset, const std::vector<int>& w) {
    int f = coset, b = coset;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv_col(w[j])) != kUndef) b = get(b, inv_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, inv_col(w[i]), f);
        return;
      }
      define(f, w[i]);
    }
  }

private:
  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  std::size_t cols_;
  std::size_t cap_;
  std::size_t live_ = 0;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

PermGenSet coset_enumeration(const Presentation& p, std::size_t coset_cap) {
  if (coset_cap < 1) throw Error(ErrorCode::invalid_parameters, "coset_cap must be positive");
  if (p.generators.empty())
    throw Error(ErrorCode::empty_generator_list, "presentation has no generators");

  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    std::vector<int> w;
    for (const auto& l : r) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= p.generators.size())
        throw Error(ErrorCode::unknown_generator, "relator references an undeclared generator");
      w.push_back(CosetTable::col(l));
    }
    if (!w.empty()) rels.push_back(std::move(w));
  }

  CosetTable t(p.generators.size(), coset_cap);
  for (int c = 0; c < static_cast<int>(t.size()); ++c) {
    for (const auto& w : rels) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, w);
    }
    for (int x = 0; x < static_cast<int>(t.cols()); ++x) {
      if (!t.alive(c)) break;
      if (t.get(c, x) == kUndef) t.define(c, x);
    }
  }

  // Renumber live cosets in order.
  std::vector<int> number(t.size(), -1);
  int live = 0;
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.alive(static_cast<int>(c))) number[c] = live++;

  PermGenSet out;
  out.degree = static_cast<std::size_t>(live);
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    Permutation perm(out.degree);
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (number[c] < 0) continue;
      const int d = t.get(static_cast<int>(c), static_cast<int>(2 * g));
      if (d == kUndef || number[t.rep(d)] < 0)
        throw Error(ErrorCode::invalid_group, "coset table incomplete after enumeration");
      perm[number[c]] = static_cast<std::uint16_t>(number[t.rep(d)]);
    }
    out.generators.push_back(std::move(perm));
  }
  if (out.degree > 65535) throw Error(ErrorCode::cap_exceeded, "too many cosets for permutation storage");
  out.validate();
  return out;
}

}  // namespace prodquot
