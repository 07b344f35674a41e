#include "prodquot/group_table.hpp"

#include <numeric>
#include <string>

#include "prodquot/error.hpp"

namespace prodquot {

GroupTable::GroupTable()
    : n_(1), identity_(0), mul_{0}, inv_{0}, order_{1}, class_id_{0}, classes_{{0}} {}

GroupTable GroupTable::from_table(std::size_t n, std::vector<Element> mul,
                                  std::vector<Element> generator_hint) {
  if (n == 0 || mul.size() != n * n)
    throw Error(ErrorCode::invalid_group, "multiplication table has wrong size");
  if (n > 65535) throw Error(ErrorCode::invalid_group, "group order exceeds element index range");

  for (auto v : mul)
    if (v >= n) throw Error(ErrorCode::invalid_group, "table entry out of range");

  // Latin square.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      auto v = mul[a * n + b];
      if (seen[v] == stamp) throw Error(ErrorCode::invalid_group, "row is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      auto v = mul[a * n + b];
      if (seen[v] == stamp) throw Error(ErrorCode::invalid_group, "column is not a permutation");
      seen[v] = stamp;
    }
  }

  GroupTable g;
  g.n_ = n;
  g.mul_ = std::move(mul);
  g.hint_ = std::move(generator_hint);
  for (auto h : g.hint_)
    if (h >= n) throw Error(ErrorCode::invalid_group, "generator hint out of range");

  // Identity: e*e = e identifies it in a Latin square group table.
  bool found = false;
  for (std::size_t e = 0; e < n; ++e) {
    if (g.mul_[e * n + e] == e) {
      g.identity_ = static_cast<Element>(e);
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::invalid_group, "no idempotent element");
  for (std::size_t x = 0; x < n; ++x) {
    if (g.mul_[g.identity_ * n + x] != x || g.mul_[x * n + g.identity_] != x)
      throw Error(ErrorCode::invalid_group, "identity is not two-sided");
  }

  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.mul_[x * n + y] == g.identity_) {
        g.inv_[x] = static_cast<Element>(y);
        break;
      }
    }
    if (g.mul_[g.inv_[x] * n + x] != g.identity_)
      throw Error(ErrorCode::invalid_group, "left and right inverses differ");
  }

  g.order_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    int k = 1;
    Element p = static_cast<Element>(x);
    while (p != g.identity_) {
      p = g.mul_[p * n + x];
      ++k;
      if (static_cast<std::size_t>(k) > n) throw Error(ErrorCode::invalid_group, "element of infinite order");
    }
    g.order_[x] = k;
  }

  g.class_id_.assign(n, -1);
  g.classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (g.class_id_[x] >= 0) continue;
    const int id = static_cast<int>(g.classes_.size());
    std::vector<Element> cls;
    for (std::size_t s = 0; s < n; ++s) {
      Element c = g.conjugate(static_cast<Element>(s), static_cast<Element>(x));
      if (g.class_id_[c] < 0) {
        g.class_id_[c] = id;
        cls.push_back(c);
      }
    }
    g.classes_.push_back(std::move(cls));
  }
  return g;
}

Element GroupTable::power(Element x, long long k) const noexcept {
  const long long m = order_[x];
  k %= m;
  if (k < 0) k += m;
  Element r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Element GroupTable::product(std::span<const Element> xs) const noexcept {
  Element r = identity_;
  for (auto x : xs) r = mul(r, x);
  return r;
}

std::vector<Element> GroupTable::elements() const {
  std::vector<Element> v(n_);
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

bool GroupTable::verify_axioms() const {
  for (std::size_t x = 0; x < n_; ++x) {
    if (mul(identity_, static_cast<Element>(x)) != x || mul(static_cast<Element>(x), identity_) != x)
      return false;
    if (mul(static_cast<Element>(x), inv_[x]) != identity_) return false;
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      const Element ab = mul_[a * n_ + b];
      for (std::size_t c = 0; c < n_; ++c)
        if (mul_[ab * n_ + c] != mul_[a * n_ + mul_[b * n_ + c]]) return false;
    }
  return true;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  Automorphism r;
  r.image.resize(b.image.size());
  for (std::size_t x = 0; x < b.image.size(); ++x) r.image[x] = a.image[b.image[x]];
  return r;
}

Automorphism Automorphism::inverse() const {
  Automorphism r;
  r.image.resize(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) r.image[image[x]] = static_cast<Element>(x);
  return r;
}

Automorphism Automorphism::identity(std::size_t n) {
  Automorphism r;
  r.image.resize(n);
  std::iota(r.image.begin(), r.image.end(), Element{0});
  return r;
}

Automorphism Automorphism::inner(const GroupTable& g, Element x) {
  Automorphism r;
  r.image.resize(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) r.image[y] = g.conjugate(x, static_cast<Element>(y));
  return r;
}

bool is_homomorphic_bijection(const GroupTable& g, const GroupTable& h,
                              std::span<const Element> image) {
  if (g.order() != h.order() || image.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (auto v : image) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (image[g.mul(static_cast<Element>(a), static_cast<Element>(b))] != h.mul(image[a], image[b]))
        return false;
  return true;
}

}  // namespace prodquot
