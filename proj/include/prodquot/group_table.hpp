#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prodquot/element_set.hpp"

namespace prodquot {

/// A finite group given by its full multiplication table.
///
/// Elements are indices 0..order()-1. Inverses, element orders and the
/// partition into conjugacy classes are computed once at construction, after
/// which the table is immutable and safe to share between threads.
class GroupTable {
public:
  /// The trivial group.
  GroupTable();

  /// Builds a group from a row-major n*n table, mul[a*n+b] = a*b.
  ///
  /// Checks that the table is a Latin square with a two-sided identity.
  /// Associativity is not checked here (it is O(n^3)); see verify_axioms().
  /// Throws Error(invalid_group) on failure.
  static GroupTable from_table(std::size_t n, std::vector<Element> mul,
                               std::vector<Element> generator_hint = {});

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element inv(Element x) const noexcept { return inv_[x]; }
  int elem_order(Element x) const noexcept { return order_[x]; }

  Element power(Element x, long long k) const noexcept;
  /// x y x^-1 y^-1
  Element commutator(Element x, Element y) const noexcept {
    return mul(mul(x, y), mul(inv_[x], inv_[y]));
  }
  /// g x g^-1
  Element conjugate(Element g, Element x) const noexcept { return mul(mul(g, x), inv_[g]); }

  /// Product of a sequence, left to right.
  Element product(std::span<const Element> xs) const noexcept;

  const std::vector<Element>& generator_hint() const noexcept { return hint_; }
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  int class_index(Element x) const noexcept { return class_id_[x]; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<Element>& class_members(int c) const noexcept { return classes_[c]; }
  std::size_t class_size(Element x) const noexcept { return classes_[class_id_[x]].size(); }

  std::vector<Element> elements() const;
  ElementSet all() const { return ElementSet::full(n_); }

  /// Full check of the group axioms including associativity over all triples.
  bool verify_axioms() const;

private:
  std::size_t n_ = 1;
  Element identity_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<int> order_;
  std::vector<int> class_id_;
  std::vector<std::vector<Element>> classes_;
  std::vector<Element> hint_;
};

/// An automorphism (or, between two groups, an isomorphism) as an image table.
struct Automorphism {
  std::vector<Element> image;

  Element operator()(Element x) const noexcept { return image[x]; }
  /// (a * b)(x) = a(b(x))
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;
  bool operator==(const Automorphism&) const = default;

  static Automorphism identity(std::size_t n);
  static Automorphism inner(const GroupTable& g, Element x);
};

/// True when `image` is a bijection that respects multiplication from g to h.
bool is_homomorphic_bijection(const GroupTable& g, const GroupTable& h,
                              std::span<const Element> image);

}  // namespace prodquot
