#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prodquot/error.hpp"
#include "prodquot/group_table.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/permutation.hpp"

namespace prodquot {

/// Small-groups label (order, index within order).
struct GroupId {
  int order = 1;
  int id = 1;
  auto operator<=>(const GroupId&) const = default;
};

/// "(24,5)"
std::string to_string(const GroupId& id);

struct CatalogEntry {
  GroupId id;
  PermGenSet perm_gens;
  std::string name;
};

/// Orders whose catalog coverage the classification drivers depend on.
const std::vector<int>& required_orders();

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<int> complete_orders;
  std::vector<int> partial_orders;
  std::size_t entries_checked = 0;
  bool ok() const { return issues.empty(); }
};

struct ValidationOptions {
  /// Restrict to these orders; empty means every order in the file.
  std::vector<int> orders;
  bool check_isomorphism_classes = true;
  unsigned threads = 0;
};

/// An in-memory small-groups catalog.
///
/// File format, one JSON object per line:
///     {"order":8,"id":3,"degree":4,"gens":[[2,3,4,1],[4,3,2,1]]}
///     {"manifest":true,"order":8,"count":5}
/// Permutation images are 1-based. An optional "name" string is kept.
///
/// Immutable after loading; group tables and fingerprints are built lazily
/// behind a mutex, so a const Catalog can be shared between threads.
class Catalog {
public:
  Catalog();
  ~Catalog();
  Catalog(Catalog&&) noexcept;
  Catalog& operator=(Catalog&&) noexcept;

  /// Throws Error(catalog_parse) with the offending line number.
  static Catalog load(const std::filesystem::path& path);
  static Catalog parse(std::istream& in);
  static Catalog parse_string(const std::string& text);

  const std::map<GroupId, CatalogEntry>& entries() const;
  const std::map<int, std::size_t>& manifest() const;
  std::size_t size() const { return entries().size(); }
  bool empty() const { return entries().empty(); }

  /// True when a manifest line exists and ids 1..count are all present.
  bool is_complete(int order) const;
  /// Entries of the given order, ascending id.
  std::vector<GroupId> ids_of_order(int order) const;
  /// Orders from `orders` that are not complete.
  std::vector<int> missing_orders(const std::vector<int>& orders) const;

  const CatalogEntry& entry(GroupId id) const;
  /// Cached multiplication table. Throws Error(not_found) for unknown ids.
  std::shared_ptr<const GroupTable> group(GroupId id) const;
  /// Builds the table without caching it.
  GroupTable build_group(GroupId id) const;

  /// FNV-1a 64-bit hash of the source bytes, as 16 hex digits.
  const std::string& content_hash() const;

  /// The id of the entry isomorphic to g.
  /// Throws Error(order_incomplete) if g's order is not complete, and
  /// Error(not_found) if no entry matches.
  GroupId identify(const GroupTable& g) const;

  ValidationReport validate(const ValidationOptions& options = {}) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// PRODQUOT_CATALOG if set, else the catalog shipped in the source tree.
std::filesystem::path default_catalog_path();

}  // namespace prodquot
