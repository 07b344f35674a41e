#include "prodquot/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "prodquot/parallel.hpp"

namespace prodquot {

std::string to_string(const GroupId& id) {
  return "(" + std::to_string(id.order) + "," + std::to_string(id.id) + ")";
}

const std::vector<int>& required_orders() {
  static const std::vector<int> orders{4,  6,  8,  9,  10, 12,  15,  16,  18,  20,  24,
                                       27, 30, 32, 36, 40, 45,  48,  54,  60,  64,  72,
                                       80, 90, 96, 108, 120, 144, 160, 168, 192};
  return orders;
}

struct Catalog::Impl {
  std::map<GroupId, CatalogEntry> entries;
  std::map<int, std::size_t> manifest;
  std::string hash;

  mutable std::mutex mutex;
  mutable std::map<GroupId, std::shared_ptr<const GroupTable>> tables;
  mutable std::map<int, std::shared_ptr<const std::vector<Fingerprint>>> fingerprints;
};

Catalog::Catalog() : impl_(std::make_unique<Impl>()) {}
Catalog::~Catalog() = default;
Catalog::Catalog(Catalog&&) noexcept = default;
Catalog& Catalog::operator=(Catalog&&) noexcept = default;

namespace {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::catalog_parse, "catalog line " + std::to_string(line) + ": " + msg);
}

int positive_int(const nlohmann::json& obj, const char* key, std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    parse_fail(line, std::string("missing integer field '") + key + "'");
  const auto v = obj[key].get<long long>();
  if (v < 1 || v > 1000000) parse_fail(line, std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

Catalog Catalog::parse_string(const std::string& text) {
  Catalog cat;
  auto& im = *cat.impl_;
  im.hash = fnv1a_hex(text);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail(lineno, e.what());
    }
    if (!obj.is_object()) parse_fail(lineno, "expected a JSON object");
    if (obj.value("manifest", false)) {
      const int order = positive_int(obj, "order", lineno);
      if (!obj.contains("count") || !obj["count"].is_number_integer() || obj["count"].get<long long>() < 0)
        parse_fail(lineno, "manifest needs a nonnegative integer 'count'");
      if (!im.manifest.emplace(order, obj["count"].get<std::size_t>()).second)
        parse_fail(lineno, "duplicate manifest for order " + std::to_string(order));
      continue;
    }
    CatalogEntry e;
    e.id.order = positive_int(obj, "order", lineno);
    e.id.id = positive_int(obj, "id", lineno);
    const int degree = positive_int(obj, "degree", lineno);
    if (degree > 65535) parse_fail(lineno, "degree too large");
    e.perm_gens.degree = static_cast<std::size_t>(degree);
    if (!obj.contains("gens") || !obj["gens"].is_array()) parse_fail(lineno, "missing array field 'gens'");
    for (const auto& g : obj["gens"]) {
      if (!g.is_array() || g.size() != e.perm_gens.degree)
        parse_fail(lineno, "each generator must list 'degree' images");
      Permutation p;
      p.reserve(g.size());
      for (const auto& x : g) {
        if (!x.is_number_integer()) parse_fail(lineno, "permutation images must be integers");
        const auto v = x.get<long long>();
        if (v < 1 || v > degree) parse_fail(lineno, "permutation image out of range");
        p.push_back(static_cast<std::uint16_t>(v - 1));
      }
      e.perm_gens.generators.push_back(std::move(p));
    }
    try {
      e.perm_gens.validate();
    } catch (const Error& err) {
      parse_fail(lineno, err.what());
    }
    if (obj.contains("name") && obj["name"].is_string()) e.name = obj["name"].get<std::string>();
    const GroupId id = e.id;
    if (!im.entries.emplace(id, std::move(e)).second)
      parse_fail(lineno, "duplicate entry " + to_string(id));
  }
  return cat;
}

Catalog Catalog::parse(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::catalog_parse, "cannot open catalog " + path.string());
  return parse(in);
}

const std::map<GroupId, CatalogEntry>& Catalog::entries() const { return impl_->entries; }
const std::map<int, std::size_t>& Catalog::manifest() const { return impl_->manifest; }
const std::string& Catalog::content_hash() const { return impl_->hash; }

bool Catalog::is_complete(int order) const {
  const auto it = impl_->manifest.find(order);
  if (it == impl_->manifest.end()) return false;
  for (std::size_t i = 1; i <= it->second; ++i)
    if (!impl_->entries.contains(GroupId{order, static_cast<int>(i)})) return false;
  return ids_of_order(order).size() == it->second;
}

std::vector<GroupId> Catalog::ids_of_order(int order) const {
  std::vector<GroupId> out;
  for (auto it = impl_->entries.lower_bound(GroupId{order, 0});
       it != impl_->entries.end() && it->first.order == order; ++it)
    out.push_back(it->first);
  return out;
}

std::vector<int> Catalog::missing_orders(const std::vector<int>& orders) const {
  std::vector<int> out;
  for (int o : orders)
    if (!is_complete(o)) out.push_back(o);
  return out;
}

const CatalogEntry& Catalog::entry(GroupId id) const {
  const auto it = impl_->entries.find(id);
  if (it == impl_->entries.end())
    throw Error(ErrorCode::not_found, "no catalog entry " + to_string(id));
  return it->second;
}

GroupTable Catalog::build_group(GroupId id) const {
  const auto& e = entry(id);
  GroupTable g = group_from_permutations(e.perm_gens, std::max<std::size_t>(kDefaultGroupOrderCap, id.order));
  if (g.order() != static_cast<std::size_t>(id.order))
    throw Error(ErrorCode::order_mismatch, "catalog entry " + to_string(id) + " generates a group of order " +
                                               std::to_string(g.order()));
  return g;
}

std::shared_ptr<const GroupTable> Catalog::group(GroupId id) const {
  {
    std::lock_guard lock(impl_->mutex);
    const auto it = impl_->tables.find(id);
    if (it != impl_->tables.end()) return it->second;
  }
  auto g = std::make_shared<const GroupTable>(build_group(id));
  std::lock_guard lock(impl_->mutex);
  return impl_->tables.emplace(id, std::move(g)).first->second;
}

GroupId Catalog::identify(const GroupTable& g) const {
  const int order = static_cast<int>(g.order());
  if (!is_complete(order))
    throw Error(ErrorCode::order_incomplete,
                "catalog does not cover all groups of order " + std::to_string(order));
  const auto ids = ids_of_order(order);
  std::shared_ptr<const std::vector<Fingerprint>> fps;
  {
    std::lock_guard lock(impl_->mutex);
    const auto it = impl_->fingerprints.find(order);
    if (it != impl_->fingerprints.end()) fps = it->second;
  }
  if (!fps) {
    auto computed = std::make_shared<std::vector<Fingerprint>>(ids.size());
    parallel_for(ids.size(), 0, [&](std::size_t i) { (*computed)[i] = fingerprint(build_group(ids[i])); });
    std::lock_guard lock(impl_->mutex);
    fps = impl_->fingerprints.emplace(order, std::move(computed)).first->second;
  }
  const Fingerprint fp = fingerprint(g);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if ((*fps)[i] != fp) continue;
    if (isomorphism_test(g, *group(ids[i]))) return ids[i];
  }
  throw Error(ErrorCode::not_found,
              "no catalog entry of order " + std::to_string(order) + " is isomorphic to the group");
}

ValidationReport Catalog::validate(const ValidationOptions& options) const {
  ValidationReport report;
  std::vector<int> orders = options.orders;
  if (orders.empty()) {
    for (const auto& [id, e] : impl_->entries)
      if (orders.empty() || orders.back() != id.order) orders.push_back(id.order);
    for (const auto& [o, c] : impl_->manifest)
      if (std::find(orders.begin(), orders.end(), o) == orders.end()) orders.push_back(o);
    std::sort(orders.begin(), orders.end());
  }

  for (int order : orders) {
    const auto ids = ids_of_order(order);
    const auto m = impl_->manifest.find(order);
    if (m == impl_->manifest.end()) {
      report.partial_orders.push_back(order);
    } else if (!is_complete(order)) {
      report.partial_orders.push_back(order);
      report.issues.push_back({ErrorCode::manifest_mismatch,
                               "order " + std::to_string(order) + ": manifest declares " +
                                   std::to_string(m->second) + " groups, catalog has " +
                                   std::to_string(ids.size()) + " (ids must be 1..count)"});
    } else {
      report.complete_orders.push_back(order);
    }

    // Recompute every group order; collect fingerprints for the isomorphism check.
    std::vector<std::string> errors(ids.size());
    std::vector<Fingerprint> fps(ids.size());
    const bool complete = is_complete(order);
    parallel_for(ids.size(), options.threads, [&](std::size_t i) {
      try {
        const GroupTable g = build_group(ids[i]);
        if (complete && options.check_isomorphism_classes) fps[i] = fingerprint(g);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (!errors[i].empty()) report.issues.push_back({ErrorCode::order_mismatch, errors[i]});
    report.entries_checked += ids.size();

    if (!complete || !options.check_isomorphism_classes) continue;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (errors[i].empty()) buckets[fps[i]].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [fp, members] : buckets)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
    std::vector<char> iso(pairs.size(), 0);
    parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
      iso[k] = isomorphism_test(*group(ids[pairs[k].first]), *group(ids[pairs[k].second])).has_value();
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (iso[k])
        report.issues.push_back({ErrorCode::duplicate_isomorphism_class,
                                 "entries " + to_string(ids[pairs[k].first]) + " and " +
                                     to_string(ids[pairs[k].second]) + " are isomorphic"});
  }
  return report;
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("PRODQUOT_CATALOG"); env && *env) return env;
  return std::filesystem::path(PRODQUOT_SOURCE_DIR) / "data" / "smallgroups.jsonl";
}

}  // namespace prodquot
