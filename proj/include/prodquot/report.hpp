#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prodquot/catalog.hpp"
#include "prodquot/classify.hpp"

namespace prodquot {

inline constexpr int kSchemaVersion = 1;

/// Everything one classification run reports.
struct ResultDocument {
  std::string tool_version = PRODQUOT_VERSION;
  std::string catalog_hash;
  std::string command;
  std::vector<int> incomplete_orders;
  std::vector<SurfaceRecord> records;
  std::int64_t elapsed_ms = 0;
  bool exhaustive() const { return incomplete_orders.empty(); }
};

enum class OutputFormat { table, json, csv };

/// Shortest words for every element over the table's generator hint,
/// with generators named a, b, c, ... ("1" for the identity).
std::vector<std::string> element_words(const GroupTable& g);

/// Pretty-printed JSON with sorted keys; witnesses appear as element words
/// over the generators of each record's catalog entry.
std::string render_json(const ResultDocument& doc, const Catalog& catalog);
/// Header line plus one line per record; period lists are quoted ("2,4,12").
std::string render_csv(const ResultDocument& doc);
/// Aligned text table in the column order g(F), g(C), G, type, m, n, D, N.
std::string render_table(const ResultDocument& doc);

std::string render(const ResultDocument& doc, const Catalog& catalog, OutputFormat format);

/// Identifier used in tables, e.g. "G(24,5)".
std::string group_label(const GroupId& id);

}  // namespace prodquot
