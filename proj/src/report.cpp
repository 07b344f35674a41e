#include "prodquot/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace prodquot {

std::string group_label(const GroupId& id) { return "G" + to_string(id); }

std::vector<std::string> element_words(const GroupTable& g) {
  const auto& gens = g.generator_hint();
  auto name = [](std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i);
  };
  // Breadth-first over right multiplication; words as (generator, power) runs.
  std::vector<std::vector<std::pair<std::size_t, int>>> runs(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(x, gens[k]);
      if (seen[y]) continue;
      seen[y] = 1;
      runs[y] = runs[x];
      if (!runs[y].empty() && runs[y].back().first == k)
        ++runs[y].back().second;
      else
        runs[y].emplace_back(k, 1);
      queue.push_back(y);
    }
  }
  std::vector<std::string> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (runs[x].empty()) {
      out[x] = "1";
      continue;
    }
    std::string w;
    for (const auto& [k, p] : runs[x]) {
      if (!w.empty()) w += "*";
      w += name(k);
      if (p != 1) w += "^" + std::to_string(p);
    }
    out[x] = w;
  }
  return out;
}

namespace {

const char* kind_name(SurfaceKind k) { return k == SurfaceKind::unmixed ? "unmixed" : "mixed"; }

nlohmann::json id_json(const GroupId& id) { return {{"order", id.order}, {"id", id.id}}; }

nlohmann::json vector_json(const GeneratingVector& v, const std::vector<std::string>& words) {
  nlohmann::json branch = nlohmann::json::array(), handles = nlohmann::json::array();
  for (auto x : v.branch) branch.push_back(words[x]);
  for (auto x : v.handles) handles.push_back(words[x]);
  return {{"type", v.signature.to_string()}, {"branch", branch}, {"handles", handles}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_json(const ResultDocument& doc, const Catalog& catalog) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : doc.records) {
    const auto words = element_words(*catalog.group(r.group_id));
    nlohmann::json j;
    j["kind"] = kind_name(r.kind);
    j["g_F"] = r.g_F;
    j["g_C"] = r.g_C;
    j["group"] = id_json(r.group_id);
    j["subgroup"] = r.subgroup_id ? id_json(*r.subgroup_id) : nlohmann::json(nullptr);
    j["m"] = r.kind == SurfaceKind::unmixed ? nlohmann::json(r.m.periods) : nlohmann::json(nullptr);
    j["n"] = r.n.periods;
    j["chi"] = r.chi;
    j["K2"] = r.K2;
    j["g_alb"] = r.g_alb;
    j["D"] = r.dimension;
    j["N"] = r.components ? nlohmann::json(*r.components) : nlohmann::json(nullptr);
    j["aut_filter_rejections"] = r.aut_filter_rejections;
    nlohmann::json wit;
    if (r.witness_v) wit["V"] = vector_json(*r.witness_v, words);
    wit["W"] = vector_json(r.witness_w, words);
    j["witness"] = wit;
    if (r.kind == SurfaceKind::mixed) {
      nlohmann::json sub = nlohmann::json::array();
      for (auto x : r.subgroup_members) sub.push_back(words[x]);
      j["subgroup_elements"] = sub;
    }
    records.push_back(std::move(j));
  }
  nlohmann::json d;
  d["schema_version"] = kSchemaVersion;
  d["tool"] = "prodquot";
  d["version"] = doc.tool_version;
  d["catalog_hash"] = doc.catalog_hash;
  d["command"] = doc.command;
  d["coverage"] = {{"exhaustive", doc.exhaustive()}, {"incomplete_orders", doc.incomplete_orders}};
  d["records"] = records;
  d["elapsed_ms"] = doc.elapsed_ms;
  return d.dump(2) + "\n";
}

std::string render_csv(const ResultDocument& doc) {
  std::ostringstream os;
  os << "kind,g_F,g_C,group,subgroup,m,n,chi,K2,g_alb,D,N\n";
  for (const auto& r : doc.records) {
    os << kind_name(r.kind) << ',' << r.g_F << ',' << r.g_C << ',' << csv_quote(to_string(r.group_id)) << ','
       << (r.subgroup_id ? csv_quote(to_string(*r.subgroup_id)) : "") << ','
       << (r.kind == SurfaceKind::unmixed ? csv_quote(format_periods(r.m.periods)) : "") << ','
       << csv_quote(format_periods(r.n.periods)) << ',' << r.chi << ',' << r.K2 << ',' << r.g_alb << ','
       << r.dimension << ',' << (r.components ? std::to_string(*r.components) : "") << '\n';
  }
  return os.str();
}

std::string render_table(const ResultDocument& doc) {
  std::vector<std::vector<std::string>> rows{{"g(F)", "g(C)", "G", "G°", "type", "m", "n", "D", "N"}};
  for (const auto& r : doc.records)
    rows.push_back({std::to_string(r.g_F), std::to_string(r.g_C), group_label(r.group_id),
                    r.subgroup_id ? group_label(*r.subgroup_id) : "-", kind_name(r.kind),
                    r.kind == SurfaceKind::unmixed ? "(" + format_periods_compact(r.m.periods) + ")" : "-",
                    "(" + format_periods_compact(r.n.periods) + ")", std::to_string(r.dimension),
                    r.components ? std::to_string(*r.components) : "-"});
  // "G°" is two bytes wide in UTF-8 but one column on screen.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> w(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
  std::ostringstream os;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      os << rows[k][i];
      if (i + 1 < rows[k].size()) os << std::string(w[i] - width(rows[k][i]) + 2, ' ');
    }
    os << '\n';
    if (k == 0) {
      std::size_t total = 0;
      for (auto x : w) total += x + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
  os << doc.records.size() << " record(s)\n";
  if (doc.exhaustive()) {
    os << "coverage: exhaustive (every order searched is complete in the catalog)\n";
  } else {
    os << "coverage: WARNING partial result, catalog incomplete for orders";
    for (int o : doc.incomplete_orders) os << ' ' << o;
    os << '\n';
  }
  return os.str();
}

std::string render(const ResultDocument& doc, const Catalog& catalog, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return render_json(doc, catalog);
    case OutputFormat::csv: return render_csv(doc);
    case OutputFormat::table: return render_table(doc);
  }
  return {};
}

}  // namespace prodquot
