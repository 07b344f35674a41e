#include "prodquot/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "prodquot/catalog.hpp"
#include "prodquot/classify.hpp"
#include "prodquot/coset_enumeration.hpp"
#include "prodquot/error.hpp"
#include "prodquot/freeness.hpp"
#include "prodquot/group_ops.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/presentation.hpp"
#include "prodquot/report.hpp"

namespace prodquot {

namespace {

namespace fs = std::filesystem;

struct Settings {
  std::string catalog_path;
  unsigned threads = 0;

  std::string format = "table";
  int g_F = 0;
  bool with_orbits = false;
  bool require_exhaustive = false;
  bool no_prune = false;
  int alpha_cap = 0;
  int tuples_alpha_cap = 84;
  std::size_t state_cap = kDefaultStateCap;
  std::size_t coset_cap = kDefaultCosetCap;
  std::string cache_dir;

  int order = 0;
  int id = 0;
  int subgroup_id = 0;
  std::string presentation_file;
  std::string perms_file;
  std::string m;
  std::string n;
  bool mixed = false;
  bool bfs = false;
  std::string validate_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::not_found, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog open_catalog(const Settings& s) {
  const fs::path path = s.catalog_path.empty() ? default_catalog_path() : fs::path(s.catalog_path);
  if (!fs::exists(path)) throw Error(ErrorCode::not_found, "catalog not found: " + path.string());
  return Catalog::load(path);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::json;
  if (f == "csv") return OutputFormat::csv;
  return OutputFormat::table;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// One permutation per line, 1-based images separated by spaces or commas.
PermGenSet read_perms(const std::string& text) {
  PermGenSet p;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream fields(line);
    Permutation perm;
    long v = 0;
    while (fields >> v) {
      if (v < 1 || v > 65535) throw Error(ErrorCode::invalid_parameters, "permutation image out of range");
      perm.push_back(static_cast<std::uint16_t>(v - 1));
    }
    if (!fields.eof()) throw Error(ErrorCode::syntax_error, "malformed permutation line: " + line);
    if (perm.empty()) continue;
    if (p.generators.empty()) p.degree = perm.size();
    if (perm.size() != p.degree) throw Error(ErrorCode::invalid_parameters, "permutations of different degree");
    p.generators.push_back(std::move(perm));
  }
  p.validate();
  return p;
}

int cmd_classify(const Settings& s, bool mixed, const std::string& command, std::ostream& out,
                 std::ostream& err) {
  const Catalog catalog = open_catalog(s);
  if (catalog.empty()) {
    err << "error: catalog is empty\n";
    return exit_validation;
  }
  const OutputFormat format = parse_format(s.format);

  fs::path cache_file;
  if (!s.cache_dir.empty()) {
    std::ostringstream key;
    key << PRODQUOT_VERSION << '\n'
        << catalog.content_hash() << '\n'
        << (mixed ? "mixed" : "unmixed") << '\n'
        << s.g_F << '\n'
        << s.format << '\n'
        << s.with_orbits << s.no_prune << '\n'
        << s.alpha_cap << '\n'
        << s.state_cap << '\n'
        << command << '\n';
    char name[17];
    std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a(key.str())));
    cache_file = fs::path(s.cache_dir) / (std::string(name) + ".out");
    if (fs::exists(cache_file)) {
      const std::string text = read_file(cache_file.string());
      const auto nl = text.find('\n');
      const int code = std::stoi(text.substr(0, nl));
      out << text.substr(nl + 1);
      err << "cache hit: " << cache_file.string() << '\n';
      return code;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  ClassifyOptions opts;
  opts.threads = s.threads;
  opts.with_orbits = s.with_orbits;
  opts.alpha_cap = s.alpha_cap;
  opts.deriv2_prune = !s.no_prune;
  opts.orbit.state_cap = s.state_cap;
  ClassificationResult result = mixed ? classify_mixed(catalog, opts) : classify_unmixed(s.g_F, catalog, opts);

  ResultDocument doc;
  doc.catalog_hash = catalog.content_hash();
  doc.command = command;
  doc.incomplete_orders = result.incomplete_orders;
  doc.records = std::move(result.records);
  doc.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  const std::string text = render(doc, catalog, format);
  const int code = (s.require_exhaustive && !doc.exhaustive()) ? exit_coverage : exit_ok;
  if (!doc.exhaustive()) {
    err << "warning: catalog incomplete for orders";
    for (int o : doc.incomplete_orders) err << ' ' << o;
    err << "; result is partial\n";
  }
  out << text;
  if (!cache_file.empty()) {
    fs::create_directories(cache_file.parent_path());
    const fs::path tmp = cache_file.string() + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary);
      f << code << '\n' << text;
      if (!f) throw Error(ErrorCode::invalid_parameters, "cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, cache_file);
  }
  return code;
}

int cmd_group_info(const Settings& s, std::ostream& out) {
  const Catalog catalog = open_catalog(s);
  const GroupId id{s.order, s.id};
  const auto g = catalog.group(id);

  out << "group: " << group_label(id) << '\n';
  out << "order: " << g->order() << '\n';
  out << "n2: " << count_elements_of_order(*g, 2) << '\n';
  out << "center_order: " << center(*g).size() << '\n';
  out << "derived_series_orders:";
  for (auto o : derived_series_orders(*g)) out << ' ' << o;
  out << '\n';
  out << "abelianization:";
  for (auto c : abelianization_type(*g)) out << ' ' << c;
  out << '\n';
  out << "classes: " << g->class_count() << '\n';
  out << "aut_order: " << automorphism_group(*g).size() << '\n';

  std::vector<BranchSignature> sigs{{1, {2}}, {1, {2, 2}}, {1, {3}}};
  for (int k : {2, 3, 4})
    if (g->order() % k == 0)
      for (const auto& t : enumerate_admissible_tuples(84))
        if (t.alpha * k == static_cast<int>(g->order())) sigs.push_back({0, t.m});
  for (const auto& sig : sigs)
    out << sig.to_string() << "-generated: " << yes_no(find_generating_vector(*g, sig).has_value()) << '\n';
  return exit_ok;
}

int cmd_group_identify(const Settings& s, std::ostream& out) {
  PermGenSet perms;
  if (!s.presentation_file.empty())
    perms = coset_enumeration(parse_presentation(read_file(s.presentation_file)), s.coset_cap);
  else
    perms = read_perms(read_file(s.perms_file));
  const GroupTable g = group_from_permutations(perms);
  const Catalog catalog = open_catalog(s);
  out << to_string(catalog.identify(g)) << '\n';
  return exit_ok;
}

int cmd_tuples(const Settings& s, std::ostream& out) {
  for (const auto& t : enumerate_admissible_tuples(s.tuples_alpha_cap)) out << to_string(t) << '\n';
  return exit_ok;
}

int cmd_orbits(const Settings& s, std::ostream& out, std::ostream& err) {
  const Catalog catalog = open_catalog(s);
  const GroupId id{s.order, s.id};
  const auto g = catalog.group(id);
  const auto n = parse_periods(s.n);
  OrbitOptions opts;
  opts.state_cap = s.state_cap;
  const auto gens = automorphism_generators(*g, automorphism_group(*g));

  if (!s.mixed) {
    if (s.m.empty()) throw Error(ErrorCode::invalid_parameters, "--m is required for unmixed orbits");
    const auto m = parse_periods(s.m);
    (void)alpha(m);
    const auto count = s.bfs ? count_components_unmixed_bfs(*g, m, n, gens, opts)
                             : count_components_unmixed(*g, m, n, gens, opts);
    out << "N=" << count.components << " D="
        << dimension(SurfaceKind::unmixed, static_cast<int>(m.size()), static_cast<int>(n.size())) << '\n';
    err << "states: " << count.states << '\n';
    return exit_ok;
  }

  // One line per isomorphism type of admissible G°.
  std::map<GroupId, ElementSet> types;
  for (const auto& h : index_two_subgroups(*g)) {
    if (!is_nonsplit_extension(*g, h)) continue;
    const GroupId sub = catalog.identify(induced_subgroup(*g, h).group);
    if (s.subgroup_id != 0 && sub.id != s.subgroup_id) continue;
    types.emplace(sub, h);
  }
  const int d = dimension(SurfaceKind::mixed, 0, static_cast<int>(n.size()));
  bool any = false;
  for (const auto& [sub, h] : types) {
    try {
      const auto count = count_components_mixed(*g, h, n, gens, opts);
      out << "G°=" << group_label(sub) << " N=" << count.components << " D=" << d << '\n';
      err << "states: " << count.states << ", automorphism images rejected: " << count.aut_filter_rejections
          << '\n';
      any = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::empty_orbit_problem) throw;
    }
  }
  if (!any) throw Error(ErrorCode::empty_orbit_problem, "no mixed surface for this group and signature");
  return exit_ok;
}

int cmd_catalog_validate(const Settings& s, std::ostream& out) {
  Settings t = s;
  if (!s.validate_path.empty()) t.catalog_path = s.validate_path;
  const Catalog catalog = open_catalog(t);
  ValidationOptions opts;
  opts.threads = s.threads;
  const auto report = catalog.validate(opts);
  out << "entries checked: " << report.entries_checked << '\n';
  out << "complete orders (" << report.complete_orders.size() << "):";
  for (int o : report.complete_orders) out << ' ' << o;
  out << '\n';
  out << "partial orders (" << report.partial_orders.size() << "):";
  for (int o : report.partial_orders) out << ' ' << o;
  out << '\n';
  const auto missing = catalog.missing_orders(required_orders());
  out << "required orders missing (" << missing.size() << "):";
  for (int o : missing) out << ' ' << o;
  out << '\n';
  for (const auto& issue : report.issues) out << "error: " << to_string(issue.code) << ": " << issue.message << '\n';
  out << report.issues.size() << " error(s)\n";
  return report.ok() ? exit_ok : exit_validation;
}

int cmd_catalog_info(const Settings& s, std::ostream& out) {
  const Catalog catalog = open_catalog(s);
  out << "entries: " << catalog.size() << '\n';
  out << "content_hash: " << catalog.content_hash() << '\n';
  out << "orders with manifest: " << catalog.manifest().size() << '\n';
  const auto missing = catalog.missing_orders(required_orders());
  out << "required orders missing (" << missing.size() << "):";
  for (int o : missing) out << ' ' << o;
  out << '\n';
  return exit_ok;
}

int error_exit(ErrorCode code) { return code == ErrorCode::cap_exceeded ? exit_internal : exit_validation; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Classification of product-quotient surfaces with p_g = q = 1 isogenous to a product", "prodquot"};
  app.set_version_flag("--version", PRODQUOT_VERSION);
  app.require_subcommand(1);
  app.add_option("--catalog", s.catalog_path, "Small-groups catalog (default: $PRODQUOT_CATALOG)");
  app.add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)");

  auto* classify = app.add_subcommand("classify", "Run a classification");
  classify->require_subcommand(1);
  auto add_classify_options = [&](CLI::App* c) {
    c->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    c->add_flag("--with-orbits", s.with_orbits, "Count connected components N");
    c->add_flag("--require-exhaustive", s.require_exhaustive, "Exit 3 if the catalog coverage is partial");
    c->add_option("--cache", s.cache_dir, "Directory for cached results");
    c->add_option("--state-cap", s.state_cap, "Orbit state cap")->check(CLI::PositiveNumber);
    c->add_option("--catalog", s.catalog_path, "Small-groups catalog");
    c->add_option("--threads", s.threads, "Worker threads");
  };
  auto* unmixed = classify->add_subcommand("unmixed", "Unmixed surfaces with given g(F)");
  unmixed->add_option("--gf", s.g_F, "g(F)")->required()->check(CLI::IsMember({3, 4, 5}));
  unmixed->add_option("--alpha-cap", s.alpha_cap, "Override the alpha cap")->check(CLI::PositiveNumber);
  add_classify_options(unmixed);
  auto* mixed = classify->add_subcommand("mixed", "Mixed surfaces");
  mixed->add_flag("--no-prune", s.no_prune, "Disable the structural shortcuts");
  add_classify_options(mixed);
  unmixed->add_flag("--no-prune", s.no_prune, "Accepted for symmetry; has no effect");

  auto* group = app.add_subcommand("group", "Inspect or identify a group");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Invariants of a catalog group");
  info->add_option("--order", s.order, "Group order")->required();
  info->add_option("--id", s.id, "Catalog id within the order")->required();
  info->add_option("--catalog", s.catalog_path, "Small-groups catalog");
  auto* identify = group->add_subcommand("identify", "Identify a group in the catalog");
  auto* pres = identify->add_option("--presentation", s.presentation_file, "Presentation file");
  auto* perms = identify->add_option("--perms", s.perms_file, "Permutation generators, one per line");
  pres->excludes(perms);
  identify->add_option("--coset-cap", s.coset_cap, "Coset enumeration cap")->check(CLI::PositiveNumber);
  identify->add_option("--catalog", s.catalog_path, "Small-groups catalog");

  auto* tuples = app.add_subcommand("tuples", "List admissible branching tuples");
  tuples->add_option("--alpha-cap", s.tuples_alpha_cap, "Largest alpha")->check(CLI::PositiveNumber);

  auto* orbits = app.add_subcommand("orbits", "Count components of one family");
  orbits->add_option("--order", s.order, "Group order")->required();
  orbits->add_option("--id", s.id, "Catalog id within the order")->required();
  orbits->add_option("--m", s.m, "Periods of the genus-0 signature");
  orbits->add_option("--n", s.n, "Periods of the genus-1 signature")->required();
  orbits->add_flag("--mixed", s.mixed, "Mixed case");
  orbits->add_option("--subgroup-id", s.subgroup_id, "Restrict G° to this id of order |G|/2");
  orbits->add_flag("--bfs", s.bfs, "Use the explicit pair search");
  orbits->add_option("--state-cap", s.state_cap, "Orbit state cap")->check(CLI::PositiveNumber);
  orbits->add_option("--catalog", s.catalog_path, "Small-groups catalog");

  auto* catalog = app.add_subcommand("catalog", "Catalog maintenance");
  catalog->require_subcommand(1);
  auto* validate = catalog->add_subcommand("validate", "Full catalog validation");
  validate->add_option("path", s.validate_path, "Catalog file");
  validate->add_option("--threads", s.threads, "Worker threads");
  auto* cinfo = catalog->add_subcommand("info", "Catalog summary");
  cinfo->add_option("--catalog", s.catalog_path, "Small-groups catalog");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_validation;
  }

  std::string command;
  for (const auto& a : args) {
    if (!command.empty()) command += ' ';
    command += a;
  }

  try {
    if (unmixed->parsed()) return cmd_classify(s, false, command, out, err);
    if (mixed->parsed()) return cmd_classify(s, true, command, out, err);
    if (info->parsed()) return cmd_group_info(s, out);
    if (identify->parsed()) {
      if (s.presentation_file.empty() && s.perms_file.empty()) {
        err << "error: one of --presentation or --perms is required\n";
        return exit_validation;
      }
      return cmd_group_identify(s, out);
    }
    if (tuples->parsed()) return cmd_tuples(s, out);
    if (orbits->parsed()) return cmd_orbits(s, out, err);
    if (validate->parsed()) return cmd_catalog_validate(s, out);
    if (cinfo->parsed()) return cmd_catalog_info(s, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return error_exit(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_internal;
}

}  // namespace prodquot
