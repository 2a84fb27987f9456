// mforge: build, validate, and report on minuscule representation systems.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mforge/analysis.hpp"
#include "mforge/cartan.hpp"
#include "mforge/catalog.hpp"
#include "mforge/errors.hpp"
#include "mforge/geometry.hpp"
#include "mforge/json_io.hpp"
#include "mforge/operators.hpp"
#include "mforge/system.hpp"
#include "mforge/weyl.hpp"

using nlohmann::json;
using namespace mforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOpts {
  std::string catalog_name;
  int n = 0;
  int k = 0;
  int level = 0;
  std::string parity = "+";
  std::string input_path;
  std::vector<std::string> restricts;
  std::string slice_normal;
  long long slice_level = 0;
  bool default_to_hesse = false;

  CLI::Option* slice_level_opt = nullptr;
};

// The `slice` subcommand exposes the hyperplane as its own required
// --normal/--level pair, so there the catalog level moves aside.
void add_input_options(CLI::App* cmd, InputOpts& opts,
                       bool slicing_command = false) {
  cmd->add_option("--catalog", opts.catalog_name, "catalog entry name");
  cmd->add_option("--n", opts.n, "rank parameter");
  cmd->add_option("--k", opts.k, "slice parameter (number of -2 coordinates)");
  cmd->add_option(slicing_command ? "--catalog-level" : "--level", opts.level,
                  "slice level for the e6 entries");
  cmd->add_option("--parity", opts.parity, "halfcube parity, + or -");
  cmd->add_option("--input", opts.input_path,
                  "read a system from a JSON file ('-' for standard input)");
  cmd->add_option("--restrict", opts.restricts,
                  "restrict the simple system: 'no-<label>' drops one root, a "
                  "comma-separated label list keeps exactly those");
  if (slicing_command) {
    cmd->add_option("--normal", opts.slice_normal,
                    "slice normal as comma-separated integers")
        ->required();
    opts.slice_level_opt =
        cmd->add_option("--level", opts.slice_level, "slice level")->required();
    return;
  }
  cmd->add_option("--slice-normal", opts.slice_normal,
                  "slice normal as comma-separated integers");
  opts.slice_level_opt =
      cmd->add_option("--slice-level", opts.slice_level, "slice level");
}

IntVector parse_vector(const std::string& text) {
  std::vector<mpz_class> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      coords.emplace_back(part);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad integer '" + part + "' in vector '" + text + "'");
    }
  }
  if (coords.empty()) throw UsageError("empty vector '" + text + "'");
  return IntVector(std::move(coords));
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) labels.push_back(part);
  return labels;
}

json read_json_source(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw mforge::ParseError(path + ": " + e.what());
  }
}

catalog::EntrySpec to_entry_spec(const InputOpts& opts) {
  return {opts.catalog_name, opts.n, opts.k, opts.level,
          opts.parity.empty() ? '+' : opts.parity[0]};
}

MinusculeSystem apply_chain(MinusculeSystem sys, const InputOpts& opts) {
  for (const auto& r : opts.restricts) {
    if (r.rfind("no-", 0) == 0)
      sys = catalog::drop_root(sys, r.substr(3));
    else
      sys = catalog::restrict_system(sys, split_labels(r));
  }
  if (!opts.slice_normal.empty() || opts.slice_level_opt->count()) {
    if (opts.slice_normal.empty())
      throw UsageError("--slice-level requires --slice-normal");
    sys = catalog::slice(
        sys, {parse_vector(opts.slice_normal), mpz_class(static_cast<long>(opts.slice_level))});
  }
  return sys;
}

MinusculeSystem load_system(const InputOpts& opts) {
  if (!opts.catalog_name.empty() && !opts.input_path.empty())
    throw UsageError("give either --catalog or --input, not both");
  if (!opts.catalog_name.empty())
    return apply_chain(catalog::build(to_entry_spec(opts)), opts);
  if (!opts.input_path.empty()) {
    RawSystem raw = system_from_json(read_json_source(opts.input_path));
    return apply_chain(
        MinusculeSystem::build(std::move(raw.psi), std::move(raw.delta)), opts);
  }
  if (opts.default_to_hesse)
    return apply_chain(catalog::build({.name = "hesse"}), opts);
  // Reading a piped system is the remaining possibility.
  RawSystem raw = system_from_json(read_json_source("-"));
  return apply_chain(
      MinusculeSystem::build(std::move(raw.psi), std::move(raw.delta)), opts);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw UsageError("cannot write " + output_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

void emit(const json& j, const std::string& output_path) {
  emit(j.dump(2), output_path);
}

json report_to_json(const ValidationReport& report) {
  json j;
  j["format"] = 1;
  j["ok"] = report.ok();
  j["violations"] = json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back({{"vertex", vector_to_json(v.vertex)},
                               {"root", v.root_label},
                               {"reason", v.reason}});
  return j;
}

json relation_report_to_json(const RelationReport& report) {
  json j = json::array();
  for (const auto& v : report.verdicts) {
    json entry = {{"relation", v.relation}, {"roots", v.roots}, {"pass", v.pass}};
    if (v.counterexample)
      entry["counterexample"] = vector_to_json(*v.counterexample);
    j.push_back(entry);
  }
  return j;
}

json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1) {
    if (!q.get_num().fits_slong_p()) return q.get_num().get_str();
    return json(q.get_num().get_si());
  }
  return q.get_str();
}

json weight_to_json(const analysis::Weight& w) {
  json values = json::object();
  for (std::size_t i = 0; i < w.labels.size(); ++i)
    values[w.labels[i]] = w.values[i];
  return values;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code.

int run_catalog_list(const std::string& output_path) {
  std::ostringstream out;
  out << "name        parameters                        type        |Psi|\n";
  for (const auto& e : catalog::list_entries()) {
    out << e.name;
    for (std::size_t i = e.name.size(); i < 12; ++i) out << ' ';
    out << e.parameters;
    for (std::size_t i = e.parameters.size(); i < 34; ++i) out << ' ';
    out << e.expected_type;
    for (std::size_t i = e.expected_type.size(); i < 12; ++i) out << ' ';
    out << e.dimension << '\n';
  }
  emit(out.str(), output_path);
  return kExitOk;
}

int run_build(const InputOpts& opts, const std::string& output_path) {
  emit(system_to_json(load_system(opts)), output_path);
  return kExitOk;
}

int run_validate(const InputOpts& opts, const std::string& output_path) {
  if (!opts.catalog_name.empty()) {
    // Catalog entries validate during construction; report accordingly.
    MinusculeSystem sys = load_system(opts);
    emit(report_to_json(validate_system(sys.psi(), sys.delta())), output_path);
    return kExitOk;
  }
  const std::string path = opts.input_path.empty() ? "-" : opts.input_path;
  RawSystem raw = system_from_json(read_json_source(path));
  ValidationReport report = validate_system(raw.psi, raw.delta);
  emit(report_to_json(report), output_path);
  return report.ok() ? kExitOk : kExitFailures;
}

int run_cartan(const InputOpts& opts, const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  CartanMatrix A = cartan_matrix(sys.delta());
  json j;
  j["format"] = 1;
  j["labels"] = A.labels;
  j["entries"] = json::array();
  for (const auto& row : A.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_to_json(mpq_class(x)));
    j["entries"].push_back(r);
  }
  j["symmetrizer"] = json::array();
  for (const auto& d : A.symmetrizer) j["symmetrizer"].push_back(rational_to_json(d));
  j["type"] = classify_cartan(A).str();
  emit(j, output_path);
  return kExitOk;
}

int run_relations(const InputOpts& opts, const std::string& matrix_request,
                  const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  GeneratorFamily fam = build_operators(sys);

  if (!matrix_request.empty()) {
    const auto colon = matrix_request.find(':');
    if (colon == std::string::npos)
      throw UsageError("--matrix wants <E|F|H>:<label>");
    const std::string kind = matrix_request.substr(0, colon);
    const std::string label = matrix_request.substr(colon + 1);
    const LinearOperator* op = nullptr;
    if (kind == "E")
      op = &fam.e(label);
    else if (kind == "F")
      op = &fam.f(label);
    else if (kind == "H")
      op = &fam.h(label);
    else
      throw UsageError("--matrix kind must be E, F, or H");
    json j;
    j["format"] = 1;
    j["kind"] = kind;
    j["label"] = label;
    j["matrix"] = json::array();
    for (const auto& row : op->dense()) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rational_to_json(x));
      j["matrix"].push_back(r);
    }
    emit(j, output_path);
    return kExitOk;
  }

  RelationReport generators = check_generator_identities(fam);
  RelationReport presentation =
      check_presentation(fam, cartan_matrix(sys.delta()));
  json j;
  j["format"] = 1;
  j["generator_identities"] = relation_report_to_json(generators);
  j["presentation"] = relation_report_to_json(presentation);
  j["failures"] = generators.failures() + presentation.failures();
  emit(j, output_path);
  return generators.all_pass() && presentation.all_pass() ? kExitOk
                                                          : kExitFailures;
}

int run_weights(const InputOpts& opts, const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  json j;
  j["format"] = 1;
  j["weights"] = json::array();
  for (const auto& v : sys.psi())
    j["weights"].push_back({{"vertex", vector_to_json(v)},
                            {"values", weight_to_json(analysis::weight(sys, v))}});
  emit(j, output_path);
  return kExitOk;
}

int run_extremes(const InputOpts& opts, const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  auto ext = analysis::extreme_vectors(sys);
  json j;
  j["format"] = 1;
  j["highest"] = json::array();
  for (const auto& v : ext.highest) j["highest"].push_back(vector_to_json(v));
  j["lowest"] = json::array();
  for (const auto& v : ext.lowest) j["lowest"].push_back(vector_to_json(v));
  emit(j, output_path);
  return kExitOk;
}

int run_irreducible(const InputOpts& opts, const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  auto cert = analysis::irreducibility_certificate(sys);
  json j;
  j["format"] = 1;
  j["verdict"] = cert.verdict == analysis::IrreducibilityCertificate::Irreducible
                     ? "Irreducible"
                     : "Inconclusive";
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  j["highest"] = json::array();
  for (const auto& v : cert.highest) j["highest"].push_back(vector_to_json(v));
  j["weights_distinct"] = cert.weights_distinct;
  j["graph_connected"] = cert.graph_connected;
  emit(j, output_path);
  return kExitOk;
}

int run_crystal(const InputOpts& opts, const std::string& format,
                const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  auto graph = analysis::crystal_graph(sys);
  if (format == "dot") {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const auto& v : graph.vertices) out << "  \"" << v.str() << "\";\n";
    for (const auto& e : graph.edges)
      out << "  \"" << graph.vertices[e.from].str() << "\" -> \""
          << graph.vertices[e.to].str() << "\" [label=\"" << e.label << "\"];\n";
    out << "}\n";
    emit(out.str(), output_path);
    return kExitOk;
  }
  if (format != "json") throw UsageError("--format must be dot or json");
  json j;
  j["format"] = 1;
  j["vertices"] = json::array();
  for (const auto& v : graph.vertices) j["vertices"].push_back(vector_to_json(v));
  j["edges"] = json::array();
  for (const auto& e : graph.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  j["connected"] = graph.connected();
  emit(j, output_path);
  return kExitOk;
}

int run_poset(const InputOpts& opts, bool check_lattice,
              const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  auto poset = analysis::weight_poset(sys);
  std::size_t relations = 0;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (poset.leq(i, j)) ++relations;
  json j;
  j["format"] = 1;
  j["size"] = poset.size();
  j["relations"] = relations;
  if (check_lattice) {
    j["is_lattice"] = poset.is_lattice();
    j["is_distributive"] = poset.is_distributive();
  }
  emit(j, output_path);
  return kExitOk;
}

int run_orbits(const InputOpts& opts, bool pairs, long long sq_dist,
               bool has_sq_dist, const std::string& seed_text,
               const std::string& output_path) {
  MinusculeSystem sys = load_system(opts);
  json j;
  j["format"] = 1;
  if (has_sq_dist) {
    auto stats = weyl::edge_root_system(sys, mpz_class(static_cast<long>(sq_dist)));
    j["squared_distance"] = sq_dist;
    j["edges"] = stats.edge_count;
    j["distinct_roots"] = stats.distinct_roots.size();
    j["multiplicity_uniform"] = stats.uniform_multiplicity();
    if (!stats.multiplicity.empty())
      j["multiplicity"] = stats.multiplicity.begin()->second;
  } else if (pairs) {
    auto partition = weyl::orbits_on_pairs(sys);
    j["orbits"] = json::array();
    for (const auto& o : partition.orbits)
      j["orbits"].push_back(
          {{"representative",
            {vector_to_json(o.representative.first),
             vector_to_json(o.representative.second)}},
           {"squared_distance", rational_to_json(mpq_class(o.squared_distance))},
           {"size", o.pairs.size()}});
  } else {
    IntVector seed = seed_text.empty() ? sys.vertex(0) : parse_vector(seed_text);
    auto orbit = weyl::orbit(sys, seed);
    j["seed"] = vector_to_json(seed);
    j["orbit_size"] = orbit.size();
  }
  emit(j, output_path);
  return kExitOk;
}

int run_delpezzo(const InputOpts& opts, bool slice27,
                 const std::string& output_path) {
  json j;
  j["format"] = 1;
  if (slice27) {
    auto table = geometry::line_labels();
    j["lines"] = json::array();
    for (const auto& [label, v] : table) j["lines"].push_back(label.str());
    j["intersections"] = json::array();
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = a + 1; b < table.size(); ++b)
        j["intersections"].push_back(
            {a, b,
             rational_to_json(mpq_class(geometry::intersection_number(
                 table[a].second, table[b].second)))});
  } else {
    MinusculeSystem sys = load_system(opts);
    j["vertices"] = json::array();
    for (const auto& v : sys.psi()) j["vertices"].push_back(vector_to_json(v));
    j["intersections"] = json::array();
    for (std::size_t a = 0; a < sys.size(); ++a)
      for (std::size_t b = a + 1; b < sys.size(); ++b)
        j["intersections"].push_back(
            {a, b,
             rational_to_json(mpq_class(geometry::intersection_number(
                 sys.vertex(a), sys.vertex(b))))});
  }
  emit(j, output_path);
  return kExitOk;
}

int run_slice(const InputOpts& opts, const std::string& output_path) {
  emit(system_to_json(load_system(opts)), output_path);
  return kExitOk;
}

int check_thread_cap() {
  const char* env = std::getenv("MFORGE_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || cap < 1)
    throw UsageError("MFORGE_THREADS must be a positive integer");
  // All computations run on one thread, which respects any positive cap.
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minuscule representation toolkit"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("-o,--output", output_path, "write the report to a file")
      ->configurable(false);

  auto* cmd_catalog = app.add_subcommand("catalog", "catalog information");
  cmd_catalog->require_subcommand(1);
  cmd_catalog->add_subcommand("list", "list catalog entries");

  InputOpts build_opts, validate_opts, cartan_opts, relations_opts;
  InputOpts weights_opts, extremes_opts, irr_opts, crystal_opts, poset_opts;
  InputOpts orbits_opts, delpezzo_opts, slice_opts;

  auto* cmd_build = app.add_subcommand("build", "emit a system as JSON");
  add_input_options(cmd_build, build_opts);

  auto* cmd_validate =
      app.add_subcommand("validate", "check the defining axioms pairwise");
  add_input_options(cmd_validate, validate_opts);

  auto* cmd_cartan =
      app.add_subcommand("cartan", "Cartan matrix, symmetrizer, Dynkin type");
  add_input_options(cmd_cartan, cartan_opts);

  auto* cmd_relations =
      app.add_subcommand("relations", "verify the operator identities");
  add_input_options(cmd_relations, relations_opts);
  std::string matrix_request;
  cmd_relations->add_option("--matrix", matrix_request,
                            "dump one generator as a dense matrix, <E|F|H>:<label>");

  auto* cmd_weights = app.add_subcommand("weights", "per-vertex weight tuples");
  add_input_options(cmd_weights, weights_opts);

  auto* cmd_extremes =
      app.add_subcommand("extremes", "highest and lowest weight vertices");
  add_input_options(cmd_extremes, extremes_opts);

  auto* cmd_irr =
      app.add_subcommand("irreducible", "irreducibility certificate");
  add_input_options(cmd_irr, irr_opts);

  auto* cmd_crystal = app.add_subcommand("crystal", "crystal graph export");
  add_input_options(cmd_crystal, crystal_opts);
  std::string crystal_format = "json";
  cmd_crystal->add_option("--format", crystal_format, "dot or json");

  auto* cmd_poset = app.add_subcommand("poset", "weight partial order");
  add_input_options(cmd_poset, poset_opts);
  bool check_lattice = false;
  cmd_poset->add_flag("--check-lattice", check_lattice,
                      "compute lattice and distributivity flags");

  auto* cmd_orbits = app.add_subcommand("orbits", "reflection orbit reports");
  add_input_options(cmd_orbits, orbits_opts);
  bool pairs = false;
  long long sq_dist = 0;
  std::string seed_text;
  cmd_orbits->add_flag("--pairs", pairs, "orbits on ordered vertex pairs");
  auto* sq_opt = cmd_orbits->add_option(
      "--sqdist", sq_dist, "edge statistics at this squared distance");
  cmd_orbits->add_option("--seed", seed_text,
                         "orbit seed as comma-separated integers");

  auto* cmd_delpezzo =
      app.add_subcommand("delpezzo", "line incidence table");
  add_input_options(cmd_delpezzo, delpezzo_opts);
  delpezzo_opts.default_to_hesse = true;
  bool slice27 = false;
  cmd_delpezzo->add_flag("--slice", slice27,
                         "labelled 27-line table of the level-8 slice");

  auto* cmd_slice = app.add_subcommand("slice", "slice a system by a hyperplane");
  add_input_options(cmd_slice, slice_opts, /*slicing_command=*/true);

  // Let -o/--output written after a subcommand match the global option.
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_thread_cap();
    if (cmd_catalog->parsed()) return run_catalog_list(output_path);
    if (cmd_build->parsed()) return run_build(build_opts, output_path);
    if (cmd_validate->parsed()) return run_validate(validate_opts, output_path);
    if (cmd_cartan->parsed()) return run_cartan(cartan_opts, output_path);
    if (cmd_relations->parsed())
      return run_relations(relations_opts, matrix_request, output_path);
    if (cmd_weights->parsed()) return run_weights(weights_opts, output_path);
    if (cmd_extremes->parsed()) return run_extremes(extremes_opts, output_path);
    if (cmd_irr->parsed()) return run_irreducible(irr_opts, output_path);
    if (cmd_crystal->parsed())
      return run_crystal(crystal_opts, crystal_format, output_path);
    if (cmd_poset->parsed())
      return run_poset(poset_opts, check_lattice, output_path);
    if (cmd_orbits->parsed())
      return run_orbits(orbits_opts, pairs, sq_dist, sq_opt->count() > 0,
                        seed_text, output_path);
    if (cmd_delpezzo->parsed())
      return run_delpezzo(delpezzo_opts, slice27, output_path);
    if (cmd_slice->parsed()) return run_slice(slice_opts, output_path);
    return kExitUsage;
  } catch (const ValidationError& e) {
    emit(report_to_json(e.report), output_path);
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailures;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mforge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
