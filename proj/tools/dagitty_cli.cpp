#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dagitty/dagitty.hpp"
#include "dagitty/export.hpp"
#include "dagitty/json.hpp"
#include "dagitty/oracle.hpp"
#include "dagitty/service.hpp"

namespace {

using namespace dagitty;
using nlohmann::json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kParse = 3, kSemantic = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string input;
  std::vector<std::string> x, y, given;
  std::optional<std::size_t> limit = 100;
  std::string effect = "total";
  std::string kind = "moral";
  bool restrict = false;
  std::string format = "dot";
  std::string style = "classic";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string label(const std::string& name) { return model_code::encode_name(name); }

std::string join(const NodeSet& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ", ";
    out += label(v);
  }
  return out;
}

NodeSet decoded(const std::vector<std::string>& names) {
  NodeSet out;
  for (const auto& n : names) out.insert(model_code::decode_name(n));
  return out;
}

EffectKind effect_of(const std::string& e) { return e == "direct" ? EffectKind::Direct : EffectKind::Total; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Dag& g, const Options& o, std::ostream& out) {
  if (o.json)
    print_json(out, {{"valid", true}, {"model", dagitty::json::dag(g)}});
  else
    out << "valid: " << g.size() << " variables, " << g.edge_count() << " arrows\n";
  return kOk;
}

int cmd_paths(const Dag& g, const Options& o, std::ostream& out) {
  const auto paths = classified_paths(g, o.limit);
  json list = json::array();
  for (const auto& cp : paths) {
    const char* kind = cp.kind == PathClass::Causal ? "causal" : "biasing";
    if (o.json) {
      auto j = dagitty::json::path(cp.path);
      j["class"] = kind;
      j["open"] = cp.open;
      list.push_back(std::move(j));
    } else {
      out << kind << ": " << to_string(cp.path, label) << (cp.open ? " open" : " closed") << '\n';
    }
  }
  if (o.json) print_json(out, {{"paths", std::move(list)}});
  return kOk;
}

int cmd_dsep(const Dag& g, const Options& o, std::ostream& out) {
  const auto x = decoded(o.x), y = decoded(o.y), z = decoded(o.given);
  const bool separated = d_separated(g, x, y, z);
  if (o.json)
    print_json(out, {{"x", dagitty::json::names(x)},
                     {"y", dagitty::json::names(y)},
                     {"given", dagitty::json::names(z)},
                     {"d_separated", separated}});
  else
    out << (separated ? "d-separated" : "d-connected") << '\n';
  return separated ? kOk : kNegative;
}

int cmd_adjust(const Dag& g, const Options& o, std::ostream& out) {
  const auto report = list_minimal_adjustment_sets(g, effect_of(o.effect));
  if (o.json) {
    print_json(out, dagitty::json::adjustment(report));
  } else if (!report.feasible) {
    out << "NO SUFFICIENT ADJUSTMENT SET\n";
  } else {
    for (const auto& s : report.sets) out << (s.empty() ? "{}" : join(s)) << '\n';
  }
  return kOk;
}

int cmd_instruments(const Dag& g, const Options& o, std::ostream& out) {
  const auto found = find_instruments(g);
  if (o.json) {
    print_json(out, dagitty::json::instruments(found));
    return kOk;
  }
  for (const auto& r : found) {
    out << label(r.instrument);
    if (!r.conditioning_set.empty()) out << " | " << join(r.conditioning_set);
    out << '\n';
  }
  return kOk;
}

int cmd_implications(const Dag& g, const Options& o, std::ostream& out) {
  const auto statements = testable_implications(g);
  if (o.json) {
    print_json(out, dagitty::json::implications(statements));
    return kOk;
  }
  for (const auto& s : statements) out << to_string(s, label) << '\n';
  return kOk;
}

int cmd_transform(const Dag& g, const Options& o, std::ostream& out) {
  const bool moral = o.kind == "moral";
  const auto u = moral ? moral_graph(g, o.restrict) : correlation_graph(g);
  if (o.json)
    print_json(out, dagitty::json::undirected(u, o.kind));
  else
    out << render::to_dot(u, o.kind);
  return kOk;
}

int cmd_atomic(const Dag& g, const Options& o, std::ostream& out) {
  const auto es = atomic_direct_effects(g);
  if (o.json) {
    print_json(out, {{"edges", dagitty::json::edges(es)}});
    return kOk;
  }
  for (const auto& e : g.edges())
    if (es.contains(e)) out << label(e.source) << " -> " << label(e.target) << '\n';
  return kOk;
}

int cmd_export(const Dag& g, const Options& o, std::ostream& out) {
  if (o.format == "json" || o.json)
    print_json(out, dagitty::json::dag(g));
  else if (o.format == "svg")
    out << render::to_svg(g, o.style == "sem" ? render::NodeStyle::SemLike : render::NodeStyle::Classic);
  else
    out << render::to_dot(g);
  return kOk;
}

int cmd_simulate(const Dag& g, const Options& o, std::ostream& out) {
  if (o.samples == 0) throw UsageError("--n must be at least 1");
  const auto data = oracle::simulate(g, oracle::LinearSem::random(g, o.seed), o.samples);
  if (!o.json) {
    out << oracle::to_csv(data);
    return kOk;
  }
  json rows = json::array();
  for (std::size_t r = 0; r < data.rows(); ++r) {
    json row = json::array();
    for (const auto& c : data.columns) row.push_back(c[r]);
    rows.push_back(std::move(row));
  }
  print_json(out, {{"names", data.names}, {"rows", std::move(rows)}});
  return kOk;
}

// One request per input line, one response per output line.
int cmd_query(const std::string& text, std::ostream& out) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json request;
    try {
      request = json::parse(line);
    } catch (const json::parse_error& e) {
      out << service::error_response(nullptr, "BadRequest", e.what()).dump() << '\n';
      continue;
    }
    out << service::handle(request).dump() << '\n';
  }
  return kOk;
}

void report(const Options& o, const char* kind, const std::string& message, std::optional<std::size_t> line) {
  if (o.json)
    std::cerr << json{{"error", {{"kind", kind}, {"message", message}, {"line", line ? json(*line) : json(nullptr)}}}}
                     .dump()
              << '\n';
  else
    std::cerr << "dagitty: " << kind << ": " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal diagram analysis on model-code files"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Structured JSON output");

  auto command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "Model-code file, or - for standard input")->required();
    return sub;
  };
  auto* validate = command("validate", "Check that a file parses");
  auto* paths = command("paths", "List exposure-outcome paths");
  paths->add_option("--limit", o.limit, "Maximum number of paths")->capture_default_str();
  auto* dsep = command("dsep", "Decide d-separation");
  dsep->add_option("--x", o.x, "First variable set")->required()->delimiter(',');
  dsep->add_option("--y", o.y, "Second variable set")->required()->delimiter(',');
  dsep->add_option("--given", o.given, "Conditioning set")->delimiter(',');
  auto* adjust = command("adjust", "Minimal sufficient adjustment sets");
  adjust->add_option("--effect", o.effect)->check(CLI::IsMember({"total", "direct"}))->capture_default_str();
  auto* instruments = command("instruments", "Instrumental variables");
  auto* implications = command("implications", "Testable conditional independencies");
  auto* transform = command("transform", "Derived undirected graphs as DOT");
  transform->add_option("--kind", o.kind)->check(CLI::IsMember({"moral", "correlation"}))->capture_default_str();
  transform->add_flag("--restrict", o.restrict, "Moralize only the ancestors of exposures, outcomes and adjusted");
  auto* atomic = command("atomic", "Arrows without a parallel indirect path");
  auto* exporter = command("export", "Render or serialize the diagram");
  exporter->add_option("--format", o.format)->check(CLI::IsMember({"dot", "svg", "json"}))->capture_default_str();
  exporter->add_option("--style", o.style)->check(CLI::IsMember({"classic", "sem"}))->capture_default_str();
  auto* simulate = command("simulate", "Sample from a random linear Gaussian model");
  simulate->add_option("--n", o.samples, "Sample count")->capture_default_str();
  simulate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  auto* query = command("query", "Answer line-delimited JSON requests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string text;
  try {
    text = read_input(o.input);
  } catch (const UsageError& e) {
    report(o, "Usage", e.what(), std::nullopt);
    return kUsage;
  }
  if (query->parsed()) return cmd_query(text, std::cout);

  Dag g;
  try {
    g = model_code::parse(text);
  } catch (const Error& e) {
    report(o, e.kind(), e.what(), e.line());
    return kParse;
  }

  std::ostringstream out;
  int code = kOk;
  try {
    if (validate->parsed()) code = cmd_validate(g, o, out);
    if (paths->parsed()) code = cmd_paths(g, o, out);
    if (dsep->parsed()) code = cmd_dsep(g, o, out);
    if (adjust->parsed()) code = cmd_adjust(g, o, out);
    if (instruments->parsed()) code = cmd_instruments(g, o, out);
    if (implications->parsed()) code = cmd_implications(g, o, out);
    if (transform->parsed()) code = cmd_transform(g, o, out);
    if (atomic->parsed()) code = cmd_atomic(g, o, out);
    if (exporter->parsed()) code = cmd_export(g, o, out);
    if (simulate->parsed()) code = cmd_simulate(g, o, out);
  } catch (const UsageError& e) {
    report(o, "Usage", e.what(), std::nullopt);
    return kUsage;
  } catch (const Error& e) {
    report(o, e.kind(), e.what(), e.line());
    return kSemantic;
  }
  std::cout << out.str();
  return code;
}
