#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kgraph/extended_graph.hpp"
#include "kgraph/families.hpp"
#include "kgraph/io.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/lattice.hpp"
#include "kgraph/vertex_calculus.hpp"

namespace kgraph::cli {

namespace {

using nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  bool lenient = false;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

ParseOptions parse_options(const Globals& globals, std::ostream& err) {
  ParseOptions opts;
  opts.lenient = globals.lenient;
  opts.warn = [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };
  return opts;
}

KGraph load_graph(const std::string& path, const Globals& globals, std::ostream& err) {
  return validate(parse_graph(read_file(path), parse_options(globals, err)));
}

FamilyDocument load_family(const std::string& path, const KGraph& g, const Globals& globals,
                           std::ostream& err) {
  return parse_family(read_file(path), g, parse_options(globals, err));
}

std::string graph_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

ordered_json set_json(const KGraph& g, const VertexSet& s) {
  std::vector<std::string> names;
  s.for_each([&](VertexId v) { names.push_back(g.vertex_name(v)); });
  std::sort(names.begin(), names.end());
  return names;
}

ordered_json family_json(const KGraph& g, const SubsetFamily& f) {
  ordered_json out = ordered_json::object();
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask)
    out[FaceSet(mask).to_string()] = set_json(g, f[FaceSet(mask)]);
  return out;
}

std::string render_inline(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + render_inline(v[k]);
    return out + "}";
  }
  if (v.is_object()) {
    std::string out;
    for (auto it = v.begin(); it != v.end(); ++it)
      out += (out.empty() ? "" : " ") + it.key() + "=" + render_inline(it.value());
    return out;
  }
  return v.dump();
}

// Text mode prints the same report as JSON mode, one field per line; lists
// of objects become one indented line per element.
void render_text(const ordered_json& report, std::ostream& out) {
  for (auto it = report.begin(); it != report.end(); ++it) {
    const ordered_json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << it.key() << ":\n";
      for (const auto& item : v) out << "  - " << render_inline(item) << '\n';
    } else {
      out << it.key() << ": " << render_inline(v) << '\n';
    }
  }
}

void emit(const ordered_json& report, const Globals& globals, std::ostream& out) {
  if (globals.format == "json")
    out << report.dump(2) << '\n';
  else
    render_text(report, out);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    case ErrorCode::InternalValidationFailure: return kInternalError;
    default: return kInputError;
  }
}

FamilyKind kind_from(const std::string& text) { return *parse_family_kind(text); }

SearchLimits limits_from(std::uint64_t budget, std::int64_t time_limit_ms, const Globals& g) {
  SearchLimits limits;
  limits.max_candidates = budget;
  if (time_limit_ms > 0) limits.time_budget = std::chrono::milliseconds(time_limit_ms);
  limits.threads = g.threads;
  return limits;
}

ordered_json graph_summary(const KGraph& g) {
  ordered_json j;
  j["rank"] = g.rank();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["squares"] = g.square_count();
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"Gauge-invariant ideal lattices of finite higher-rank graphs", "kgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", globals.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--lenient", globals.lenient, "Warn about unknown fields instead of failing");
  app.add_option("--threads", globals.threads, "Enumeration threads (0 = all cores)");

  std::string graph_path, family_path, out_path, dot_path, set_text, kind_text, to_text;
  std::uint64_t budget = SearchLimits{}.max_candidates;
  std::int64_t time_limit = 0;
  bool oracle = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the k-graph axioms");
  validate_cmd->add_option("graph", graph_path)->required();
  validate_cmd->add_option("--dot", dot_path, "Also write the 1-skeleton as DOT");

  auto* tracing_cmd = app.add_subcommand("tracing", "Print W^F and U^F for every F");
  tracing_cmd->add_option("graph", graph_path)->required();

  auto* check_set_cmd =
      app.add_subcommand("check-set", "Hereditary / F-saturated / invariant verdicts");
  check_set_cmd->add_option("graph", graph_path)->required();
  check_set_cmd->add_option("--set", set_text, "Comma-separated vertex ids")->required();

  auto* check_family_cmd = app.add_subcommand("check-family", "Test a family predicate");
  check_family_cmd->add_option("graph", graph_path)->required();
  check_family_cmd->add_option("family", family_path)->required();
  check_family_cmd->add_option("--kind", kind_text)
      ->required()
      ->check(CLI::IsMember({"t", "o", "invariant"}));

  auto* convert_cmd =
      app.add_subcommand("convert-family", "Map T-families to invariant families and back");
  convert_cmd->add_option("graph", graph_path)->required();
  convert_cmd->add_option("family", family_path)->required();
  convert_cmd->add_option("--to", to_text)->required()->check(CLI::IsMember({"invariant", "t"}));
  convert_cmd->add_option("-o,--output", out_path, "Write the family here instead of stdout");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all families of a kind");
  enumerate_cmd->add_option("graph", graph_path)->required();
  enumerate_cmd->add_option("--kind", kind_text)
      ->required()
      ->check(CLI::IsMember({"t", "o", "invariant"}));
  enumerate_cmd->add_flag("--oracle", oracle, "Use exhaustive brute force");
  enumerate_cmd->add_option("--budget", budget, "Candidate budget");
  enumerate_cmd->add_option("--time-limit", time_limit, "Time budget in milliseconds");

  auto* lattice_cmd = app.add_subcommand("lattice", "Write the Hasse diagram of a family lattice");
  lattice_cmd->add_option("graph", graph_path)->required();
  lattice_cmd->add_option("--kind", kind_text)->required()->check(CLI::IsMember({"t", "o"}));
  lattice_cmd->add_option("--dot", dot_path)->required();
  lattice_cmd->add_option("--budget", budget, "Candidate budget");
  lattice_cmd->add_option("--time-limit", time_limit, "Time budget in milliseconds");

  auto* extend_cmd = app.add_subcommand("extend", "Build the extended graph of an invariant family");
  extend_cmd->add_option("graph", graph_path)->required();
  extend_cmd->add_option("family", family_path)->required();
  extend_cmd->add_option("-o,--output", out_path)->required();

  auto* quotient_cmd =
      app.add_subcommand("quotient", "Build the graph realizing the quotient by a T-family");
  quotient_cmd->add_option("graph", graph_path)->required();
  quotient_cmd->add_option("family", family_path)->required();
  quotient_cmd->add_option("-o,--output", out_path)->required();

  std::vector<const char*> argv{"kgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  ordered_json report;
  report["command"] = command;
  int rc = kSuccess;

  try {
    const KGraph g = load_graph(graph_path, globals, err);
    report["graph"] = graph_name(graph_path);

    if (command == "validate") {
      report["valid"] = true;
      report.update(graph_summary(g));
      report["checksum"] = graph_checksum(g);
      if (!dot_path.empty()) {
        write_file(dot_path, export_dot(g));
        report["dot"] = dot_path;
      }
    } else if (command == "tracing") {
      report["rank"] = g.rank();
      ordered_json sets = ordered_json::array();
      const TracingSets t = tracing_sets(g);
      for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
        ordered_json row;
        row["F"] = FaceSet(mask).to_string();
        row["W"] = set_json(g, t.w[mask]);
        row["U"] = set_json(g, t.u[mask]);
        sets.push_back(std::move(row));
      }
      report["sets"] = std::move(sets);
    } else if (command == "check-set") {
      VertexSet s = g.no_vertices();
      std::stringstream ids(set_text);
      for (std::string id; std::getline(ids, id, ',');) {
        if (id.empty()) continue;
        auto v = g.find_vertex(id);
        if (!v) throw Error(ErrorCode::UnknownId, "no vertex named '" + id + "'", {id});
        s.insert(*v);
      }
      const bool hereditary = is_hereditary(g, s);
      const bool saturated = is_f_saturated(g, s);
      report["set"] = set_json(g, s);
      report["hereditary"] = hereditary;
      report["f-saturated"] = saturated;
      report["invariant"] = hereditary && saturated;
      rc = hereditary && saturated ? kSuccess : kPredicateFalse;
    } else if (command == "check-family") {
      const FamilyDocument doc = load_family(family_path, g, globals, err);
      const FamilyKind kind = kind_from(kind_text);
      const bool holds = is_family_of_kind(g, doc.family, kind);
      report["kind"] = kind_text;
      report["family"] = family_json(g, doc.family);
      report["holds"] = holds;
      rc = holds ? kSuccess : kPredicateFalse;
    } else if (command == "convert-family") {
      const FamilyDocument doc = load_family(family_path, g, globals, err);
      const SubsetFamily converted =
          to_text == "invariant" ? t_to_invariant(g, doc.family) : invariant_to_t(g, doc.family);
      const std::string text = serialize_family(g, converted, graph_name(graph_path));
      if (out_path.empty()) {
        out << text;
        return kSuccess;
      }
      write_file(out_path, text);
      report["to"] = to_text;
      report["family"] = family_json(g, converted);
      report["output"] = out_path;
    } else if (command == "enumerate") {
      const FamilyKind kind = kind_from(kind_text);
      const SearchLimits limits = limits_from(budget, time_limit, globals);
      const FamilyLattice lattice = oracle ? brute_force_families(g, kind, limits)
                                           : enumerate_families(g, kind, limits);
      report["kind"] = kind_text;
      report["method"] = oracle ? "oracle" : "search";
      report["count"] = lattice.size();
      ordered_json families = ordered_json::array();
      for (const auto& f : lattice.elements()) families.push_back(family_json(g, f));
      report["families"] = std::move(families);
    } else if (command == "lattice") {
      const FamilyKind kind = kind_from(kind_text);
      const FamilyLattice lattice =
          enumerate_families(g, kind, limits_from(budget, time_limit, globals));
      write_file(dot_path, export_dot(g, lattice));
      report["kind"] = kind_text;
      report["elements"] = lattice.size();
      report["covers"] = hasse(lattice).size();
      if (auto b = lattice.bottom()) report["bottom"] = family_json(g, lattice.elements()[*b]);
      if (auto t = lattice.top()) report["top"] = family_json(g, lattice.elements()[*t]);
      report["dot"] = dot_path;
    } else if (command == "extend" || command == "quotient") {
      const FamilyDocument doc = load_family(family_path, g, globals, err);
      const SubsetFamily w =
          command == "extend" ? doc.family : t_to_invariant(g, doc.family);
      const ExtendedGraph x = build_extended(g, w);
      write_file(out_path, serialize_graph(x.graph));
      report["invariant-family"] = family_json(g, w);
      report.update(graph_summary(x.graph));
      report["receiving-pattern"] = receiving_pattern_check(g, w, x);
      report["output"] = out_path;
    }
  } catch (const Error& e) {
    ordered_json error;
    error["code"] = std::string(to_string(e.code()));
    error["message"] = e.what();
    error["subjects"] = e.subjects();
    if (e.line()) error["line"] = *e.line();
    if (e.column()) error["column"] = *e.column();
    report["error"] = std::move(error);
    rc = exit_code_for(e.code());
    if (globals.format != "json") {
      err << "error: " << e.what() << '\n';
      return rc;
    }
  } catch (const InputError& e) {
    report["error"] = {{"code", "InputError"}, {"message", e.what()}};
    rc = kInputError;
    if (globals.format != "json") {
      err << "error: " << e.what() << '\n';
      return rc;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }

  emit(report, globals, out);
  return rc;
}

}  // namespace kgraph::cli
