#pragma once

// Command implementations for the `cap` tool. Kept in a header so the test
// suites can run commands in-process against string streams.
//
// Exit codes: 0 success / "yes", 1 "no" answer or property violation,
// 2 invalid input, 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cap/cap.hpp"

namespace cap::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ColoredGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// Sidecar "id label" lines mapping vertex ids to display names.
inline std::map<Vertex, std::string> load_names(const std::string& path, Vertex n) {
  std::map<Vertex, std::string> names;
  if (path.empty()) return names;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long id = -1;
    std::string label;
    if (!(fields >> id)) continue;
    if (!(fields >> label) || id < 0 || id >= static_cast<long long>(n))
      throw ValidationError(path + ":" + std::to_string(line_no) + ": expected '<id> <label>' with id < " + std::to_string(n));
    names[static_cast<Vertex>(id)] = label;
  }
  return names;
}

inline std::string label_of(const std::map<Vertex, std::string>& names, Vertex v) {
  auto it = names.find(v);
  return it == names.end() ? std::to_string(v) : it->second;
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

inline Variant parse_variant(const std::string& s) {
  if (s == "edge") return Variant::edge;
  if (s == "strong") return Variant::strong;
  if (s == "weak") return Variant::weak;
  if (s == "weak-lists") return Variant::weak_lists;
  throw ValidationError("unknown variant '" + s + "'");
}

inline void require_variant_fits(const ColoredGraph& g, Variant v) {
  const bool edge_variant = v == Variant::edge;
  if (edge_variant != (g.target() == ColoringTarget::edges))
    throw ValidationError("variant " + std::string(to_string(v)) + " does not apply to a " +
                          std::string(to_string(g.target())) + "-colored graph");
}

inline ColoredGraph apply_mode(const ColoredGraph& g, const std::string& mode) {
  if (mode.empty()) return g;
  if (g.target() != ColoringTarget::vertices) throw ValidationError("--mode only applies to vertex-colored graphs");
  if (mode == "vulnerable") return g.with_mode(MultiColorMode::vulnerable);
  if (mode == "resilient") return g.with_mode(MultiColorMode::resilient);
  throw ValidationError("mode must be 'vulnerable' or 'resilient'");
}

inline Json input_summary(const ColoredGraph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["k"] = g.palette_size();
  j["target"] = std::string(to_string(g.target()));
  if (g.target() == ColoringTarget::vertices)
    j["mode"] = std::string(to_string(g.mode()));
  else
    j["mode"] = nullptr;
  return j;
}

inline Json sets_json(const CliqueList& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

inline std::string color_label(const std::vector<std::string>& names, ColorId c) {
  return c < names.size() ? names[c] : "color " + std::to_string(c);
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

struct ComponentsArgs {
  std::string file;
  std::string variant;
  std::optional<std::size_t> at_least;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string mode;
  unsigned threads = 1;
  std::string names;
};

inline int cmd_components(const ComponentsArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto variant = detail::parse_variant(a.variant);
  const auto g = detail::apply_mode(detail::load_graph(a.file), a.mode);
  detail::require_variant_fits(g, variant);
  if (a.at_least && *a.at_least < 1) throw ValidationError("--at-least must be positive");
  const auto names = detail::load_names(a.names, g.vertex_count());
  const ExecutionOptions exec{std::max(1u, a.threads)};

  SearchBudget budget{a.budget, 0};
  CliqueList components;
  std::string solver;
  bool exponential = false;
  switch (variant) {
    case Variant::edge:
      components = CliqueList::from_partition(edge_cac_components(g, exec));
      solver = "edge-refinement";
      break;
    case Variant::weak:
      components = weak_components(g, exec);
      solver = "locally-chordal";
      break;
    case Variant::strong:
      components = strong_components(g, budget, exec);
      solver = "pivot-enumeration";
      exponential = true;
      break;
    case Variant::weak_lists:
      components = weak_list_components(g, budget, exec);
      solver = "pivot-enumeration";
      exponential = true;
      break;
  }

  Json per_color = Json::array();
  for (ColorId c = 0; c < g.palette_size(); ++c) {
    const auto p = variant == Variant::edge ? edge_surviving_partition(g, c) : vertex_surviving_partition(g, c);
    Json entry;
    entry["color"] = c;
    entry["survivors"] = p.domain().size();
    entry["blocks"] = p.block_count();
    entry["largest"] = p.largest_block();
    per_color.push_back(entry);
  }

  Json report;
  report["schema"] = 1;
  report["command"] = "components";
  report["input"] = detail::input_summary(g);
  report["variant"] = std::string(to_string(variant));
  report["solver"] = solver;
  report["components"] = detail::sets_json(components);
  report["component_count"] = components.size();
  report["largest"] = components.largest();
  if (!names.empty()) {
    Json labelled = Json::array();
    for (const auto& s : components) {
      Json row = Json::array();
      for (auto v : s) row.push_back(detail::label_of(names, v));
      labelled.push_back(row);
    }
    report["component_labels"] = labelled;
  }
  report["per_color"] = per_color;
  if (exponential)
    report["budget"] = {{"limit", budget.limit}, {"used", budget.used}};
  else
    report["budget"] = nullptr;

  int code = kExitOk;
  if (a.at_least) {
    const bool yes = components.largest() >= *a.at_least;
    report["decision"] = {{"at_least", *a.at_least}, {"answer", yes}};
    code = yes ? kExitOk : kExitNo;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  report["timing"] = {{"total_ms", elapsed.count()}};
  detail::print_json(out, report);
  return code;
}

struct PairwiseArgs {
  std::string file;
  long long u = -1;
  long long v = -1;
  std::string variant;
  std::string mode;
  bool json = false;
  std::string names;
  std::string color_names;
};

inline int cmd_pairwise(const PairwiseArgs& a, std::ostream& out) {
  const auto variant = detail::parse_variant(a.variant);
  const auto g = detail::apply_mode(detail::load_graph(a.file), a.mode);
  detail::require_variant_fits(g, variant);
  if (a.u < 0 || a.v < 0) throw ValidationError("vertex ids must be nonnegative");
  const auto u = static_cast<Vertex>(a.u), v = static_cast<Vertex>(a.v);
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw ValidationError("pairwise queries need two distinct vertices");
  const auto names = detail::load_names(a.names, g.vertex_count());
  const auto colors = detail::split_commas(a.color_names);
  const auto report = extract_witnesses(g, u, v, variant);

  if (a.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "pairwise";
    j["variant"] = std::string(to_string(variant));
    j["u"] = u;
    j["v"] = v;
    j["related"] = report.related();
    j["disconnected"] = report.disconnected;
    Json ws = Json::array();
    for (const auto& w : report.witnesses) {
      Json e;
      e["color"] = w.color;
      if (w.kind == AvoidanceWitness::Kind::endpoint_removed) {
        e["kind"] = "endpoint-removed";
      } else {
        e["kind"] = "path";
        e["path"] = w.path;
      }
      ws.push_back(e);
    }
    j["witnesses"] = ws;
    if (report.failing_color)
      j["failing_color"] = *report.failing_color;
    else
      j["failing_color"] = nullptr;
    detail::print_json(out, j);
    return kExitOk;
  }

  out << detail::label_of(names, u) << " - " << detail::label_of(names, v) << " (" << to_string(variant)
      << "): " << (report.related() ? "color-avoiding connected" : "not color-avoiding connected") << '\n';
  if (report.disconnected) out << "  fails: different components of the graph\n";
  for (const auto& w : report.witnesses) {
    out << "  " << detail::color_label(colors, w.color) << ": ";
    if (w.kind == AvoidanceWitness::Kind::endpoint_removed) {
      out << "endpoint removed";
    } else {
      for (std::size_t i = 0; i < w.path.size(); ++i) out << (i ? "-" : "") << detail::label_of(names, w.path[i]);
    }
    out << '\n';
  }
  if (report.failing_color) out << "  fails: " << detail::color_label(colors, *report.failing_color) << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  Vertex n = 0;
  double p = 0.0;
  ColorId k = 1;
  std::string target = "vertices";
  std::uint64_t seed = 0;
  std::string from;
  std::optional<Vertex> source_n;
};

inline int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "er") {
    ColoringTarget target;
    if (a.target == "vertices") target = ColoringTarget::vertices;
    else if (a.target == "edges") target = ColoringTarget::edges;
    else throw ValidationError("--target must be 'vertices' or 'edges'");
    serialize_graph(generate_er(a.n, a.p, a.k, target, a.seed), out);
    return kExitOk;
  }
  std::istringstream src(detail::read_file(a.from));
  const auto h = parse_edge_list(src, a.source_n);
  serialize_graph(a.kind == "gadget" ? clique_gadget(h) : clique_gadget_reduced(h), out);
  return kExitOk;
}

struct CheckArgs {
  std::string file;
  std::string check;
  bool raw = false;
  bool json = false;
};

inline int cmd_check(const CheckArgs& a, std::ostream& out) {
  Json j;
  j["schema"] = 1;
  j["command"] = "check";
  j["check"] = a.check;
  bool ok = true;
  std::vector<std::string> lines;

  if (a.check == "local-chordal") {
    PairwiseGraph h;
    if (a.raw) {
      std::istringstream src(detail::read_file(a.file));
      h = parse_edge_list(src);
    } else {
      const auto g = detail::load_graph(a.file);
      g.require_target(ColoringTarget::vertices);
      h = weak_pairwise_graph(g);
    }
    j["pairwise_edges"] = h.edge_count();
    if (auto wheel = find_induced_wheel(h)) {
      ok = false;
      j["wheel"] = {{"center", wheel->center}, {"cycle", wheel->cycle}};
      std::string cyc;
      for (auto v : wheel->cycle) cyc += (cyc.empty() ? "" : "-") + std::to_string(v);
      lines.push_back("not locally chordal: induced wheel centered at " + std::to_string(wheel->center) +
                      " with rim " + cyc);
    } else {
      lines.push_back("locally chordal");
    }
  } else if (a.check == "oracle-agree") {
    if (a.raw) throw ValidationError("--raw only applies to the local-chordal check");
    const auto g = detail::load_graph(a.file);
    if (g.vertex_count() > kOracleMaxSubsetVertices)
      throw ValidationError("oracle-agree is limited to " + std::to_string(kOracleMaxSubsetVertices) + " vertices");
    Json results = Json::array();
    auto compare = [&](Variant variant, const PairwiseGraph& fast_pairs, const CliqueList& fast_components) {
      const auto rel = oracle_pairwise(g, variant);
      const auto slow_pairs = rel.to_graph();
      Json r;
      r["variant"] = std::string(to_string(variant));
      r["pairwise_agree"] = slow_pairs == fast_pairs;
      r["components_agree"] = oracle_components(rel, variant) == fast_components;
      if (!(slow_pairs == fast_pairs)) {
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (slow_pairs.has_edge(u, v) != fast_pairs.has_edge(u, v)) {
              r["mismatch"] = {u, v};
              u = v = g.vertex_count();
            }
      }
      const bool agree = r["pairwise_agree"].get<bool>() && r["components_agree"].get<bool>();
      ok = ok && agree;
      lines.push_back(std::string(to_string(variant)) + ": " + (agree ? "agree" : "MISMATCH"));
      results.push_back(r);
    };
    if (g.target() == ColoringTarget::edges) {
      const auto parts = edge_cac_components(g);
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
          if (parts.same_block(u, v)) pairs.emplace_back(u, v);
      compare(Variant::edge, PairwiseGraph::from_edges(g.vertex_count(), pairs), CliqueList::from_partition(parts));
    } else {
      compare(Variant::strong, strong_pairwise_graph(g), strong_components(g));
      bool lists = false;
      for (Vertex v = 0; v < g.vertex_count(); ++v) lists = lists || g.colors(v).size() >= 2;
      if (lists && g.mode() == MultiColorMode::vulnerable)
        compare(Variant::weak_lists, weak_pairwise_graph(g), weak_list_components(g));
      else
        compare(Variant::weak, weak_pairwise_graph(g), weak_components(g));
    }
    j["results"] = results;
  } else {
    throw ValidationError("unknown check '" + a.check + "'");
  }

  j["ok"] = ok;
  if (a.json) {
    detail::print_json(out, j);
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return ok ? kExitOk : kExitNo;
}

inline int cmd_export_dot(const std::string& file, std::ostream& out) {
  out << to_dot(detail::load_graph(file));
  return kExitOk;
}

// Entry point shared by main() and the tests. `args` excludes the program
// name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Color-avoiding connectivity toolkit", "cap"};
  app.require_subcommand(1);

  ComponentsArgs comp;
  auto* components = app.add_subcommand("components", "compute color-avoiding components as a JSON report");
  components->add_option("file", comp.file, "CAG input file")->required();
  components->add_option("--variant", comp.variant, "edge | strong | weak | weak-lists")->required();
  components->add_option("--at-least", comp.at_least, "decision mode: exit 0 iff some component has >= l vertices");
  components->add_option("--budget", comp.budget, "node limit for the exponential solvers");
  components->add_option("--mode", comp.mode, "override multi-color mode: vulnerable | resilient");
  components->add_option("--threads", comp.threads, "worker threads");
  components->add_option("--names", comp.names, "sidecar file of '<id> <label>' lines");

  PairwiseArgs pw;
  auto* pairwise = app.add_subcommand("pairwise", "per-color verdicts and witness paths for one vertex pair");
  pairwise->add_option("file", pw.file, "CAG input file")->required();
  pairwise->add_option("u", pw.u, "first vertex")->required();
  pairwise->add_option("v", pw.v, "second vertex")->required();
  pairwise->add_option("--variant", pw.variant, "edge | strong | weak | weak-lists")->required();
  pairwise->add_option("--mode", pw.mode, "override multi-color mode: vulnerable | resilient");
  pairwise->add_flag("--json", pw.json, "machine-readable output");
  pairwise->add_option("--names", pw.names, "sidecar file of '<id> <label>' lines");
  pairwise->add_option("--color-names", pw.color_names, "comma-separated color names, by id");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance in CAG format");
  gen_cmd->require_subcommand(1);
  auto* er = gen_cmd->add_subcommand("er", "Erdos-Renyi G(n, p) with uniformly random colors");
  er->add_option("--n", gen.n, "vertex count")->required();
  er->add_option("--p", gen.p, "edge probability")->required();
  er->add_option("--k", gen.k, "palette size")->required();
  er->add_option("--target", gen.target, "vertices | edges");
  er->add_option("--seed", gen.seed, "random seed");
  auto* gadget = gen_cmd->add_subcommand("gadget", "clique-reduction instance with one color per vertex pair");
  auto* reduced = gen_cmd->add_subcommand("gadget-reduced", "clique-reduction instance, nonadjacent pairs only");
  for (auto* sub : {gadget, reduced}) {
    sub->add_option("--from", gen.from, "plain edge list ('u v' per line)")->required();
    sub->add_option("--n", gen.source_n, "vertex count when isolated vertices trail the edge list");
  }

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "verify a structural property");
  check->add_option("file", chk.file, "CAG file (or edge list with --raw)")->required();
  check->add_option("--check", chk.check, "local-chordal | oracle-agree")->required();
  check->add_flag("--raw", chk.raw, "treat the input as a plain edge list forming the pairwise graph");
  check->add_flag("--json", chk.json, "machine-readable output");

  std::string dot_file;
  auto* dot = app.add_subcommand("export-dot", "GraphViz rendering of a CAG file");
  dot->add_option("file", dot_file, "CAG input file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*components) return cmd_components(comp, out);
    if (*pairwise) return cmd_pairwise(pw, out);
    if (*gen_cmd) {
      gen.kind = *er ? "er" : *gadget ? "gadget" : "gadget-reduced";
      return cmd_gen(gen, out);
    }
    if (*check) return cmd_check(chk, out);
    if (*dot) return cmd_export_dot(dot_file, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const LocalChordalityViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitNo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace cap::cli
