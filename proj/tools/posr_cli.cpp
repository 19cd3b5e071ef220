#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posr/posr.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace posr;

namespace {

/// Exit code for usage, parse and I/O problems.
constexpr int kUsage = 2;

struct Output {
  bool as_json = false;
  std::ostream& out = std::cout;

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

bool looks_like_path(const std::string& arg) {
  return arg.find('/') != std::string::npos || fs::path(arg).extension() == ".psr";
}

/// A psr file if one exists at `arg`, else a construction spec.
PoSemiringTable load_instance(const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    try {
      return read_psr_file(arg);
    } catch (const InvalidInstance& e) {
      throw InvalidInstance(arg + ": " + e.what());
    }
  }
  if (looks_like_path(arg)) throw ParseError(arg, 0, "cannot open file");
  return construct(arg);
}

FiniteRing load_ring(const std::string& arg) {
  if (fs::is_regular_file(arg)) return read_ring_file(arg);
  return make_ring(arg);
}

json labels(const PoSemiringTable& a, ElementSet s) {
  json out = json::array();
  for (Element x : s) out.push_back(a.name(x));
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

json tables_json(const PoSemiringTable& a) {
  const RawTables t = a.raw();
  return {{"order", a.order()}, {"names", t.names}, {"add", t.add}, {"mul", t.mul}};
}

void write_or_print(const std::string& path, const std::string& text, const Output& o) {
  if (path.empty())
    o.out << text;
  else
    write_text_file(path, text);
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& input, const Output& o) {
  RawTables t = fs::is_regular_file(input) || looks_like_path(input) ? read_psr_raw(input) : construct(input).raw();
  const AxiomReport r = verify_axioms(t);
  if (o.as_json) {
    json v = json::array();
    for (const auto& x : r.violations) {
      json w = json::array();
      for (Element e : x.witness) w.push_back(t.names.at(e));
      v.push_back({{"axiom", x.axiom}, {"witness", w}});
    }
    o.emit({{"valid", r.valid}, {"violations", v}});
  } else {
    o.out << (r.valid ? "valid" : "invalid") << "\n";
    for (const auto& x : r.violations) {
      std::vector<std::string> w;
      for (Element e : x.witness) w.push_back(t.names.at(e));
      o.out << "violation " << x.axiom << " at (" << join(w, ",") << ")\n";
    }
  }
  return r.valid ? 0 : 1;
}

json condition_json(const PoSemiringTable& a, const ConditionOutcome& c) {
  json j{{"holds", c.holds}};
  if (c.counterexample) j["counterexample"] = a.name(*c.counterexample);
  return j;
}

std::string condition_text(const PoSemiringTable& a, const char* id, const ConditionOutcome& c) {
  std::string s = std::string(id) + "=" + (c.holds ? "true" : "false");
  if (c.counterexample) s += " counterexample=" + a.name(*c.counterexample);
  return s;
}

int cmd_analyze(const std::string& input, const Output& o) {
  const PoSemiringTable a = load_instance(input);
  const ElementAnalysis an = analyze_elements(a);
  const ConditionReport c = check_conditions(a);
  ElementSet nilpotent;
  for (Element x = 1; x < a.order(); ++x)
    if (an.nilpotency[x]) nilpotent = nilpotent | ElementSet{x};
  if (o.as_json) {
    o.emit({{"order", a.order()},
            {"zero_divisors", labels(a, an.zero_divisors)},
            {"nilpotent", labels(a, nilpotent)},
            {"idempotents", labels(a, an.idempotents)},
            {"primitive_idempotents", labels(a, an.primitive_idempotents)},
            {"primes", labels(a, an.primes)},
            {"maximals", labels(a, an.maximals)},
            {"minimals", labels(a, an.minimals)},
            {"integral", an.integral()},
            {"c1", condition_json(a, c.c1)},
            {"c2", condition_json(a, c.c2)},
            {"c3", condition_json(a, c.c3)}});
    return 0;
  }
  o.out << "order=" << a.order() << "\n"
        << "Z=" << format_set(a, an.zero_divisors) << "\n"
        << "nilpotent=" << format_set(a, nilpotent) << "\n"
        << "idempotents=" << format_set(a, an.idempotents) << "\n"
        << "primitive_idempotents=" << format_set(a, an.primitive_idempotents) << "\n"
        << "primes=" << format_set(a, an.primes) << "\n"
        << "maximals=" << format_set(a, an.maximals) << "\n"
        << "minimals=" << format_set(a, an.minimals) << "\n"
        << condition_text(a, "c1", c.c1) << "\n"
        << condition_text(a, "c2", c.c2) << "\n"
        << condition_text(a, "c3", c.c3) << "\n";
  return 0;
}

json graph_json(const ZdGraph& g, const GraphShape& s, const std::vector<std::string>& names) {
  const GraphMetrics m = graph_metrics(g);
  json vs = json::array(), es = json::array();
  for (Element v : g.vertices()) vs.push_back(names.at(v));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) es.push_back({names.at(g.element(i)), names.at(g.element(j))});
  json j{{"shape", shape_line(s)},
         {"tag", shape_tag(s)},
         {"vertices", vs},
         {"edges", es},
         {"component_count", m.component_count},
         {"clique_number", m.clique_number}};
  j["diameter"] = m.diameter ? json(*m.diameter) : json(nullptr);
  j["girth"] = m.girth ? json(*m.girth) : json(nullptr);
  return j;
}

void graph_text(const ZdGraph& g, const GraphShape& s, const std::vector<std::string>& names, bool shape_only,
                std::ostream& out) {
  out << shape_line(s) << "\n";
  if (shape_only) return;
  const GraphMetrics m = graph_metrics(g);
  std::vector<std::string> vs, es;
  for (Element v : g.vertices()) vs.push_back(names.at(v));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) es.push_back(names.at(g.element(i)) + "-" + names.at(g.element(j)));
  out << "vertices={" << join(vs, ",") << "}\n"
      << "edges={" << join(es, ",") << "}\n"
      << "components=" << m.component_count << "\n"
      << "diameter=" << (m.diameter ? std::to_string(*m.diameter) : "none") << "\n"
      << "girth=" << (m.girth ? std::to_string(*m.girth) : "none") << "\n"
      << "clique_number=" << m.clique_number << "\n";
}

int emit_graph(const ZdGraph& g, const GraphShape& s, const std::vector<std::string>& names, bool shape_only,
               const std::string& dot, const Output& o) {
  if (!dot.empty()) write_text_file(dot, export_dot(g, names));
  if (o.as_json)
    o.emit(graph_json(g, s, names));
  else
    graph_text(g, s, names, shape_only, o.out);
  return 0;
}

int cmd_graph(const std::string& input, bool shape_only, const std::string& dot, const Output& o) {
  const PoSemiringTable a = load_instance(input);
  const ZdGraph g = zero_divisor_graph(a);
  return emit_graph(g, classify_shape(g), a.names(), shape_only, dot, o);
}

int emit_table(const PoSemiringTable& a, const std::string& label, const std::string& path, const Output& o) {
  if (o.as_json) {
    json j = tables_json(a);
    j["spec"] = label;
    if (!path.empty()) write_psr_file(path, a);
    o.emit(j);
  } else {
    write_or_print(path, format_psr(a), o);
  }
  return 0;
}

int cmd_construct(const std::string& spec, const std::string& path, const Output& o) {
  const ConstructionSpec parsed = parse_construction(spec);
  return emit_table(construct(parsed), to_string(parsed), path, o);
}

int cmd_product(const std::string& left, const std::string& right, const std::string& path, const Output& o) {
  const PoSemiringTable p = direct_product(load_instance(left), load_instance(right));
  return emit_table(p, "product(" + left + "," + right + ")", path, o);
}

int cmd_iso(const std::string& left, const std::string& right, const Output& o) {
  const PoSemiringTable a = load_instance(left), b = load_instance(right);
  const auto iso = a.order() == b.order() ? find_isomorphism(a, b) : std::nullopt;
  if (o.as_json) {
    json j{{"isomorphic", iso.has_value()}};
    if (iso) {
      json m = json::object();
      for (Element x = 0; x < a.order(); ++x) m[a.name(x)] = b.name((*iso)[x]);
      j["map"] = m;
    }
    o.emit(j);
  } else if (iso) {
    o.out << "isomorphic\n";
    for (Element x = 0; x < a.order(); ++x) o.out << a.name(x) << " -> " << b.name((*iso)[x]) << "\n";
  } else {
    o.out << "non-isomorphic\n";
  }
  return iso ? 0 : 1;
}

int cmd_enumerate(std::size_t order, const std::string& mode, const std::string& emit_dir, const Output& o) {
  EnumerationOptions opts;
  opts.mode = mode == "naive" ? EnumerationMode::naive : EnumerationMode::fast;
  const CensusResult r = enumerate_posemirings(order, opts);
  std::vector<std::string> hashes;
  for (const auto& f : r.canonical_forms) hashes.push_back(form_hash(f));
  if (!emit_dir.empty()) {
    fs::create_directories(emit_dir);
    for (std::size_t i = 0; i < r.instances.size(); ++i)
      write_psr_file((fs::path(emit_dir) / (hashes[i] + ".psr")).string(), r.instances[i]);
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
  if (o.as_json) {
    o.emit({{"order", r.order},
            {"mode", mode},
            {"classes", r.count_up_to_iso},
            {"labeled", r.count_labeled},
            {"seconds", r.seconds},
            {"hashes", hashes}});
  } else {
    o.out << "order=" << r.order << " classes=" << r.count_up_to_iso << " labeled=" << r.count_labeled
          << " seconds=" << secs << "\n";
  }
  return 0;
}

int cmd_ring(const std::string& op, const std::string& spec, bool shape_only, const std::string& dot,
             const std::string& path, const Output& o) {
  const FiniteRing r = load_ring(spec);
  if (op == "ideals") {
    const auto ideals = enumerate_ring_ideals(r);
    if (o.as_json) {
      json arr = json::array();
      for (const auto& i : ideals) {
        json members = json::array();
        for (Element x : i.members) members.push_back(r.name(x));
        arr.push_back({{"name", ideal_name(r, i)}, {"size", i.size()}, {"members", members}});
      }
      o.emit({{"ring", spec}, {"ideals", arr}});
    } else {
      for (const auto& i : ideals) o.out << ideal_name(r, i) << " size=" << i.size() << "\n";
    }
    return 0;
  }
  if (op == "semiring") {
    const IdealSemiring s = ideal_semiring(r);
    return emit_table(s.table, spec, path, o);
  }
  if (op == "ag") {
    const AnnihilatingIdealGraph ag = annihilating_ideal_graph(r);
    return emit_graph(ag.graph, ag.shape, ag.semiring.table.names(), shape_only, dot, o);
  }
  if (op == "zdgraph") {
    const GraphResult g = ring_zdgraph(r);
    return emit_graph(g.graph, g.shape, r.names(), shape_only, dot, o);
  }
  const Radicals rad = radicals(r);
  std::vector<std::string> idem;
  for (Element e : rad.idempotents) idem.push_back(r.name(e));
  const std::string n = ideal_name(r, rad.nilradical), j = ideal_name(r, rad.jacobson);
  if (o.as_json) {
    o.emit({{"nilradical", n}, {"jacobson", j}, {"equal", rad.nilradical == rad.jacobson}, {"idempotents", idem}});
  } else {
    o.out << "N=" << n << "\nJ=" << j << "\nidempotents={" << join(idem, ",") << "}\n";
  }
  return 0;
}

Corpus load_corpus(const std::string& spec) {
  Corpus c;
  std::stringstream parts(spec);
  for (std::string part; std::getline(parts, part, '+');) {
    if (part.rfind("census:", 0) == 0) {
      const std::string n = part.substr(7);
      if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 2)
        throw DomainError("census corpus needs a numeric order, got '" + n + "'");
      for (auto& x : census_corpus(std::stoul(n))) c.posemirings.push_back(std::move(x));
    } else if (part == "grid") {
      for (auto& x : construction_grid()) c.posemirings.push_back(std::move(x));
      for (auto& x : pair_corpus()) c.pairs.push_back(std::move(x));
    } else if (part.rfind("files:", 0) == 0) {
      for (auto& x : file_corpus(part.substr(6))) c.posemirings.push_back(std::move(x));
    } else if (part == "rings:default") {
      for (auto& x : default_ring_corpus()) c.rings.push_back(std::move(x));
    } else {
      throw DomainError("unknown corpus '" + part + "' (expected census:<n>, grid, files:<dir> or rings:default)");
    }
  }
  return c;
}

int cmd_theorems(const std::string& corpus, const std::string& checks, const std::string& report, const Output& o) {
  std::vector<std::string> ids;
  if (checks != "all") {
    std::stringstream ss(checks);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) ids.push_back(id);
  }
  const TheoremReport r = run_catalog(load_corpus(corpus), ids);
  if (o.as_json || report == "json") {
    json entries = json::array();
    for (const auto& e : r.entries) {
      json j{{"check", e.check}, {"instance", e.instance}, {"result", to_string(e.result)}};
      if (e.result == Outcome::fail) j["witness"] = e.witness;
      entries.push_back(j);
    }
    json tallies = json::array();
    for (const auto& t : r.tallies)
      tallies.push_back({{"check", t.check},
                         {"scope", to_string(t.scope)},
                         {"finite_case", t.finite_case},
                         {"pass", t.pass},
                         {"fail", t.fail},
                         {"not_applicable", t.not_applicable}});
    o.emit({{"entries", entries}, {"tallies", tallies}, {"failures", r.failure_count()}});
  } else {
    o.out << format_report_text(r);
  }
  return r.failure_count() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite po-semirings: axioms, zero-divisor graphs, constructions, census and ideal lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string input, second, out_path, dot, mode = "fast", emit_dir, op, corpus = "census:4", checks = "all",
                                         report = "text";
  bool shape_only = false;
  std::size_t order = 0;

  auto* verify = app.add_subcommand("verify", "Check the axioms of a psr file");
  verify->add_option("input", input, "psr file")->required();
  verify->add_flag("--json", as_json);

  auto* analyze = app.add_subcommand("analyze", "Element analysis and conditions C1-C3");
  analyze->add_option("input", input, "psr file or construction spec")->required();
  analyze->add_flag("--json", as_json);

  auto* graph = app.add_subcommand("graph", "Zero-divisor graph");
  graph->add_option("input", input, "psr file or construction spec")->required();
  graph->add_flag("--shape", shape_only, "Print only the shape line");
  graph->add_option("--dot", dot, "Write a DOT file");
  graph->add_flag("--json", as_json);

  auto* cons = app.add_subcommand("construct", "Build an instance from a construction spec");
  cons->add_option("spec", input, "e.g. example-2.6:k=2 or product(trivial,chain:k=1)")->required();
  cons->add_option("-o,--output", out_path, "psr file to write (default stdout)");
  cons->add_flag("--json", as_json);

  auto* prod = app.add_subcommand("product", "Direct product of two instances");
  prod->add_option("left", input)->required();
  prod->add_option("right", second)->required();
  prod->add_option("-o,--output", out_path, "psr file to write (default stdout)");
  prod->add_flag("--json", as_json);

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("left", input)->required();
  iso->add_option("right", second)->required();
  iso->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "Census of po-semirings of one order");
  enumerate->add_option("--order", order, "Order n")->required()->check(CLI::Range(2, 6));
  enumerate->add_option("--mode", mode, "fast or naive")->check(CLI::IsMember({"fast", "naive"}));
  enumerate->add_option("--emit-dir", emit_dir, "Write one psr file per class");
  enumerate->add_flag("--json", as_json);

  auto* ring = app.add_subcommand("ring", "Finite commutative rings and their ideal po-semirings");
  ring->add_option("op", op, "ideals|semiring|ag|zdgraph|radicals")
      ->required()
      ->check(CLI::IsMember({"ideals", "semiring", "ag", "zdgraph", "radicals"}));
  ring->add_option("ring", second, "zn:N, zpx:p:c1:c0, prod(a,b) or a ring file")->required();
  ring->add_flag("--shape", shape_only, "Print only the shape line (ag, zdgraph)");
  ring->add_option("--dot", dot, "Write a DOT file (ag, zdgraph)");
  ring->add_option("-o,--output", out_path, "psr file to write (semiring)");
  ring->add_flag("--json", as_json);

  auto* theorems = app.add_subcommand("theorems", "Run the theorem catalog over a corpus");
  theorems->add_option("--corpus", corpus, "census:<n>, grid, files:<dir>, rings:default; join with '+'");
  theorems->add_option("--check", checks, "Comma-separated check ids or 'all'");
  theorems->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));
  theorems->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Output o{as_json};
  try {
    if (*verify) return cmd_verify(input, o);
    if (*analyze) return cmd_analyze(input, o);
    if (*graph) return cmd_graph(input, shape_only, dot, o);
    if (*cons) return cmd_construct(input, out_path, o);
    if (*prod) return cmd_product(input, second, out_path, o);
    if (*iso) return cmd_iso(input, second, o);
    if (*enumerate) return cmd_enumerate(order, mode, emit_dir, o);
    if (*ring) return cmd_ring(op, second, shape_only, dot, out_path, o);
    if (*theorems) return cmd_theorems(corpus, checks, report, o);
  } catch (const Error& e) {
    std::cerr << "posr: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "posr: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
