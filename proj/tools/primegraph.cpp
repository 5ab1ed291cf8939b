// primegraph: command-line front end to the library.
//
// Exit status: 0 ok, 1 a verification suite failed, 2 malformed input or
// usage, 3 size limit exceeded, 4 any other rejected parameter.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "primegraph/classify.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/error.hpp"
#include "primegraph/generate.hpp"
#include "primegraph/io.hpp"
#include "primegraph/reseminant.hpp"
#include "primegraph/verify.hpp"

namespace pg = primegraph;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kMalformed = 2, kTooLarge = 3, kRejected = 4 };

struct Options {
  bool timing = false;
  int jobs = 1;

  std::string input;

  int k = 0;
  std::string cls;
  std::string report_path;

  std::string base = "Dhc";
  int added = 0;

  std::string kind;
  int m = 0;
  int n = 0;
  std::string graph;
  int vertex = 0;
  std::string side = "large";

  std::string suite;
  int max_k = 0;

  std::string name = "G";
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// A path to an existing file, "-" for stdin, or an inline graph6 string.
std::vector<pg::SimpleGraph> read_graphs(const std::string& input) {
  if (input == "-") return pg::parse_graph6_lines(slurp(std::cin));
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream f(input, std::ios::binary);
    return pg::parse_graph6_lines(slurp(f));
  }
  return {pg::parse_graph6(input)};
}

pg::Json count_json(const pg::Count& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

pg::Json graph_json(const pg::SimpleGraph& g) {
  return {{"graph6", pg::serialize_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

int cmd_classify(const Options& o, pg::Json& out) {
  pg::Json records = pg::Json::array();
  for (const pg::SimpleGraph& g : read_graphs(o.input)) records.push_back(pg::classification_json(g, pg::classify(g)));
  out = std::move(records);
  return kOk;
}

int cmd_enumerate(const Options& o, pg::Json& out) {
  const auto cls = pg::parse_graph_class(o.cls);
  if (!cls) throw pg::GraphError(pg::ErrorCode::BadParams, "unknown class " + o.cls);
  const auto forms = pg::enumerate_class(o.k, *cls, o.jobs);
  pg::Json graphs = pg::Json::array();
  for (const pg::CanonicalForm& f : forms) graphs.push_back(pg::serialize_graph6(f.to_graph()));
  out = {{"k", o.k}, {"class", pg::to_string(*cls)}, {"count", forms.size()}, {"graphs", std::move(graphs)}};
  if (!o.report_path.empty()) {
    const pg::Json doc = pg::make_document("enumerate-report", pg::enumeration_report_json(
                                                                   pg::build_enumeration_report(o.k, o.jobs)));
    std::ofstream f(o.report_path, std::ios::binary);
    if (!f) throw pg::GraphError(pg::ErrorCode::BadParams, "cannot write " + o.report_path);
    f << pg::dump_document(doc);
  }
  return kOk;
}

int cmd_count_reseminant(const Options& o, pg::Json& out) {
  const pg::SimpleGraph base = pg::parse_graph6(o.base);
  out = {{"base", pg::serialize_graph6(base)},
         {"added", o.added},
         {"total_vertices", base.order() + o.added},
         {"count", count_json(pg::count_orbits(base, o.added))}};
  if (pg::are_isomorphic(base, pg::SimpleGraph::cycle(5))) {
    out["closed_form"] = count_json(pg::closed_form_c5(o.added));
    out["bracelet_form"] = count_json(pg::bracelet_form(base.order() + o.added));
  }
  return kOk;
}

int cmd_generate(const Options& o, pg::Json& out) {
  pg::SimpleGraph g(1);
  if (o.kind == "bridge") {
    g = pg::bridge_graph(o.m, o.n);
  } else if (o.kind == "grow-bridge") {
    g = pg::grow_bridge(pg::bridge_spec(o.m, o.n), o.side == "small" ? pg::BridgeSide::Small : pg::BridgeSide::Large);
  } else if (o.kind == "duplicate") {
    g = pg::vertex_duplication(pg::parse_graph6(o.graph), o.vertex);
  } else if (o.kind == "bridge-to-mpg") {
    g = pg::bridge_to_mpg(pg::bridge_spec(o.m, o.n));
  } else {
    throw pg::GraphError(pg::ErrorCode::BadParams, "unknown kind " + o.kind);
  }
  out = graph_json(g);
  out["kind"] = o.kind;
  return kOk;
}

int cmd_verify(const Options& o, pg::Json& out) {
  const pg::SuiteResult r = pg::run_suite(o.suite, o.max_k, o.jobs);
  out = pg::suite_json(r);
  return r.passed() ? kOk : kAssertion;
}

int status_of(pg::ErrorCode code) {
  switch (code) {
    case pg::ErrorCode::MalformedInput: return kMalformed;
    case pg::ErrorCode::SizeExceeded: return kTooLarge;
    default: return kRejected;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime graphs of solvable groups"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Record wall-clock runtime in the report");

  auto* classify = app.add_subcommand("classify", "Classify graph6 input (file, '-' for stdin, or inline string)");
  classify->add_option("input", o.input, "graph6 source")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List a graph class on k vertices up to isomorphism");
  enumerate->add_option("k", o.k, "Vertex count")->required();
  enumerate->add_option("class", o.cls, "ALL, PRIME, MPG, MCPG, PDMPG or MAX_TF3C")->required();
  enumerate->add_option("--report", o.report_path, "Write the enumeration report for 1..k to this file");
  enumerate->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count-reseminant", "Count reseminant graphs over a base graph");
  count->add_option("--base", o.base, "Base graph in graph6 (default: the 5-cycle)");
  count->add_option("--added", o.added, "Number of duplicated vertices")->required();

  auto* generate = app.add_subcommand("generate", "Build a graph from the constructions");
  generate->add_option("--kind", o.kind, "bridge, grow-bridge, duplicate or bridge-to-mpg")->required();
  generate->add_option("--m", o.m, "Larger clique size");
  generate->add_option("--n", o.n, "Smaller clique size");
  generate->add_option("--side", o.side, "Clique to grow for grow-bridge: large or small")
      ->check(CLI::IsMember({"large", "small"}));
  generate->add_option("--graph", o.graph, "graph6 input for duplicate");
  generate->add_option("--vertex", o.vertex, "Vertex to duplicate");

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("--suite", o.suite, "diameter, hamilton, selfcomp, bijection, counting or generation")->required();
  verify->add_option("--max-k", o.max_k, "Largest vertex count")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("dot", "Export graph6 input as DOT");
  dot->add_option("input", o.input, "graph6 source")->required();
  dot->add_option("--name", o.name, "Graph name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (dot->parsed()) {
      const auto graphs = read_graphs(o.input);
      for (std::size_t i = 0; i < graphs.size(); ++i)
        std::cout << pg::to_dot(graphs[i], graphs.size() == 1 ? o.name : o.name + std::to_string(i));
      return kOk;
    }
    const auto start = std::chrono::steady_clock::now();
    pg::Json result;
    int status = kOk;
    std::string command;
    if (classify->parsed()) {
      command = "classify";
      status = cmd_classify(o, result);
    } else if (enumerate->parsed()) {
      command = "enumerate";
      status = cmd_enumerate(o, result);
    } else if (count->parsed()) {
      command = "count-reseminant";
      status = cmd_count_reseminant(o, result);
    } else if (generate->parsed()) {
      command = "generate";
      status = cmd_generate(o, result);
    } else {
      command = "verify";
      status = cmd_verify(o, result);
    }
    std::optional<double> runtime;
    if (o.timing) runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << pg::dump_document(pg::make_document(command, std::move(result), std::nullopt, runtime));
    return status;
  } catch (const pg::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return status_of(e.code());
  }
}
