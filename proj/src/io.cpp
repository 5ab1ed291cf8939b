#include "primegraph/io.hpp"

#include <string>

#include "primegraph/error.hpp"
#include "primegraph/structure.hpp"

namespace primegraph {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError(base + pos, "truncated record");
  if (!printable(text[pos])) throw ParseError(base + pos, "byte outside 63..126");
  return text[pos] - kBias;
}

SimpleGraph parse_record(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError(base + pos, "empty record");

  // Size header: n, or '~' + 18 bits, or '~~' + 36 bits.
  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, pos, base));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 2 + i, base));
    pos += 8;
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 1 + i, base));
    pos += 4;
  }
  if (n == 0) throw ParseError(base, "graph with no vertices");
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw GraphError(ErrorCode::SizeExceeded, std::to_string(n) + " vertices, limit is 64");

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError(base + text.size(), "truncated record");
  if (text.size() - pos > bytes) throw ParseError(base + pos + bytes, "trailing bytes");

  SimpleGraph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6, base);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text, pos + bytes - 1, base);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError(base + pos + bytes - 1, "nonzero padding bits");
  }
  return g;
}

Json bridge_json(const std::optional<BridgeSpec>& b) {
  if (!b) return nullptr;
  return Json{{"m", b->m}, {"n", b->n}, {"bridge", {b->bridge.u, b->bridge.v}}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return parse_record(text, 0);
}

std::string serialize_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<SimpleGraph> parse_graph6_lines(std::string_view text) {
  std::vector<SimpleGraph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_record(line, start));
    start = end + 1;
  }
  return out;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

Json classification_json(const SimpleGraph& g, const Classification& c) {
  Json j;
  j["graph6"] = serialize_graph6(g);
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["is_prime"] = c.is_prime;
  j["is_pdmpg"] = c.is_pdmpg;
  j["is_mcpg"] = c.is_mcpg;
  j["is_mpg"] = c.is_mpg;
  j["bridge"] = bridge_json(c.bridge);
  j["complement_chromatic"] = optional_json(c.complement_chromatic);
  j["connected"] = c.diameter.has_value();
  j["diameter"] = optional_json(c.diameter);
  j["hamiltonian"] = optional_json(c.hamiltonian);
  if (c.is_prime) {
    j["diameter_class"] = std::string(to_string(classify_diameter(g)));
    if (g.order() <= 16) j["non_hamiltonian_reason"] = std::string(to_string(is_hamiltonian_prime(g).reason));
  }
  return j;
}

Json enumeration_report_json(const EnumerationReport& report) {
  Json levels = Json::array();
  for (const LevelReport& l : report.levels) {
    const CountingDeltas& d = l.deltas;
    Json level;
    level["k"] = l.k;
    level["counts"] = {{"all", l.graphs},
                       {"prime", l.prime},
                       {"mpg", l.mpg},
                       {"mcpg", l.mcpg},
                       {"pdmpg", l.pdmpg},
                       {"max_tf3c", l.max_tf3c},
                       {"max_tf3c_chromatic3", l.max_tf3c_chromatic3},
                       {"max_triangle_free", l.max_triangle_free}};
    level["deltas"] = {{"pdmpg_minus_mpg", {{"measured", d.pdmpg_minus_mpg},
                                            {"measured_min2", d.pdmpg_minus_mpg_min2},
                                            {"predicted", d.predicted_pdmpg_minus_mpg},
                                            {"matches", d.pdmpg_matches()},
                                            {"matches_min2", d.pdmpg_min2_matches()}}},
                       {"mcpg_minus_mpg", {{"measured", d.mcpg_minus_mpg},
                                           {"predicted", optional_json(d.predicted_mcpg_minus_mpg)},
                                           {"matches", d.mcpg_matches()}}}};
    level["bijection"] = l.bijection;
    level["discrepancies"] = l.discrepancies;
    level["violations"] = l.violations;
    levels.push_back(std::move(level));
  }
  return Json{{"invariants_hold", report.invariants_hold()}, {"levels", std::move(levels)}};
}

Json make_document(std::string_view command, Json payload, std::optional<std::uint64_t> seed,
                   std::optional<double> runtime_seconds) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["command"] = command;
  doc["seed"] = seed ? Json(*seed) : Json();
  if (runtime_seconds) doc["runtime_seconds"] = *runtime_seconds;
  doc["result"] = std::move(payload);
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace primegraph
