#include "semitsp/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "semitsp/semimetric.hpp"

namespace semitsp {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + reason);
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(0, where + " must be a number");
  return j.get<double>();
}

void check_declared(const CompleteWeightedGraph& g, const DeclaredConstants& declared) {
  if (!declared.beta && !declared.gamma) return;
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); };
  if (declared.beta) {
    const double beta = compute_beta(g).beta;
    if (!close(beta, *declared.beta)) {
      throw Error(Errc::declared_constant_mismatch,
                  "declared beta " + format_double(*declared.beta) + " but recomputed " + format_double(beta));
    }
  }
  if (declared.gamma) {
    const double gamma = compute_gamma(g).gamma;
    if (!close(gamma, *declared.gamma)) {
      throw Error(Errc::declared_constant_mismatch,
                  "declared gamma " + format_double(*declared.gamma) + " but recomputed " + format_double(gamma));
    }
  }
}

InstanceFile parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  if (!doc.is_object()) parse_fail(1, "instance must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) parse_fail(1, "missing integer field \"n\"");
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw < 1 || n_raw > 100000) parse_fail(1, "\"n\" out of range");
  const int n = static_cast<int>(n_raw);
  const bool has_matrix = doc.contains("matrix");
  const bool has_edges = doc.contains("edges");
  if (has_matrix == has_edges) parse_fail(1, "exactly one of \"matrix\" or \"edges\" is required");

  InstanceFile inst{"", CompleteWeightedGraph(SquareMatrix(1)), {}};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_fail(1, "\"name\" must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (doc.contains("beta")) inst.declared.beta = number_at(doc["beta"], "\"beta\"");
  if (doc.contains("gamma")) inst.declared.gamma = number_at(doc["gamma"], "\"gamma\"");

  if (has_matrix) {
    const json& rows = doc["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) parse_fail(1, "\"matrix\" must have n rows");
    SquareMatrix w(n);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        parse_fail(1, "matrix row " + std::to_string(i) + " must have n entries");
      }
      for (int j = 0; j < n; ++j) {
        w(i, j) = number_at(row[static_cast<std::size_t>(j)], "matrix entry");
      }
    }
    CompleteWeightedGraph g(std::move(w));
    check_declared(g, inst.declared);
    inst.graph = std::move(g);
    return inst;
  }

  if (inst.declared.beta || inst.declared.gamma) parse_fail(1, "declared beta/gamma require the matrix form");
  const json& list = doc["edges"];
  if (!list.is_array()) parse_fail(1, "\"edges\" must be an array");
  std::vector<WeightedEdge> edges;
  edges.reserve(list.size());
  for (const json& e : list) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      parse_fail(1, "each edge must be [u, v, w] with integer u, v");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), number_at(e[2], "edge weight")});
  }
  inst.graph = WeightedGraph(n, std::move(edges));
  return inst;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

InstanceFile parse_tsplib(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string name, type, weight_type, weight_format;
  int n = -1;
  bool in_section = false;
  std::vector<double> values;
  std::size_t section_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (in_section) {
      const bool numeric = std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-' ||
                           line[0] == '+' || line[0] == '.';
      if (numeric) {
        std::istringstream nums(line);
        std::string tok;
        while (nums >> tok) {
          char* end = nullptr;
          const double v = std::strtod(tok.c_str(), &end);
          if (end == tok.c_str() || *end != '\0') parse_fail(line_no, "bad number '" + tok + "'");
          values.push_back(v);
        }
        continue;
      }
      in_section = false;
    }
    if (line == "EOF") break;
    std::string key = line, value;
    if (auto colon = line.find(':'); colon != std::string::npos) {
      key = trim(std::string_view(line).substr(0, colon));
      value = trim(std::string_view(line).substr(colon + 1));
    }
    if (key == "NAME") {
      name = value;
    } else if (key == "TYPE") {
      type = value;
    } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE") {
      // informational
    } else if (key == "DIMENSION") {
      char* end = nullptr;
      const long dim = std::strtol(value.c_str(), &end, 10);
      if (end == value.c_str() || *end != '\0' || dim < 1) parse_fail(line_no, "bad DIMENSION");
      n = static_cast<int>(dim);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = value;
    } else if (key == "EDGE_WEIGHT_SECTION") {
      in_section = true;
      section_line = line_no;
    } else {
      parse_fail(line_no, "unsupported TSPLIB keyword '" + key + "'");
    }
  }
  if (type != "TSP") parse_fail(1, "TYPE must be TSP");
  if (weight_type != "EXPLICIT") parse_fail(1, "EDGE_WEIGHT_TYPE must be EXPLICIT");
  if (weight_format != "FULL_MATRIX") parse_fail(1, "EDGE_WEIGHT_FORMAT must be FULL_MATRIX");
  if (n < 1) parse_fail(1, "missing DIMENSION");
  if (section_line == 0) parse_fail(line_no, "missing EDGE_WEIGHT_SECTION");
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (values.size() != expected) {
    parse_fail(section_line, "EDGE_WEIGHT_SECTION has " + std::to_string(values.size()) + " values, expected " +
                                 std::to_string(expected));
  }
  SquareMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = i == j ? 0.0 : values[static_cast<std::size_t>(i) * n + j];
  }
  return InstanceFile{name, CompleteWeightedGraph(std::move(w)), {}};
}

}  // namespace

int InstanceFile::size() const {
  return std::visit([](const auto& g) { return g.size(); }, graph);
}

InstanceFile parse_instance(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) parse_fail(1, "empty input");
  return *first == '{' ? parse_json(text) : parse_tsplib(text);
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "line 0: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string serialize_json(const CompleteWeightedGraph& g, std::string_view name, const DeclaredConstants& declared) {
  const int n = g.size();
  std::ostringstream out;
  out << "{\n";
  if (!name.empty()) out << "  \"name\": " << json(std::string(name)).dump() << ",\n";
  out << "  \"n\": " << n << ",\n";
  if (declared.beta) out << "  \"beta\": " << format_double(*declared.beta) << ",\n";
  if (declared.gamma) out << "  \"gamma\": " << format_double(*declared.gamma) << ",\n";
  out << "  \"matrix\": [\n";
  for (int i = 0; i < n; ++i) {
    out << "    [";
    for (int j = 0; j < n; ++j) out << (j ? ", " : "") << format_double(g.weight(i, j));
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string serialize_json(const WeightedGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "{\n";
  if (!name.empty()) out << "  \"name\": " << json(std::string(name)).dump() << ",\n";
  out << "  \"n\": " << g.size() << ",\n";
  out << "  \"edges\": [\n";
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out << "    [" << edges[k].u << ", " << edges[k].v << ", " << format_double(edges[k].w) << "]"
        << (k + 1 < edges.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_params, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(Errc::invalid_params, "write to '" + path.string() + "' failed");
}

}  // namespace semitsp
