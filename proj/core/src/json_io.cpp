#include "cyltn/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cyltn {

namespace {

// Emission uses ordered_json so keys appear exactly in insertion order;
// parsing uses the plain variant since key order carries no meaning there.
using ojson = nlohmann::ordered_json;
using pjson = nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

pjson parse_document(const std::string& text) {
  try {
    return pjson::parse(text);
  } catch (const pjson::exception& e) {
    bad(std::string("not parseable: ") + e.what());
  }
}

// Exactly the listed keys, no extras, all present.
void require_shape(const pjson& obj, const char* what,
                   std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(std::string(what) + " must be a JSON object");
  for (const char* k : keys) {
    if (!obj.contains(k))
      bad(std::string(what) + " is missing key \"" + k + "\"");
  }
  if (obj.size() != keys.size()) {
    for (const auto& item : obj.items()) {
      bool known = false;
      for (const char* k : keys) known = known || item.key() == k;
      if (!known)
        bad(std::string(what) + " has unexpected key \"" + item.key() + "\"");
    }
  }
}

long get_long(const pjson& v, const char* what) {
  if (!v.is_number_integer())
    bad(std::string(what) + " must be a JSON integer");
  return v.get<long>();
}

std::vector<long> get_long_array(const pjson& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be a JSON array");
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(get_long(item, what));
  return out;
}

Rational get_rational(const pjson& v, const char* what) {
  if (!v.is_string())
    bad(std::string(what) + " must be a rational rendered as a string");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

// Degree keys are canonical decimal integers: no sign on zero, no leading
// zeros, optional leading minus.
long parse_degree(const std::string& s) {
  std::string digits = s;
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  if (digits.empty()) bad("degree key \"" + s + "\" is not an integer");
  for (char c : digits)
    if (c < '0' || c > '9') bad("degree key \"" + s + "\" is not an integer");
  if (digits.size() > 1 && digits[0] == '0')
    bad("degree key \"" + s + "\" has a leading zero");
  if (negative && digits == "0") bad("degree key \"-0\" is not canonical");
  try {
    return std::stol(s);
  } catch (const std::out_of_range&) {
    bad("degree key \"" + s + "\" is out of range");
  }
}

ojson laurent_to_ojson(const LaurentPoly& p) {
  ojson cell = ojson::object();
  for (const auto& [degree, coeff] : p.terms())
    cell[std::to_string(degree)] = rational_to_string(coeff);
  return cell;
}

}  // namespace

std::string to_json(const LoopMatrix& m) {
  ojson root;
  root["n"] = m.n();
  root["m"] = m.m();
  ojson rows = ojson::array();
  for (long i = 1; i <= m.n(); ++i) {
    ojson row = ojson::array();
    for (long j = 1; j <= m.m(); ++j) row.push_back(laurent_to_ojson(m.entry(i, j)));
    rows.push_back(std::move(row));
  }
  root["entries"] = std::move(rows);
  return root.dump();
}

std::string to_json(const DenseMatrix& m) {
  ojson root;
  root["rows"] = m.rows();
  root["cols"] = m.cols();
  ojson rows = ojson::array();
  for (long i = 1; i <= m.rows(); ++i) {
    ojson row = ojson::array();
    for (long j = 1; j <= m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  root["entries"] = std::move(rows);
  return root.dump();
}

std::string to_json(const CylNetwork& net) {
  ojson root;
  root["vertices"] = net.vertex_count();
  root["sources"] = net.sources();
  root["sinks"] = net.sinks();
  ojson edges = ojson::array();
  for (const Edge& e : net.edges()) {
    ojson item;
    item["tail"] = e.tail;
    item["head"] = e.head;
    item["weight"] = rational_to_string(e.weight);
    item["hcross"] = e.hcross;
    edges.push_back(std::move(item));
  }
  root["edges"] = std::move(edges);
  return root.dump();
}

std::string to_json(const MinorWitness& w) {
  ojson root;
  root["rows"] = w.rows;
  root["cols"] = w.cols;
  root["value"] = rational_to_string(w.value);
  return root.dump();
}

LoopMatrix loop_matrix_from_json(const std::string& text) {
  const pjson root = parse_document(text);
  require_shape(root, "loop matrix", {"n", "m", "entries"});
  const long n = get_long(root["n"], "\"n\"");
  const long m = get_long(root["m"], "\"m\"");
  if (n < 1 || m < 1) bad("loop matrix dimensions must be positive");
  const pjson& entries = root["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != n)
    bad("\"entries\" must be an array of n rows");
  LoopMatrix out(n, m);
  for (long i = 0; i < n; ++i) {
    const pjson& row = entries[i];
    if (!row.is_array() || static_cast<long>(row.size()) != m)
      bad("every row of \"entries\" must be an array of m cells");
    for (long j = 0; j < m; ++j) {
      const pjson& cell = row[j];
      if (!cell.is_object())
        bad("every matrix cell must be an object of degree/coefficient pairs");
      LaurentPoly p;
      for (const auto& item : cell.items()) {
        const long degree = parse_degree(item.key());
        p.add_term(get_rational(item.value(), "coefficient"), degree);
      }
      out.set_entry(i + 1, j + 1, p);
    }
  }
  return out;
}

DenseMatrix dense_matrix_from_json(const std::string& text) {
  const pjson root = parse_document(text);
  require_shape(root, "dense matrix", {"rows", "cols", "entries"});
  const long rows = get_long(root["rows"], "\"rows\"");
  const long cols = get_long(root["cols"], "\"cols\"");
  if (rows < 0 || cols < 0) bad("dense matrix dimensions must be nonnegative");
  const pjson& entries = root["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != rows)
    bad("\"entries\" must be an array of \"rows\" rows");
  DenseMatrix out(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const pjson& row = entries[i];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      bad("every row of \"entries\" must be an array of \"cols\" values");
    for (long j = 0; j < cols; ++j)
      out.set(i + 1, j + 1, get_rational(row[j], "entry"));
  }
  return out;
}

CylNetwork network_from_json(const std::string& text) {
  const pjson root = parse_document(text);
  require_shape(root, "network", {"vertices", "sources", "sinks", "edges"});
  const long vertices = get_long(root["vertices"], "\"vertices\"");
  std::vector<long> sources = get_long_array(root["sources"], "\"sources\"");
  std::vector<long> sinks = get_long_array(root["sinks"], "\"sinks\"");
  const pjson& edge_list = root["edges"];
  if (!edge_list.is_array()) bad("\"edges\" must be a JSON array");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& item : edge_list) {
    require_shape(item, "edge", {"tail", "head", "weight", "hcross"});
    edges.push_back(Edge{get_long(item["tail"], "\"tail\""),
                         get_long(item["head"], "\"head\""),
                         get_rational(item["weight"], "\"weight\""),
                         get_long(item["hcross"], "\"hcross\"")});
  }
  // The constructor enforces the structural contract (ids in range, roles
  // disjoint, acyclic) and reports violations as std::invalid_argument.
  return CylNetwork(vertices, std::move(sources), std::move(sinks),
                    std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cyltn
