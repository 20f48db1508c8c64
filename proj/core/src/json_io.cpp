#include "grassfrieze/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grassfrieze {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::kInputError, "malformed JSON");
  return j;
}

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump();
}

Int int_field(const json& j, const std::string& where) {
  require(j.is_string(), Errc::kInputError,
          where + ": integers must be decimal strings");
  return int_from_string(j.get<std::string>());
}

std::vector<int> subset_field(const json& j, const std::string& where) {
  require(j.is_array(), Errc::kInputError, where + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), Errc::kInputError,
            where + ": subset entries are plain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string join_key(const std::vector<int>& subset) {
  std::ostringstream out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out << ',';
    out << subset[i];
  }
  return out.str();
}

std::vector<int> split_key(const std::string& key) {
  std::vector<int> out;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    require(!part.empty(), Errc::kInputError, "bad subset key '" + key + "'");
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      fail(Errc::kInputError, "bad subset key '" + key + "'");
    }
  }
  require(!out.empty(), Errc::kInputError, "bad subset key '" + key + "'");
  return out;
}

}  // namespace

std::string matrix_to_json(const Matrix& m, bool pretty) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return dump(rows, pretty);
}

Matrix matrix_from_json(const std::string& text) {
  json j = parse(text);
  require(j.is_array() && !j.empty(), Errc::kInputError,
          "matrix: expected a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  require(j[0].is_array() && !j[0].empty(), Errc::kInputError,
          "matrix: expected arrays of entries");
  int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    require(j[static_cast<std::size_t>(i)].is_array() &&
                static_cast<int>(j[static_cast<std::size_t>(i)].size()) == cols,
            Errc::kInputError, "matrix: ragged rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = int_field(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                             "matrix entry");
  }
  return m;
}

std::string specialization_to_json(const Specialization& s, bool pretty) {
  json values = json::object();
  for (const auto& subset : all_subsets(s.n(), s.k()))
    values[join_key(subset)] = int_to_string(s.at(subset));
  json j{{"k", s.k()}, {"n", s.n()}, {"values", std::move(values)}};
  return dump(j, pretty);
}

Specialization specialization_from_json(const std::string& text) {
  json j = parse(text);
  require(j.is_object() && j.contains("k") && j.contains("n") &&
              j.contains("values"),
          Errc::kInputError, "specialization: need k, n and values");
  require(j["k"].is_number_integer() && j["n"].is_number_integer(),
          Errc::kInputError, "specialization: k and n are plain integers");
  int k = j["k"].get<int>();
  int n = j["n"].get<int>();
  require(n >= 1 && k >= 1 && k <= n, Errc::kInputError,
          "specialization: need 1 <= k <= n");
  require(j["values"].is_object(), Errc::kInputError,
          "specialization: values must be an object");
  std::map<std::vector<int>, Int> values;
  for (const auto& [key, value] : j["values"].items()) {
    std::vector<int> subset = split_key(key);
    KSubset checked(n, subset);  // throws on malformed keys
    require(checked.k() == k, Errc::kInputError,
            "specialization: key '" + key + "' has the wrong size");
    require(values.emplace(subset, int_field(value, "value at " + key)).second,
            Errc::kInputError, "specialization: duplicate key '" + key + "'");
  }
  // Missing keys are an input error, never implicitly zero.
  return Specialization::from_map(n, k, values);
}

std::string cluster_to_json(const ClusterAssignment& c, bool pretty) {
  json items = json::array();
  for (const auto& [subset, value] : c.items)
    items.push_back(json{{"subset", subset}, {"value", int_to_string(value)}});
  json j{{"k", c.k}, {"n", c.n}, {"cluster", std::move(items)}};
  return dump(j, pretty);
}

ClusterAssignment cluster_from_json(const std::string& text) {
  json j = parse(text);
  require(j.is_object() && j.contains("k") && j.contains("n") &&
              j.contains("cluster"),
          Errc::kInputError, "cluster: need k, n and cluster");
  ClusterAssignment c;
  require(j["k"].is_number_integer() && j["n"].is_number_integer(),
          Errc::kInputError, "cluster: k and n are plain integers");
  c.k = j["k"].get<int>();
  c.n = j["n"].get<int>();
  require(c.n >= 1 && c.k >= 1 && c.k <= c.n, Errc::kInputError,
          "cluster: need 1 <= k <= n");
  require(j["cluster"].is_array(), Errc::kInputError,
          "cluster: expected an array of assignments");
  for (const auto& item : j["cluster"]) {
    require(item.is_object() && item.contains("subset") && item.contains("value"),
            Errc::kInputError, "cluster: each item needs subset and value");
    std::vector<int> subset = subset_field(item["subset"], "cluster subset");
    KSubset checked(c.n, subset);
    require(checked.k() == c.k, Errc::kInputError,
            "cluster: subset has the wrong size");
    c.items.emplace_back(subset, int_field(item["value"], "cluster value"));
  }
  return c;
}

Triangulation triangulation_from_text(int n, const std::string& diagonals) {
  std::vector<std::pair<int, int>> diags;
  std::istringstream in(diagonals);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    auto dash = part.find('-');
    require(dash != std::string::npos, Errc::kInputError,
            "diagonal '" + part + "' is not of the form i-j");
    try {
      int a = std::stoi(part.substr(0, dash));
      int b = std::stoi(part.substr(dash + 1));
      diags.emplace_back(a, b);
    } catch (const std::exception&) {
      fail(Errc::kInputError, "diagonal '" + part + "' is not of the form i-j");
    }
  }
  return Triangulation(n, std::move(diags));
}

std::string extension_trace_to_json(const Matrix& input,
                                    const ExtensionTrace& trace, bool pretty) {
  json columns = json::array();
  for (const auto& col : trace.final.columns) {
    json c = json::array();
    for (const Int& v : col) c.push_back(int_to_string(v));
    columns.push_back(std::move(c));
  }
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json vec = json::array();
    for (const Int& v : step.vector) vec.push_back(int_to_string(v));
    steps.push_back(json{{"insert_after", step.insert_after},
                         {"vector", std::move(vec)},
                         {"d_before", int_to_string(step.d_before)},
                         {"d_after", int_to_string(step.d_after)}});
  }
  json j{{"k", trace.final.k},
         {"input", json::parse(matrix_to_json(input))},
         {"columns", std::move(columns)},
         {"steps", std::move(steps)},
         {"embedding", trace.embedding}};
  return dump(j, pretty);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::kInputError, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::kInputError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace grassfrieze
