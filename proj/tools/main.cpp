#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "grassfrieze/arrangements.hpp"
#include "grassfrieze/frieze.hpp"
#include "grassfrieze/json_io.hpp"
#include "grassfrieze/realize.hpp"
#include "grassfrieze/volume_one.hpp"

// Exit codes: 0 success / property holds, 1 property fails (witness on
// stdout), 2 input or format error, 3 resource limit.

namespace {

using json = nlohmann::json;
using namespace grassfrieze;

struct Options {
  bool pretty = false;
  long seed = 0;    // reserved for randomized sweeps
  long limit = 64;  // resource guard: largest polygon size accepted
};

void emit(const json& j, const Options& opt) {
  std::cout << (opt.pretty ? j.dump(2) : j.dump()) << "\n";
}

json violations_to_json(const std::vector<RelationViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back(json{{"i_word", v.i_word},
                       {"j_word", v.j_word},
                       {"sum", int_to_string(v.value)}});
    if (out.size() >= 16) break;  // enough witnesses to act on
  }
  return out;
}

json verdict_to_json(const VolumeOneVerdict& v) {
  json factors = json::array();
  for (const auto& [q, d] : v.prime_factors)
    factors.push_back(json{{"q", int_to_string(q)}, {"d", d}});
  json out{{"exists", v.exists},
           {"epsilon", int_to_string(v.epsilon)},
           {"prime_factors", std::move(factors)}};
  if (v.cond1_failure)
    out["failed_condition"] =
        json{{"condition", 1}, {"index", v.cond1_failure->index}};
  if (v.cond2_failure)
    out["failed_condition"] = json{{"condition", 2},
                                   {"q", int_to_string(v.cond2_failure->q)},
                                   {"witness", v.cond2_failure->witness}};
  return out;
}

int cmd_check(const std::string& spec_path, const Options& opt) {
  Specialization s = specialization_from_json(read_file(spec_path));
  auto violations = check_pluecker_relations(s);
  if (violations.empty()) {
    emit(json{{"consistent", true}}, opt);
    return 0;
  }
  emit(json{{"consistent", false}, {"violations", violations_to_json(violations)}},
       opt);
  return 1;
}

int cmd_realize(const std::string& spec_path, const std::string& out_path,
                const Options& opt) {
  Specialization s = specialization_from_json(read_file(spec_path));
  Matrix m = realize(s);
  std::string payload = matrix_to_json(m, opt.pretty);
  if (!out_path.empty()) write_file(out_path, payload + "\n");
  std::cout << payload << "\n";
  return 0;
}

int cmd_volume_one_check(const std::string& spec_path, const Options& opt) {
  Specialization s = specialization_from_json(read_file(spec_path));
  auto violations = check_pluecker_relations(s);
  require(violations.empty(), Errc::kInconsistentSpecialization,
          "input violates the exchange relations");
  VolumeOneVerdict v = decide_volume_one(s);
  emit(verdict_to_json(v), opt);
  return v.exists ? 0 : 1;
}

int cmd_volume_one_construct(const std::string& spec_path,
                             const std::string& out_path, const Options& opt) {
  Specialization s = specialization_from_json(read_file(spec_path));
  auto violations = check_pluecker_relations(s);
  require(violations.empty(), Errc::kInconsistentSpecialization,
          "input violates the exchange relations");
  VolumeOneVerdict v = decide_volume_one(s);
  if (!v.exists) {
    emit(verdict_to_json(v), opt);
    return 1;
  }
  Matrix m = construct_volume_one(s);
  std::string payload = matrix_to_json(m, opt.pretty);
  if (!out_path.empty()) write_file(out_path, payload + "\n");
  std::cout << payload << "\n";
  return 0;
}

int cmd_frieze_cc(int n, const std::string& diagonals,
                  const std::string& out_path, const Options& opt) {
  require(n <= opt.limit, Errc::kResourceLimit,
          "polygon size exceeds --limit");
  Triangulation t = triangulation_from_text(n, diagonals);
  Specialization s = cc_frieze(t);
  std::string payload = specialization_to_json(s, opt.pretty);
  if (!out_path.empty()) write_file(out_path, payload + "\n");
  if (opt.pretty) {
    // human mode: the classical table layout
    auto table = frieze_table(s);
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? " " : "") << row[c].get_str();
      std::cout << "\n";
    }
  } else {
    std::cout << payload << "\n";
  }
  return 0;
}

int cmd_frieze_extend(const std::string& matrix_path,
                      const std::string& trace_path, const Options& opt) {
  Matrix m = matrix_from_json(read_file(matrix_path));
  ExtensionTrace trace = extend_to_slk(m);
  std::string payload = extension_trace_to_json(m, trace, opt.pretty);
  if (!trace_path.empty()) write_file(trace_path, payload + "\n");
  json summary{{"steps", trace.steps.size()},
               {"final_length", trace.final.columns.size()},
               {"embedding", trace.embedding}};
  emit(summary, opt);
  return 0;
}

int cmd_frieze_triangle(long a, long b, long c, const Options& opt) {
  bool ok = triangle_admissible(a, b, c);
  if (opt.pretty)
    std::cout << (ok ? "admissible\n" : "not admissible\n");
  else
    emit(json{{"admissible", ok}}, opt);
  return ok ? 0 : 1;
}

int cmd_frieze_subpolygon(const std::string& spec_path, const Options& opt) {
  Specialization s = specialization_from_json(read_file(spec_path));
  auto violations = check_pluecker_relations(s);
  require(violations.empty(), Errc::kInconsistentSpecialization,
          "input violates the exchange relations");
  SubpolygonResult r = subpolygon_admissible(s);
  json out{{"admissible", r.admissible}};
  if (r.witness.triangle) out["triangle"] = *r.witness.triangle;
  if (r.witness.prime) out["prime"] = int_to_string(*r.witness.prime);
  if (r.witness.subset) out["subset"] = *r.witness.subset;
  emit(out, opt);
  return r.admissible ? 0 : 1;
}

int cmd_frieze_oracle_triangles(int n_max, long label_max, long strict_max,
                                const Options& opt) {
  require(n_max <= opt.limit, Errc::kResourceLimit,
          "n-max exceeds --limit");
  require(n_max <= 12, Errc::kResourceLimit,
          "triangulation enumeration is guarded at n <= 12");
  std::set<std::array<long, 3>> collected;
  for (int n = 3; n <= n_max; ++n) {
    for (const auto& t : enumerate_triangulations(n)) {
      Specialization s = cc_frieze(t);
      for (const auto& triple : all_subsets(n, 3)) {
        std::array<long, 3> labels{
            s.at({triple[0], triple[1]}).get_si(),
            s.at({triple[0], triple[2]}).get_si(),
            s.at({triple[1], triple[2]}).get_si()};
        std::sort(labels.begin(), labels.end());
        if (labels[2] <= label_max) collected.insert(labels);
      }
    }
  }
  json bad_collected = json::array();
  for (const auto& t : collected)
    if (!triangle_admissible(t[0], t[1], t[2]))
      bad_collected.push_back(json::array({t[0], t[1], t[2]}));
  json unrealized = json::array();
  json unrealized_small = json::array();
  for (long a = 1; a <= label_max; ++a)
    for (long b = a; b <= label_max; ++b)
      for (long c = b; c <= label_max; ++c) {
        if (!triangle_admissible(a, b, c)) continue;
        if (collected.count({a, b, c})) continue;
        unrealized.push_back(json::array({a, b, c}));
        if (c <= strict_max)
          unrealized_small.push_back(json::array({a, b, c}));
      }
  json out{{"n_max", n_max},
           {"label_max", label_max},
           {"collected", collected.size()},
           {"non_admissible_collected", bad_collected},
           {"unrealized_admissible", unrealized},
           {"unrealized_small", unrealized_small}};
  emit(out, opt);
  return (bad_collected.empty() && unrealized_small.empty()) ? 0 : 1;
}

int cmd_arrangements_verify(const std::string& matrix_path,
                            const std::string& cluster_path,
                            const Options& opt) {
  Matrix m = matrix_from_json(read_file(matrix_path));
  ClusterAssignment c = cluster_from_json(read_file(cluster_path));
  auto r = verify_cluster_values(m, c);
  json mismatches = json::array();
  for (const auto& mm : r.mismatches)
    mismatches.push_back(json{{"subset", mm.subset},
                              {"expected", int_to_string(mm.expected)},
                              {"actual", int_to_string(mm.actual)}});
  auto nc = check_non_crossing(
      [&] {
        std::vector<std::vector<int>> subsets;
        for (const auto& [subset, value] : c.items) subsets.push_back(subset);
        return subsets;
      }(),
      c.n);
  emit(json{{"values_ok", r.ok},
            {"non_crossing", nc.ok},
            {"mismatches", mismatches}},
       opt);
  return (r.ok && nc.ok) ? 0 : 1;
}

int cmd_arrangements_lines(const std::string& matrix_path, const Options& opt) {
  Matrix m = matrix_from_json(read_file(matrix_path));
  LineSet lines = line_set(m);
  json normals = json::array();
  for (const auto& normal : lines.normals) {
    json vec = json::array();
    for (const Int& v : normal) vec.push_back(int_to_string(v));
    normals.push_back(std::move(vec));
  }
  emit(json{{"count", lines.normals.size()}, {"normals", std::move(normals)}},
       opt);
  return 0;
}

int cmd_arrangements_roots(const std::string& matrix_path,
                           const std::string& system_name, const Options& opt) {
  Matrix m = matrix_from_json(read_file(matrix_path));
  auto system = parse_root_system(system_name);
  require(system.has_value(), Errc::kUnknownSystem,
          "unknown root system '" + system_name + "'");
  bool ok = compare_positive_roots(m, *system);
  emit(json{{"system", system_name}, {"matches", ok}}, opt);
  return ok ? 0 : 1;
}

// fixtures: every shipped data file re-validated end to end
int cmd_fixtures_verify(const std::string& dir, const Options& opt) {
  namespace fs = std::filesystem;
  const std::vector<std::string> required = {
      "a3.json",       "b3.json",          "a16_3.json", "spec_333.json",
      "spec_222.json", "matrix_123_033.json", "matrix_110_033.json",
      "noncrossing_k3n7.json"};
  for (const auto& name : required)
    require(fs::exists(fs::path(dir) / name), Errc::kMissingFixture,
            "missing fixture '" + name + "' in '" + dir + "'");

  json report = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, json detail) {
    report.push_back(
        json{{"fixture", name}, {"pass", ok}, {"detail", std::move(detail)}});
    if (!ok) all_ok = false;
  };

  auto load = [&](const std::string& name) {
    return read_file((fs::path(dir) / name).string());
  };

  for (const std::string name : {"a3.json", "b3.json", "a16_3.json"}) {
    json j = json::parse(load(name));
    require(j.contains("matrix") && j.contains("cluster") && j.contains("expect"),
            Errc::kInputError, name + ": malformed fixture");
    Matrix m = matrix_from_json(j["matrix"].dump());
    ClusterAssignment c = cluster_from_json(j["cluster"].dump());
    auto values = verify_cluster_values(m, c);
    std::vector<std::vector<int>> subsets;
    for (const auto& [subset, value] : c.items) subsets.push_back(subset);
    bool non_crossing = check_non_crossing(subsets, c.n).ok;
    bool volumes_ok = true;
    for (int col = 0; col < m.cols(); ++col) {
      Matrix column(m.rows(), 1);
      for (int i = 0; i < m.rows(); ++i) column.at(i, 0) = m.at(i, col);
      if (volume(column) != 1) volumes_ok = false;
    }
    bool lines_ok = static_cast<long>(line_set(m).normals.size()) ==
                    j["expect"]["lines"].get<long>();
    bool roots_ok = true;
    if (j["expect"].contains("roots")) {
      auto system = parse_root_system(j["expect"]["roots"].get<std::string>());
      roots_ok = system && compare_positive_roots(m, *system);
    }
    record(name, values.ok && non_crossing && volumes_ok && lines_ok && roots_ok,
           json{{"values_ok", values.ok},
                {"non_crossing", non_crossing},
                {"column_volumes_one", volumes_ok},
                {"lines_ok", lines_ok},
                {"roots_ok", roots_ok}});
  }

  for (const std::string name : {"spec_333.json", "spec_222.json"}) {
    json j = json::parse(load(name));
    Specialization s = specialization_from_json(j["spec"].dump());
    bool consistent = check_pluecker_relations(s).empty();
    VolumeOneVerdict v = decide_volume_one(s);
    bool expect_exists = j["expect"]["volume_one_exists"].get<bool>();
    bool ok = consistent && v.exists == expect_exists &&
              int_to_string(v.epsilon) == j["expect"]["epsilon"].get<std::string>();
    if (expect_exists && ok) {
      Matrix z = construct_volume_one(s);
      ok = pluecker_of_matrix(z) == s;
    }
    if (!expect_exists && ok && j["expect"].contains("witness_prime")) {
      ok = v.cond2_failure &&
           int_to_string(v.cond2_failure->q) ==
               j["expect"]["witness_prime"].get<std::string>();
    }
    record(name, ok, verdict_to_json(v));
  }

  for (const std::string name : {"matrix_123_033.json", "matrix_110_033.json"}) {
    json j = json::parse(load(name));
    Matrix m = matrix_from_json(j["matrix"].dump());
    Specialization s = pluecker_of_matrix(m);
    Int constant = int_from_string(j["expect"]["pluecker_constant"].get<std::string>());
    bool values_ok = true;
    for (const auto& subset : all_subsets(s.n(), s.k()))
      if (s.at(subset) != constant) values_ok = false;
    bool volumes_one = true;
    for (int col = 0; col < m.cols(); ++col) {
      Matrix column(m.rows(), 1);
      for (int i = 0; i < m.rows(); ++i) column.at(i, 0) = m.at(i, col);
      if (volume(column) != 1) volumes_one = false;
    }
    bool ok = values_ok &&
              volumes_one == j["expect"]["column_volumes_one"].get<bool>();
    record(name, ok,
           json{{"pluecker_constant_ok", values_ok},
                {"column_volumes_one", volumes_one}});
  }

  {
    json j = json::parse(load("noncrossing_k3n7.json"));
    std::vector<std::vector<int>> subsets;
    for (const auto& subset : j["subsets"])
      subsets.push_back(subset.get<std::vector<int>>());
    bool ok = check_non_crossing(subsets, j["n"].get<int>()).ok ==
              j["expect"]["non_crossing"].get<bool>();
    record("noncrossing_k3n7.json", ok, json::object());
  }

  emit(json{{"all_pass", all_ok}, {"fixtures", std::move(report)}}, opt);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integer computations on Grassmannian specializations: "
               "realization, primitive-column representations, friezes, and "
               "reflection-arrangement fixtures"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "human-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps (reserved)");
  app.add_option("--limit", opt.limit, "resource guard for enumeration size");

  std::string spec_path, out_path, matrix_path, cluster_path, trace_path;
  std::string diagonals, system_name, fixtures_dir = "fixtures";
  int n = 0, n_max = 9;
  long a = 0, b = 0, c = 0, label_max = 20, strict_max = 6;

  auto* realize_cmd = app.add_subcommand("realize", "matrix from a specialization");
  realize_cmd->add_option("--spec", spec_path, "specialization JSON")->required();
  realize_cmd->add_option("--out", out_path, "output matrix JSON path");

  auto* check_cmd = app.add_subcommand("check", "exchange-relation consistency");
  check_cmd->add_option("--spec", spec_path, "specialization JSON")->required();

  auto* volume_one = app.add_subcommand("volume-one",
                                        "primitive-column representations");
  volume_one->require_subcommand(1);
  auto* vo_check = volume_one->add_subcommand("check", "decide existence");
  vo_check->add_option("--spec", spec_path, "specialization JSON")->required();
  auto* vo_construct = volume_one->add_subcommand("construct", "build one");
  vo_construct->add_option("--spec", spec_path, "specialization JSON")->required();
  vo_construct->add_option("--out", out_path, "output matrix JSON path");

  auto* frieze = app.add_subcommand("frieze", "frieze patterns");
  frieze->require_subcommand(1);
  auto* cc = frieze->add_subcommand("cc", "unit frieze of a triangulation");
  cc->add_option("--n", n, "polygon size")->required();
  cc->add_option("--diagonals", diagonals, "comma-separated i-j pairs");
  cc->add_option("--out", out_path, "output specialization JSON path");
  auto* extend = frieze->add_subcommand("extend", "extend to unit frozen values");
  extend->add_option("--matrix", matrix_path, "input matrix JSON")->required();
  extend->add_option("--trace", trace_path, "output trace JSON path");
  auto* triangle = frieze->add_subcommand("triangle", "triangle admissibility");
  triangle->add_option("a", a, "first label")->required();
  triangle->add_option("b", b, "second label")->required();
  triangle->add_option("c", c, "third label")->required();
  auto* subpolygon = frieze->add_subcommand("subpolygon",
                                            "subpolygon admissibility");
  subpolygon->add_option("--spec", spec_path, "specialization JSON")->required();
  auto* oracle = frieze->add_subcommand("oracle-triangles",
                                        "triangle sweep over triangulations");
  oracle->add_option("--n-max", n_max, "largest polygon size");
  oracle->add_option("--label-max", label_max, "largest label to audit");
  oracle->add_option("--strict-max", strict_max,
                     "labels up to this must be realized");

  auto* arrangements = app.add_subcommand("arrangements",
                                          "column arrangements and roots");
  arrangements->require_subcommand(1);
  auto* verify = arrangements->add_subcommand("verify", "cluster values");
  verify->add_option("--matrix", matrix_path, "matrix JSON")->required();
  verify->add_option("--cluster", cluster_path, "cluster JSON")->required();
  auto* lines = arrangements->add_subcommand("lines", "distinct column lines");
  lines->add_option("--matrix", matrix_path, "matrix JSON")->required();
  auto* roots = arrangements->add_subcommand("roots", "positive-root match");
  roots->add_option("--matrix", matrix_path, "matrix JSON")->required();
  roots->add_option("--system", system_name, "A3 or B3")->required();

  auto* fixtures = app.add_subcommand("fixtures", "shipped reference data");
  fixtures->require_subcommand(1);
  auto* fx_verify = fixtures->add_subcommand("verify", "re-validate fixtures");
  fx_verify->add_option("--dir", fixtures_dir, "fixtures directory");

  // global flags are accepted before or after the verb
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // unknown verbs and flags are input errors
  }

  try {
    if (*realize_cmd) return cmd_realize(spec_path, out_path, opt);
    if (*check_cmd) return cmd_check(spec_path, opt);
    if (*vo_check) return cmd_volume_one_check(spec_path, opt);
    if (*vo_construct) return cmd_volume_one_construct(spec_path, out_path, opt);
    if (*cc) return cmd_frieze_cc(n, diagonals, out_path, opt);
    if (*extend) return cmd_frieze_extend(matrix_path, trace_path, opt);
    if (*triangle) return cmd_frieze_triangle(a, b, c, opt);
    if (*subpolygon) return cmd_frieze_subpolygon(spec_path, opt);
    if (*oracle)
      return cmd_frieze_oracle_triangles(n_max, label_max, strict_max, opt);
    if (*verify) return cmd_arrangements_verify(matrix_path, cluster_path, opt);
    if (*lines) return cmd_arrangements_lines(matrix_path, opt);
    if (*roots) return cmd_arrangements_roots(matrix_path, system_name, opt);
    if (*fx_verify) return cmd_fixtures_verify(fixtures_dir, opt);
  } catch (const Error& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    switch (category(e.code())) {
      case ErrorCategory::kResource: return 3;
      case ErrorCategory::kInput:
      case ErrorCategory::kInternal: return 2;
    }
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
