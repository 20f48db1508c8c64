#include <doctest.h>

#include "fixture_data.hpp"
#include "grassfrieze/arrangements.hpp"
#include "grassfrieze/frieze.hpp"
#include "grassfrieze/volume_one.hpp"

using namespace grassfrieze;

namespace {

bool columns_primitive(const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j) {
    Matrix col(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) col.at(i, 0) = m.at(i, j);
    if (volume(col) != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("check_non_crossing") {
  // the 13-subset collection for k = 3, n = 7
  std::vector<std::vector<int>> k3n7 = {
      {1, 2, 3}, {1, 2, 5}, {1, 2, 7}, {1, 5, 7}, {1, 6, 7}, {2, 3, 4},
      {2, 3, 5}, {2, 4, 5}, {2, 5, 6}, {2, 5, 7}, {3, 4, 5}, {4, 5, 6},
      {5, 6, 7}};
  CHECK(check_non_crossing(k3n7, 7).ok);

  std::vector<std::vector<int>> a16;
  for (const auto& [subset, value] : fixture_data::a16_cluster().items)
    a16.push_back(subset);
  CHECK(check_non_crossing(a16, 16).ok);

  auto crossing = check_non_crossing({{1, 3}, {2, 4}}, 4);
  CHECK(!crossing.ok);
  REQUIRE(crossing.offending_pair.has_value());
}

TEST_CASE("verify_cluster_values on the three reference matrices") {
  auto a3 = verify_cluster_values(fixture_data::a3_matrix(),
                                  fixture_data::a3_cluster());
  CHECK(a3.ok);
  CHECK(a3.mismatches.empty());

  auto b3 = verify_cluster_values(fixture_data::b3_matrix(),
                                  fixture_data::b3_cluster());
  CHECK(b3.ok);

  auto a16 = verify_cluster_values(fixture_data::a16_matrix(),
                                   fixture_data::a16_cluster());
  CHECK(a16.ok);

  // negative control: corrupt one entry
  Matrix corrupted = fixture_data::a3_matrix();
  corrupted.at(0, 0) = 7;
  auto bad = verify_cluster_values(corrupted, fixture_data::a3_cluster());
  CHECK(!bad.ok);
  CHECK(!bad.mismatches.empty());
}

TEST_CASE("reference matrices have primitive columns") {
  CHECK(columns_primitive(fixture_data::a3_matrix()));
  CHECK(columns_primitive(fixture_data::b3_matrix()));
  CHECK(columns_primitive(fixture_data::a16_matrix()));
}

TEST_CASE("line_set") {
  CHECK(line_set(fixture_data::a3_matrix()).normals.size() == 6);
  CHECK(line_set(fixture_data::b3_matrix()).normals.size() == 9);
  CHECK(line_set(fixture_data::a16_matrix()).normals.size() == 16);

  Matrix repeated{{1, -1, 2}, {0, 0, 0}, {1, -1, 2}};
  CHECK(line_set(repeated).normals.size() == 1);

  Matrix zero(2, 2);
  zero.at(0, 0) = 1;
  CHECK_THROWS_AS(line_set(zero), Error);
}

TEST_CASE("shape and rank guards") {
  try {
    verify_cluster_values(fixture_data::a3_matrix(), fixture_data::b3_cluster());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kShapeMismatch);
  }
  try {
    compare_positive_roots(Matrix{{1, 0}, {0, 1}}, RootSystem::kA3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kUnknownSystem);
  }
}

TEST_CASE("compare_positive_roots") {
  CHECK(compare_positive_roots(fixture_data::a3_matrix(), RootSystem::kA3));
  CHECK(compare_positive_roots(fixture_data::b3_matrix(), RootSystem::kB3));
  CHECK(!compare_positive_roots(fixture_data::a3_matrix(), RootSystem::kB3));

  Matrix zeroed = fixture_data::a3_matrix();
  for (int i = 0; i < 3; ++i) zeroed.at(i, 0) = 0;
  CHECK(!compare_positive_roots(zeroed, RootSystem::kA3));

  CHECK(parse_root_system("A3") == RootSystem::kA3);
  CHECK(parse_root_system("b3") == RootSystem::kB3);
  CHECK(!parse_root_system("G2").has_value());
}

TEST_CASE("A3 support matroid and frieze status") {
  Specialization s = pluecker_of_matrix(fixture_data::a3_matrix());
  auto report = support_matroid(s);
  // columns 2, 3, 6 are coplanar
  bool found = false;
  for (const auto& z : report.zero_subsets)
    if (z == std::vector<int>{2, 3, 6}) found = true;
  CHECK(found);
  CHECK(report.exchange_ok);
  CHECK(!is_slk_frieze(s));  // zero minors disqualify it
}

TEST_CASE("alpha normals of an A3 window are orthogonal to column pairs") {
  Matrix window = fixture_data::a3_matrix().columns({2, 3, 4, 5});
  auto alphas = alpha_normals(window);
  REQUIRE(alphas.size() == 3);
  for (int j = 0; j < 3; ++j)
    for (int c = j; c <= j + 1; ++c) {
      Int dot = 0;
      for (int i = 0; i < 3; ++i) dot += alphas[j][i] * window.at(i, c);
      CHECK(dot == 0);
    }
}

TEST_CASE("cluster values of the fixtures are exactly the listed units") {
  for (auto [matrix, cluster] :
       {std::pair{fixture_data::a3_matrix(), fixture_data::a3_cluster()},
        std::pair{fixture_data::b3_matrix(), fixture_data::b3_cluster()},
        std::pair{fixture_data::a16_matrix(), fixture_data::a16_cluster()}}) {
    Specialization s = pluecker_of_matrix(matrix);
    for (const auto& [subset, value] : cluster.items)
      CHECK(s.at(subset) == value);
  }
}
