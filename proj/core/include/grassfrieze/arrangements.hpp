#pragma once

#include <optional>
#include <string>

#include "grassfrieze/pluecker.hpp"

namespace grassfrieze {

/// Non-frozen cluster subsets with prescribed unit (or zero) values; the
/// cyclically consecutive windows are implicitly assigned 1.
struct ClusterAssignment {
  int n = 0;
  int k = 0;
  std::vector<std::pair<std::vector<int>, Int>> items;
};

struct NonCrossingResult {
  bool ok;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> offending_pair;
};

/// Chord-crossing test on the regular n-gon for every pair of subsets, using
/// strict endpoint interleaving on the cycle (no floating point).
NonCrossingResult check_non_crossing(const std::vector<std::vector<int>>& subsets,
                                     int n);

struct ClusterMismatch {
  std::vector<int> subset;
  Int expected;
  Int actual;
};

struct ClusterVerification {
  bool ok;
  std::vector<ClusterMismatch> mismatches;
};

/// Check that the matrix minors reproduce every assigned cluster value and
/// that every cyclic window (reduced and sorted) has determinant 1.
ClusterVerification verify_cluster_values(const Matrix& x,
                                          const ClusterAssignment& c);

/// Primitive column normals, deduplicated up to sign: first nonzero
/// coordinate positive, sorted lexicographically.
struct LineSet {
  std::vector<std::vector<Int>> normals;
};

LineSet line_set(const Matrix& x);

enum class RootSystem { kA3, kB3 };

/// Positive roots in simple-root coordinates.
const std::vector<std::vector<Int>>& positive_roots(RootSystem system);

/// Whether the column multiset equals, up to individual sign flips, the
/// positive roots of the named rank-3 system.
bool compare_positive_roots(const Matrix& x, RootSystem system);

std::optional<RootSystem> parse_root_system(const std::string& name);

}  // namespace grassfrieze
