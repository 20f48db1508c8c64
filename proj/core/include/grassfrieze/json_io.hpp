#pragma once

#include <string>

#include "grassfrieze/arrangements.hpp"
#include "grassfrieze/frieze.hpp"
#include "grassfrieze/pluecker.hpp"

namespace grassfrieze {

// Wire formats. Integers travel as decimal strings so values survive every
// JSON parser unclipped.
//
//   matrix:          [["1","1","0"],["0","3","3"]]           (row-major)
//   specialization:  {"k":2,"n":3,"values":{"1,2":"3",...}}  (all keys present)
//   cluster:         {"k":3,"n":6,"cluster":[{"subset":[1,2,4],"value":"1"},..]}
//   triangulation:   "1-3,1-4" (CLI text form, 1-based)

std::string matrix_to_json(const Matrix& m, bool pretty = false);
Matrix matrix_from_json(const std::string& text);

std::string specialization_to_json(const Specialization& s, bool pretty = false);
Specialization specialization_from_json(const std::string& text);

ClusterAssignment cluster_from_json(const std::string& text);
std::string cluster_to_json(const ClusterAssignment& c, bool pretty = false);

Triangulation triangulation_from_text(int n, const std::string& diagonals);

std::string extension_trace_to_json(const Matrix& input,
                                    const ExtensionTrace& trace,
                                    bool pretty = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace grassfrieze
