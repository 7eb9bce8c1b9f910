#pragma once

// JSON file formats. Point sets are stored on the lattice (1/denom)Z with
// every number written as a decimal string:
//   {"m": "3", "denom": "2", "points": [["0","0"], ["4","0"], ["2","2"]]}
// denotes the points (0, 0), (2, 0), (1, sqrt 3). Distance matrices are
//   {"n": 3, "d": [["0","3","4"], ["3","0","5"], ["4","5","0"]]}.
// Readers also accept plain JSON integers wherever a decimal string is
// allowed.

#include <json.hpp>

#include <string>

#include "ids/geom.hpp"

namespace ids {

using Json = nlohmann::ordered_json;

Int json_int(const Json& v, const char* what);
Rat json_rat(const Json& v, const char* what);
Json int_json(const Int& v);
Json rat_json(const Rat& v);

Json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const Json& j);

Json distance_matrix_to_json(const DistanceMatrix& dm);
DistanceMatrix distance_matrix_from_json(const Json& j);

// Parse errors (malformed JSON, wrong shapes) throw ParseError; invalid
// content (non-squarefree m, duplicate points) throws DomainError.
Json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

PointSet read_pointset_file(const std::string& path);
void write_pointset_file(const std::string& path, const PointSet& s);

}  // namespace ids
