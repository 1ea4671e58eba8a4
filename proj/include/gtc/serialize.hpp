#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gtc/codes.hpp"
#include "gtc/exponents.hpp"
#include "gtc/matrix.hpp"

namespace gtc {

using json = nlohmann::ordered_json;

// Exponent-set text grammar: points separated by ';', coordinates by ','.
// "0,0;1,0;2,1" with r = 2 parses to three points; an empty or blank string is
// the empty list.  Coordinates may be any integers (reduction happens later).
std::vector<Point> parse_point_list(const std::string& text, int r);
std::string format_point_list(const std::vector<Point>& pts);

json point_list_to_json(const std::vector<Point>& pts);

json matrix_to_json(const FqMatrix& A);
// One row per line, space-separated element indices.
std::string matrix_to_text(const FqMatrix& A);
std::string matrix_to_csv(const FqMatrix& A);

// {"r":2,"ineqs":[{"a":[1,0],"b":2},...],"bounds":[[0,2],[0,1]]}
Polytope polytope_from_json(const json& j);

// A JSON array of codeword vectors, each an array of n element indices.
std::vector<Codeword> codewords_from_json(const json& j, const Field& F, const OrderedH& order);

}  // namespace gtc
