#pragma once

// Integer and matrix conversions between GMP values and JSON. Values that fit
// a signed 64-bit word are numbers, larger ones decimal strings.

#include <string>

#include "json.hpp"
#include "seifert/cli.hpp"
#include "seifert/exactalg.hpp"

namespace seifert::cli::detail {

using json = nlohmann::ordered_json;

inline Integer json_to_integer(const json& x, const std::string& where) {
  if (x.is_number_integer()) {
    if (x.is_number_unsigned()) return Integer(std::to_string(x.get<std::uint64_t>()));
    return Integer(std::to_string(x.get<std::int64_t>()));
  }
  if (x.is_string()) {
    const std::string s = x.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("empty integer string" + where);
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("not an integer: \"" + s + "\"" + where);
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ParseError("expected an integer" + where);
}

inline json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

inline json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

/// Square matrix from an array of rows; throws ParseError otherwise.
inline IntMatrix json_to_matrix(const json& rows, const std::string& what) {
  if (!rows.is_array()) throw ParseError(what + " must be an array of rows");
  const std::size_t dim = rows.size();
  IntMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array()) throw ParseError(what + " row " + std::to_string(r + 1) + " is not an array");
    if (rows[r].size() != dim)
      throw ParseError(what + " row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(dim));
    for (std::size_t c = 0; c < dim; ++c)
      out(r, c) = json_to_integer(rows[r][c], " in " + what + " at row " + std::to_string(r + 1) +
                                                  ", column " + std::to_string(c + 1));
  }
  return out;
}

}  // namespace seifert::cli::detail
