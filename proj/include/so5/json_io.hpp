#pragma once

#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>

#include "so5/format.hpp"
#include "so5/skew_matrix.hpp"

namespace so5 {

/// Insertion-ordered JSON: keys serialize in the order they were added, which
/// makes emitted documents byte-stable for a fixed configuration.
using Json = nlohmann::ordered_json;

namespace detail {

inline void write_json_value(std::ostream& out, const Json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string inner(2 * static_cast<std::size_t>(depth) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << Json(key).dump() << ": ";
      write_json_value(out, value, depth + 1);
    }
    out << '\n' << pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    // Arrays of plain numbers stay on one line; nested structures break.
    bool scalar_only = true;
    for (const auto& v : j)
      if (v.is_structured()) scalar_only = false;
    if (scalar_only) {
      out << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ", ";
        first = false;
        write_json_value(out, v, depth);
      }
      out << ']';
    } else {
      out << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ",\n";
        first = false;
        out << inner;
        write_json_value(out, v, depth + 1);
      }
      out << '\n' << pad << ']';
    }
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    out << (std::isfinite(v) ? format_double17(v) : "null");
  } else {
    out << j.dump();  // integers, booleans, strings (escaped), null
  }
}

}  // namespace detail

/// Serialize with two-space indentation, every float at 17 significant
/// digits, and a trailing newline.  Key order is insertion order, so the
/// same document always produces the same bytes.
inline void write_json(std::ostream& out, const Json& j) {
  detail::write_json_value(out, j, 0);
  out << '\n';
}

inline std::string json_to_string(const Json& j) {
  std::ostringstream out;
  write_json(out, j);
  return out.str();
}

/// JSON form of a skew matrix: the dimension plus the strict upper triangle
/// in row-major order (exactly the storage layout, so it round-trips).
template <typename Scalar>
Json skew_to_json(const SkewMatrix<Scalar>& m) {
  Json upper = Json::array();
  for (Eigen::Index i = 0; i < m.upper_size(); ++i)
    upper.push_back(static_cast<double>(m.upper()[i]));
  Json j;
  j["n"] = m.dim();
  j["upper"] = std::move(upper);
  return j;
}

inline SkewMatrixd skew_from_json(const Json& j) {
  const auto n = j.at("n").get<Eigen::Index>();
  const auto& upper = j.at("upper");
  SkewMatrixd m(n);
  if (static_cast<Eigen::Index>(upper.size()) != m.upper_size())
    throw std::invalid_argument("skew_from_json: upper triangle has the wrong length");
  for (Eigen::Index i = 0; i < m.upper_size(); ++i) m.upper()[i] = upper[i].get<double>();
  return m;
}

}  // namespace so5
