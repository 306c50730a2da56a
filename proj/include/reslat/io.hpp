#ifndef RESLAT_IO_HPP
#define RESLAT_IO_HPP

// Algebra file format: UTF-8 JSON with label-string tables. Lattice structure
// may be given as explicit join/meet tables, as a cover-edge list, or both
// (checked for agreement). Emission is deterministic and round-trip stable.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "reslat/algebra.hpp"

namespace reslat {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  Algebra algebra;
  nlohmann::ordered_json metadata;  // null when absent
};

namespace detail {

inline const nlohmann::ordered_json& json_field(const nlohmann::ordered_json& j,
                                                const std::string& key,
                                                const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw io_error(ctx + ": missing required key \"" + key + "\"");
  return *it;
}

inline std::string json_string(const nlohmann::ordered_json& j, const std::string& where) {
  if (!j.is_string()) throw io_error(where + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<Element> json_table(const nlohmann::ordered_json& j, int n,
                                       const std::vector<std::string>& labels,
                                       const std::string& field, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw io_error(ctx + ": \"" + field + "\" must be an array of " +
                   std::to_string(n) + " rows");
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw io_error(ctx + ": \"" + field + "\" row " + std::to_string(r) +
                     " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const std::string cell =
          json_string(row[c], ctx + ": " + field + "[" + std::to_string(r) + "][" +
                                  std::to_string(c) + "]");
      const auto it = std::find(labels.begin(), labels.end(), cell);
      if (it == labels.end())
        throw io_error(ctx + ": " + field + "[" + std::to_string(r) + "][" +
                       std::to_string(c) + "]: unknown element label \"" + cell + "\"");
      table[r * n + c] = static_cast<Element>(it - labels.begin());
    }
  }
  return table;
}

}  // namespace detail

inline AlgebraFile parse_algebra_json(const nlohmann::ordered_json& j,
                                      const std::string& ctx) {
  if (!j.is_object()) throw io_error(ctx + ": top level must be a JSON object");
  AlgebraFile out;
  Algebra& A = out.algebra;
  A.name = detail::json_string(detail::json_field(j, "name", ctx), ctx + ": name");

  const auto& elems = detail::json_field(j, "elements", ctx);
  if (!elems.is_array() || elems.empty())
    throw io_error(ctx + ": \"elements\" must be a nonempty array");
  for (std::size_t i = 0; i < elems.size(); ++i)
    A.labels.push_back(
        detail::json_string(elems[i], ctx + ": elements[" + std::to_string(i) + "]"));
  A.n = static_cast<int>(A.labels.size());
  for (int i = 0; i < A.n; ++i)
    for (int k = i + 1; k < A.n; ++k)
      if (A.labels[i] == A.labels[k])
        throw io_error(ctx + ": duplicate element label \"" + A.labels[i] + "\"");

  auto resolve = [&](const std::string& label, const std::string& where) -> Element {
    const auto it = std::find(A.labels.begin(), A.labels.end(), label);
    if (it == A.labels.end())
      throw io_error(ctx + ": " + where + ": unknown element label \"" + label + "\"");
    return static_cast<Element>(it - A.labels.begin());
  };
  A.zero = resolve(detail::json_string(detail::json_field(j, "zero", ctx), ctx + ": zero"),
                   "zero");
  A.one = resolve(detail::json_string(detail::json_field(j, "one", ctx), ctx + ": one"),
                  "one");

  const bool has_join = j.contains("join"), has_meet = j.contains("meet");
  const bool has_covers = j.contains("covers");
  if (has_join != has_meet)
    throw io_error(ctx + ": \"join\" and \"meet\" must be given together");
  if (!has_join && !has_covers)
    throw io_error(ctx + ": need either \"join\"/\"meet\" tables or a \"covers\" list");
  if (has_join) {
    A.join_t = detail::json_table(j["join"], A.n, A.labels, "join", ctx);
    A.meet_t = detail::json_table(j["meet"], A.n, A.labels, "meet", ctx);
  }
  if (has_covers) {
    const auto& cov = j["covers"];
    if (!cov.is_array()) throw io_error(ctx + ": \"covers\" must be an array of pairs");
    std::vector<std::pair<Element, Element>> edges;
    for (std::size_t i = 0; i < cov.size(); ++i) {
      const auto& e = cov[i];
      const std::string where = "covers[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2)
        throw io_error(ctx + ": " + where + " must be a [lower, upper] pair");
      edges.emplace_back(resolve(detail::json_string(e[0], ctx + ": " + where), where),
                         resolve(detail::json_string(e[1], ctx + ": " + where), where));
    }
    const CoverLattice lat = lattice_from_covers(A.n, edges, A.zero, A.one);
    if (!lat.errors.empty()) {
      std::string msg = ctx + ": covers do not describe a bounded lattice:";
      for (const std::string& e : lat.errors) msg += " " + e + ";";
      throw io_error(msg);
    }
    if (has_join) {
      if (lat.join_t != A.join_t || lat.meet_t != A.meet_t)
        throw io_error(ctx +
                       ": explicit join/meet tables disagree with the covers list");
    } else {
      A.join_t = lat.join_t;
      A.meet_t = lat.meet_t;
    }
  }
  A.prod_t = detail::json_table(detail::json_field(j, "prod", ctx), A.n, A.labels,
                                "prod", ctx);
  A.impl_t = detail::json_table(detail::json_field(j, "impl", ctx), A.n, A.labels,
                                "impl", ctx);
  if (j.contains("metadata")) out.metadata = j["metadata"];
  return out;
}

inline AlgebraFile parse_algebra_text(const std::string& text, const std::string& ctx) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw io_error(ctx + ": " + e.what());
  }
  return parse_algebra_json(j, ctx);
}

inline AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), path);
}

inline nlohmann::ordered_json algebra_to_json(
    const Algebra& A, const nlohmann::ordered_json& metadata = nullptr) {
  nlohmann::ordered_json j;
  j["name"] = A.name;
  j["elements"] = A.labels;
  j["zero"] = A.label(A.zero);
  j["one"] = A.label(A.one);
  auto table = [&](const std::vector<Element>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Element a = 0; a < A.n; ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Element b = 0; b < A.n; ++b) row.push_back(A.label(t[a * A.n + b]));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["join"] = table(A.join_t);
  j["meet"] = table(A.meet_t);
  j["prod"] = table(A.prod_t);
  j["impl"] = table(A.impl_t);
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

inline std::string serialize_algebra(const Algebra& A,
                                     const nlohmann::ordered_json& metadata = nullptr) {
  return algebra_to_json(A, metadata).dump(2) + "\n";
}

inline void write_algebra_file(const std::string& path, const Algebra& A,
                               const nlohmann::ordered_json& metadata = nullptr) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error(path + ": cannot open for writing");
  out << serialize_algebra(A, metadata);
  if (!out) throw io_error(path + ": write failed");
}

}  // namespace reslat

#endif  // RESLAT_IO_HPP
