#include "qlb/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qlb {

namespace {

using nlohmann::ordered_json;

Rational parse_rational_or_throw(const std::string& text,
                                 const std::string& where) {
  auto q = parse_rational(text);
  if (!q) throw ParseError(where + ": malformed rational '" + text + "'");
  return *q;
}

Index checked_index(const ordered_json& j, Index dim, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": index is not an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v >= dim)
    throw ParseError(where + ": index " + std::to_string(v) +
                     " out of range [0," + std::to_string(dim) + ")");
  return static_cast<Index>(v);
}

}  // namespace

BialgebraInput parse_bialgebra(const std::string& json_text,
                               const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
  for (const char* field : {"name", "dim", "basis"})
    if (!j.contains(field))
      throw ParseError(origin + ": missing field '" + field + "'");
  if (!j["name"].is_string()) throw ParseError(origin + ": 'name' must be a string");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError(origin + ": 'dim' must be a non-negative integer");
  const Index dim = static_cast<Index>(j["dim"].get<long long>());
  if (!j["basis"].is_array() || static_cast<Index>(j["basis"].size()) != dim)
    throw ParseError(origin + ": 'basis' must list exactly dim names");

  std::vector<std::string> basis;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw ParseError(origin + ": basis names must be strings");
    basis.push_back(b.get<std::string>());
  }
  LieAlgebra g = make_algebra(j["name"].get<std::string>(), std::move(basis));

  std::vector<std::vector<bool>> listed(static_cast<std::size_t>(dim),
                                        std::vector<bool>(static_cast<std::size_t>(dim), false));
  if (j.contains("brackets")) {
    if (!j["brackets"].is_object())
      throw ParseError(origin + ": 'brackets' must be an object");
    for (const auto& [key, entries] : j["brackets"].items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        throw ParseError(origin + ": bracket key '" + key + "' is not 'i,j'");
      Index i, jdx;
      try {
        i = static_cast<Index>(std::stoll(key.substr(0, comma)));
        jdx = static_cast<Index>(std::stoll(key.substr(comma + 1)));
      } catch (...) {
        throw ParseError(origin + ": bracket key '" + key + "' is not 'i,j'");
      }
      if (i < 0 || i >= dim || jdx < 0 || jdx >= dim)
        throw ParseError(origin + ": bracket key '" + key + "' out of range");
      if (!entries.is_array())
        throw ParseError(origin + ": bracket '" + key + "' must be an array");
      listed[static_cast<std::size_t>(i)][static_cast<std::size_t>(jdx)] = true;
      for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 2)
          throw ParseError(origin + ": bracket '" + key +
                           "' entries must be [k, \"p/q\"]");
        const Index k = checked_index(entry[0], dim, origin + ": bracket '" + key + "'");
        if (!entry[1].is_string())
          throw ParseError(origin + ": bracket '" + key +
                           "' coefficient must be a rational string");
        g.c(i, jdx, k) =
            parse_rational_or_throw(entry[1].get<std::string>(),
                                    origin + ": bracket '" + key + "'");
      }
    }
  }
  // Fill unlisted mirrors by antisymmetry; files that list both orientations
  // keep their literal values (validation decides whether they cohere).
  for (Index i = 0; i < dim; ++i)
    for (Index jdx = 0; jdx < dim; ++jdx)
      if (listed[static_cast<std::size_t>(i)][static_cast<std::size_t>(jdx)] &&
          !listed[static_cast<std::size_t>(jdx)][static_cast<std::size_t>(i)])
        for (Index k = 0; k < dim; ++k) g.c(jdx, i, k) = -g.c(i, jdx, k);

  Tensor2 r = zero_tensor2(g.space(), g.space());
  if (j.contains("r")) {
    if (!j["r"].is_array()) throw ParseError(origin + ": 'r' must be an array");
    for (const auto& entry : j["r"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw ParseError(origin + ": r entries must be [i, j, \"p/q\"]");
      const Index i = checked_index(entry[0], dim, origin + ": r");
      const Index jdx = checked_index(entry[1], dim, origin + ": r");
      if (!entry[2].is_string())
        throw ParseError(origin + ": r coefficient must be a rational string");
      r.m(i, jdx) = parse_rational_or_throw(entry[2].get<std::string>(),
                                            origin + ": r");
    }
  }
  return BialgebraInput{std::move(g), std::move(r)};
}

BialgebraInput read_bialgebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bialgebra(buf.str(), path);
}

std::string serialize_algebra(const LieAlgebra& L, const Tensor2* r,
                              const DoubleCharts* charts) {
  ordered_json j;
  j["name"] = L.name;
  j["dim"] = L.dim();
  j["basis"] = L.basis_names;
  ordered_json brackets = ordered_json::object();
  for (Index i = 0; i < L.dim(); ++i)
    for (Index jdx = i + 1; jdx < L.dim(); ++jdx) {
      ordered_json entries = ordered_json::array();
      for (Index k = 0; k < L.dim(); ++k)
        if (L.c(i, jdx, k) != 0)
          entries.push_back({k, to_string(L.c(i, jdx, k))});
      if (!entries.empty())
        brackets[std::to_string(i) + "," + std::to_string(jdx)] = entries;
    }
  j["brackets"] = brackets;
  if (r != nullptr) {
    ordered_json rj = ordered_json::array();
    for (Index i = 0; i < r->m.rows(); ++i)
      for (Index jdx = 0; jdx < r->m.cols(); ++jdx)
        if (r->m(i, jdx) != 0) rj.push_back({i, jdx, to_string(r->m(i, jdx))});
    j["r"] = rj;
  }
  if (charts != nullptr) {
    ordered_json c;
    c["model"] = charts->model;
    c["g"] = charts->g;
    if (!charts->f.empty() || charts->model == "extension") c["f"] = charts->f;
    if (!charts->f_perp.empty() || charts->model == "extension")
      c["f_perp"] = charts->f_perp;
    if (!charts->f_rows.empty()) c["f_rows"] = charts->f_rows;
    if (!charts->f_perp_rows.empty()) c["f_perp_rows"] = charts->f_perp_rows;
    c["g_star_image"] = charts->gstar_image_rows;
    j["charts"] = c;
  }
  return j.dump(2) + "\n";
}

std::string serialize_input(const BialgebraInput& in) {
  return serialize_algebra(in.g, &in.r, nullptr);
}

}  // namespace qlb
