#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilmod/lattice.hpp"

namespace nilmod {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

/// A module built from a structure description, plus an optional
/// distinguished submodule (the Golden N).
struct BuiltStructure {
  FiniteModule module;
  std::optional<Submodule> part;
  FiniteModule target;  ///< what operations run on: `module`, or `part` viewed as a module
};

namespace detail {

[[noreturn]] inline void bad_input(const std::string& path, const std::string& what) {
  throw InvalidInput(path + ": " + what);
}

inline const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad_input(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_input(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline bool is_index(const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

inline long long int_field(const json& j, const std::string& path, const char* key) {
  const auto& v = field(j, path, key);
  if (!v.is_number_integer()) bad_input(path + "/" + key, "expected an integer");
  return v.get<long long>();
}

inline std::string string_field(const json& j, const std::string& path, const char* key) {
  const auto& v = field(j, path, key);
  if (!v.is_string()) bad_input(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

inline std::vector<std::vector<std::uint32_t>> table_field(const json& j, const std::string& path,
                                                           const char* key) {
  const auto& v = field(j, path, key);
  const std::string p = path + "/" + key;
  if (!v.is_array()) bad_input(p, "expected an array of rows");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) bad_input(p + "/" + std::to_string(i), "expected a row");
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < v[i].size(); ++c) {
      const auto& e = v[i][c];
      if (!is_index(e)) bad_input(p + "/" + std::to_string(i) + "/" + std::to_string(c), "expected an index");
      row.push_back(e.get<std::uint32_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<std::string> names_field(const json& j, const std::string& path, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const auto& v = j.at(key);
  if (!v.is_array()) bad_input(path + "/" + key, "expected an array of strings");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) bad_input(path + "/" + key + "/" + std::to_string(i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Ring families: zmod {k}, matrix {base, n}, poly {p, f}, monomial {p,
/// vars, generators}, path {p, vertices, arrows}, product {left, right},
/// dorroh {m, add, mul}, tables {add, mul, names?}.
inline FiniteRing build_ring(const json& j, const Limits& limits = default_limits(),
                             const std::string& path = "/ring") {
  using namespace detail;
  const auto family = string_field(j, path, "family");
  if (family == "zmod") return ring_zmod(int_field(j, path, "k"), limits);
  if (family == "matrix")
    return ring_matrix(build_ring(field(j, path, "base"), limits, path + "/base"), int_field(j, path, "n"), limits);
  if (family == "poly") {
    const auto& f = field(j, path, "f");
    if (!f.is_array()) bad_input(path + "/f", "expected coefficients, constant term first");
    std::vector<long long> coeffs;
    for (const auto& c : f) {
      if (!c.is_number_integer()) bad_input(path + "/f", "expected integer coefficients");
      coeffs.push_back(c.get<long long>());
    }
    return ring_poly_quotient(int_field(j, path, "p"), coeffs, limits);
  }
  if (family == "monomial") {
    auto vars = names_field(j, path, "vars");
    const auto& g = field(j, path, "generators");
    if (!g.is_array()) bad_input(path + "/generators", "expected exponent vectors");
    std::vector<std::vector<int>> gens;
    for (const auto& e : g) {
      if (!e.is_array()) bad_input(path + "/generators", "expected exponent vectors");
      std::vector<int> v;
      for (const auto& x : e) {
        if (!is_index(x)) bad_input(path + "/generators", "expected non-negative exponents");
        v.push_back(x.get<int>());
      }
      gens.push_back(std::move(v));
    }
    return ring_monomial_quotient(int_field(j, path, "p"), vars, gens, limits);
  }
  if (family == "path") {
    Quiver q;
    q.vertices = static_cast<int>(int_field(j, path, "vertices"));
    if (j.contains("arrows")) {
      const auto& arrows = j.at("arrows");
      if (!arrows.is_array()) bad_input(path + "/arrows", "expected an array");
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        const std::string ap = path + "/arrows/" + std::to_string(i);
        q.arrows.push_back({string_field(arrows[i], ap, "name"), static_cast<int>(int_field(arrows[i], ap, "source")),
                            static_cast<int>(int_field(arrows[i], ap, "target"))});
      }
    }
    return ring_path_algebra(q, int_field(j, path, "p"), limits);
  }
  if (family == "product")
    return ring_product(build_ring(field(j, path, "left"), limits, path + "/left"),
                        build_ring(field(j, path, "right"), limits, path + "/right"), limits);
  if (family == "dorroh") {
    NonUnitalRingData a{table_field(j, path, "add"), table_field(j, path, "mul"), names_field(j, path, "names")};
    return ring_dorroh(a, int_field(j, path, "m"), limits);
  }
  if (family == "tables")
    return ring_from_tables(table_field(j, path, "add"), table_field(j, path, "mul"),
                            names_field(j, path, "names"), limits);
  bad_input(path + "/family", "unknown ring family \"" + family + "\"");
}

namespace detail {
inline ElementSet element_list(const FiniteModule& m, const json& v, const std::string& path) {
  if (!v.is_array()) bad_input(path, "expected an array of elements");
  ElementSet s(m.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_index(v[i]) && v[i].get<std::size_t>() < m.size()) {
      s.insert(v[i].get<std::uint32_t>());
    } else if (v[i].is_string()) {
      auto e = m.find(v[i].get<std::string>());
      if (!e) bad_input(path + "/" + std::to_string(i), "no element named \"" + v[i].get<std::string>() + "\"");
      s.insert(e->index);
    } else {
      bad_input(path + "/" + std::to_string(i), "expected an element index or name");
    }
  }
  return s;
}
}  // namespace detail

/// Module constructors: regular, golden {n, k, part?}, cyclic_int {n},
/// scalar_matrices {n, k}, staircase {p}, quiver {dim, basis?, action},
/// tables {add, act, names?}, direct_sum {summands}, quotient {of, by}.
inline BuiltStructure build_module(const json& j, const FiniteRing* ring, const Limits& limits,
                                   const std::string& path = "/module") {
  using namespace detail;
  const auto ctor = string_field(j, path, "constructor");
  auto need_ring = [&]() -> const FiniteRing& {
    if (!ring) bad_input(path, "constructor \"" + ctor + "\" needs a \"ring\"");
    return *ring;
  };
  auto plain = [](FiniteModule m) { return BuiltStructure{m, std::nullopt, m}; };
  if (ctor == "regular") return plain(module_regular(need_ring(), limits));
  if (ctor == "golden") {
    auto g = module_golden(int_field(j, path, "n"), int_field(j, path, "k"), limits);
    std::string part = j.contains("part") ? string_field(j, path, "part") : "M";
    if (part == "M") return {g.module, g.part, g.module};
    if (part == "N") return {g.module, g.part, submodule_as_module(g.part, limits)};
    bad_input(path + "/part", "expected \"M\" or \"N\"");
  }
  if (ctor == "cyclic_int") return plain(module_cyclic_int(int_field(j, path, "n"), limits));
  if (ctor == "scalar_matrices")
    return plain(module_scalar_matrices(int_field(j, path, "n"), int_field(j, path, "k"), limits));
  if (ctor == "staircase") return plain(module_monomial_staircase(int_field(j, path, "p"), limits));
  if (ctor == "quiver") {
    const auto& r = need_ring();
    const std::size_t dim = static_cast<std::size_t>(int_field(j, path, "dim"));
    std::map<std::string, ActionMatrix> action;
    const auto& a = field(j, path, "action");
    if (!a.is_object()) bad_input(path + "/action", "expected an object keyed by basis path");
    for (auto it = a.begin(); it != a.end(); ++it) action[it.key()] = table_field(a, path + "/action", it.key().c_str());
    return plain(module_quiver(r, int_field(j, path, "p"), dim, action, names_field(j, path, "basis"), limits));
  }
  if (ctor == "tables")
    return plain(module_from_action(need_ring(), table_field(j, path, "add"), table_field(j, path, "act"),
                                    names_field(j, path, "names"), limits));
  if (ctor == "direct_sum") {
    const auto& s = field(j, path, "summands");
    if (!s.is_array() || s.size() < 2) bad_input(path + "/summands", "expected at least two summands");
    auto acc = build_module(s[0], ring, limits, path + "/summands/0").target;
    for (std::size_t i = 1; i < s.size(); ++i)
      acc = direct_sum(acc, build_module(s[i], &acc.ring(), limits, path + "/summands/" + std::to_string(i)).target,
                       limits);
    return plain(acc);
  }
  if (ctor == "quotient") {
    auto base = build_module(field(j, path, "of"), ring, limits, path + "/of").target;
    auto seed = element_list(base, field(j, path, "by"), path + "/by");
    return plain(quotient_module(base, submodule_generated(base, seed), limits));
  }
  bad_input(path + "/constructor", "unknown module constructor \"" + ctor + "\"");
}

/// {"schema": 1, "ring": {...}?, "module": {...}}
inline BuiltStructure build_structure(const json& doc, const Limits& limits = default_limits()) {
  if (!doc.is_object()) detail::bad_input("", "expected a JSON object");
  if (doc.contains("schema")) {
    if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != schema_version)
      detail::bad_input("/schema", "unsupported schema version (expected 1)");
  }
  std::optional<FiniteRing> ring;
  if (doc.contains("ring")) ring = build_ring(doc["ring"], limits);
  return build_module(detail::field(doc, "", "module"), ring ? &*ring : nullptr, limits);
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace nilmod
