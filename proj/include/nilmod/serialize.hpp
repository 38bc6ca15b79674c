#pragma once

#include <string>

#include <json.hpp>

#include "nilmod/structure.hpp"

namespace nilmod {

using json = nlohmann::json;

inline constexpr int schema_version_record = 1;

// Element sets are written as ascending index arrays; readers need the
// universe size, which every record carries.

inline json set_to_json(const ElementSet& s) { return s.to_vector(); }

inline ElementSet set_from_json(const json& j, std::size_t universe) {
  ElementSet s(universe);
  for (const auto& e : j) {
    auto i = e.get<std::uint32_t>();
    if (i >= universe) throw InvalidInput("element index " + std::to_string(i) + " out of range");
    s.insert(i);
  }
  return s;
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline json to_json(const NilpotencyWitness& w) {
  return {{"m", w.element.index}, {"a", w.nilpotentiser.index}, {"k", w.degree}};
}

inline NilpotencyWitness witness_from_json(const json& j) {
  return {{j.at("m").get<std::uint32_t>()}, {j.at("a").get<std::uint32_t>()}, j.at("k").get<std::uint32_t>()};
}

inline json to_json(const NilReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(to_json(x));
  return {{"nilpotent_set", set_to_json(r.nilpotent_set)},
          {"witnesses", w},
          {"is_nil", r.is_nil},
          {"nilpotent_degree", optional_to_json(r.nilpotent_degree)},
          {"reduced_part", set_to_json(r.reduced_part)},
          {"reduced_part_is_submodule", r.reduced_part_is_submodule}};
}

inline NilReport nil_report_from_json(const json& j, std::size_t universe) {
  NilReport r;
  r.nilpotent_set = set_from_json(j.at("nilpotent_set"), universe);
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w));
  r.is_nil = j.at("is_nil").get<bool>();
  r.nilpotent_degree = optional_from_json<std::uint32_t>(j.at("nilpotent_degree"));
  r.reduced_part = set_from_json(j.at("reduced_part"), universe);
  r.reduced_part_is_submodule = j.at("reduced_part_is_submodule").get<bool>();
  return r;
}

inline json to_json(const RadicalReport& r) {
  return {{"beta", set_to_json(r.beta)},
          {"beta_co", set_to_json(r.beta_co)},
          {"levitzki", set_to_json(r.levitzki)},
          {"upper_nil", set_to_json(r.upper_nil)},
          {"envelope_span", set_to_json(r.envelope_span)},
          {"satisfies_radical_formula_zero", r.satisfies_rf_zero},
          {"satisfies_complete_radical_formula_zero", r.satisfies_crf_zero}};
}

inline RadicalReport radical_report_from_json(const json& j, std::size_t universe) {
  RadicalReport r;
  r.beta = set_from_json(j.at("beta"), universe);
  r.beta_co = set_from_json(j.at("beta_co"), universe);
  r.levitzki = set_from_json(j.at("levitzki"), universe);
  r.upper_nil = set_from_json(j.at("upper_nil"), universe);
  r.envelope_span = set_from_json(j.at("envelope_span"), universe);
  r.satisfies_rf_zero = j.at("satisfies_radical_formula_zero").get<bool>();
  r.satisfies_crf_zero = j.at("satisfies_complete_radical_formula_zero").get<bool>();
  return r;
}

inline json to_json(const TorsionFreeReport& t) {
  return {{"torsion_free", t.torsion_free},
          {"element_annihilators_zero", t.element_annihilators},
          {"reduced_with_faithful_cyclics", t.reduced_faithful_cyclics},
          {"completely_prime_and_faithful", t.completely_prime_faithful}};
}

inline TorsionFreeReport torsion_from_json(const json& j) {
  return {j.at("torsion_free").get<bool>(), j.at("element_annihilators_zero").get<bool>(),
          j.at("reduced_with_faithful_cyclics").get<bool>(), j.at("completely_prime_and_faithful").get<bool>()};
}

inline json to_json(const Predicates& p) {
  return {{"nil", p.nil},
          {"nilpotent_degree", optional_to_json(p.nilpotent_degree)},
          {"reduced", p.reduced},
          {"rigid", p.rigid},
          {"co_reduced", optional_to_json(p.co_reduced)},
          {"torsion_free", p.torsion_free},
          {"prime", p.prime},
          {"completely_prime", p.completely_prime},
          {"s_prime", p.s_prime},
          {"l_prime", p.l_prime},
          {"simple", p.simple},
          {"semisimple", p.semisimple}};
}

inline Predicates predicates_from_json(const json& j) {
  Predicates p;
  p.nil = j.at("nil").get<bool>();
  p.nilpotent_degree = optional_from_json<std::uint32_t>(j.at("nilpotent_degree"));
  p.reduced = j.at("reduced").get<bool>();
  p.rigid = j.at("rigid").get<bool>();
  p.co_reduced = optional_from_json<bool>(j.at("co_reduced"));
  p.torsion_free = j.at("torsion_free").get<bool>();
  p.prime = j.at("prime").get<bool>();
  p.completely_prime = j.at("completely_prime").get<bool>();
  p.s_prime = j.at("s_prime").get<bool>();
  p.l_prime = j.at("l_prime").get<bool>();
  p.simple = j.at("simple").get<bool>();
  p.semisimple = j.at("semisimple").get<bool>();
  return p;
}

inline json to_json(const ImageRingFacts& f) {
  return {{"size", f.size},
          {"commutative", f.commutative},
          {"semisimple", f.semisimple},
          {"reduced", f.reduced},
          {"jacobson_size", f.jacobson_size}};
}

inline ImageRingFacts image_facts_from_json(const json& j) {
  return {j.at("size").get<std::size_t>(), j.at("commutative").get<bool>(), j.at("semisimple").get<bool>(),
          j.at("reduced").get<bool>(), j.at("jacobson_size").get<std::size_t>()};
}

/// ClassificationRecord, schema 1. Keys are emitted sorted, so dumps of
/// equal records are byte-identical.
inline json to_json(const ClassificationRecord& r) {
  json cpw = nullptr;
  if (r.completely_prime_witness)
    cpw = {{"a", r.completely_prime_witness->a.index}, {"m", r.completely_prime_witness->m.index}};
  return {{"schema", schema_version_record},
          {"provenance", r.provenance},
          {"size", r.size},
          {"ring_size", r.ring_size},
          {"elements", r.element_names},
          {"predicates", to_json(r.predicates)},
          {"nilpotency", to_json(r.nil)},
          {"radicals", to_json(r.radicals)},
          {"torsion_free_equivalences", to_json(r.torsion)},
          {"embedding_witness", optional_to_json(r.embedding_witness)},
          {"completely_prime_witness", cpw},
          {"image_ring", to_json(r.image_ring)},
          {"submodule_count", r.submodule_count},
          {"socle", set_to_json(r.socle)}};
}

inline ClassificationRecord classification_from_json(const json& j) {
  if (j.at("schema").get<int>() != schema_version_record) throw InvalidInput("unsupported record schema");
  ClassificationRecord r;
  r.provenance = j.at("provenance").get<std::string>();
  r.size = j.at("size").get<std::size_t>();
  r.ring_size = j.at("ring_size").get<std::size_t>();
  r.element_names = j.at("elements").get<std::vector<std::string>>();
  r.predicates = predicates_from_json(j.at("predicates"));
  r.nil = nil_report_from_json(j.at("nilpotency"), r.size);
  r.radicals = radical_report_from_json(j.at("radicals"), r.size);
  r.torsion = torsion_from_json(j.at("torsion_free_equivalences"));
  r.embedding_witness = optional_from_json<std::uint32_t>(j.at("embedding_witness"));
  if (const auto& w = j.at("completely_prime_witness"); !w.is_null())
    r.completely_prime_witness = PrimeWitness{{w.at("a").get<std::uint32_t>()}, {w.at("m").get<std::uint32_t>()}};
  r.image_ring = image_facts_from_json(j.at("image_ring"));
  r.submodule_count = j.at("submodule_count").get<std::size_t>();
  r.socle = set_from_json(j.at("socle"), r.size);
  return r;
}

inline json to_json(const TheoremCheck& c) {
  return {{"theorem", c.theorem}, {"hypothesis", c.hypothesis}, {"conclusion", optional_to_json(c.conclusion)},
          {"note", c.note}, {"violated", c.violated()}};
}

inline json to_json(const ImplicationResult& i) {
  return {{"implication", i.name}, {"antecedent", i.antecedent}, {"consequent", i.consequent},
          {"holds", i.holds()}, {"theorem_backed", i.theorem_backed}, {"witness", i.witness}};
}

}  // namespace nilmod
