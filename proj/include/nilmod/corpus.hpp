#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilmod/description.hpp"
#include "nilmod/serialize.hpp"
#include "nilmod/structure.hpp"

namespace nilmod {

inline constexpr int corpus_schema_version = 1;

enum class Policy { assert_, flag };

inline const char* to_string(Policy p) { return p == Policy::flag ? "flag" : "assert"; }

/// One expected value. `on` selects the built target (default), the whole
/// module ("M") or the distinguished part ("N"); `args` carries extra
/// operands such as candidate elements.
struct CorpusFact {
  std::string check;
  std::string on = "target";
  json expected;
  json args;
  std::string claim;
  Policy policy = Policy::assert_;
};

struct CorpusEntry {
  std::string name;
  std::string source;  ///< which worked example or table row the entry carries
  json structure;
  std::vector<CorpusFact> facts;
};

struct Corpus {
  std::string version;
  std::vector<CorpusEntry> entries;
};

inline Corpus load_corpus(const json& doc) {
  using detail::bad_input;
  if (!doc.is_object()) bad_input("", "corpus must be an object");
  if (!doc.contains("schema") || doc["schema"] != corpus_schema_version)
    bad_input("/schema", "unsupported corpus schema (expected 1)");
  Corpus c;
  c.version = doc.value("version", "");
  const auto& entries = detail::field(doc, "", "entries");
  if (!entries.is_array()) bad_input("/entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "/entries/" + std::to_string(i);
    const auto& e = entries[i];
    CorpusEntry entry;
    entry.name = detail::string_field(e, path, "name");
    entry.source = e.value("source", "");
    entry.structure = detail::field(e, path, "structure");
    const Policy entry_policy = e.value("policy", "assert") == "flag" ? Policy::flag : Policy::assert_;
    const auto& facts = detail::field(e, path, "facts");
    if (!facts.is_array()) bad_input(path + "/facts", "expected an array");
    for (std::size_t f = 0; f < facts.size(); ++f) {
      const std::string fp = path + "/facts/" + std::to_string(f);
      CorpusFact fact;
      fact.check = detail::string_field(facts[f], fp, "check");
      fact.on = facts[f].value("on", "target");
      fact.expected = detail::field(facts[f], fp, "expected");
      fact.args = facts[f].value("args", json(nullptr));
      fact.claim = facts[f].value("claim", "");
      fact.policy = facts[f].contains("policy")
                        ? (facts[f]["policy"] == "flag" ? Policy::flag : Policy::assert_)
                        : entry_policy;
      entry.facts.push_back(std::move(fact));
    }
    c.entries.push_back(std::move(entry));
  }
  std::sort(c.entries.begin(), c.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < c.entries.size(); ++i)
    if (c.entries[i].name == c.entries[i - 1].name) bad_input("/entries", "duplicate entry " + c.entries[i].name);
  return c;
}

inline Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_corpus(parse_json_text(ss.str()));
}

#ifdef NILMOD_DEFAULT_CORPUS
inline std::string default_corpus_path() { return NILMOD_DEFAULT_CORPUS; }
#else
inline std::string default_corpus_path() { return "data/corpus.json"; }
#endif

struct FactOutcome {
  CorpusFact fact;
  json actual;
  bool ok = false;
  std::string witness;
};

enum class EntryStatus { pass, fail, flagged };

inline const char* to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "fail";
    case EntryStatus::flagged: return "flagged";
  }
  return "?";
}

struct EntryOutcome {
  std::string name;
  std::string source;
  EntryStatus status = EntryStatus::pass;
  std::vector<FactOutcome> facts;
  std::string error;   ///< construction error, when the structure could not be built
  double seconds = 0;  ///< wall time; kept out of the JSON report
};

struct CorpusReport {
  std::string version;
  std::vector<EntryOutcome> entries;
  std::size_t count(EntryStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const EntryOutcome& e) { return e.status == s; }));
  }
  int exit_code() const { return count(EntryStatus::fail) ? 4 : 0; }
};

namespace detail {

inline json names_of(const FiniteModule& m, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](std::uint32_t i) { out.push_back(m.name({i})); });
  return out;
}

inline json ring_names_of(const FiniteRing& r, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](std::uint32_t i) { out.push_back(r.name({i})); });
  return out;
}

inline bool same_name_set(json a, json b) {
  if (!a.is_array() || !b.is_array()) return a == b;
  auto key = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::vector<std::string> x, y;
  for (const auto& v : a) x.push_back(key(v));
  for (const auto& v : b) y.push_back(key(v));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

inline json set_list(const FiniteModule& m, const std::vector<Submodule>& subs) {
  json out = json::array();
  for (const auto& s : subs) out.push_back(names_of(m, s.elements));
  return out;
}

inline bool same_set_list(const json& a, const json& b) {
  if (!a.is_array() || !b.is_array() || a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i)
      if (!used[i] && same_name_set(x, b[i])) used[i] = found = true;
    if (!found) return false;
  }
  return true;
}

inline ElementSet named_elements(const FiniteModule& m, const json& names, const std::string& where) {
  return element_list(m, names, where);
}

inline std::string elem_pair(const FiniteModule& m, const PrimeWitness& w) {
  return "a=" + m.ring().name(w.a) + ", m=" + m.name(w.m);
}

/// A short explanation of why a predicate has the value it has.
inline std::string predicate_witness(const FiniteModule& m, const std::string& check, bool value) {
  if (check == "simple" && !value && m.size() > 1) {
    for (auto x : m.elements())
      if (x != m.zero() && !m.cyclic(x).is_full())
        return "S*" + m.name(x) + " has " + std::to_string(m.cyclic(x).size()) + " of " +
               std::to_string(m.size()) + " elements";
  }
  if ((check == "prime" || check == "s_prime" || check == "l_prime") && !value && m.size() > 1) {
    if (auto w = prime_violation(m, m.zero_set())) return elem_pair(m, *w) + " with a S m = 0";
    if (check != "prime") return "J of the acting ring does not annihilate M";
  }
  if (check == "completely_prime" && !value && m.size() > 1)
    if (auto w = completely_prime_violation(m, m.zero_set())) return elem_pair(m, *w) + " with a m = 0, a M != 0";
  if (check == "reduced" && !value) {
    for (auto a : m.ring().elements()) {
      auto a2 = m.ring().mul(a, a);
      auto kernel = kernel_of(m, a);
      for (auto x : m.elements())
        if (m.act(a2, x) == m.zero() && !m.cyclic(x).subset_of(kernel))
          return "a=" + m.ring().name(a) + ", m=" + m.name(x) + " with a^2 m = 0, a S m != 0";
    }
  }
  if (check == "nil" && !value) {
    auto red = reduced_part(m);
    red.erase(m.zero().index);
    if (auto x = red.first()) return m.name({*x}) + " is not nilpotent";
  }
  return "";
}

/// For a set mismatch: the first extra element, with an envelope witness
/// when the set is an envelope.
inline std::string set_witness(const FiniteModule& m, const std::string& check, const ElementSet& actual,
                               const json& expected) {
  ElementSet exp(m.size());
  try {
    exp = element_list(m, expected, "expected");
  } catch (const Error&) {
    return "";
  }
  if (auto extra = actual.minus(exp).first()) {
    std::string w = m.name({*extra}) + " computed but not expected";
    if (check == "envelope_zero" || check == "envelope_span") {
      auto env = envelope_zero(m).minus(exp);
      if (auto e = env.first())
        if (auto ew = envelope_witness(m, m.zero_set(), {*e}))
          w = m.name({*e}) + " lies in E_M(0): r=" + m.ring().name(ew->r) + ", m=" + m.name(ew->m) +
              ", k=" + std::to_string(ew->k) + " (r^k m = 0, r m = " + m.name({*e}) + ")";
    }
    return w;
  }
  if (auto missing = exp.minus(actual).first()) return m.name({*missing}) + " expected but not computed";
  return "";
}

struct FactContext {
  const BuiltStructure& built;
  const FiniteModule& on_module(const std::string& on) const {
    if (on == "N") {
      if (!part_module) {
        if (!built.part) throw InvalidInput("fact refers to N but the structure has no distinguished part");
        part_module = submodule_as_module(*built.part);
      }
      return *part_module;
    }
    return on == "M" ? built.module : built.target;
  }
  mutable std::optional<FiniteModule> part_module;
};

inline const std::map<std::string, std::function<bool(const FiniteModule&)>>& predicate_table() {
  static const std::map<std::string, std::function<bool(const FiniteModule&)>> t{
      {"nil", [](const FiniteModule& m) { return is_nil(m); }},
      {"reduced", [](const FiniteModule& m) { return is_reduced(m); }},
      {"rigid", [](const FiniteModule& m) { return is_rigid(m); }},
      {"co_reduced", [](const FiniteModule& m) { return is_co_reduced(m); }},
      {"torsion_free", [](const FiniteModule& m) { return is_torsion_free(m); }},
      {"prime", [](const FiniteModule& m) { return is_prime_module(m); }},
      {"completely_prime", [](const FiniteModule& m) { return is_completely_prime_module(m); }},
      {"s_prime", [](const FiniteModule& m) { return is_s_prime_module(m); }},
      {"l_prime", [](const FiniteModule& m) { return is_l_prime_module(m); }},
      {"simple", [](const FiniteModule& m) { return is_simple(m); }},
      {"semisimple", [](const FiniteModule& m) { return is_semisimple_module(m); }},
      {"reduced_part_is_submodule", [](const FiniteModule& m) { return is_submodule(m, reduced_part(m)); }},
      {"embedding_witness", [](const FiniteModule& m) { return regular_embedding_witness(m).has_value(); }},
      {"satisfies_radical_formula_zero", [](const FiniteModule& m) { return satisfies_radical_formula_zero(m); }},
      {"satisfies_complete_radical_formula_zero",
       [](const FiniteModule& m) { return satisfies_complete_radical_formula_zero(m); }},
      {"annihilator_sum_strict",
       [](const FiniteModule& m) {
         auto b = annihilator_sum_bound(m);
         return b.inclusion && !b.equality;
       }},
      {"annihilator_sum_equality", [](const FiniteModule& m) { return annihilator_sum_bound(m).equality; }},
      {"ring_semisimple", [](const FiniteModule& m) { return is_semisimple_ring(m.ring()); }},
      {"ring_reduced", [](const FiniteModule& m) { return is_reduced_ring(m.ring()); }},
      {"ring_commutative", [](const FiniteModule& m) { return is_commutative(m.ring()); }},
  };
  return t;
}

inline const std::map<std::string, std::function<ElementSet(const FiniteModule&)>>& set_table() {
  static const std::map<std::string, std::function<ElementSet(const FiniteModule&)>> t{
      {"nilpotent_set", [](const FiniteModule& m) { return nilpotent_set(m); }},
      {"reduced_part", [](const FiniteModule& m) { return reduced_part(m); }},
      {"envelope_zero", [](const FiniteModule& m) { return envelope_zero(m); }},
      {"envelope_span", [](const FiniteModule& m) { return envelope_zero_span(m).elements; }},
      {"beta", [](const FiniteModule& m) { return prime_radical(m).elements; }},
      {"beta_co", [](const FiniteModule& m) { return completely_prime_radical(m).elements; }},
      {"upper_nil", [](const FiniteModule& m) { return upper_nil_radical_module(m).elements; }},
      {"levitzki", [](const FiniteModule& m) { return levitzki_radical_module(m).elements; }},
      {"socle", [](const FiniteModule& m) { return socle(m).elements; }},
      {"annihilator_sum", [](const FiniteModule& m) { return annihilator_sum_bound(m).bound; }},
      {"nilpotent_span", [](const FiniteModule& m) { return generate(m, nilpotent_set(m)); }},
  };
  return t;
}

inline const std::map<std::string, std::function<std::size_t(const FiniteModule&)>>& count_table() {
  static const std::map<std::string, std::function<std::size_t(const FiniteModule&)>> t{
      {"size", [](const FiniteModule& m) { return m.size(); }},
      {"ring_size", [](const FiniteModule& m) { return m.ring().size(); }},
      {"image_ring_size", [](const FiniteModule& m) { return image_ring_of(m).size(); }},
      {"annihilator_size", [](const FiniteModule& m) { return module_annihilator(m).size(); }},
      {"submodule_count", [](const FiniteModule& m) { return all_submodules(m).size(); }},
      {"left_ideal_count", [](const FiniteModule& m) { return left_ideals(m.ring()).size(); }},
      {"two_sided_ideal_count", [](const FiniteModule& m) { return two_sided_ideals(m.ring()).size(); }},
  };
  return t;
}

/// Computes the value a fact talks about and a witness when it disagrees.
inline FactOutcome evaluate_fact(const FactContext& ctx, const CorpusFact& fact) {
  FactOutcome out{fact, nullptr, false, ""};
  const std::string& c = fact.check;
  if (c == "constructs") {
    out.actual = true;
    out.ok = fact.expected == true;
    return out;
  }
  if (c == "part_minimal") {
    if (!ctx.built.part) throw InvalidInput("part_minimal needs a distinguished part");
    const auto& m = ctx.built.module;
    bool minimal = false;
    for (const auto& s : minimal_submodules(m))
      if (s.elements == ctx.built.part->elements) minimal = true;
    out.actual = minimal;
    out.ok = out.actual == fact.expected;
    if (!out.ok && !minimal) {
      for (auto x : ctx.built.part->elements.to_vector())
        if (x != m.zero().index && !(m.cyclic({x}) == ctx.built.part->elements)) {
          out.witness = "S*" + m.name({x}) + " is a nonzero proper submodule of N of size " +
                        std::to_string(m.cyclic({x}).size());
          break;
        }
    }
    return out;
  }
  const FiniteModule& m = ctx.on_module(fact.on);
  if (auto p = predicate_table().find(c); p != predicate_table().end()) {
    const bool v = p->second(m);
    out.actual = v;
    out.ok = out.actual == fact.expected;
    if (!out.ok) out.witness = predicate_witness(m, c, v);
    return out;
  }
  if (auto s = set_table().find(c); s != set_table().end()) {
    const auto v = s->second(m);
    out.actual = names_of(m, v);
    out.ok = same_name_set(out.actual, fact.expected);
    if (!out.ok) out.witness = set_witness(m, c, v, fact.expected);
    return out;
  }
  if (auto n = count_table().find(c); n != count_table().end()) {
    out.actual = n->second(m);
    out.ok = out.actual == fact.expected;
    return out;
  }
  if (c.size() > 5 && c.ends_with("_size")) {
    if (auto s = set_table().find(c.substr(0, c.size() - 5)); s != set_table().end()) {
      out.actual = s->second(m).size();
      out.ok = out.actual == fact.expected;
      return out;
    }
  }
  if (c == "nilpotent_degree") {
    out.actual = optional_to_json(is_nilpotent_module(m));
    out.ok = out.actual == fact.expected;
    return out;
  }
  if (c == "non_nilpotent") {
    // Nonzero non-nilpotent elements, optionally restricted to `args`.
    ElementSet v = reduced_part(m);
    v.erase(m.zero().index);
    if (!fact.args.is_null()) v &= named_elements(m, fact.args, "args");
    out.actual = names_of(m, v);
    out.ok = same_name_set(out.actual, fact.expected);
    return out;
  }
  if (c == "simple_submodules") {
    out.actual = set_list(m, minimal_submodules(m));
    out.ok = same_set_list(out.actual, fact.expected);
    return out;
  }
  if (c == "completely_prime_witness") {
    std::optional<PrimeWitness> w;
    if (m.size() > 1) w = completely_prime_violation(m, m.zero_set());
    out.actual = w.has_value();
    out.ok = out.actual == fact.expected;
    if (w) out.witness = elem_pair(m, *w) + " with a m = 0, a M != 0";
    return out;
  }
  if (c == "jacobson_radical") {
    out.actual = ring_names_of(m.ring(), jacobson_radical(m.ring()).elements);
    out.ok = same_name_set(out.actual, fact.expected);
    return out;
  }
  throw InvalidInput("unknown corpus check \"" + c + "\"");
}

}  // namespace detail

inline EntryOutcome run_entry(const CorpusEntry& entry, const Limits& limits = default_limits()) {
  EntryOutcome out;
  out.name = entry.name;
  out.source = entry.source;
  const auto start = std::chrono::steady_clock::now();
  std::optional<BuiltStructure> built;
  json failure;
  try {
    built = build_structure(entry.structure, limits);
  } catch (const Error& e) {
    out.error = e.what();
    failure = {{"error", to_string(e.kind())}};
  }
  for (const auto& fact : entry.facts) {
    FactOutcome f{fact, failure, false, out.error};
    if (built) {
      try {
        f = detail::evaluate_fact(detail::FactContext{*built, std::nullopt}, fact);
      } catch (const Error& e) {
        f.actual = {{"error", to_string(e.kind())}};
        f.witness = e.what();
      }
    } else if (fact.check == "constructs") {
      f.actual = false;
      f.ok = fact.expected == false;
    }
    out.facts.push_back(std::move(f));
  }
  for (const auto& f : out.facts) {
    if (f.ok) continue;
    if (f.fact.policy == Policy::assert_) out.status = EntryStatus::fail;
    else if (out.status == EntryStatus::pass) out.status = EntryStatus::flagged;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline CorpusReport run_corpus(const Corpus& corpus, const Limits& limits = default_limits()) {
  CorpusReport r;
  r.version = corpus.version;
  for (const auto& e : corpus.entries) r.entries.push_back(run_entry(e, limits));
  return r;
}

inline CorpusReport run_corpus() { return run_corpus(load_corpus_file(default_corpus_path())); }

inline json to_json(const CorpusReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json facts = json::array();
    for (const auto& f : e.facts)
      facts.push_back({{"check", f.fact.check},
                       {"on", f.fact.on},
                       {"expected", f.fact.expected},
                       {"actual", f.actual},
                       {"ok", f.ok},
                       {"policy", to_string(f.fact.policy)},
                       {"claim", f.fact.claim},
                       {"witness", f.witness}});
    entries.push_back({{"name", e.name},
                       {"source", e.source},
                       {"status", to_string(e.status)},
                       {"error", e.error},
                       {"facts", facts}});
  }
  return {{"schema", corpus_schema_version},
          {"corpus_version", r.version},
          {"entries", entries},
          {"summary",
           {{"total", r.entries.size()},
            {"passed", r.count(EntryStatus::pass)},
            {"failed", r.count(EntryStatus::fail)},
            {"flagged", r.count(EntryStatus::flagged)}}},
          {"exit_code", r.exit_code()}};
}

inline std::string format_table(const CorpusReport& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-34s %-8s %6s %8s\n", "entry", "status", "facts", "seconds");
  os << line;
  for (const auto& e : r.entries) {
    const auto ok = std::count_if(e.facts.begin(), e.facts.end(), [](const FactOutcome& f) { return f.ok; });
    std::snprintf(line, sizeof line, "%-34s %-8s %3zu/%-2zu %8.3f\n", e.name.c_str(), to_string(e.status),
                  static_cast<std::size_t>(ok), e.facts.size(), e.seconds);
    os << line;
    for (const auto& f : e.facts) {
      if (f.ok) continue;
      os << "    " << (f.fact.policy == Policy::flag ? "flag " : "FAIL ") << f.fact.check << " on " << f.fact.on
         << ": expected " << f.fact.expected.dump() << ", computed " << f.actual.dump() << "\n";
      if (!f.fact.claim.empty()) os << "      claim: " << f.fact.claim << "\n";
      if (!f.witness.empty()) os << "      witness: " << f.witness << "\n";
    }
    if (!e.error.empty()) os << "    construction: " << e.error << "\n";
  }
  os << r.entries.size() << " entries: " << r.count(EntryStatus::pass) << " passed, "
     << r.count(EntryStatus::fail) << " failed, " << r.count(EntryStatus::flagged) << " flagged\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Exploration

/// A property that failed on some instance. `theorem_backed` findings
/// contradict a proved statement and are escalated by callers.
struct SearchFinding {
  json descriptor;
  std::string property;
  std::string witness;
  std::uint64_t seed = 0;
  bool theorem_backed = false;
  friend bool operator==(const SearchFinding&, const SearchFinding&) = default;
};

inline json to_json(const SearchFinding& f) {
  return {{"descriptor", f.descriptor}, {"property", f.property}, {"witness", f.witness},
          {"seed", f.seed}, {"theorem_backed", f.theorem_backed}};
}

inline json to_json(const std::vector<SearchFinding>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

/// Nil submodules are exactly the submodules inside N(M): whether n is
/// nilpotent only involves a and S n.
inline std::vector<Submodule> nil_submodules(const FiniteModule& m, const Limits& limits = default_limits()) {
  const auto nil = nilpotent_set(m);
  std::vector<Submodule> out;
  for (const auto& s : all_submodules(m, limits))
    if (s.elements.subset_of(nil)) out.push_back(s);
  return out;
}

/// Tests every pairwise sum of nil submodules for nilness.
inline std::vector<SearchFinding> explore_kothe(const FiniteModule& m, const json& descriptor = nullptr,
                                                const Limits& limits = default_limits()) {
  const auto nil = nilpotent_set(m);
  const auto subs = nil_submodules(m, limits);
  std::vector<SearchFinding> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      auto s = sum(m, subs[i].elements, subs[j].elements);
      if (auto bad = s.minus(nil).first()) {
        out.push_back({descriptor, "sum of two nil submodules is nil",
                       "N1=" + detail::names_of(m, subs[i].elements).dump() +
                           ", N2=" + detail::names_of(m, subs[j].elements).dump() + ", " + m.name({*bad}) +
                           " in N1+N2 is not nilpotent",
                       0, false});
      }
    }
  return out;
}

enum class Relation { equal, subset, superset, incomparable };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "=";
    case Relation::subset: return "U in Sigma";
    case Relation::superset: return "Sigma in U";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

/// U(M) against the sum of all nil submodules.
struct UnilComparison {
  ElementSet upper_nil;
  ElementSet nil_sum;
  Relation relation = Relation::equal;
  std::optional<ModElem> only_in_upper_nil;
  std::optional<ModElem> only_in_nil_sum;
};

inline UnilComparison explore_unil_vs_nilsum(const FiniteModule& m, const Limits& limits = default_limits()) {
  UnilComparison c;
  c.upper_nil = upper_nil_radical_module(m, limits).elements;
  c.nil_sum = m.zero_set();
  for (const auto& s : nil_submodules(m, limits)) c.nil_sum = sum(m, c.nil_sum, s.elements);
  if (auto x = c.upper_nil.minus(c.nil_sum).first()) c.only_in_upper_nil = ModElem{*x};
  if (auto x = c.nil_sum.minus(c.upper_nil).first()) c.only_in_nil_sum = ModElem{*x};
  if (!c.only_in_upper_nil && !c.only_in_nil_sum) c.relation = Relation::equal;
  else if (!c.only_in_upper_nil) c.relation = Relation::subset;
  else if (!c.only_in_nil_sum) c.relation = Relation::superset;
  else c.relation = Relation::incomparable;
  return c;
}

inline json to_json(const FiniteModule& m, const UnilComparison& c) {
  auto opt = [&](const std::optional<ModElem>& e) { return e ? json(m.name(*e)) : json(nullptr); };
  return {{"upper_nil", detail::names_of(m, c.upper_nil)},
          {"nil_sum", detail::names_of(m, c.nil_sum)},
          {"relation", to_string(c.relation)},
          {"only_in_upper_nil", opt(c.only_in_upper_nil)},
          {"only_in_nil_sum", opt(c.only_in_nil_sum)}};
}

/// One invariant evaluated on one module.
struct InvariantResult {
  std::string property;
  bool theorem_backed = true;
  bool holds = true;
  std::string witness;
};

/// Every property the library is expected to satisfy on any finite module:
/// theorem checks, the implication chain, Prop-B-style bounds, and the
/// commutative equivalences. Non-theorem rows are recorded, not escalated.
inline std::vector<InvariantResult> invariant_suite(const FiniteModule& m, const Limits& limits = default_limits()) {
  std::vector<InvariantResult> out;
  for (const auto& t : theorem_checks(m, limits))
    out.push_back({t.theorem, true, !t.violated(), t.violated() ? "hypothesis holds, conclusion fails" : ""});
  for (const auto& i : chain_check(m, limits))
    if (i.name.rfind("nil", 0) != 0 || m.size() > 1) out.push_back({i.name, i.theorem_backed, i.holds(), i.witness});

  const bool red = is_reduced(m);
  const auto nil = nilpotent_set(m);
  out.push_back({"reduced iff no nonzero nilpotents", true, red == (nil.size() == 1), ""});

  const auto bound = annihilator_sum_bound(m);
  out.push_back({"nilpotents lie in the nilpotentiser annihilator sum", true, bound.inclusion, ""});
  if (nil.is_full())
    out.push_back({"nil module equals the nilpotentiser annihilator sum", true, bound.equality, ""});

  const auto span = envelope_zero_span(m).elements;
  out.push_back({"<E_M(0)> lies in <N(M)>", true, span.subset_of(generate(m, nil)), ""});
  if (envelope_zero(m).is_full()) out.push_back({"E_M(0) = M forces M nil", true, nil.is_full(), ""});

  if (acts_commutatively(m)) {
    const bool semi = is_semisimple_module(m);
    out.push_back({"semisimple over a commutative image ring is reduced", true, !semi || red, ""});
    if (red) out.push_back({"finite reduced is co-reduced", true, is_co_reduced(m), ""});
    // Index 3, the minimal-submodule condition, is reported on its own.
    const auto c = reduced_conditions(m);
    bool agree = true;
    std::string w;
    for (std::size_t i = 0; i < c.size(); ++i) {
      w += (c[i] ? '1' : '0');
      if (i != 3 && c[i] != c[0]) agree = false;
    }
    out.push_back({"nine commutative reducedness conditions agree", true, agree, agree ? "" : w});
    out.push_back({"minimal submodules reduced iff reduced", false, c[3] == c[0], c[3] == c[0] ? "" : w});
    out.push_back({"R(M) is a submodule over a commutative image ring", true,
                   is_submodule(m, reduced_part(m)), ""});
  }

  if (auto w = regular_embedding_witness(m))
    out.push_back({"embedding witness has annihilator ann(M)", true,
                   annihilator_elem(m, *w).elements == module_annihilator(m), ""});
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline json zmod(long long k) { return {{"family", "zmod"}, {"k", k}}; }

}  // namespace detail

/// A random structure description, a function of `seed` alone.
inline json sample_descriptor(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return static_cast<long long>(lo + rng() % (hi - lo + 1)); };
  using detail::zmod;
  json regular = {{"constructor", "regular"}};
  switch (rng() % 11) {
    case 0:
      return {{"schema", 1}, {"module", {{"constructor", "cyclic_int"}, {"n", pick(2, 64)}}}};
    case 1:
      return {{"schema", 1}, {"ring", zmod(pick(2, 48))}, {"module", regular}};
    case 2: {
      long long p = pick(0, 1) ? 2 : 3;
      long long deg = p == 2 ? pick(1, 4) : pick(1, 3);
      json f = json::array();
      for (long long i = 0; i < deg; ++i) f.push_back(pick(0, p - 1));
      f.push_back(1);
      return {{"schema", 1}, {"ring", {{"family", "poly"}, {"p", p}, {"f", f}}}, {"module", regular}};
    }
    case 3: {
      long long k = pick(2, 3);
      return {{"schema", 1}, {"ring", {{"family", "matrix"}, {"base", zmod(k)}, {"n", 2}}}, {"module", regular}};
    }
    case 4:
      return {{"schema", 1},
              {"module", {{"constructor", "golden"}, {"n", 2}, {"k", pick(2, 3)}, {"part", pick(0, 1) ? "M" : "N"}}}};
    case 5: {
      long long k = pick(4, 36);
      return {{"schema", 1},
              {"ring", zmod(k)},
              {"module",
               {{"constructor", "direct_sum"},
                {"summands",
                 json::array({regular, {{"constructor", "quotient"}, {"of", regular}, {"by", json::array({pick(1, k - 1)})}}})}}}};
    }
    case 6: {
      // Representations V2 -> V1 of the quiver with one arrow.
      long long d1 = pick(1, 2), d2 = pick(1, 2), p = 2;
      const long long dim = d1 + d2;
      json e1 = json::array(), e2 = json::array(), a = json::array();
      for (long long i = 0; i < dim; ++i) {
        json r1 = json::array(), r2 = json::array(), ra = json::array();
        for (long long j = 0; j < dim; ++j) {
          r1.push_back(i == j && i < d1 ? 1 : 0);
          r2.push_back(i == j && i >= d1 ? 1 : 0);
          ra.push_back(i < d1 && j >= d1 ? pick(0, p - 1) : 0);
        }
        e1.push_back(r1);
        e2.push_back(r2);
        a.push_back(ra);
      }
      json ring = {{"family", "path"}, {"p", p}, {"vertices", 2},
                   {"arrows", json::array({{{"name", "a"}, {"source", 2}, {"target", 1}}})}};
      return {{"schema", 1},
              {"ring", ring},
              {"module", {{"constructor", "quiver"}, {"p", p}, {"dim", dim}, {"action", {{"e1", e1}, {"e2", e2}, {"a", a}}}}}};
    }
    case 7: {
      json gens = json::array();
      gens.push_back(json::array({pick(1, 3), 0}));
      gens.push_back(json::array({0, pick(1, 3)}));
      if (pick(0, 1)) gens.push_back(json::array({1, 1}));
      return {{"schema", 1},
              {"ring", {{"family", "monomial"}, {"p", 2}, {"vars", json::array({"x", "y"})}, {"generators", gens}}},
              {"module", regular}};
    }
    case 8:
      return {{"schema", 1},
              {"ring", {{"family", "product"}, {"left", zmod(pick(2, 9))}, {"right", zmod(pick(2, 9))}}},
              {"module", regular}};
    case 9: {
      // Unitalization of Z/q with multiplication x*y = c x y.
      long long q = pick(2, 8), c = pick(0, q - 1);
      json add = json::array(), mul = json::array();
      for (long long x = 0; x < q; ++x) {
        json ra = json::array(), rm = json::array();
        for (long long y = 0; y < q; ++y) {
          ra.push_back((x + y) % q);
          rm.push_back((c * x * y) % q);
        }
        add.push_back(ra);
        mul.push_back(rm);
      }
      return {{"schema", 1},
              {"ring", {{"family", "dorroh"}, {"m", q}, {"add", add}, {"mul", mul}}},
              {"module", regular}};
    }
    default: {
      long long n = pick(1, 2);
      return {{"schema", 1},
              {"module", {{"constructor", "scalar_matrices"}, {"n", n}, {"k", n == 1 ? pick(2, 12) : pick(2, 4)}}}};
    }
  }
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t i) { return detail::splitmix64(seed + i); }

/// Findings on one sampled instance: failed invariants (theorem-backed
/// ones escalate) and Koethe-analogue counterexamples.
inline std::vector<SearchFinding> check_instance(std::uint64_t iseed, const Limits& limits = default_limits()) {
  const json d = sample_descriptor(iseed);
  std::vector<SearchFinding> out;
  try {
    auto built = build_structure(d, limits);
    for (const auto& r : invariant_suite(built.target, limits))
      if (!r.holds) out.push_back({d, r.property, r.witness, iseed, r.theorem_backed});
    for (auto f : explore_kothe(built.target, d, limits)) {
      f.seed = iseed;
      out.push_back(std::move(f));
    }
  } catch (const CapacityError&) {
    // Over the caps: skipped, as the generator only promises sizes within them.
  } catch (const Error& e) {
    out.push_back({d, "instance constructs", e.what(), iseed, true});
  }
  return out;
}

inline std::vector<SearchFinding> sample_search(std::size_t budget, std::uint64_t seed,
                                                const Limits& limits = default_limits()) {
  if (budget == 0) throw InvalidParameter("sample_search: budget must be at least 1");
  std::vector<SearchFinding> out;
  for (std::size_t i = 0; i < budget; ++i)
    for (auto& f : check_instance(instance_seed(seed, i), limits)) out.push_back(std::move(f));
  return out;
}

inline bool has_escalation(const std::vector<SearchFinding>& fs) {
  return std::any_of(fs.begin(), fs.end(), [](const SearchFinding& f) { return f.theorem_backed; });
}

}  // namespace nilmod
