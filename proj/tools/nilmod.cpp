#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilmod/nilmod.hpp"

using namespace nilmod;

namespace {

enum Exit { ok = 0, input = 2, capacity = 3, corpus_failure = 4 };

struct Selection {
  std::string ring;
  std::string module = "regular";
  std::string golden;
  std::string part = "M";
  std::string input;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

long long number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(what + ": expected an integer, got \"" + s + "\"");
}

// zmod:K | matrix:N:K | poly:P:c0,c1,... | product:K1,K2
json ring_from_flag(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw InvalidInput("--ring: empty");
  const auto& family = parts[0];
  if (family == "zmod" && parts.size() == 2) return {{"family", "zmod"}, {"k", number(parts[1], "--ring")}};
  if (family == "matrix" && parts.size() == 3)
    return {{"family", "matrix"},
            {"n", number(parts[1], "--ring")},
            {"base", {{"family", "zmod"}, {"k", number(parts[2], "--ring")}}}};
  if (family == "poly" && parts.size() == 3) {
    json f = json::array();
    for (const auto& c : split(parts[2], ',')) f.push_back(number(c, "--ring"));
    return {{"family", "poly"}, {"p", number(parts[1], "--ring")}, {"f", f}};
  }
  if (family == "product" && parts.size() == 2) {
    auto ks = split(parts[1], ',');
    if (ks.size() != 2) throw InvalidInput("--ring product: expected K1,K2");
    return {{"family", "product"},
            {"left", {{"family", "zmod"}, {"k", number(ks[0], "--ring")}}},
            {"right", {{"family", "zmod"}, {"k", number(ks[1], "--ring")}}}};
  }
  throw InvalidInput("--ring: unknown ring \"" + spec + "\" (zmod:K, matrix:N:K, poly:P:c0,c1,..., product:K1,K2)");
}

// regular | cyclic:N | scalar:N:K | staircase:P
json module_from_flag(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw InvalidInput("--module: empty");
  if (parts[0] == "regular" && parts.size() == 1) return {{"constructor", "regular"}};
  if (parts[0] == "cyclic" && parts.size() == 2) return {{"constructor", "cyclic_int"}, {"n", number(parts[1], "--module")}};
  if (parts[0] == "scalar" && parts.size() == 3)
    return {{"constructor", "scalar_matrices"}, {"n", number(parts[1], "--module")}, {"k", number(parts[2], "--module")}};
  if (parts[0] == "staircase" && parts.size() == 2) return {{"constructor", "staircase"}, {"p", number(parts[1], "--module")}};
  throw InvalidInput("--module: unknown module \"" + spec + "\" (regular, cyclic:N, scalar:N:K, staircase:P)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json description(const Selection& s) {
  if (!s.input.empty()) return parse_json_text(read_file(s.input));
  json doc = {{"schema", schema_version}};
  if (!s.golden.empty()) {
    auto nk = split(s.golden, ',');
    if (nk.size() != 2) throw InvalidInput("--golden: expected n,k");
    doc["module"] = {{"constructor", "golden"}, {"n", number(nk[0], "--golden")}, {"k", number(nk[1], "--golden")},
                     {"part", s.part}};
    return doc;
  }
  if (!s.ring.empty()) doc["ring"] = ring_from_flag(s.ring);
  doc["module"] = module_from_flag(s.module);
  return doc;
}

std::string names(const FiniteModule& m, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::uint32_t i) {
    out += (first ? "" : ", ") + m.name({i});
    first = false;
  });
  return out + "}";
}

std::string shown(const FiniteModule& m, const ElementSet& s) {
  if (s.is_full()) return "M (" + std::to_string(s.size()) + " elements)";
  if (s.size() > 16) return std::to_string(s.size()) + " elements";
  return names(m, s);
}

const char* yes(bool b) { return b ? "true" : "false"; }

void print_classification(const FiniteModule& m, const ClassificationRecord& r) {
  const auto& p = r.predicates;
  std::printf("%s\n|M| = %zu, |S| = %zu, image ring %zu elements\n", r.provenance.c_str(), r.size, r.ring_size,
              r.image_ring.size);
  std::printf("  nil %s%s\n", yes(p.nil),
              p.nilpotent_degree ? (" (nilpotent of degree " + std::to_string(*p.nilpotent_degree) + ")").c_str() : "");
  std::printf("  reduced %s, rigid %s, co-reduced %s, torsion-free %s\n", yes(p.reduced), yes(p.rigid),
              p.co_reduced ? yes(*p.co_reduced) : "n/a", yes(p.torsion_free));
  std::printf("  prime %s, completely prime %s, s-prime %s, l-prime %s\n", yes(p.prime), yes(p.completely_prime),
              yes(p.s_prime), yes(p.l_prime));
  std::printf("  simple %s, semisimple %s, %zu submodules\n", yes(p.simple), yes(p.semisimple), r.submodule_count);
  std::printf("  N(M) = %s\n  R(M) = %s\n", shown(m, r.nil.nilpotent_set).c_str(), shown(m, r.nil.reduced_part).c_str());
  if (r.completely_prime_witness)
    std::printf("  not completely prime: a = %s, m = %s\n", m.ring().name(r.completely_prime_witness->a).c_str(),
                m.name(r.completely_prime_witness->m).c_str());
  std::printf("  embedding witness: %s\n", r.embedding_witness ? m.name({*r.embedding_witness}).c_str() : "none");
}

void print_radicals(const FiniteModule& m, const RadicalReport& r) {
  std::printf("beta     = %s\n", shown(m, r.beta).c_str());
  std::printf("L        = %s\n", shown(m, r.levitzki).c_str());
  std::printf("U        = %s\n", shown(m, r.upper_nil).c_str());
  std::printf("beta_co  = %s\n", shown(m, r.beta_co).c_str());
  std::printf("<E_M(0)> = %s\n", shown(m, r.envelope_span).c_str());
  std::printf("radical formula at 0: %s, complete radical formula at 0: %s\n", yes(r.satisfies_rf_zero),
              yes(r.satisfies_crf_zero));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int report_error(const Error& e) {
  std::cerr << "error";
  if (!e.stage().empty()) std::cerr << " [" << e.stage() << "]";
  std::cerr << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
  return e.kind() == ErrorKind::capacity ? capacity : input;
}

void add_selection(CLI::App* cmd, Selection& s) {
  cmd->add_option("--ring", s.ring, "zmod:K, matrix:N:K, poly:P:c0,c1,..., product:K1,K2");
  cmd->add_option("--module", s.module, "regular, cyclic:N, scalar:N:K, staircase:P");
  cmd->add_option("--golden", s.golden, "n,k for M_n(Z/kZ) over M_n(Z)");
  cmd->add_option("--part", s.part, "M or N (with --golden)")->check(CLI::IsMember({"M", "N"}));
  cmd->add_option("--input", s.input, "structure description (JSON file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotency and primeness of finite modules"};
  app.require_subcommand(1);
  bool as_json = false;
  std::size_t cap = 0;
  std::uint64_t seed = 1;
  std::size_t budget = 50;
  std::string corpus_path = default_corpus_path();
  Selection sel;

  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--cap", cap, "lattice cap (default from NILMOD_LATTICE_CAP)");

  auto* classify_cmd = app.add_subcommand("classify", "all predicates and radicals");
  auto* radicals_cmd = app.add_subcommand("radicals", "prime, completely prime, s-prime, l-prime radicals");
  auto* lattice_cmd = app.add_subcommand("lattice", "submodule lattice");
  auto* check_cmd = app.add_subcommand("check", "theorem checks and the implication chain");
  auto* corpus_cmd = app.add_subcommand("corpus", "run the example corpus");
  auto* explore_cmd = app.add_subcommand("explore", "conjecture searches");
  explore_cmd->require_subcommand(1);
  auto* kothe_cmd = explore_cmd->add_subcommand("kothe", "are sums of nil submodules nil?");
  auto* unil_cmd = explore_cmd->add_subcommand("unil", "upper nil radical against the sum of nil submodules");
  auto* sample_cmd = explore_cmd->add_subcommand("sample", "seeded random invariant search");

  for (auto* c : {classify_cmd, radicals_cmd, lattice_cmd, check_cmd, kothe_cmd, unil_cmd}) {
    add_selection(c, sel);
    c->add_flag("--json", as_json, "emit JSON");
    c->add_option("--cap", cap, "lattice cap");
  }
  corpus_cmd->add_option("--file", corpus_path, "corpus JSON");
  corpus_cmd->add_flag("--json", as_json, "emit JSON");
  sample_cmd->add_option("--seed", seed, "seed");
  sample_cmd->add_option("--budget", budget, "number of instances")->check(CLI::PositiveNumber);
  sample_cmd->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input;
  }

  Limits limits = default_limits();
  if (cap) limits.lattice_cap = cap;

  try {
    if (corpus_cmd->parsed()) {
      auto report = run_corpus(load_corpus_file(corpus_path), limits);
      if (as_json) emit(to_json(report));
      else std::cout << format_table(report);
      return report.exit_code();
    }
    if (sample_cmd->parsed()) {
      auto findings = sample_search(budget, seed, limits);
      if (as_json) {
        emit({{"seed", seed}, {"budget", budget}, {"findings", to_json(findings)}, {"escalated", has_escalation(findings)}});
      } else {
        std::printf("%zu instances, seed %llu: %zu findings\n", budget, static_cast<unsigned long long>(seed),
                    findings.size());
        for (const auto& f : findings)
          std::printf("  %s%s (seed %llu)\n    %s\n    %s\n", f.theorem_backed ? "ESCALATED " : "", f.property.c_str(),
                      static_cast<unsigned long long>(f.seed), f.descriptor.dump().c_str(), f.witness.c_str());
      }
      return has_escalation(findings) ? corpus_failure : ok;
    }

    const json doc = description(sel);
    auto built = build_structure(doc, limits);
    const FiniteModule& m = built.target;

    if (classify_cmd->parsed()) {
      auto r = classify(m, limits);
      if (as_json) emit(to_json(r));
      else print_classification(m, r);
    } else if (radicals_cmd->parsed()) {
      auto r = detail::staged("radicals", [&] { return radical_report(m, limits); });
      if (as_json) emit({{"schema", schema_version_record}, {"provenance", m.provenance()}, {"elements", detail::names_of(m, m.full_set())}, {"radicals", to_json(r)}});
      else print_radicals(m, r);
    } else if (lattice_cmd->parsed()) {
      auto subs = detail::staged("lattice", [&] { return all_submodules(m, limits); });
      if (as_json) {
        json list = json::array();
        for (const auto& s : subs) list.push_back(set_to_json(s.elements));
        emit({{"schema", schema_version_record}, {"provenance", m.provenance()},
              {"elements", detail::names_of(m, m.full_set())}, {"submodules", list},
              {"socle", set_to_json(socle(m).elements)}});
      } else {
        std::printf("%s: %zu submodules\n", m.provenance().c_str(), subs.size());
        for (const auto& s : subs) std::printf("  %s\n", shown(m, s.elements).c_str());
      }
    } else if (check_cmd->parsed()) {
      auto theorems = theorem_checks(m, limits);
      auto chain = chain_check(m, limits);
      bool violated = false;
      for (const auto& t : theorems) violated = violated || t.violated();
      for (const auto& i : chain) violated = violated || (i.theorem_backed && !i.holds());
      if (as_json) {
        json t = json::array(), c = json::array();
        for (const auto& x : theorems) t.push_back(to_json(x));
        for (const auto& x : chain) c.push_back(to_json(x));
        emit({{"provenance", m.provenance()}, {"theorems", t}, {"implications", c}});
      } else {
        for (const auto& x : theorems)
          std::printf("%-9s %s (hypothesis %s%s)\n", x.violated() ? "VIOLATED" : "ok", x.theorem.c_str(),
                      yes(x.hypothesis), x.conclusion ? (std::string(", conclusion ") + yes(*x.conclusion)).c_str() : "");
        for (const auto& x : chain)
          std::printf("%-9s %s%s%s\n", x.holds() ? "ok" : (x.theorem_backed ? "VIOLATED" : "fails"), x.name.c_str(),
                      x.witness.empty() ? "" : ": ", x.witness.c_str());
      }
      return violated ? corpus_failure : ok;
    } else if (kothe_cmd->parsed()) {
      auto findings = explore_kothe(m, doc, limits);
      if (as_json) emit({{"provenance", m.provenance()}, {"nil_submodules", nil_submodules(m, limits).size()}, {"findings", to_json(findings)}});
      else {
        std::printf("%s: %zu nil submodules, %zu findings\n", m.provenance().c_str(), nil_submodules(m, limits).size(),
                    findings.size());
        for (const auto& f : findings) std::printf("  %s\n", f.witness.c_str());
      }
    } else if (unil_cmd->parsed()) {
      auto c = explore_unil_vs_nilsum(m, limits);
      if (as_json) emit({{"provenance", m.provenance()}, {"comparison", to_json(m, c)}});
      else {
        std::printf("U(M)     = %s\nSigma nil = %s\nrelation: %s\n", shown(m, c.upper_nil).c_str(),
                    shown(m, c.nil_sum).c_str(), to_string(c.relation));
        if (c.only_in_upper_nil) std::printf("  %s in U(M) only\n", m.name(*c.only_in_upper_nil).c_str());
        if (c.only_in_nil_sum) std::printf("  %s in Sigma only\n", m.name(*c.only_in_nil_sum).c_str());
      }
    }
    return ok;
  } catch (const Error& e) {
    return report_error(e);
  }
}
