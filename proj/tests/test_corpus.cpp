#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nilmod;

namespace {

const CorpusReport& report() {
  static const CorpusReport r = run_corpus();
  return r;
}

const EntryOutcome& entry(const std::string& name) {
  for (const auto& e : report().entries)
    if (e.name == name) return e;
  throw std::runtime_error("no entry " + name);
}

}  // namespace

TEST(Corpus, LoadsSortedAndUnique) {
  auto c = load_corpus_file(default_corpus_path());
  ASSERT_FALSE(c.entries.empty());
  for (std::size_t i = 1; i < c.entries.size(); ++i) EXPECT_LT(c.entries[i - 1].name, c.entries[i].name);
}

TEST(Corpus, RejectsBadSchemaAndDuplicates) {
  EXPECT_THROW(load_corpus(json{{"schema", 2}, {"entries", json::array()}}), InvalidInput);
  json e = {{"name", "a"}, {"structure", {{"module", {{"constructor", "cyclic_int"}, {"n", 4}}}}},
            {"facts", json::array()}};
  EXPECT_THROW(load_corpus(json{{"schema", 1}, {"entries", json::array({e, e})}}), InvalidInput);
}

TEST(Corpus, NoAssertFailures) {
  EXPECT_EQ(report().count(EntryStatus::fail), 0u);
  EXPECT_EQ(report().exit_code(), 0);
}

TEST(Corpus, TableRowsPass) {
  EXPECT_EQ(entry("reduced-part-f2-x2").status, EntryStatus::pass);
  EXPECT_EQ(entry("reduced-part-f2-x3").status, EntryStatus::pass);
  EXPECT_EQ(entry("staircase-f2").status, EntryStatus::pass);
  EXPECT_EQ(entry("golden-2-2").status, EntryStatus::pass);
}

TEST(Corpus, ZmodFourEnvelopeFlaggedWithWitness) {
  const auto& e = entry("envelope-zmod-4");
  EXPECT_EQ(e.status, EntryStatus::flagged);
  bool seen = false;
  for (const auto& f : e.facts)
    if (!f.ok) {
      EXPECT_EQ(f.fact.policy, Policy::flag);
      EXPECT_NE(f.witness.find("r=2, m=1"), std::string::npos) << f.witness;
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(Corpus, FailingAssertGivesExitFour) {
  json doc = {{"schema", 1},
              {"entries",
               json::array({{{"name", "wrong"},
                             {"structure", {{"module", {{"constructor", "cyclic_int"}, {"n", 6}}}}},
                             {"facts", json::array({{{"check", "size"}, {"expected", 7}}})}}})}};
  auto r = run_corpus(load_corpus(doc));
  EXPECT_EQ(r.count(EntryStatus::fail), 1u);
  EXPECT_EQ(r.exit_code(), 4);
}

TEST(Corpus, UnknownCheckIsReported) {
  json doc = {{"schema", 1},
              {"entries",
               json::array({{{"name", "odd"},
                             {"structure", {{"module", {{"constructor", "cyclic_int"}, {"n", 6}}}}},
                             {"facts", json::array({{{"check", "frobenius"}, {"expected", true}}})}}})}};
  auto r = run_corpus(load_corpus(doc));
  EXPECT_EQ(r.exit_code(), 4);
  EXPECT_FALSE(r.entries[0].facts[0].ok);
}

TEST(Corpus, ReportIsDeterministic) {
  auto c = load_corpus_file(default_corpus_path());
  EXPECT_EQ(to_json(run_corpus(c)).dump(), to_json(run_corpus(c)).dump());
}

TEST(Kothe, NoFindingsOnSmallModules) {
  EXPECT_TRUE(explore_kothe(module_cyclic_int(12)).empty());
  EXPECT_TRUE(explore_kothe(module_cyclic_int(30)).empty());
  auto g = explore_kothe(module_golden(2, 2).module);
  for (const auto& f : g) EXPECT_FALSE(f.witness.empty());
}

TEST(Kothe, NilSubmodulesAreInsideNilpotentSet) {
  auto m = module_golden(2, 2).module;
  for (const auto& s : nil_submodules(m)) EXPECT_TRUE(s.elements.subset_of(nilpotent_set(m)));
}

TEST(Unil, Comparisons) {
  auto z4 = module_cyclic_int(4);
  auto c = explore_unil_vs_nilsum(z4);
  EXPECT_EQ(c.upper_nil, upper_nil_radical_module(z4).elements);
  auto z6 = explore_unil_vs_nilsum(module_cyclic_int(6));
  EXPECT_EQ(z6.relation, Relation::equal);
  EXPECT_EQ(z6.nil_sum.size(), 1u);
  auto g = module_golden(2, 2).module;
  EXPECT_TRUE(explore_unil_vs_nilsum(g).nil_sum.is_full());
}

TEST(Sample, RejectsZeroBudget) { EXPECT_THROW(sample_search(0, 1), InvalidParameter); }

TEST(Sample, DeterministicAndReplayable) {
  auto a = sample_search(50, 2024), b = sample_search(50, 2024);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  for (const auto& f : a) {
    auto again = check_instance(f.seed);
    EXPECT_NE(std::find(again.begin(), again.end(), f), again.end()) << f.property;
    EXPECT_EQ(sample_descriptor(f.seed), f.descriptor);
  }
  EXPECT_FALSE(has_escalation(a));
}

TEST(Description, BuildsFromJson) {
  auto b = build_structure(parse_json_text(R"({"schema": 1, "ring": {"family": "zmod", "k": 12},
                                              "module": {"constructor": "regular"}})"));
  EXPECT_EQ(b.target.size(), 12u);
  EXPECT_THROW(parse_json_text("{\"schema\": 1,"), InvalidInput);
  EXPECT_THROW(build_structure(json{{"schema", 3}, {"module", {{"constructor", "regular"}}}}), InvalidInput);
  EXPECT_THROW(build_structure(json{{"module", {{"constructor", "regular"}}}}), InvalidInput);
  EXPECT_THROW(build_structure(json{{"module", {{"constructor", "frob"}}}}), InvalidInput);
}
