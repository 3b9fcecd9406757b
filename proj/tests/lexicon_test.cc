// Copyright 2026 The emotag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "emotag/lexicon.h"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "emotag/error.h"
#include "emotag/file_util.h"
#include "emotag/porter_stemmer.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace emotag {
namespace {

using ::emotag::testing::DataPath;
using ::emotag::testing::DefaultLexicon;
using ::emotag::testing::DefaultManifest;
using Words = std::vector<std::string>;
using WordSet = std::set<std::string>;

std::string ManifestText() { return ReadFile(DataPath("manifest.json")); }

TEST(ManifestTest, DefaultHasTwelveOrderedClasses) {
  const ClassManifest& m = DefaultManifest();
  ASSERT_EQ(m.classes.size(), 12u);
  for (int id = 1; id <= kNumClasses; ++id) {
    EXPECT_EQ(m.Get(id).id, id);
    EXPECT_FALSE(m.Get(id).seeds.empty());
  }
  EXPECT_EQ(m.Get(1).name, "Glad");
  EXPECT_EQ(m.Get(2).name, "Praise");
  EXPECT_EQ(m.Get(2).emoji, "\xF0\x9F\x91\x8F");
  EXPECT_EQ(m.Get(11).name, "Good");
  EXPECT_EQ(m.Get(12).name, "Interest");
  EXPECT_THROW(m.Get(13), ValidationError);
}

TEST(ManifestTest, ElevenClassesRejected) {
  auto j = nlohmann::ordered_json::parse(ManifestText());
  j["classes"].erase(j["classes"].begin() + 11);
  try {
    ParseManifest(j.dump());
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 12 classes"),
              std::string::npos);
  }
}

TEST(ManifestTest, DuplicateIdRejected) {
  auto j = nlohmann::ordered_json::parse(ManifestText());
  j["classes"][3]["id"] = 3;
  try {
    ParseManifest(j.dump());
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.class_id(), 3);
  }
}

TEST(ManifestTest, OutOfOrderIsSorted) {
  auto j = nlohmann::ordered_json::parse(ManifestText());
  std::reverse(j["classes"].begin(), j["classes"].end());
  EXPECT_EQ(ParseManifest(j.dump()), DefaultManifest());
}

TEST(ManifestTest, BadFieldsRejected) {
  EXPECT_THROW(ParseManifest("not json"), ParseError);
  EXPECT_THROW(ParseManifest("[]"), ParseError);
  auto j = nlohmann::ordered_json::parse(ManifestText());
  auto k = j;
  k["classes"][0]["emoji"] = "";
  EXPECT_THROW(ParseManifest(k.dump()), ValidationError);
  k = j;
  k["classes"][0]["seeds"] = nlohmann::ordered_json::array();
  EXPECT_THROW(ParseManifest(k.dump()), ValidationError);
  k = j;
  k["classes"][0]["seeds"][0] = "two words";
  EXPECT_THROW(ParseManifest(k.dump()), ValidationError);
  k = j;
  k["classes"][0]["id"] = 13;
  EXPECT_THROW(ParseManifest(k.dump()), ValidationError);
}

TEST(ThesaurusTest, ParsesTableAndIgnoresComments) {
  const MapSynonymSource s =
      ParseThesaurus("# comment\n\nhappy\tglad,joyful,happy\r\nsad\t\n");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.Lookup("happy"), (WordSet{"glad", "joyful"}));
  EXPECT_TRUE(s.Lookup("sad").empty());
  EXPECT_TRUE(s.Lookup("unknown").empty());
}

TEST(ThesaurusTest, MalformedLinesRejected) {
  EXPECT_THROW(ParseThesaurus("happy glad\n"), ParseError);
  EXPECT_THROW(ParseThesaurus("Happy\tglad\n"), ParseError);
  EXPECT_THROW(ParseThesaurus("happy\tvery glad\n"), ParseError);
}

TEST(ThesaurusTest, BundledFileLoads) {
  EXPECT_GT(LoadThesaurus(DataPath("thesaurus.tsv")).size(), 50u);
}

MapSynonymSource Chain(int length) {
  MapSynonymSource s;
  for (int i = 0; i + 1 < length; ++i) {
    s.Add("w" + std::to_string(i), "w" + std::to_string(i + 1));
  }
  return s;
}

TEST(ExpandTest, NoSynonymsTakesOneIteration) {
  const Words seeds = {"alone"};
  const Expansion e = ExpandClass(seeds, MapSynonymSource{});
  EXPECT_EQ(e.words, (WordSet{"alone"}));
  EXPECT_EQ(e.stats.iterations, 1);
  EXPECT_EQ(e.stats.words_added, 0);
  EXPECT_FALSE(e.stats.guard_fired());
}

TEST(ExpandTest, SymmetricPairTakesTwoIterations) {
  MapSynonymSource s;
  s.Add("a", "b");
  s.Add("b", "a");
  const Words seeds = {"a"};
  const Expansion e = ExpandClass(seeds, s);
  EXPECT_EQ(e.words, (WordSet{"a", "b"}));
  EXPECT_EQ(e.stats.iterations, 2);
  EXPECT_EQ(e.stats.words_added, 1);
  EXPECT_FALSE(e.stats.guard_fired());
}

TEST(ExpandTest, IterationGuardStopsChain) {
  const Words seeds = {"w0"};
  const Expansion e = ExpandClass(seeds, Chain(10), {3, 5000});
  EXPECT_EQ(e.words, (WordSet{"w0", "w1", "w2", "w3"}));
  EXPECT_EQ(e.stats.iterations, 3);
  EXPECT_EQ(e.stats.guard, GuardEvent::kMaxIterations);
}

TEST(ExpandTest, IterationCapReachedAtFixpointIsNotAGuard) {
  const Words seeds = {"w0"};
  const Expansion e = ExpandClass(seeds, Chain(4), {3, 5000});
  EXPECT_EQ(e.words.size(), 4u);
  EXPECT_EQ(e.stats.iterations, 3);
  EXPECT_FALSE(e.stats.guard_fired());
}

TEST(ExpandTest, WordGuardCapsSize) {
  MapSynonymSource s;
  for (int i = 0; i < 100; ++i) s.Add("hub", "x" + std::to_string(i));
  const Words seeds = {"hub"};
  const Expansion e = ExpandClass(seeds, s, {5, 10});
  EXPECT_EQ(e.words.size(), 10u);
  EXPECT_TRUE(e.words.contains("hub"));
  EXPECT_EQ(e.stats.guard, GuardEvent::kMaxWords);
  EXPECT_EQ(GuardEventName(e.stats.guard), "max_words");
}

class FailingSource : public SynonymSource {
 public:
  WordSet Lookup(std::string_view word) const override {
    if (word == "broken") throw std::runtime_error("backend down");
    if (word == "start") return {"broken"};
    return {};
  }
};

TEST(ExpandTest, SourceFailureNamesTheWord) {
  const Words seeds = {"start"};
  try {
    ExpandClass(seeds, FailingSource{});
    FAIL() << "expected SynonymSourceError";
  } catch (const SynonymSourceError& e) {
    EXPECT_EQ(e.word(), "broken");
    EXPECT_NE(std::string(e.what()).find("backend down"), std::string::npos);
  }
}

TEST(ExpandTest, BadArgumentsRejected) {
  EXPECT_THROW(ExpandClass(Words{}, MapSynonymSource{}), ValidationError);
  const Words seeds = {"a"};
  EXPECT_THROW(ExpandClass(seeds, MapSynonymSource{}, {0, 10}),
               ValidationError);
}

ClassManifest ManifestWithSeeds(const std::vector<Words>& seeds) {
  ClassManifest m = DefaultManifest();
  for (int i = 0; i < kNumClasses; ++i) m.classes[i].seeds = seeds[i];
  return m;
}

TEST(CompileTest, StemsAndDeduplicates) {
  std::vector<Words> seeds(kNumClasses);
  for (int i = 0; i < kNumClasses; ++i) {
    seeds[i] = {"filler" + std::string(1, static_cast<char>('a' + i))};
  }
  seeds[0] = {"happy"};
  MapSynonymSource s;
  s.Add("happy", "happiness");
  const Lexicon lex = CompileLexicon(ManifestWithSeeds(seeds), s);
  EXPECT_EQ(lex.keywords(1), (WordSet{"happi"}));
  EXPECT_EQ(lex.stats(1).words_added, 1);
  EXPECT_EQ(lex.Lookup("happi"), ClassMask{1});
  EXPECT_EQ(lex.Lookup("sad"), ClassMask{0});
}

TEST(CompileTest, DefaultLexiconContainsStemmedSeeds) {
  const Lexicon& lex = DefaultLexicon();
  for (const EmotionClass& c : lex.manifest().classes) {
    for (const std::string& seed : c.seeds) {
      EXPECT_TRUE(lex.keywords(c.id).contains(PorterStem(seed)))
          << c.id << " " << seed;
      EXPECT_TRUE(lex.Lookup(PorterStem(seed)) & (1u << (c.id - 1)));
    }
  }
  EXPECT_TRUE(lex.keywords(2).contains("congratul"));
  EXPECT_TRUE(lex.keywords(12).contains("workshop"));
  EXPECT_TRUE(lex.keywords(5).contains("hack"));
}

TEST(CompileTest, Deterministic) {
  const auto source = LoadThesaurus(DataPath("thesaurus.tsv"));
  const Lexicon a = CompileLexicon(DefaultManifest(), source);
  const Lexicon b = CompileLexicon(DefaultManifest(), source);
  EXPECT_EQ(a, b);
  EXPECT_EQ(SerializeLexicon(a), SerializeLexicon(b));
}

TEST(LexiconTest, ConstructorValidates) {
  std::array<WordSet, kNumClasses> sets;
  for (int i = 0; i < kNumClasses; ++i) {
    for (const auto& seed : DefaultManifest().classes[i].seeds) {
      sets[i].insert(PorterStem(seed));
    }
  }
  EXPECT_NO_THROW(Lexicon(DefaultManifest(), sets));
  auto missing_seed = sets;
  missing_seed[4].erase(PorterStem("hack"));
  EXPECT_THROW(Lexicon(DefaultManifest(), missing_seed), ValidationError);
  auto empty = sets;
  empty[7].clear();
  EXPECT_THROW(Lexicon(DefaultManifest(), empty), ValidationError);
}

TEST(SerializeTest, RoundTrip) {
  const Lexicon& lex = DefaultLexicon();
  const std::string text = SerializeLexicon(lex);
  const Lexicon back = DeserializeLexicon(text);
  EXPECT_EQ(back, lex);
  EXPECT_EQ(SerializeLexicon(back), text);

  const auto dir = testing::MakeTempDir("lexicon");
  SaveLexicon(lex, dir / "lex.json");
  EXPECT_EQ(LoadLexicon(dir / "lex.json"), lex);
  std::filesystem::remove_all(dir);
}

TEST(SerializeTest, LayoutHasVersionAndSortedClasses) {
  const auto j = nlohmann::json::parse(SerializeLexicon(DefaultLexicon()));
  EXPECT_EQ(j["version"], "emotag-lexicon/1");
  EXPECT_EQ(j["classes"].size(), 12u);
  const auto words = j["classes"]["2"].get<Words>();
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(j["stats"]["1"]["guard"], "none");
}

TEST(SerializeTest, TruncatedFileRejected) {
  const std::string text = SerializeLexicon(DefaultLexicon());
  EXPECT_THROW(DeserializeLexicon(text.substr(0, text.size() / 2)),
               ParseError);
  EXPECT_THROW(DeserializeLexicon(""), ParseError);
}

TEST(SerializeTest, UnknownVersionRejected) {
  auto j = nlohmann::ordered_json::parse(SerializeLexicon(DefaultLexicon()));
  j["version"] = "emotag-lexicon/99";
  EXPECT_THROW(DeserializeLexicon(j.dump()), VersionError);
}

TEST(SerializeTest, MissingClassRejected) {
  auto j = nlohmann::ordered_json::parse(SerializeLexicon(DefaultLexicon()));
  j["classes"].erase("7");
  EXPECT_THROW(DeserializeLexicon(j.dump()), ParseError);
}

TEST(SerializeTest, MissingFileIsIoError) {
  EXPECT_THROW(LoadLexicon("/nonexistent/emotag/lexicon.json"), IoError);
}

// Reachability by breadth-first search, returning word -> depth.
std::map<std::string, int> Reachable(const WordSet& seeds,
                                     const MapSynonymSource& source) {
  std::map<std::string, int> depth;
  std::deque<std::string> queue;
  for (const auto& s : seeds) {
    depth[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::string w = queue.front();
    queue.pop_front();
    for (const auto& s : source.Lookup(w)) {
      if (depth.emplace(s, depth[w] + 1).second) queue.push_back(s);
    }
  }
  return depth;
}

TEST(ExpandPropertyTest, ClosureLawsOnRandomThesauri) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int vocab = std::uniform_int_distribution<int>(2, 60)(rng);
    const double density = std::uniform_real_distribution<double>(0, 0.08)(rng);
    MapSynonymSource source;
    std::bernoulli_distribution edge(density);
    for (int a = 0; a < vocab; ++a) {
      for (int b = 0; b < vocab; ++b) {
        if (a != b && edge(rng)) {
          source.Add("v" + std::to_string(a), "v" + std::to_string(b));
        }
      }
    }
    WordSet seed_set;
    const int n_seeds = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n_seeds; ++i) {
      seed_set.insert("v" + std::to_string(rng() % vocab));
    }
    const Words seeds(seed_set.begin(), seed_set.end());
    const ExpansionGuards open{1000, 100000};
    const Expansion e = ExpandClass(seeds, source, open);
    const auto depth = Reachable(seed_set, source);
    int max_depth = 0;
    WordSet expected;
    for (const auto& [w, d] : depth) {
      expected.insert(w);
      max_depth = std::max(max_depth, d);
    }

    // Extensive, closed and minimal: exactly the reachable set.
    EXPECT_TRUE(std::includes(e.words.begin(), e.words.end(),
                              seed_set.begin(), seed_set.end()));
    for (const auto& w : e.words) {
      for (const auto& s : source.Lookup(w)) EXPECT_TRUE(e.words.contains(s));
    }
    EXPECT_EQ(e.words, expected) << "trial " << trial;
    EXPECT_FALSE(e.stats.guard_fired());
    EXPECT_EQ(e.stats.iterations, max_depth + 1);
    EXPECT_EQ(e.stats.words_added,
              static_cast<int>(expected.size() - seed_set.size()));

    // Idempotent: expanding a closed set adds nothing in one round.
    const Words closed(e.words.begin(), e.words.end());
    const Expansion again = ExpandClass(closed, source, open);
    EXPECT_EQ(again.words, e.words);
    EXPECT_EQ(again.stats.iterations, 1);

    // Monotone in the seed set.
    Words more = seeds;
    more.push_back("v" + std::to_string(rng() % vocab));
    const Expansion bigger = ExpandClass(more, source, open);
    EXPECT_TRUE(std::includes(bigger.words.begin(), bigger.words.end(),
                              e.words.begin(), e.words.end()));

    // Truncation at k iterations keeps words within depth k.
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const Expansion cut = ExpandClass(seeds, source, {k, 100000});
    WordSet within;
    for (const auto& [w, d] : depth) {
      if (d <= k) within.insert(w);
    }
    EXPECT_EQ(cut.words, within);
    EXPECT_EQ(cut.stats.guard_fired(), max_depth > k);
    EXPECT_EQ(cut.stats.iterations, std::min(k, max_depth + 1));
  }
}

}  // namespace
}  // namespace emotag
