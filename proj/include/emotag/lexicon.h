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

#ifndef EMOTAG_LEXICON_H_
#define EMOTAG_LEXICON_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace emotag {

inline constexpr int kNumClasses = 12;

// Bit i-1 set means class i. Twelve classes fit comfortably.
using ClassMask = std::uint16_t;

struct EmotionClass {
  int id = 0;
  std::string name;
  // UTF-8 bytes of the emoji, possibly several codepoints (e.g. with VS16).
  std::string emoji;
  std::vector<std::string> seeds;

  friend bool operator==(const EmotionClass&, const EmotionClass&) = default;
};

// The twelve emotion classes. After validation `classes` is sorted by id, so
// classes[id - 1] is class `id`.
struct ClassManifest {
  std::string version;
  std::vector<EmotionClass> classes;

  const EmotionClass& Get(int id) const;

  friend bool operator==(const ClassManifest&, const ClassManifest&) = default;
};

// Throws ValidationError naming the offending class id. Sorts by id.
void ValidateManifest(ClassManifest& manifest);

// Parses and validates manifest JSON:
//   {"version": "...", "classes": [{"id", "name", "emoji", "seeds": [...]}]}
ClassManifest ParseManifest(std::string_view json_text);
ClassManifest LoadManifest(const std::filesystem::path& path);

// Maps a word to its synonyms. Implementations must be deterministic and
// return lowercase words without whitespace. Lookup failures are reported by
// throwing.
class SynonymSource {
 public:
  virtual ~SynonymSource() = default;
  virtual std::set<std::string> Lookup(std::string_view word) const = 0;
};

// In-memory table; also the representation of a loaded thesaurus file.
class MapSynonymSource : public SynonymSource {
 public:
  using Table = std::map<std::string, std::set<std::string>, std::less<>>;

  MapSynonymSource() = default;
  explicit MapSynonymSource(Table table) : table_(std::move(table)) {}

  std::set<std::string> Lookup(std::string_view word) const override;

  void Add(const std::string& word, const std::string& synonym) {
    table_[word].insert(synonym);
  }
  std::size_t size() const { return table_.size(); }

 private:
  Table table_;
};

// Parses `word<TAB>syn1,syn2,...` lines. Blank lines and lines starting with
// '#' are skipped. Repeated headwords accumulate.
MapSynonymSource ParseThesaurus(std::string_view text);
MapSynonymSource LoadThesaurus(const std::filesystem::path& path);

struct ExpansionGuards {
  int max_iterations = 5;
  int max_words = 5000;
};

enum class GuardEvent { kNone, kMaxIterations, kMaxWords };

std::string_view GuardEventName(GuardEvent event);

struct ClosureStats {
  int iterations = 0;
  // Words beyond the (deduplicated) seed set, before stemming.
  int words_added = 0;
  GuardEvent guard = GuardEvent::kNone;

  bool guard_fired() const { return guard != GuardEvent::kNone; }

  friend bool operator==(const ClosureStats&, const ClosureStats&) = default;
};

struct Expansion {
  std::set<std::string> words;
  ClosureStats stats;
};

// Least fixpoint of S <- S u synonyms(S) starting from `seeds`, computed one
// frontier at a time. The iteration that discovers nothing new counts as an
// iteration. If `max_iterations` runs out while the frontier still has unseen
// synonyms, or the word cap is hit, expansion stops and the guard is
// recorded.
Expansion ExpandClass(std::span<const std::string> seeds,
                      const SynonymSource& source,
                      const ExpansionGuards& guards = {});

// Compiled, immutable keyword sets (stemmed) for each of the twelve classes.
class Lexicon {
 public:
  static constexpr std::string_view kFormatVersion = "emotag-lexicon/1";

  // Throws ValidationError unless there are twelve non-empty keyword sets
  // and every stemmed seed is a member of its class's set.
  Lexicon(ClassManifest manifest,
          std::array<std::set<std::string>, kNumClasses> keywords,
          std::array<ClosureStats, kNumClasses> stats = {});

  const ClassManifest& manifest() const { return manifest_; }
  const std::set<std::string>& keywords(int class_id) const {
    return keywords_[class_id - 1];
  }
  const ClosureStats& stats(int class_id) const {
    return stats_[class_id - 1];
  }

  // Classes whose keyword set contains `stem`.
  ClassMask Lookup(std::string_view stem) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.manifest_ == b.manifest_ && a.keywords_ == b.keywords_ &&
           a.stats_ == b.stats_;
  }

 private:
  ClassManifest manifest_;
  std::array<std::set<std::string>, kNumClasses> keywords_;
  std::array<ClosureStats, kNumClasses> stats_;
  std::unordered_map<std::string, ClassMask> index_;
};

Lexicon CompileLexicon(const ClassManifest& manifest,
                       const SynonymSource& source,
                       const ExpansionGuards& guards = {});

// JSON: {"version", "manifest": {...}, "classes": {"1": [...], ...},
//        "stats": {"1": {"iterations", "words_added", "guard"}, ...}}
std::string SerializeLexicon(const Lexicon& lexicon);
Lexicon DeserializeLexicon(std::string_view json_text);

void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path);
Lexicon LoadLexicon(const std::filesystem::path& path);

}  // namespace emotag

#endif  // EMOTAG_LEXICON_H_
