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
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "emotag/error.h"
#include "emotag/file_util.h"
#include "emotag/porter_stemmer.h"
#include "json.hpp"

namespace emotag {
namespace {

using ordered_json = nlohmann::ordered_json;

bool HasWhitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  });
}

bool HasUpper(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

// Valid UTF-8 with no ASCII at all: an emoji sequence, not a word.
bool LooksLikeEmoji(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto lead = static_cast<unsigned char>(s[i]);
    int len = 0;
    if (lead < 0x80) return false;
    if ((lead & 0xE0) == 0xC0) {
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += len;
  }
  return true;
}

std::string ClassLabel(int id) { return "class " + std::to_string(id); }

GuardEvent GuardEventFromName(std::string_view name) {
  if (name == "none") return GuardEvent::kNone;
  if (name == "max_iterations") return GuardEvent::kMaxIterations;
  if (name == "max_words") return GuardEvent::kMaxWords;
  throw ParseError("unknown guard event '" + std::string(name) + "'");
}

ordered_json ManifestToJson(const ClassManifest& manifest) {
  ordered_json classes = ordered_json::array();
  for (const EmotionClass& c : manifest.classes) {
    classes.push_back(ordered_json{{"id", c.id},
                                   {"name", c.name},
                                   {"emoji", c.emoji},
                                   {"seeds", c.seeds}});
  }
  return ordered_json{{"version", manifest.version}, {"classes", classes}};
}

ClassManifest ManifestFromJson(const ordered_json& j) {
  ClassManifest manifest;
  if (!j.is_object()) throw ParseError("manifest: expected a JSON object");
  if (!j.contains("version") || !j["version"].is_string()) {
    throw ParseError("manifest: missing string field 'version'");
  }
  manifest.version = j["version"].get<std::string>();
  if (!j.contains("classes") || !j["classes"].is_array()) {
    throw ParseError("manifest: missing array field 'classes'");
  }
  for (const auto& entry : j["classes"]) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_number_integer()) {
      throw ParseError("manifest: class entry without integer 'id'");
    }
    EmotionClass c;
    c.id = entry["id"].get<int>();
    try {
      c.name = entry.at("name").get<std::string>();
      c.emoji = entry.at("emoji").get<std::string>();
      c.seeds = entry.at("seeds").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("manifest: " + ClassLabel(c.id) + ": " + e.what());
    }
    manifest.classes.push_back(std::move(c));
  }
  return manifest;
}

}  // namespace

const EmotionClass& ClassManifest::Get(int id) const {
  if (id < 1 || id > static_cast<int>(classes.size()) ||
      classes[id - 1].id != id) {
    throw ValidationError("no " + ClassLabel(id) + " in manifest", id);
  }
  return classes[id - 1];
}

void ValidateManifest(ClassManifest& manifest) {
  if (manifest.classes.size() != kNumClasses) {
    throw ValidationError("expected 12 classes, got " +
                          std::to_string(manifest.classes.size()));
  }
  std::set<int> ids;
  std::set<std::string> emoji;
  for (const EmotionClass& c : manifest.classes) {
    if (c.id < 1 || c.id > kNumClasses) {
      throw ValidationError(
          "class id " + std::to_string(c.id) + " outside 1..12", c.id);
    }
    if (!ids.insert(c.id).second) {
      throw ValidationError("duplicate class id " + std::to_string(c.id),
                            c.id);
    }
    if (c.name.empty()) {
      throw ValidationError(ClassLabel(c.id) + ": empty name", c.id);
    }
    if (!LooksLikeEmoji(c.emoji)) {
      throw ValidationError(ClassLabel(c.id) + ": emoji must be non-empty "
                            "non-ASCII UTF-8", c.id);
    }
    if (!emoji.insert(c.emoji).second) {
      throw ValidationError(ClassLabel(c.id) + ": emoji shared with another "
                            "class", c.id);
    }
    if (c.seeds.empty()) {
      throw ValidationError(ClassLabel(c.id) + ": empty seeds", c.id);
    }
    for (const std::string& seed : c.seeds) {
      if (seed.empty() || HasWhitespace(seed) || HasUpper(seed)) {
        throw ValidationError(ClassLabel(c.id) + ": seed '" + seed +
                                  "' must be a lowercase word",
                              c.id);
      }
    }
  }
  // Twelve distinct ids in 1..12 is exactly {1..12}.
  std::sort(manifest.classes.begin(), manifest.classes.end(),
            [](const EmotionClass& a, const EmotionClass& b) {
              return a.id < b.id;
            });
}

ClassManifest ParseManifest(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  ClassManifest manifest = ManifestFromJson(j);
  ValidateManifest(manifest);
  return manifest;
}

ClassManifest LoadManifest(const std::filesystem::path& path) {
  return ParseManifest(ReadFile(path));
}

std::set<std::string> MapSynonymSource::Lookup(std::string_view word) const {
  const auto it = table_.find(word);
  return it == table_.end() ? std::set<std::string>{} : it->second;
}

MapSynonymSource ParseThesaurus(std::string_view text) {
  MapSynonymSource::Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("thesaurus line " + std::to_string(line_no) +
                       ": missing TAB");
    }
    const std::string word = line.substr(0, tab);
    if (word.empty() || HasWhitespace(word) || HasUpper(word)) {
      throw ParseError("thesaurus line " + std::to_string(line_no) +
                       ": bad headword '" + word + "'");
    }
    std::set<std::string>& synonyms = table[word];
    std::istringstream fields(line.substr(tab + 1));
    std::string synonym;
    while (std::getline(fields, synonym, ',')) {
      if (synonym.empty()) continue;
      if (HasWhitespace(synonym) || HasUpper(synonym)) {
        throw ParseError("thesaurus line " + std::to_string(line_no) +
                         ": bad synonym '" + synonym + "'");
      }
      if (synonym != word) synonyms.insert(synonym);
    }
  }
  return MapSynonymSource(std::move(table));
}

MapSynonymSource LoadThesaurus(const std::filesystem::path& path) {
  return ParseThesaurus(ReadFile(path));
}

std::string_view GuardEventName(GuardEvent event) {
  switch (event) {
    case GuardEvent::kNone:
      return "none";
    case GuardEvent::kMaxIterations:
      return "max_iterations";
    case GuardEvent::kMaxWords:
      return "max_words";
  }
  return "none";
}

Expansion ExpandClass(std::span<const std::string> seeds,
                      const SynonymSource& source,
                      const ExpansionGuards& guards) {
  if (seeds.empty()) throw ValidationError("expand: empty seed list");
  if (guards.max_iterations <= 0 || guards.max_words <= 0) {
    throw ValidationError("expand: guards must be positive");
  }

  auto lookup = [&source](const std::string& word) {
    std::set<std::string> synonyms;
    try {
      synonyms = source.Lookup(word);
    } catch (const std::exception& e) {
      throw SynonymSourceError(
          "synonym lookup failed for '" + word + "': " + e.what(), word);
    }
    for (const std::string& s : synonyms) {
      if (s.empty() || HasWhitespace(s)) {
        throw SynonymSourceError("synonym source returned '" + s +
                                     "' for '" + word + "'",
                                 word);
      }
    }
    return synonyms;
  };

  Expansion result;
  result.words.insert(seeds.begin(), seeds.end());
  const std::size_t seed_count = result.words.size();
  std::set<std::string> frontier = result.words;
  int& iterations = result.stats.iterations;

  while (!frontier.empty()) {
    if (iterations == guards.max_iterations) {
      // Out of iterations: only a guard event if closure was really cut off.
      for (const std::string& word : frontier) {
        const std::set<std::string> synonyms = lookup(word);
        const bool unseen = std::any_of(
            synonyms.begin(), synonyms.end(),
            [&](const std::string& s) { return !result.words.contains(s); });
        if (unseen) {
          result.stats.guard = GuardEvent::kMaxIterations;
          break;
        }
      }
      break;
    }
    ++iterations;
    std::set<std::string> next;
    for (const std::string& word : frontier) {
      for (const std::string& s : lookup(word)) {
        if (result.words.contains(s) || next.contains(s)) continue;
        if (result.words.size() + next.size() >=
            static_cast<std::size_t>(guards.max_words)) {
          result.stats.guard = GuardEvent::kMaxWords;
          break;
        }
        next.insert(s);
      }
      if (result.stats.guard_fired()) break;
    }
    result.words.insert(next.begin(), next.end());
    if (result.stats.guard_fired()) break;
    frontier = std::move(next);
  }
  result.stats.words_added =
      static_cast<int>(result.words.size() - seed_count);
  return result;
}

Lexicon::Lexicon(ClassManifest manifest,
                 std::array<std::set<std::string>, kNumClasses> keywords,
                 std::array<ClosureStats, kNumClasses> stats)
    : manifest_(std::move(manifest)),
      keywords_(std::move(keywords)),
      stats_(stats) {
  ValidateManifest(manifest_);
  for (int id = 1; id <= kNumClasses; ++id) {
    const std::set<std::string>& set = keywords_[id - 1];
    if (set.empty()) {
      throw ValidationError(ClassLabel(id) + ": empty keyword set", id);
    }
    for (const std::string& seed : manifest_.Get(id).seeds) {
      if (!set.contains(PorterStem(seed))) {
        throw ValidationError(ClassLabel(id) + ": stemmed seed '" +
                                  PorterStem(seed) + "' missing from keywords",
                              id);
      }
    }
    for (const std::string& word : set) {
      index_[word] |= static_cast<ClassMask>(1u << (id - 1));
    }
  }
}

ClassMask Lexicon::Lookup(std::string_view stem) const {
  const auto it = index_.find(std::string(stem));
  return it == index_.end() ? ClassMask{0} : it->second;
}

Lexicon CompileLexicon(const ClassManifest& manifest,
                       const SynonymSource& source,
                       const ExpansionGuards& guards) {
  ClassManifest validated = manifest;
  ValidateManifest(validated);
  std::array<std::set<std::string>, kNumClasses> keywords;
  std::array<ClosureStats, kNumClasses> stats;
  for (const EmotionClass& c : validated.classes) {
    Expansion expansion = ExpandClass(c.seeds, source, guards);
    for (const std::string& word : expansion.words) {
      keywords[c.id - 1].insert(PorterStem(word));
    }
    stats[c.id - 1] = expansion.stats;
  }
  return Lexicon(std::move(validated), std::move(keywords), stats);
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  ordered_json classes = ordered_json::object();
  ordered_json stats = ordered_json::object();
  for (int id = 1; id <= kNumClasses; ++id) {
    const std::string key = std::to_string(id);
    classes[key] = lexicon.keywords(id);
    const ClosureStats& s = lexicon.stats(id);
    stats[key] = ordered_json{{"iterations", s.iterations},
                              {"words_added", s.words_added},
                              {"guard", GuardEventName(s.guard)}};
  }
  ordered_json j{{"version", Lexicon::kFormatVersion},
                 {"manifest", ManifestToJson(lexicon.manifest())},
                 {"classes", classes},
                 {"stats", stats}};
  return j.dump(2) + "\n";
}

Lexicon DeserializeLexicon(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lexicon: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j["version"].is_string()) {
    throw ParseError("lexicon: missing string field 'version'");
  }
  const std::string version = j["version"].get<std::string>();
  if (version != Lexicon::kFormatVersion) {
    throw VersionError("lexicon: unsupported version '" + version +
                       "', expected '" +
                       std::string(Lexicon::kFormatVersion) + "'");
  }
  if (!j.contains("manifest")) throw ParseError("lexicon: missing manifest");
  ClassManifest manifest = ManifestFromJson(j["manifest"]);

  std::array<std::set<std::string>, kNumClasses> keywords;
  std::array<ClosureStats, kNumClasses> stats;
  try {
    for (int id = 1; id <= kNumClasses; ++id) {
      const std::string key = std::to_string(id);
      keywords[id - 1] =
          j.at("classes").at(key).get<std::set<std::string>>();
      const auto& s = j.at("stats").at(key);
      stats[id - 1].iterations = s.at("iterations").get<int>();
      stats[id - 1].words_added = s.at("words_added").get<int>();
      stats[id - 1].guard =
          GuardEventFromName(s.at("guard").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lexicon: ") + e.what());
  }
  return Lexicon(std::move(manifest), std::move(keywords), stats);
}

void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  WriteFile(path, SerializeLexicon(lexicon));
}

Lexicon LoadLexicon(const std::filesystem::path& path) {
  return DeserializeLexicon(ReadFile(path));
}

}  // namespace emotag
