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

#include "test_util.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "emotag/file_util.h"

namespace emotag::testing {

std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(EMOTAG_SOURCE_DIR) / "data" / name;
}

std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(EMOTAG_SOURCE_DIR) / "tests" / "fixtures" /
         name;
}

const ClassManifest& DefaultManifest() {
  static const auto* const kManifest =
      new ClassManifest(LoadManifest(DataPath("manifest.json")));
  return *kManifest;
}

const Lexicon& DefaultLexicon() {
  static const auto* const kLexicon = new Lexicon(CompileLexicon(
      DefaultManifest(), LoadThesaurus(DataPath("thesaurus.tsv"))));
  return *kLexicon;
}

std::filesystem::path MakeTempDir(const std::string& tag) {
  static std::mt19937_64 rng{std::random_device{}()};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("emotag-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

CommandResult RunCommand(const std::string& command,
                         const std::string& stdin_text) {
  const auto dir = MakeTempDir("cmd");
  const auto in_path = dir / "stdin";
  const auto out_path = dir / "stdout";
  const auto err_path = dir / "stderr";
  WriteFile(in_path, stdin_text);
  const std::string full = "(" + command + ") <'" + in_path.string() +
                           "' >'" + out_path.string() + "' 2>'" +
                           err_path.string() + "'";
  const int status = std::system(full.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  std::filesystem::remove_all(dir);
  return result;
}

RandomLexicon MakeRandomLexicon(std::mt19937& rng, int vocabulary_size) {
  std::vector<std::string> vocabulary;
  for (int i = 0; i < vocabulary_size; ++i) {
    vocabulary.push_back(std::string{static_cast<char>('a' + i / 26),
                                     static_cast<char>('a' + i % 26)});
  }
  std::array<std::vector<std::string>, kNumClasses> sets;
  std::array<std::set<std::string>, kNumClasses> keywords;
  ClassManifest manifest = DefaultManifest();
  std::bernoulli_distribution pick(0.2);
  std::uniform_int_distribution<int> any(0, vocabulary_size - 1);
  for (int c = 0; c < kNumClasses; ++c) {
    for (const std::string& w : vocabulary) {
      if (pick(rng)) keywords[c].insert(w);
    }
    if (keywords[c].empty()) keywords[c].insert(vocabulary[any(rng)]);
    sets[c].assign(keywords[c].begin(), keywords[c].end());
    std::shuffle(sets[c].begin(), sets[c].end(), rng);
    manifest.classes[c].seeds = {sets[c].front()};
  }
  return RandomLexicon{vocabulary, sets,
                       Lexicon(std::move(manifest), std::move(keywords))};
}

OracleResult OracleClassify(
    const std::vector<std::string>& tokens,
    const std::array<std::vector<std::string>, kNumClasses>& sets) {
  OracleResult r;
  r.token_total = static_cast<int>(tokens.size());
  for (int c = 0; c < kNumClasses; ++c) {
    int count = 0;
    for (const std::string& t : tokens) {
      bool found = false;
      for (const std::string& k : sets[c]) {
        if (k == t) found = true;
      }
      if (found) ++count;
    }
    r.matches[c] = count;
    r.difference[c] = r.token_total - count;
  }
  if (r.token_total == 0) return r;
  int best_d = -1;
  for (int c = 0; c < kNumClasses; ++c) {
    if (r.matches[c] == 0) continue;
    if (best_d < 0 || r.difference[c] < best_d) best_d = r.difference[c];
  }
  if (best_d < 0) return r;
  int ties = 0;
  for (int c = 0; c < kNumClasses; ++c) {
    if (r.matches[c] > 0 && r.difference[c] == best_d) {
      if (!r.winner) r.winner = c + 1;
      ++ties;
    }
  }
  r.tie_broken = ties > 1;
  return r;
}

}  // namespace emotag::testing
