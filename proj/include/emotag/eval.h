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

#ifndef EMOTAG_EVAL_H_
#define EMOTAG_EVAL_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emotag/lexicon.h"
#include "json.hpp"

namespace emotag {

enum class TextKind { kSubject, kBody };

// A class id, or empty for "no class".
using Label = std::optional<int>;

struct LabeledEntry {
  std::string text;
  TextKind kind = TextKind::kSubject;
  Label expected;
};

// JSON lines: {"text": "...", "kind": "subject"|"body",
//              "expected_class": 1..12 | null}
// Blank lines are skipped. Throws ParseError (with line number) on malformed
// lines and on an empty corpus.
std::vector<LabeledEntry> ParseCorpus(std::string_view jsonl);
std::vector<LabeledEntry> LoadCorpus(const std::filesystem::path& path);

struct Tally {
  int total = 0;
  int correct = 0;
  // round(100 * correct / total, 1), half away from zero; 0 when total is 0.
  double percent() const;
};

struct EvalReport {
  Tally overall;
  Tally subjects;
  Tally bodies;
  // (expected, predicted) -> count
  std::map<std::pair<Label, Label>, int> confusion;
};

// Tenths of a percent, rounded half up, computed in integers.
int PercentTenths(int correct, int total);

using Predictor = std::function<Label(const LabeledEntry&)>;

EvalReport Evaluate(const std::vector<LabeledEntry>& corpus,
                    const Predictor& predict);
// Predicts with the annotation pipeline over `lexicon`.
EvalReport Evaluate(const std::vector<LabeledEntry>& corpus,
                    const Lexicon& lexicon);

nlohmann::ordered_json EvalReportToJson(const EvalReport& report);
std::string EvalReportTable(const EvalReport& report);

}  // namespace emotag

#endif  // EMOTAG_EVAL_H_
