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

#include "emotag/eval.h"

#include <cstdio>
#include <sstream>
#include <string>

#include "emotag/annotator.h"
#include "emotag/error.h"
#include "emotag/file_util.h"

namespace emotag {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json LabelToJson(const Label& label) {
  return label ? ordered_json(*label) : ordered_json();
}

std::string LabelToString(const Label& label) {
  return label ? std::to_string(*label) : "none";
}

ordered_json TallyToJson(const Tally& t) {
  return ordered_json{
      {"total", t.total}, {"correct", t.correct}, {"percent", t.percent()}};
}

std::string FormatPercent(const Tally& t) {
  const int tenths = PercentTenths(t.correct, t.total);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

}  // namespace

int PercentTenths(int correct, int total) {
  if (total <= 0) return 0;
  // round(1000 * c / t) = floor((2000 * c + t) / (2 * t)) for c, t >= 0.
  const long long num = 2000LL * correct + total;
  return static_cast<int>(num / (2LL * total));
}

double Tally::percent() const { return PercentTenths(correct, total) / 10.0; }

std::vector<LabeledEntry> ParseCorpus(std::string_view jsonl) {
  std::vector<LabeledEntry> corpus;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "corpus line " + std::to_string(line_no) + ": ";
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(where + e.what());
    }
    LabeledEntry entry;
    try {
      entry.text = j.at("text").get<std::string>();
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "subject") {
        entry.kind = TextKind::kSubject;
      } else if (kind == "body") {
        entry.kind = TextKind::kBody;
      } else {
        throw ParseError(where + "kind must be 'subject' or 'body'");
      }
      const ordered_json& expected = j.at("expected_class");
      if (!expected.is_null()) {
        const int id = expected.get<int>();
        if (id < 1 || id > kNumClasses) {
          throw ParseError(where + "expected_class outside 1..12");
        }
        entry.expected = id;
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + e.what());
    }
    corpus.push_back(std::move(entry));
  }
  if (corpus.empty()) throw ParseError("corpus is empty");
  return corpus;
}

std::vector<LabeledEntry> LoadCorpus(const std::filesystem::path& path) {
  return ParseCorpus(ReadFile(path));
}

EvalReport Evaluate(const std::vector<LabeledEntry>& corpus,
                    const Predictor& predict) {
  EvalReport report;
  for (const LabeledEntry& entry : corpus) {
    const Label predicted = predict(entry);
    const bool correct = predicted == entry.expected;
    Tally& kind =
        entry.kind == TextKind::kSubject ? report.subjects : report.bodies;
    for (Tally* t : {&report.overall, &kind}) {
      ++t->total;
      if (correct) ++t->correct;
    }
    ++report.confusion[{entry.expected, predicted}];
  }
  return report;
}

EvalReport Evaluate(const std::vector<LabeledEntry>& corpus,
                    const Lexicon& lexicon) {
  return Evaluate(corpus, [&lexicon](const LabeledEntry& entry) {
    return AnnotateSentence(entry.text, lexicon).class_id;
  });
}

ordered_json EvalReportToJson(const EvalReport& report) {
  ordered_json confusion = ordered_json::array();
  for (const auto& [key, count] : report.confusion) {
    confusion.push_back(ordered_json{{"expected", LabelToJson(key.first)},
                                     {"predicted", LabelToJson(key.second)},
                                     {"count", count}});
  }
  return ordered_json{
      {"total", report.overall.total},
      {"correct", report.overall.correct},
      {"accuracy_percent", report.overall.percent()},
      {"per_kind",
       {{"subject", TallyToJson(report.subjects)},
        {"body", TallyToJson(report.bodies)}}},
      {"confusion", confusion}};
}

std::string EvalReportTable(const EvalReport& report) {
  std::ostringstream out;
  char line[96];
  std::snprintf(line, sizeof(line), "%-10s %8s %8s %9s\n", "kind", "correct",
                "total", "accuracy");
  out << line;
  const std::pair<const char*, const Tally*> rows[] = {
      {"subject", &report.subjects},
      {"body", &report.bodies},
      {"overall", &report.overall}};
  for (const auto& [name, tally] : rows) {
    std::snprintf(line, sizeof(line), "%-10s %8d %8d %8s%%\n", name,
                  tally->correct, tally->total, FormatPercent(*tally).c_str());
    out << line;
  }
  out << "\nconfusion (expected -> predicted: count)\n";
  for (const auto& [key, count] : report.confusion) {
    out << "  " << LabelToString(key.first) << " -> "
        << LabelToString(key.second) << ": " << count << "\n";
  }
  return out.str();
}

}  // namespace emotag
