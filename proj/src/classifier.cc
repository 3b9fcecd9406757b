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

#include "emotag/classifier.h"

#include <charconv>
#include <string>

#include "emotag/error.h"

namespace emotag {

std::string Closeness::ToString() const {
  if (is_infinite()) return "inf";
  return "1/" + std::to_string(denominator_);
}

Closeness Closeness::FromString(std::string_view text) {
  if (text == "inf") return Infinity();
  if (text.size() > 2 && text.substr(0, 2) == "1/") {
    int d = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec == std::errc() && ptr == last && d > 0) return Reciprocal(d);
  }
  throw ParseError("bad closeness value '" + std::string(text) + "'");
}

MatchReport MatchCounts(const TokenList& tokens, const Lexicon& lexicon) {
  MatchReport report;
  report.token_total = static_cast<int>(tokens.tokens.size());
  for (const std::string& token : tokens.tokens) {
    const ClassMask mask = lexicon.Lookup(token);
    if (mask == 0) continue;
    for (int i = 0; i < kNumClasses; ++i) {
      if (mask & (1u << i)) ++report.matches[i];
    }
  }
  return report;
}

PerClass<int> DifferenceScores(const MatchReport& report) {
  PerClass<int> d{};
  for (int i = 0; i < kNumClasses; ++i) {
    d[i] = report.token_total - report.matches[i];
  }
  return d;
}

PerClass<Closeness> ClosenessScores(const PerClass<int>& differences) {
  PerClass<Closeness> c{};
  for (int i = 0; i < kNumClasses; ++i) {
    c[i] = Closeness::Reciprocal(differences[i]);
  }
  return c;
}

ClassificationResult Classify(const MatchReport& report) {
  ClassificationResult result;
  result.report = report;
  result.difference = DifferenceScores(report);
  result.closeness = ClosenessScores(result.difference);
  if (report.token_total == 0) return result;

  int best = -1;
  for (int i = 0; i < kNumClasses; ++i) {
    if (report.matches[i] == 0) continue;
    if (best < 0 || result.closeness[i] > result.closeness[best]) {
      best = i;
      result.tie_broken = false;
    } else if (result.closeness[i] == result.closeness[best]) {
      result.tie_broken = true;
    }
  }
  if (best >= 0) result.winner = best + 1;
  return result;
}

ClassificationResult Classify(const TokenList& tokens,
                              const Lexicon& lexicon) {
  return Classify(MatchCounts(tokens, lexicon));
}

}  // namespace emotag
