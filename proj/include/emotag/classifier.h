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

#ifndef EMOTAG_CLASSIFIER_H_
#define EMOTAG_CLASSIFIER_H_

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "emotag/lexicon.h"
#include "emotag/textprep.h"

namespace emotag {

// Per-class arrays are indexed by class id - 1.
template <typename T>
using PerClass = std::array<T, kNumClasses>;

// Step 3 output for one sentence: how many token occurrences hit each class.
struct MatchReport {
  int token_total = 0;
  PerClass<int> matches{};

  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

// Reciprocal of a non-negative integer difference score, kept exact.
// A zero difference yields +infinity, which beats every finite value.
class Closeness {
 public:
  constexpr Closeness() = default;
  static constexpr Closeness Reciprocal(int difference) {
    Closeness c;
    c.denominator_ = difference;
    return c;
  }
  static constexpr Closeness Infinity() { return Reciprocal(0); }

  constexpr bool is_infinite() const { return denominator_ == 0; }
  // Denominator of 1/D; zero for infinity.
  constexpr int denominator() const { return denominator_; }

  // "inf" or "1/D".
  std::string ToString() const;
  static Closeness FromString(std::string_view text);

  friend constexpr bool operator==(Closeness, Closeness) = default;
  friend constexpr std::strong_ordering operator<=>(Closeness a, Closeness b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    // 1/a vs 1/b with a, b > 0.
    return b.denominator_ <=> a.denominator_;
  }

 private:
  int denominator_ = 0;
};

struct ClassificationResult {
  MatchReport report;
  PerClass<int> difference{};
  PerClass<Closeness> closeness{};
  // Empty means no class matched (or the sentence had no tokens).
  std::optional<int> winner;
  bool tie_broken = false;

  friend bool operator==(const ClassificationResult&,
                         const ClassificationResult&) = default;
};

// Counts token occurrences per class. One occurrence counts for every class
// whose keyword set contains it.
MatchReport MatchCounts(const TokenList& tokens, const Lexicon& lexicon);

// D = T - SE for every class.
PerClass<int> DifferenceScores(const MatchReport& report);

// C = 1/D, or infinity for D = 0.
PerClass<Closeness> ClosenessScores(const PerClass<int>& differences);

// Highest closeness among classes with at least one match; lowest id on
// ties.
ClassificationResult Classify(const MatchReport& report);
ClassificationResult Classify(const TokenList& tokens, const Lexicon& lexicon);

}  // namespace emotag

#endif  // EMOTAG_CLASSIFIER_H_
