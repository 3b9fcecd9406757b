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

#include "emotag/textprep.h"

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "emotag/porter_stemmer.h"

namespace emotag {
namespace {

// Generated at configure time from data/stopwords.txt; defines kStopwordList.
#include "stopwords_data.inc"

bool IsTokenChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'';
}

char ToLowerAscii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

const std::unordered_set<std::string_view>& StopwordSet() {
  static const auto* const kSet = new std::unordered_set<std::string_view>(
      std::begin(kStopwordList), std::end(kStopwordList));
  return *kSet;
}

void FlushToken(std::string& current, std::vector<std::string>& out) {
  const auto first = current.find_first_not_of('\'');
  if (first != std::string::npos) {
    const auto last = current.find_last_not_of('\'');
    out.push_back(current.substr(first, last - first + 1));
  }
  current.clear();
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  // Right single quotation mark, the usual typographic apostrophe.
  static constexpr std::string_view kCurlyApostrophe = "\xE2\x80\x99";

  std::vector<std::string> out;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, kCurlyApostrophe.size()) == kCurlyApostrophe) {
      current.push_back('\'');
      i += kCurlyApostrophe.size() - 1;
      continue;
    }
    const char c = text[i];
    if (IsTokenChar(c)) {
      current.push_back(ToLowerAscii(c));
    } else if (!current.empty()) {
      FlushToken(current, out);
    }
  }
  if (!current.empty()) FlushToken(current, out);
  return out;
}

bool IsStopword(std::string_view word) {
  return StopwordSet().contains(word);
}

std::span<const std::string_view> Stopwords() { return kStopwordList; }

std::vector<std::string> RemoveStopwords(std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [](const std::string& t) { return !IsStopword(t); });
  return out;
}

std::vector<std::string> Stem(std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(PorterStem(t));
  return out;
}

TokenList Preprocess(std::string_view text) {
  const std::vector<std::string> words = RemoveStopwords(Tokenize(text));
  return TokenList{Stem(words), std::string(text)};
}

}  // namespace emotag
