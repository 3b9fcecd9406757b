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

#ifndef EMOTAG_TEXTPREP_H_
#define EMOTAG_TEXTPREP_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emotag {

// Processed form of one sentence or subject line.
//
// `tokens` holds lowercase Porter stems with stopwords removed; its length is
// the token total the classifier compares against (stopwords do not count).
struct TokenList {
  std::vector<std::string> tokens;
  std::string raw;

  friend bool operator==(const TokenList&, const TokenList&) = default;
};

// Splits on every run of characters that are not ASCII letters, digits or
// apostrophes, then lowercases. U+2019 is read as an apostrophe. Apostrophes
// at either end of a token are trimmed; tokens left empty are dropped.
std::vector<std::string> Tokenize(std::string_view text);

// True if `word` is in the bundled 127-word English stopword list.
bool IsStopword(std::string_view word);

// The bundled stopword list, in file order.
std::span<const std::string_view> Stopwords();

std::vector<std::string> RemoveStopwords(std::span<const std::string> tokens);

std::vector<std::string> Stem(std::span<const std::string> tokens);

// Stem(RemoveStopwords(Tokenize(text))), keeping `text` as the raw form.
TokenList Preprocess(std::string_view text);

}  // namespace emotag

#endif  // EMOTAG_TEXTPREP_H_
