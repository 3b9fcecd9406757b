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

#ifndef EMOTAG_MAILIO_H_
#define EMOTAG_MAILIO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emotag {

// One parsed message. Body sentences are trimmed and never empty.
struct EmailDoc {
  std::string message_id;
  std::string subject;
  std::vector<std::string> body_sentences;
  std::optional<std::string> received_at;
  std::optional<std::string> sender;
  // Set when some text was in a charset we could not convert and was passed
  // through as lossy UTF-8.
  bool lossy_charset = false;

  friend bool operator==(const EmailDoc&, const EmailDoc&) = default;
};

struct Mailbox {
  std::vector<EmailDoc> messages;
  std::string source_path;
  // Messages dropped because they failed to parse.
  int skipped = 0;

  friend bool operator==(const Mailbox&, const Mailbox&) = default;
};

// Parses an RFC 5322 message: Subject (encoded words decoded), Message-ID,
// Date, From and the first text/plain part (falling back to tag-stripped
// text/html). Throws ParseError when there is no header block followed by a
// blank line. Messages without a Message-ID get "msg-<fallback_index>".
EmailDoc ParseEml(std::string_view bytes, int fallback_index = 1);

// Splits RFC 4155 mbox text on "From " separator lines. Messages that fail to
// parse are counted in `skipped`; messages.size() + skipped equals the number
// of separator lines.
Mailbox ParseMboxText(std::string_view text, std::string source_path = "");
Mailbox ParseMbox(const std::filesystem::path& path);

// Splits on '.', '!' or '?' followed by whitespace or end of text, and on
// blank lines. Sentences are trimmed, inner whitespace runs collapse to one
// space, and empty pieces are dropped. Abbreviations are not recognised.
std::vector<std::string> SegmentSentences(std::string_view text);

// Decodes RFC 2047 encoded words (B and Q) in a header value.
std::string DecodeEncodedWords(std::string_view value,
                               bool* lossy = nullptr);

// Strips tags, drops script/style content and decodes entities. Block-level
// tags become line breaks so paragraphs stay separate.
std::string HtmlToText(std::string_view html);

}  // namespace emotag

#endif  // EMOTAG_MAILIO_H_
