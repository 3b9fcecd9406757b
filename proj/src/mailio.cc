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

#include "emotag/mailio.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emotag/error.h"
#include "emotag/file_util.h"

namespace emotag {
namespace {

using Headers = std::vector<std::pair<std::string, std::string>>;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : Trim(s)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Splits on '\n', dropping one trailing '\r' per line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) {
        std::string_view line = text.substr(start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
      }
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

void AppendUtf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x110000) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

constexpr std::uint32_t kReplacementChar = 0xFFFD;

// Replaces invalid UTF-8 sequences with U+FFFD. Returns true if any byte was
// replaced.
bool SanitizeUtf8(std::string_view in, std::string& out) {
  bool replaced = false;
  std::size_t i = 0;
  while (i < in.size()) {
    const auto lead = static_cast<unsigned char>(in[i]);
    int len = 0;
    std::uint32_t min = 0;
    if (lead < 0x80) {
      out.push_back(static_cast<char>(lead));
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    }
    bool ok = len > 0 && i + len <= in.size();
    std::uint32_t cp = len > 0 ? (lead & (0xFF >> (len + 1))) : 0;
    for (int k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(in[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) {
      ok = false;
    }
    if (ok) {
      out.append(in.substr(i, len));
      i += len;
    } else {
      AppendUtf8(kReplacementChar, out);
      replaced = true;
      ++i;
    }
  }
  return replaced;
}

// Windows-1252 code points for bytes 0x80..0x9F; zero where undefined.
constexpr std::uint32_t kCp1252High[32] = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

// Converts `in` from `charset` to UTF-8. Unknown charsets pass through as
// sanitized UTF-8 and set *lossy.
std::string ToUtf8(std::string_view in, std::string_view charset,
                   bool* lossy) {
  const std::string cs = Lower(Trim(charset));
  std::string out;
  if (cs.empty() || cs == "utf-8" || cs == "utf8" || cs == "us-ascii" ||
      cs == "ascii") {
    if (SanitizeUtf8(in, out) && lossy) *lossy = true;
    return out;
  }
  const bool latin1 = cs == "iso-8859-1" || cs == "latin1" ||
                      cs == "iso8859-1" || cs == "latin-1";
  const bool cp1252 = cs == "windows-1252" || cs == "cp1252";
  if (latin1 || cp1252) {
    for (char ch : in) {
      const auto b = static_cast<unsigned char>(ch);
      std::uint32_t cp = b;
      if (cp1252 && b >= 0x80 && b <= 0x9F) {
        cp = kCp1252High[b - 0x80] ? kCp1252High[b - 0x80] : kReplacementChar;
      }
      AppendUtf8(cp, out);
    }
    return out;
  }
  SanitizeUtf8(in, out);
  if (lossy) *lossy = true;
  return out;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string DecodeBase64(std::string_view in) {
  static constexpr std::string_view kAlphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  std::uint32_t buffer = 0;
  int bits = 0;
  for (char c : in) {
    if (c == '=') break;
    const auto pos = kAlphabet.find(c);
    if (pos == std::string_view::npos) continue;
    buffer = (buffer << 6) | static_cast<std::uint32_t>(pos);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

// `header_mode` turns '_' into a space (RFC 2047 Q encoding).
std::string DecodeQuotedPrintable(std::string_view in, bool header_mode) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (c == '=') {
      const std::string_view rest = in.substr(i + 1);
      // Soft line break.
      if (rest.starts_with("\r\n")) {
        i += 2;
        continue;
      }
      if (rest.starts_with("\n")) {
        i += 1;
        continue;
      }
      if (rest.size() >= 2 && HexValue(rest[0]) >= 0 &&
          HexValue(rest[1]) >= 0) {
        out.push_back(static_cast<char>(HexValue(rest[0]) * 16 +
                                        HexValue(rest[1])));
        i += 2;
        continue;
      }
      out.push_back(c);
    } else if (header_mode && c == '_') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

struct ContentType {
  std::string type = "text/plain";
  std::map<std::string, std::string> params;
};

ContentType ParseContentType(std::string_view value) {
  ContentType ct;
  const auto semi = value.find(';');
  const std::string type = Lower(Trim(value.substr(0, semi)));
  if (!type.empty()) ct.type = type;
  if (semi == std::string_view::npos) return ct;
  std::string_view rest = value.substr(semi + 1);
  while (!rest.empty()) {
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) break;
    const std::string name = Lower(Trim(rest.substr(0, eq)));
    rest.remove_prefix(eq + 1);
    while (!rest.empty() && IsSpace(rest.front())) rest.remove_prefix(1);
    std::string param;
    if (!rest.empty() && rest.front() == '"') {
      rest.remove_prefix(1);
      while (!rest.empty() && rest.front() != '"') {
        if (rest.front() == '\\' && rest.size() > 1) rest.remove_prefix(1);
        param.push_back(rest.front());
        rest.remove_prefix(1);
      }
      if (!rest.empty()) rest.remove_prefix(1);
      const auto next = rest.find(';');
      rest = next == std::string_view::npos ? std::string_view()
                                            : rest.substr(next + 1);
    } else {
      const auto next = rest.find(';');
      param = std::string(Trim(rest.substr(0, next)));
      rest = next == std::string_view::npos ? std::string_view()
                                            : rest.substr(next + 1);
    }
    ct.params[name] = param;
  }
  return ct;
}

const std::string* FindHeader(const Headers& headers, std::string_view name) {
  for (const auto& [key, value] : headers) {
    if (key == name) return &value;
  }
  return nullptr;
}

bool IsHeaderName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return c >= 33 && c <= 126 && c != ':';
  });
}

// Parses the header block of `lines` starting at `pos`, leaving `pos` on the
// first body line. With `strict`, any non-header line or a missing blank
// separator is an error; otherwise parsing stops quietly.
Headers ParseHeaderBlock(const std::vector<std::string_view>& lines,
                         std::size_t& pos, bool strict) {
  Headers headers;
  while (pos < lines.size()) {
    const std::string_view line = lines[pos];
    if (line.empty() || Trim(line).empty()) {
      ++pos;
      return headers;
    }
    if (line.front() == ' ' || line.front() == '\t') {
      if (headers.empty()) {
        if (strict) throw ParseError("message starts with a continuation line");
      } else {
        headers.back().second += " ";
        headers.back().second += std::string(Trim(line));
      }
      ++pos;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || !IsHeaderName(line.substr(0, colon))) {
      if (strict) {
        throw ParseError("malformed header line: '" +
                         std::string(line.substr(0, 60)) + "'");
      }
      return headers;
    }
    headers.emplace_back(Lower(line.substr(0, colon)),
                         std::string(Trim(line.substr(colon + 1))));
    ++pos;
  }
  if (strict) throw ParseError("no blank line between header and body");
  return headers;
}

std::string JoinLines(const std::vector<std::string_view>& lines,
                      std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    out.append(lines[i]);
    out.push_back('\n');
  }
  return out;
}

struct BodyText {
  std::optional<std::string> plain;
  std::optional<std::string> html;
};

std::string DecodeTransfer(const Headers& headers, std::string_view raw) {
  const std::string* cte = FindHeader(headers, "content-transfer-encoding");
  const std::string encoding = cte ? Lower(Trim(*cte)) : "";
  if (encoding == "base64") return DecodeBase64(raw);
  if (encoding == "quoted-printable") {
    return DecodeQuotedPrintable(raw, /*header_mode=*/false);
  }
  return std::string(raw);
}

void CollectBody(const Headers& headers, std::string_view raw, BodyText& out,
                 bool* lossy, int depth) {
  const std::string* ct_header = FindHeader(headers, "content-type");
  const ContentType ct =
      ct_header ? ParseContentType(*ct_header) : ContentType{};
  const std::string* disposition = FindHeader(headers, "content-disposition");
  if (disposition && Lower(*disposition).starts_with("attachment")) return;

  if (ct.type.starts_with("multipart/")) {
    const auto b = ct.params.find("boundary");
    if (b == ct.params.end() || b->second.empty() || depth > 8) return;
    const std::string delimiter = "--" + b->second;
    const std::vector<std::string_view> lines = SplitLines(raw);
    std::optional<std::size_t> part_start;
    auto flush = [&](std::size_t end) {
      if (!part_start) return;
      std::size_t pos = *part_start;
      const Headers part_headers = ParseHeaderBlock(lines, pos, false);
      CollectBody(part_headers, JoinLines(lines, pos, end), out, lossy,
                  depth + 1);
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string_view line = Trim(lines[i]);
      if (line == delimiter + "--") {
        flush(i);
        part_start.reset();
        break;
      }
      if (line == delimiter) {
        flush(i);
        part_start = i + 1;
      }
    }
    return;
  }

  const bool is_plain = ct.type == "text/plain";
  const bool is_html = ct.type == "text/html";
  if (!is_plain && !is_html) return;
  if ((is_plain && out.plain) || (is_html && out.html)) return;

  const auto cs = ct.params.find("charset");
  const std::string charset = cs == ct.params.end() ? "" : cs->second;
  std::string text = ToUtf8(DecodeTransfer(headers, raw), charset, lossy);
  if (is_plain) {
    out.plain = std::move(text);
  } else {
    out.html = std::move(text);
  }
}

std::string StripAngles(std::string_view id) {
  id = Trim(id);
  if (id.size() >= 2 && id.front() == '<' && id.back() == '>') {
    id = id.substr(1, id.size() - 2);
  }
  return std::string(Trim(id));
}

std::optional<std::string> DecodeEntity(std::string_view name) {
  static const std::map<std::string, std::uint32_t, std::less<>> kNamed = {
      {"amp", '&'},       {"lt", '<'},        {"gt", '>'},
      {"quot", '"'},      {"apos", '\''},     {"nbsp", ' '},
      {"hellip", 0x2026}, {"mdash", 0x2014},  {"ndash", 0x2013},
      {"rsquo", 0x2019},  {"lsquo", 0x2018},  {"ldquo", 0x201C},
      {"rdquo", 0x201D},  {"copy", 0x00A9},   {"reg", 0x00AE},
      {"trade", 0x2122},  {"euro", 0x20AC},   {"bull", 0x2022}};
  std::string out;
  if (name.size() > 1 && name[0] == '#') {
    std::uint32_t cp = 0;
    const bool hex = name[1] == 'x' || name[1] == 'X';
    const std::string_view digits = name.substr(hex ? 2 : 1);
    if (digits.empty() || digits.size() > 7) return std::nullopt;
    for (char c : digits) {
      const int v = hex ? HexValue(c) : (c >= '0' && c <= '9' ? c - '0' : -1);
      if (v < 0) return std::nullopt;
      cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
    }
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      cp = kReplacementChar;
    }
    AppendUtf8(cp, out);
    return out;
  }
  const auto it = kNamed.find(name);
  if (it == kNamed.end()) return std::nullopt;
  AppendUtf8(it->second, out);
  return out;
}

bool IsBlockTag(std::string_view tag) {
  static constexpr std::string_view kBlocks[] = {
      "p",  "div", "li", "ul", "ol", "tr", "table", "blockquote", "hr",
      "h1", "h2",  "h3", "h4", "h5", "h6", "section", "article", "title"};
  return std::find(std::begin(kBlocks), std::end(kBlocks), tag) !=
         std::end(kBlocks);
}

}  // namespace

std::string DecodeEncodedWords(std::string_view value, bool* lossy) {
  std::string out;
  std::size_t i = 0;
  bool last_was_encoded = false;
  std::string pending_space;
  while (i < value.size()) {
    const auto start = value.find("=?", i);
    if (start == std::string_view::npos) {
      out += pending_space;
      out.append(value.substr(i));
      break;
    }
    // =?charset?X?text?=
    const auto q1 = value.find('?', start + 2);
    const auto q2 = q1 == std::string_view::npos ? q1 : value.find('?', q1 + 1);
    const auto end = q2 == std::string_view::npos ? q2 : value.find("?=", q2 + 1);
    if (end == std::string_view::npos || q2 != q1 + 2) {
      out += pending_space;
      out.append(value.substr(i, start + 2 - i));
      pending_space.clear();
      last_was_encoded = false;
      i = start + 2;
      continue;
    }
    const std::string_view between = value.substr(i, start - i);
    // Whitespace between two adjacent encoded words is dropped.
    if (!(last_was_encoded && Trim(between).empty())) {
      out += pending_space;
      out.append(between);
    }
    pending_space.clear();
    std::string charset(value.substr(start + 2, q1 - start - 2));
    if (const auto star = charset.find('*'); star != std::string::npos) {
      charset.resize(star);  // RFC 2231 language suffix
    }
    const char encoding =
        static_cast<char>(std::toupper(static_cast<unsigned char>(value[q1 + 1])));
    const std::string_view payload = value.substr(q2 + 1, end - q2 - 1);
    std::string raw;
    if (encoding == 'B') {
      raw = DecodeBase64(payload);
    } else if (encoding == 'Q') {
      raw = DecodeQuotedPrintable(payload, /*header_mode=*/true);
    } else {
      raw = std::string(value.substr(start, end + 2 - start));
      charset = "utf-8";
    }
    out += ToUtf8(raw, charset, lossy);
    last_was_encoded = true;
    i = end + 2;
  }
  return out;
}

std::string HtmlToText(std::string_view html) {
  std::string out;
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '<') {
      if (html.substr(i, 4) == "<!--") {
        const auto end = html.find("-->", i + 4);
        i = end == std::string_view::npos ? html.size() : end + 3;
        continue;
      }
      const auto close = html.find('>', i + 1);
      if (close == std::string_view::npos) {
        out.push_back(c);
        ++i;
        continue;
      }
      std::string_view inner = html.substr(i + 1, close - i - 1);
      const bool closing = !inner.empty() && inner.front() == '/';
      if (closing) inner.remove_prefix(1);
      std::size_t n = 0;
      while (n < inner.size() &&
             std::isalnum(static_cast<unsigned char>(inner[n]))) {
        ++n;
      }
      const std::string tag = Lower(inner.substr(0, n));
      i = close + 1;
      if (!closing && (tag == "script" || tag == "style")) {
        const std::string end_tag = "</" + tag;
        std::size_t pos = i;
        while (true) {
          pos = html.find("</", pos);
          if (pos == std::string_view::npos) {
            i = html.size();
            break;
          }
          if (Lower(html.substr(pos, end_tag.size())) == end_tag) {
            const auto gt = html.find('>', pos);
            i = gt == std::string_view::npos ? html.size() : gt + 1;
            break;
          }
          pos += 2;
        }
        continue;
      }
      if (tag == "br") {
        out.push_back('\n');
      } else if (IsBlockTag(tag)) {
        out += "\n\n";
      }
      continue;
    }
    if (c == '&') {
      const auto semi = html.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 10) {
        if (auto decoded = DecodeEntity(html.substr(i + 1, semi - i - 1))) {
          out += *decoded;
          i = semi + 1;
          continue;
        }
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

std::vector<std::string> SegmentSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::string current;
  auto flush = [&] {
    std::string s = CollapseWhitespace(current);
    if (!s.empty()) sentences.push_back(std::move(s));
    current.clear();
  };
  for (std::string_view line : SplitLines(text)) {
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      current.push_back(c);
      if ((c == '.' || c == '!' || c == '?') &&
          (i + 1 == line.size() || IsSpace(line[i + 1]))) {
        flush();
      }
    }
    current.push_back('\n');
  }
  flush();
  return sentences;
}

EmailDoc ParseEml(std::string_view bytes, int fallback_index) {
  const std::vector<std::string_view> lines = SplitLines(bytes);
  std::size_t pos = 0;
  if (!lines.empty() && lines[0].starts_with("From ")) pos = 1;
  if (pos >= lines.size()) throw ParseError("empty message");
  const Headers headers = ParseHeaderBlock(lines, pos, /*strict=*/true);
  if (headers.empty()) throw ParseError("message has no headers");

  EmailDoc doc;
  if (const std::string* subject = FindHeader(headers, "subject")) {
    doc.subject = CollapseWhitespace(
        DecodeEncodedWords(*subject, &doc.lossy_charset));
  }
  if (const std::string* id = FindHeader(headers, "message-id")) {
    doc.message_id = StripAngles(*id);
  }
  if (doc.message_id.empty()) {
    doc.message_id = "msg-" + std::to_string(fallback_index);
  }
  if (const std::string* date = FindHeader(headers, "date")) {
    doc.received_at = std::string(Trim(*date));
  }
  if (const std::string* from = FindHeader(headers, "from")) {
    doc.sender = CollapseWhitespace(
        DecodeEncodedWords(*from, &doc.lossy_charset));
  }

  BodyText body;
  CollectBody(headers, JoinLines(lines, pos, lines.size()), body,
              &doc.lossy_charset, 0);
  if (body.plain) {
    doc.body_sentences = SegmentSentences(*body.plain);
  } else if (body.html) {
    doc.body_sentences = SegmentSentences(HtmlToText(*body.html));
  }
  return doc;
}

Mailbox ParseMboxText(std::string_view text, std::string source_path) {
  Mailbox mailbox;
  mailbox.source_path = std::move(source_path);
  const std::vector<std::string_view> lines = SplitLines(text);

  std::vector<std::size_t> separators;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].starts_with("From ")) separators.push_back(i);
  }
  for (std::size_t m = 0; m < separators.size(); ++m) {
    const std::size_t begin = separators[m] + 1;
    std::size_t end = m + 1 < separators.size() ? separators[m + 1]
                                                : lines.size();
    // The blank line before the next separator belongs to the separator.
    if (end > begin && lines[end - 1].empty()) --end;
    std::string message;
    for (std::size_t i = begin; i < end; ++i) {
      std::string_view line = lines[i];
      // mboxrd quoting: ">From " -> "From ", ">>From " -> ">From ".
      const auto first = line.find_first_not_of('>');
      if (first != std::string_view::npos && first > 0 &&
          line.substr(first).starts_with("From ")) {
        line.remove_prefix(1);
      }
      message.append(line);
      message.push_back('\n');
    }
    try {
      mailbox.messages.push_back(
          ParseEml(message, static_cast<int>(m) + 1));
    } catch (const ParseError&) {
      ++mailbox.skipped;
    }
  }
  return mailbox;
}

Mailbox ParseMbox(const std::filesystem::path& path) {
  return ParseMboxText(ReadFile(path), path.string());
}

}  // namespace emotag
