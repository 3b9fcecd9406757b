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

#include "emotag/annotator.h"

#include <stdexcept>
#include <string>

#include "emotag/error.h"
#include "emotag/textprep.h"

namespace emotag {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string EscapeHtml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

template <typename T, typename F>
ordered_json PerClassToJson(const PerClass<T>& values, F&& convert) {
  ordered_json j = ordered_json::object();
  for (int id = 1; id <= kNumClasses; ++id) {
    j[std::to_string(id)] = convert(values[id - 1]);
  }
  return j;
}

template <typename T, typename F>
PerClass<T> PerClassFromJson(const ordered_json& j, F&& convert) {
  PerClass<T> values{};
  for (int id = 1; id <= kNumClasses; ++id) {
    values[id - 1] = convert(j.at(std::to_string(id)));
  }
  return values;
}

void RenderTextLine(const AnnotatedSentence& s, std::string& out) {
  if (s.class_id) {
    out += s.emoji;
    out.push_back(' ');
  }
  out += s.raw;
  out.push_back('\n');
}

void RenderHtmlSentence(const AnnotatedSentence& s, std::string& out) {
  out += "<span class=\"sentence\" data-class=\"";
  out += s.class_id ? std::to_string(*s.class_id) : "none";
  out += "\">";
  if (s.class_id) {
    out += "<span class=\"emoji\" title=\"" + EscapeHtml(s.class_name) +
           "\">" + s.emoji + "</span> ";
  }
  out += EscapeHtml(s.raw);
  out += "</span>";
}

constexpr std::string_view kHtmlHead =
    "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
    "<title>Annotated mail</title>\n<style>\n"
    "body{font-family:sans-serif;max-width:48em;margin:2em auto}\n"
    "article{border-bottom:1px solid #ccc;padding:1em 0}\n"
    ".sentence{display:block;margin:.2em 0}\n"
    "</style>\n</head>\n<body>\n";

}  // namespace

AnnotatedSentence AnnotateSentence(std::string_view raw, const Lexicon& lexicon,
                                   const ClassManifest& manifest) {
  AnnotatedSentence s;
  s.raw = std::string(raw);
  s.scores = Classify(Preprocess(raw), lexicon);
  s.class_id = s.scores.winner;
  if (s.class_id) {
    const EmotionClass& c = manifest.Get(*s.class_id);
    s.class_name = c.name;
    s.emoji = c.emoji;
  }
  return s;
}

AnnotatedSentence AnnotateSentence(std::string_view raw,
                                   const Lexicon& lexicon) {
  return AnnotateSentence(raw, lexicon, lexicon.manifest());
}

AnnotatedEmail AnnotateEmail(const EmailDoc& doc, const Lexicon& lexicon,
                             const ClassManifest& manifest) {
  AnnotatedEmail email;
  email.message_id = doc.message_id;
  email.subject = AnnotateSentence(doc.subject, lexicon, manifest);
  email.body.reserve(doc.body_sentences.size());
  for (const std::string& sentence : doc.body_sentences) {
    email.body.push_back(AnnotateSentence(sentence, lexicon, manifest));
  }
  return email;
}

AnnotatedEmail AnnotateEmail(const EmailDoc& doc, const Lexicon& lexicon) {
  return AnnotateEmail(doc, lexicon, lexicon.manifest());
}

RenderFormat ParseRenderFormat(std::string_view name) {
  if (name == "text") return RenderFormat::kText;
  if (name == "json") return RenderFormat::kJson;
  if (name == "html") return RenderFormat::kHtml;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text, json or html)");
}

std::string Render(std::span<const AnnotatedEmail> emails,
                   RenderFormat format) {
  std::string out;
  switch (format) {
    case RenderFormat::kText:
      for (std::size_t i = 0; i < emails.size(); ++i) {
        if (i > 0) out.push_back('\n');
        RenderTextLine(emails[i].subject, out);
        for (const AnnotatedSentence& s : emails[i].body) {
          RenderTextLine(s, out);
        }
      }
      break;
    case RenderFormat::kJson: {
      ordered_json j = ordered_json::array();
      for (const AnnotatedEmail& email : emails) {
        j.push_back(AnnotatedEmailToJson(email));
      }
      out = j.dump(2) + "\n";
      break;
    }
    case RenderFormat::kHtml:
      out += kHtmlHead;
      for (const AnnotatedEmail& email : emails) {
        out += "<article class=\"email\" data-message-id=\"" +
               EscapeHtml(email.message_id) + "\">\n<h2 class=\"subject\">";
        RenderHtmlSentence(email.subject, out);
        out += "</h2>\n<div class=\"body\">\n";
        for (const AnnotatedSentence& s : email.body) {
          RenderHtmlSentence(s, out);
          out.push_back('\n');
        }
        out += "</div>\n</article>\n";
      }
      out += "</body>\n</html>\n";
      break;
  }
  return out;
}

std::string Render(const AnnotatedEmail& email, RenderFormat format) {
  return Render(std::span<const AnnotatedEmail>(&email, 1), format);
}

ordered_json ClassificationToJson(const ClassificationResult& result) {
  ordered_json j;
  j["token_total"] = result.report.token_total;
  j["matches"] = PerClassToJson(result.report.matches, [](int v) { return v; });
  j["difference"] = PerClassToJson(result.difference, [](int v) { return v; });
  j["closeness"] = PerClassToJson(
      result.closeness, [](Closeness c) { return c.ToString(); });
  j["winner"] = result.winner ? ordered_json(*result.winner) : ordered_json();
  j["tie_broken"] = result.tie_broken;
  return j;
}

ClassificationResult ClassificationFromJson(const ordered_json& j) {
  try {
    ClassificationResult r;
    r.report.token_total = j.at("token_total").get<int>();
    r.report.matches = PerClassFromJson<int>(
        j.at("matches"), [](const ordered_json& v) { return v.get<int>(); });
    r.difference = PerClassFromJson<int>(
        j.at("difference"), [](const ordered_json& v) { return v.get<int>(); });
    r.closeness = PerClassFromJson<Closeness>(
        j.at("closeness"), [](const ordered_json& v) {
          return Closeness::FromString(v.get<std::string>());
        });
    if (!j.at("winner").is_null()) r.winner = j.at("winner").get<int>();
    r.tie_broken = j.at("tie_broken").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("classification: ") + e.what());
  }
}

ordered_json AnnotatedSentenceToJson(const AnnotatedSentence& s) {
  ordered_json j;
  j["raw"] = s.raw;
  j["class_id"] = s.class_id ? ordered_json(*s.class_id) : ordered_json();
  j["class_name"] = s.class_id ? ordered_json(s.class_name) : ordered_json();
  j["emoji"] = s.emoji;
  j["scores"] = ClassificationToJson(s.scores);
  return j;
}

AnnotatedSentence AnnotatedSentenceFromJson(const ordered_json& j) {
  try {
    AnnotatedSentence s;
    s.raw = j.at("raw").get<std::string>();
    if (!j.at("class_id").is_null()) {
      s.class_id = j.at("class_id").get<int>();
      s.class_name = j.at("class_name").get<std::string>();
    }
    s.emoji = j.at("emoji").get<std::string>();
    s.scores = ClassificationFromJson(j.at("scores"));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("annotated sentence: ") + e.what());
  }
}

ordered_json AnnotatedEmailToJson(const AnnotatedEmail& email) {
  ordered_json body = ordered_json::array();
  for (const AnnotatedSentence& s : email.body) {
    body.push_back(AnnotatedSentenceToJson(s));
  }
  return ordered_json{{"message_id", email.message_id},
                      {"subject", AnnotatedSentenceToJson(email.subject)},
                      {"body", body}};
}

AnnotatedEmail AnnotatedEmailFromJson(const ordered_json& j) {
  try {
    AnnotatedEmail email;
    email.message_id = j.at("message_id").get<std::string>();
    email.subject = AnnotatedSentenceFromJson(j.at("subject"));
    for (const auto& s : j.at("body")) {
      email.body.push_back(AnnotatedSentenceFromJson(s));
    }
    return email;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("annotated email: ") + e.what());
  }
}

}  // namespace emotag
