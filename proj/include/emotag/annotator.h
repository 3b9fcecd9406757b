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

#ifndef EMOTAG_ANNOTATOR_H_
#define EMOTAG_ANNOTATOR_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotag/classifier.h"
#include "emotag/lexicon.h"
#include "emotag/mailio.h"
#include "json.hpp"

namespace emotag {

struct AnnotatedSentence {
  std::string raw;
  std::optional<int> class_id;
  // Both empty iff class_id is empty.
  std::string class_name;
  std::string emoji;
  ClassificationResult scores;

  friend bool operator==(const AnnotatedSentence&,
                         const AnnotatedSentence&) = default;
};

struct AnnotatedEmail {
  std::string message_id;
  AnnotatedSentence subject;
  std::vector<AnnotatedSentence> body;

  friend bool operator==(const AnnotatedEmail&,
                         const AnnotatedEmail&) = default;
};

// Preprocess, classify and attach the manifest emoji of the winning class.
AnnotatedSentence AnnotateSentence(std::string_view raw, const Lexicon& lexicon,
                                   const ClassManifest& manifest);
// Uses the manifest the lexicon was compiled from.
AnnotatedSentence AnnotateSentence(std::string_view raw,
                                   const Lexicon& lexicon);

// The subject is one sentence; body sentences are annotated independently.
AnnotatedEmail AnnotateEmail(const EmailDoc& doc, const Lexicon& lexicon,
                             const ClassManifest& manifest);
AnnotatedEmail AnnotateEmail(const EmailDoc& doc, const Lexicon& lexicon);

enum class RenderFormat { kText, kJson, kHtml };

// Throws std::invalid_argument for anything but "text", "json" or "html".
RenderFormat ParseRenderFormat(std::string_view name);

// kText: subject on the first line, then one body sentence per line, each
//        prefixed by "<emoji> " when classified; emails separated by a blank
//        line.
// kJson: array of AnnotatedEmail objects (see AnnotatedEmailToJson).
// kHtml: self-contained page; each sentence is a <span> carrying a
//        data-class attribute with the emoji inline before the text.
std::string Render(std::span<const AnnotatedEmail> emails, RenderFormat format);
std::string Render(const AnnotatedEmail& email, RenderFormat format);

// JSON wire format shared by the CLI and the HTTP service.
nlohmann::ordered_json ClassificationToJson(const ClassificationResult& result);
ClassificationResult ClassificationFromJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json AnnotatedSentenceToJson(const AnnotatedSentence& s);
AnnotatedSentence AnnotatedSentenceFromJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json AnnotatedEmailToJson(const AnnotatedEmail& email);
AnnotatedEmail AnnotatedEmailFromJson(const nlohmann::ordered_json& j);

}  // namespace emotag

#endif  // EMOTAG_ANNOTATOR_H_
