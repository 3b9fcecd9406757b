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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "emotag/annotator.h"
#include "emotag/classifier.h"
#include "emotag/error.h"
#include "emotag/eval.h"
#include "emotag/lexicon.h"
#include "emotag/mailio.h"
#include "emotag/porter_stemmer.h"
#include "emotag/textprep.h"

namespace py = pybind11;

namespace emotag {
namespace {

// JSON crosses the boundary as text; the Python side decodes it with json.
std::string Dump(const nlohmann::ordered_json& j) { return j.dump(); }

PYBIND11_MODULE(_emotag, m) {
  m.doc() = "Lexicon-based emotion annotation for email (C++ core)";
  m.attr("NUM_CLASSES") = kNumClasses;

  // Later registrations are tried first, so derived types follow the base.
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<VersionError>(m, "VersionError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  py::register_exception<SynonymSourceError>(m, "SynonymSourceError",
                                             error.ptr());

  m.def("tokenize", &Tokenize, py::arg("text"));
  m.def("remove_stopwords", [](const std::vector<std::string>& tokens) {
    return RemoveStopwords(tokens);
  });
  m.def("stem", [](const std::vector<std::string>& tokens) {
    return Stem(tokens);
  });
  m.def("porter_stem", &PorterStem, py::arg("word"));
  m.def(
      "preprocess",
      [](std::string_view text) { return Preprocess(text).tokens; },
      py::arg("text"), "Stemmed, stopword-free tokens of one sentence.");

  py::class_<EmotionClass>(m, "EmotionClass")
      .def_readonly("id", &EmotionClass::id)
      .def_readonly("name", &EmotionClass::name)
      .def_readonly("emoji", &EmotionClass::emoji)
      .def_readonly("seeds", &EmotionClass::seeds);

  py::class_<ClassManifest>(m, "ClassManifest")
      .def_readonly("version", &ClassManifest::version)
      .def_readonly("classes", &ClassManifest::classes)
      .def("get", &ClassManifest::Get, py::return_value_policy::reference_internal);

  m.def("load_manifest", &LoadManifest, py::arg("path"));
  m.def("parse_manifest", &ParseManifest, py::arg("json_text"));

  py::class_<SynonymSource>(m, "SynonymSource");
  py::class_<MapSynonymSource, SynonymSource>(m, "Thesaurus")
      .def(py::init<>())
      .def("add", &MapSynonymSource::Add)
      .def("lookup", &MapSynonymSource::Lookup)
      .def("__len__", &MapSynonymSource::size);
  m.def("load_thesaurus", &LoadThesaurus, py::arg("path"));

  py::class_<ExpansionGuards>(m, "ExpansionGuards")
      .def(py::init<>())
      .def(py::init([](int max_iterations, int max_words) {
             return ExpansionGuards{max_iterations, max_words};
           }),
           py::arg("max_iterations") = 5, py::arg("max_words") = 5000)
      .def_readwrite("max_iterations", &ExpansionGuards::max_iterations)
      .def_readwrite("max_words", &ExpansionGuards::max_words);

  m.def(
      "expand_class",
      [](const std::vector<std::string>& seeds,
         const MapSynonymSource& source, const ExpansionGuards& guards) {
        Expansion e = ExpandClass(seeds, source, guards);
        py::dict stats;
        stats["iterations"] = e.stats.iterations;
        stats["words_added"] = e.stats.words_added;
        stats["guard"] = std::string(GuardEventName(e.stats.guard));
        return py::make_tuple(e.words, stats);
      },
      py::arg("seeds"), py::arg("source"),
      py::arg("guards") = ExpansionGuards{});

  py::class_<Lexicon>(m, "Lexicon")
      .def_property_readonly("manifest", &Lexicon::manifest)
      .def("keywords", &Lexicon::keywords, py::arg("class_id"))
      .def("to_json", &SerializeLexicon)
      .def_static("from_json", &DeserializeLexicon)
      .def("__eq__", [](const Lexicon& a, const Lexicon& b) { return a == b; });

  m.def("compile_lexicon", &CompileLexicon, py::arg("manifest"),
        py::arg("source"), py::arg("guards") = ExpansionGuards{});
  m.def("load_lexicon", &LoadLexicon, py::arg("path"));
  m.def("save_lexicon", &SaveLexicon, py::arg("lexicon"), py::arg("path"));

  m.def(
      "classify_json",
      [](std::string_view text, const Lexicon& lexicon) {
        return Dump(ClassificationToJson(Classify(Preprocess(text), lexicon)));
      },
      py::arg("text"), py::arg("lexicon"));
  m.def(
      "annotate_sentence_json",
      [](std::string_view text, const Lexicon& lexicon) {
        return Dump(AnnotatedSentenceToJson(AnnotateSentence(text, lexicon)));
      },
      py::arg("text"), py::arg("lexicon"));

  py::class_<EmailDoc>(m, "EmailDoc")
      .def_readonly("message_id", &EmailDoc::message_id)
      .def_readonly("subject", &EmailDoc::subject)
      .def_readonly("body_sentences", &EmailDoc::body_sentences)
      .def_readonly("received_at", &EmailDoc::received_at)
      .def_readonly("sender", &EmailDoc::sender)
      .def_readonly("lossy_charset", &EmailDoc::lossy_charset);

  py::class_<Mailbox>(m, "Mailbox")
      .def_readonly("messages", &Mailbox::messages)
      .def_readonly("source_path", &Mailbox::source_path)
      .def_readonly("skipped", &Mailbox::skipped);

  m.def(
      "parse_eml", [](py::bytes data) { return ParseEml(std::string(data)); },
      py::arg("data"));
  m.def("parse_mbox", &ParseMbox, py::arg("path"));
  m.def("segment_sentences", &SegmentSentences, py::arg("text"));

  m.def(
      "annotate_email_json",
      [](const EmailDoc& doc, const Lexicon& lexicon) {
        return Dump(AnnotatedEmailToJson(AnnotateEmail(doc, lexicon)));
      },
      py::arg("doc"), py::arg("lexicon"));
  m.def(
      "render",
      [](const std::vector<EmailDoc>& docs, const Lexicon& lexicon,
         std::string_view format) {
        std::vector<AnnotatedEmail> emails;
        for (const EmailDoc& doc : docs) {
          emails.push_back(AnnotateEmail(doc, lexicon));
        }
        return Render(emails, ParseRenderFormat(format));
      },
      py::arg("docs"), py::arg("lexicon"), py::arg("format") = "text");

  m.def(
      "evaluate_json",
      [](std::string_view corpus_jsonl, const Lexicon& lexicon) {
        return Dump(EvalReportToJson(Evaluate(ParseCorpus(corpus_jsonl),
                                              lexicon)));
      },
      py::arg("corpus_jsonl"), py::arg("lexicon"));
}

}  // namespace
}  // namespace emotag
