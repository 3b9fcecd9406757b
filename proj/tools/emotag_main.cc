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

// emotag: build lexicons, classify text, annotate mail, evaluate accuracy and
// serve the annotation API.
//
// Exit codes: 0 success, 2 usage or input error.

#include <signal.h>

#include <charconv>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "emotag/annotator.h"
#include "emotag/classifier.h"
#include "emotag/error.h"
#include "emotag/eval.h"
#include "emotag/file_util.h"
#include "emotag/lexicon.h"
#include "emotag/mailio.h"
#include "emotag/server.h"
#include "emotag/textprep.h"
#include "httplib.h"

namespace {

constexpr int kUsageError = 2;

struct BuildArgs {
  std::string manifest;
  std::string thesaurus;
  std::string out;
  int max_iterations = emotag::ExpansionGuards{}.max_iterations;
  int max_words = emotag::ExpansionGuards{}.max_words;
};

struct ClassifyArgs {
  std::string lexicon;
  std::vector<std::string> texts;
};

struct AnnotateArgs {
  std::string lexicon;
  std::string in;
  std::string format = "text";
  std::string out = "-";
};

struct EvalArgs {
  std::string lexicon;
  std::string corpus;
};

struct ServeArgs {
  std::string lexicon;
  std::string addr = "127.0.0.1:8080";
  std::size_t cache_size = emotag::ServiceOptions{}.cache_size;
  std::size_t max_mailbox_bytes = emotag::ServiceOptions{}.max_mailbox_bytes;
  std::string static_dir;
};

int BuildLexicon(const BuildArgs& args) {
  const emotag::ClassManifest manifest = emotag::LoadManifest(args.manifest);
  const emotag::MapSynonymSource thesaurus =
      emotag::LoadThesaurus(args.thesaurus);
  const emotag::Lexicon lexicon = emotag::CompileLexicon(
      manifest, thesaurus, {args.max_iterations, args.max_words});
  emotag::SaveLexicon(lexicon, args.out);

  std::cout << "compiled " << emotag::kNumClasses << " classes from "
            << args.manifest << " (manifest " << manifest.version << ")\n";
  for (const emotag::EmotionClass& c : lexicon.manifest().classes) {
    const emotag::ClosureStats& s = lexicon.stats(c.id);
    std::cout << "  class " << c.id << " " << c.name << ": "
              << lexicon.keywords(c.id).size() << " keywords, "
              << s.iterations << " iterations, +" << s.words_added
              << " words\n";
    if (s.guard_fired()) {
      std::cerr << "warning: class " << c.id << " (" << c.name
                << "): growth guard " << emotag::GuardEventName(s.guard)
                << " fired; closure truncated\n";
    }
  }
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

int Classify(const ClassifyArgs& args) {
  const emotag::Lexicon lexicon = emotag::LoadLexicon(args.lexicon);
  auto emit = [&lexicon](const std::string& text) {
    const auto result =
        emotag::Classify(emotag::Preprocess(text), lexicon);
    std::cout << emotag::ClassificationToJson(result).dump() << "\n";
  };
  if (!args.texts.empty()) {
    for (const std::string& text : args.texts) emit(text);
    return 0;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    emit(line);
  }
  return 0;
}

int Annotate(const AnnotateArgs& args) {
  const emotag::RenderFormat format = emotag::ParseRenderFormat(args.format);
  const emotag::Lexicon lexicon = emotag::LoadLexicon(args.lexicon);

  std::vector<emotag::EmailDoc> docs;
  const std::filesystem::path in(args.in);
  if (in.extension() == ".eml") {
    docs.push_back(emotag::ParseEml(emotag::ReadFile(in)));
  } else {
    emotag::Mailbox mailbox = emotag::ParseMbox(in);
    std::cerr << "parsed " << mailbox.messages.size() << " messages, skipped "
              << mailbox.skipped << "\n";
    docs = std::move(mailbox.messages);
  }

  std::vector<emotag::AnnotatedEmail> annotated;
  annotated.reserve(docs.size());
  for (const emotag::EmailDoc& doc : docs) {
    annotated.push_back(emotag::AnnotateEmail(doc, lexicon));
  }
  const std::string rendered =
      annotated.empty() && format != emotag::RenderFormat::kJson
          ? std::string()
          : emotag::Render(annotated, format);
  if (args.out == "-") {
    std::cout << rendered;
  } else {
    emotag::WriteFile(args.out, rendered);
  }
  return 0;
}

int Eval(const EvalArgs& args) {
  const emotag::Lexicon lexicon = emotag::LoadLexicon(args.lexicon);
  const auto corpus = emotag::LoadCorpus(args.corpus);
  const emotag::EvalReport report = emotag::Evaluate(corpus, lexicon);
  std::cout << emotag::EvalReportToJson(report).dump(2) << "\n";
  std::cerr << emotag::EvalReportTable(report);
  return 0;
}

bool SplitAddr(const std::string& addr, std::string& host, int& port) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos || colon == 0) return false;
  host = addr.substr(0, colon);
  const std::string port_text = addr.substr(colon + 1);
  const char* first = port_text.data();
  const char* last = first + port_text.size();
  const auto [ptr, ec] = std::from_chars(first, last, port);
  return ec == std::errc() && ptr == last && port >= 0 && port <= 65535;
}

int Serve(const ServeArgs& args) {
  std::string host;
  int port = 0;
  if (!SplitAddr(args.addr, host, port)) {
    std::cerr << "error: --addr must be HOST:PORT with PORT in 0..65535\n";
    return kUsageError;
  }
  auto lexicon =
      std::make_shared<const emotag::Lexicon>(emotag::LoadLexicon(args.lexicon));
  emotag::ServiceOptions options;
  options.cache_size = args.cache_size;
  options.max_mailbox_bytes = args.max_mailbox_bytes;
  emotag::Service service(lexicon, options);

  httplib::Server server;
  emotag::RegisterRoutes(server, service);
  if (!args.static_dir.empty() &&
      !server.set_mount_point("/", args.static_dir)) {
    std::cerr << "error: cannot serve static files from " << args.static_dir
              << "\n";
    return kUsageError;
  }

  // Stop cleanly on SIGINT/SIGTERM: block them here and wait in a thread.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const int bound = port == 0 ? server.bind_to_any_port(host)
                              : (server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    std::cerr << "error: cannot bind " << args.addr << "\n";
    return kUsageError;
  }
  std::thread waiter([&server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  waiter.detach();
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  server.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-based emotion annotation for email"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd =
      app.add_subcommand("build-lexicon", "Compile a lexicon from seeds");
  build_cmd->add_option("--manifest", build.manifest, "Class manifest JSON")
      ->required();
  build_cmd->add_option("--thesaurus", build.thesaurus, "Synonym table")
      ->required();
  build_cmd->add_option("--out", build.out, "Output lexicon JSON")->required();
  build_cmd->add_option("--max-iter", build.max_iterations,
                        "Closure iteration cap")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--max-words", build.max_words,
                        "Per-class word cap")
      ->check(CLI::PositiveNumber);

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify each argument, or each stdin line");
  classify_cmd->add_option("--lexicon", classify.lexicon)->required();
  classify_cmd->add_option("text", classify.texts, "Text to classify");

  AnnotateArgs annotate;
  auto* annotate_cmd =
      app.add_subcommand("annotate", "Annotate an .mbox or .eml file");
  annotate_cmd->add_option("--lexicon", annotate.lexicon)->required();
  annotate_cmd->add_option("--in", annotate.in, "Input .mbox or .eml")
      ->required();
  annotate_cmd->add_option("--format", annotate.format)
      ->check(CLI::IsMember({"text", "json", "html"}));
  annotate_cmd->add_option("--out", annotate.out, "Output path, - for stdout");

  EvalArgs eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "Accuracy over a labelled JSONL corpus");
  eval_cmd->add_option("--lexicon", eval.lexicon)->required();
  eval_cmd->add_option("--corpus", eval.corpus)->required();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--lexicon", serve.lexicon)->required();
  serve_cmd->add_option("--addr", serve.addr, "HOST:PORT (port 0 = any)");
  serve_cmd->add_option("--cache-size", serve.cache_size,
                        "Mailboxes kept in memory")
      ->check(CLI::PositiveNumber);
  serve_cmd->add_option("--max-mailbox-bytes", serve.max_mailbox_bytes);
  serve_cmd->add_option("--static", serve.static_dir,
                        "Directory of static files to serve at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*build_cmd) return BuildLexicon(build);
    if (*classify_cmd) return Classify(classify);
    if (*annotate_cmd) return Annotate(annotate);
    if (*eval_cmd) return Eval(eval);
    if (*serve_cmd) return Serve(serve);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
