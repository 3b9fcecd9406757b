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

#include "emotag/server.h"

#include <random>
#include <string>
#include <utility>

#include "emotag/annotator.h"
#include "emotag/error.h"
#include "httplib.h"
#include "json.hpp"

namespace emotag {
namespace {

using ordered_json = nlohmann::ordered_json;

Response JsonResponse(int status, const ordered_json& j) {
  return Response{status, j.dump()};
}

Response ErrorResponse(int status, std::string_view message) {
  return JsonResponse(status, ordered_json{{"error", message}});
}

std::size_t CodePointCount(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

// Media type without parameters, lowercased.
std::string MediaType(std::string_view content_type) {
  std::string type(content_type.substr(0, content_type.find(';')));
  while (!type.empty() && type.back() == ' ') type.pop_back();
  for (char& c : type) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return type;
}

std::string RandomPrefix() {
  std::random_device rd;
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(rd()) << 32) | rd();
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(bits));
  return std::string(buf, 8);
}

void Send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

MailboxCache::MailboxCache(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), prefix_(RandomPrefix()) {}

std::string MailboxCache::Put(Mailbox mailbox) {
  auto shared = std::make_shared<const Mailbox>(std::move(mailbox));
  std::lock_guard<std::mutex> lock(mu_);
  std::string handle = "mb-" + prefix_ + "-" + std::to_string(next_id_++);
  lru_.push_front(Entry{handle, std::move(shared)});
  index_[handle] = lru_.begin();
  while (lru_.size() > capacity_) {
    index_.erase(lru_.back().handle);
    lru_.pop_back();
  }
  return handle;
}

std::shared_ptr<const Mailbox> MailboxCache::Get(std::string_view handle) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = index_.find(std::string(handle));
  if (it == index_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second);
  return it->second->mailbox;
}

bool MailboxCache::Erase(std::string_view handle) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = index_.find(std::string(handle));
  if (it == index_.end()) return false;
  lru_.erase(it->second);
  index_.erase(it);
  return true;
}

std::size_t MailboxCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lru_.size();
}

Service::Service(std::shared_ptr<const Lexicon> lexicon,
                 ServiceOptions options)
    : lexicon_(std::move(lexicon)),
      options_(options),
      cache_(options.cache_size) {}

Response Service::NoLexicon() const {
  return ErrorResponse(503, "no lexicon loaded");
}

Response Service::Health() const {
  if (!lexicon_) {
    return JsonResponse(503, ordered_json{{"status", "unavailable"},
                                          {"error", "no lexicon loaded"}});
  }
  ordered_json classes = ordered_json::array();
  for (const EmotionClass& c : lexicon_->manifest().classes) {
    classes.push_back(
        ordered_json{{"id", c.id}, {"name", c.name}, {"emoji", c.emoji}});
  }
  return JsonResponse(
      200, ordered_json{{"status", "ok"},
                        {"lexicon_version", Lexicon::kFormatVersion},
                        {"manifest_version", lexicon_->manifest().version},
                        {"classes", kNumClasses},
                        {"class_table", classes}});
}

Response Service::Annotate(std::string_view content_type,
                           std::string_view body) {
  if (!lexicon_) return NoLexicon();
  if (MediaType(content_type) != "application/json") {
    return ErrorResponse(415, "content type must be application/json");
  }
  ordered_json request;
  try {
    request = ordered_json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    return ErrorResponse(400, "malformed JSON body");
  }
  if (!request.is_object()) return ErrorResponse(400, "expected an object");
  const bool has_sentences = request.contains("sentences");
  const bool has_ref = request.contains("mbox_ref");
  if (has_sentences == has_ref) {
    return ErrorResponse(400, "exactly one of 'sentences' or 'mbox_ref'");
  }

  ordered_json out = ordered_json::array();
  if (has_sentences) {
    const ordered_json& sentences = request["sentences"];
    if (!sentences.is_array()) {
      return ErrorResponse(400, "'sentences' must be an array of strings");
    }
    if (sentences.size() > options_.max_sentences) {
      return ErrorResponse(413, "too many sentences");
    }
    for (const auto& s : sentences) {
      if (!s.is_string()) {
        return ErrorResponse(400, "'sentences' must be an array of strings");
      }
      if (CodePointCount(s.get_ref<const std::string&>()) >
          options_.max_sentence_chars) {
        return ErrorResponse(413, "sentence too long");
      }
    }
    for (const auto& s : sentences) {
      out.push_back(AnnotatedSentenceToJson(
          AnnotateSentence(s.get_ref<const std::string&>(), *lexicon_)));
    }
    return JsonResponse(200, out);
  }

  if (!request["mbox_ref"].is_string()) {
    return ErrorResponse(400, "'mbox_ref' must be a string");
  }
  const auto mailbox = cache_.Get(request["mbox_ref"].get<std::string>());
  if (!mailbox) return ErrorResponse(404, "unknown mailbox handle");
  for (const EmailDoc& doc : mailbox->messages) {
    out.push_back(
        AnnotatedSentenceToJson(AnnotateSentence(doc.subject, *lexicon_)));
    for (const std::string& s : doc.body_sentences) {
      out.push_back(AnnotatedSentenceToJson(AnnotateSentence(s, *lexicon_)));
    }
  }
  return JsonResponse(200, out);
}

Response Service::UploadMailbox(std::string_view content_type,
                                std::string_view body) {
  if (!lexicon_) return NoLexicon();
  const std::string type = MediaType(content_type);
  if (!type.empty() && type != "application/mbox" &&
      type != "application/octet-stream" && type != "text/plain") {
    return ErrorResponse(
        415, "content type must be application/mbox, "
             "application/octet-stream or text/plain");
  }
  if (body.empty()) return ErrorResponse(400, "empty mailbox");
  if (body.size() > options_.max_mailbox_bytes) {
    return ErrorResponse(413, "mailbox exceeds size limit");
  }
  Mailbox mailbox = ParseMboxText(body, "upload");
  const auto count = mailbox.messages.size();
  const int skipped = mailbox.skipped;
  const std::string handle = cache_.Put(std::move(mailbox));
  return JsonResponse(200, ordered_json{{"handle", handle},
                                        {"message_count", count},
                                        {"skipped", skipped}});
}

Response Service::ListMailbox(std::string_view handle) {
  if (!lexicon_) return NoLexicon();
  const auto mailbox = cache_.Get(handle);
  if (!mailbox) return ErrorResponse(404, "unknown mailbox handle");
  ordered_json out = ordered_json::array();
  for (const EmailDoc& doc : mailbox->messages) {
    out.push_back(ordered_json{
        {"message_id", doc.message_id},
        {"subject",
         AnnotatedSentenceToJson(AnnotateSentence(doc.subject, *lexicon_))}});
  }
  return JsonResponse(200, out);
}

Response Service::GetMessage(std::string_view handle,
                             std::string_view message_id) {
  if (!lexicon_) return NoLexicon();
  const auto mailbox = cache_.Get(handle);
  if (!mailbox) return ErrorResponse(404, "unknown mailbox handle");
  for (const EmailDoc& doc : mailbox->messages) {
    if (doc.message_id == message_id) {
      return JsonResponse(
          200, AnnotatedEmailToJson(AnnotateEmail(doc, *lexicon_)));
    }
  }
  return ErrorResponse(404, "unknown message id");
}

Response Service::DeleteMailbox(std::string_view handle) {
  if (!cache_.Erase(handle)) {
    return ErrorResponse(404, "unknown mailbox handle");
  }
  return JsonResponse(200, ordered_json{{"deleted", handle}});
}

void RegisterRoutes(httplib::Server& server, Service& service) {
  server.set_payload_max_length(service.options().max_mailbox_bytes + 1);
  server.Get("/health", [&service](const httplib::Request&,
                                   httplib::Response& res) {
    Send(res, service.Health());
  });
  server.Post("/annotate", [&service](const httplib::Request& req,
                                      httplib::Response& res) {
    Send(res, service.Annotate(req.get_header_value("Content-Type"),
                               req.body));
  });
  server.Post("/mailbox", [&service](const httplib::Request& req,
                                     httplib::Response& res) {
    Send(res, service.UploadMailbox(req.get_header_value("Content-Type"),
                                    req.body));
  });
  server.Get(R"(/mailbox/([^/]+))", [&service](const httplib::Request& req,
                                                httplib::Response& res) {
    Send(res, service.ListMailbox(req.matches[1].str()));
  });
  server.Get(R"(/mailbox/([^/]+)/(.+))", [&service](const httplib::Request& req,
                                                     httplib::Response& res) {
    Send(res, service.GetMessage(req.matches[1].str(), req.matches[2].str()));
  });
  server.Delete(R"(/mailbox/([^/]+))", [&service](const httplib::Request& req,
                                                   httplib::Response& res) {
    Send(res, service.DeleteMailbox(req.matches[1].str()));
  });
}

}  // namespace emotag
