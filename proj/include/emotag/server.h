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

#ifndef EMOTAG_SERVER_H_
#define EMOTAG_SERVER_H_

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emotag/lexicon.h"
#include "emotag/mailio.h"

namespace httplib {
class Server;
}

namespace emotag {

struct ServiceOptions {
  std::size_t cache_size = 16;
  std::size_t max_mailbox_bytes = 50u << 20;
  std::size_t max_sentences = 1000;
  // Counted in Unicode code points.
  std::size_t max_sentence_chars = 10000;
};

// Parsed mailboxes held in memory only, least recently used evicted first.
// All members are safe to call concurrently.
class MailboxCache {
 public:
  explicit MailboxCache(std::size_t capacity);

  // Returns the new handle. May evict the least recently used entry.
  std::string Put(Mailbox mailbox);
  std::shared_ptr<const Mailbox> Get(std::string_view handle);
  bool Erase(std::string_view handle);
  std::size_t size() const;

 private:
  struct Entry {
    std::string handle;
    std::shared_ptr<const Mailbox> mailbox;
  };

  const std::size_t capacity_;
  const std::string prefix_;
  mutable std::mutex mu_;
  std::uint64_t next_id_ = 1;
  std::list<Entry> lru_;  // front = most recent
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Transport-independent request handlers. The lexicon is shared read-only;
// only the mailbox cache is mutable.
class Service {
 public:
  explicit Service(std::shared_ptr<const Lexicon> lexicon,
                   ServiceOptions options = {});

  // GET /health
  Response Health() const;
  // POST /annotate  {"sentences": [...]} or {"mbox_ref": "<handle>"}
  Response Annotate(std::string_view content_type, std::string_view body);
  // POST /mailbox  raw mbox bytes
  Response UploadMailbox(std::string_view content_type, std::string_view body);
  // GET /mailbox/{handle}
  Response ListMailbox(std::string_view handle);
  // GET /mailbox/{handle}/{message_id}
  Response GetMessage(std::string_view handle, std::string_view message_id);
  // DELETE /mailbox/{handle}
  Response DeleteMailbox(std::string_view handle);

  const ServiceOptions& options() const { return options_; }

 private:
  Response NoLexicon() const;

  std::shared_ptr<const Lexicon> lexicon_;
  ServiceOptions options_;
  MailboxCache cache_;
};

// Routes the endpoints above on `server`. `service` must outlive it.
void RegisterRoutes(httplib::Server& server, Service& service);

}  // namespace emotag

#endif  // EMOTAG_SERVER_H_
