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

#ifndef EMOTAG_ERROR_H_
#define EMOTAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace emotag {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (manifest, lexicon, thesaurus, corpus, message).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that breaks a domain invariant. `class_id` names the
// offending emotion class when there is one, otherwise 0.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, int class_id = 0)
      : Error(what), class_id_(class_id) {}
  int class_id() const { return class_id_; }

 private:
  int class_id_;
};

// Compiled lexicon written by an incompatible format revision.
class VersionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Raised by a SynonymSource when a lookup cannot be served.
class SynonymSourceError : public Error {
 public:
  SynonymSourceError(const std::string& what, std::string word)
      : Error(what), word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

}  // namespace emotag

#endif  // EMOTAG_ERROR_H_
