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

#ifndef EMOTAG_PORTER_STEMMER_H_
#define EMOTAG_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace emotag {

// Porter (1980) suffix stripper, following the behaviour of Martin Porter's
// ANSI C reference implementation (the revision that ships the published
// voc.txt/output.txt vectors). Input is expected in lowercase; words of two
// characters or fewer are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace emotag

#endif  // EMOTAG_PORTER_STEMMER_H_
