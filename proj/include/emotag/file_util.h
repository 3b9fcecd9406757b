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

#ifndef EMOTAG_FILE_UTIL_H_
#define EMOTAG_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace emotag {

// Whole-file helpers; both throw IoError naming the path.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace emotag

#endif  // EMOTAG_FILE_UTIL_H_
