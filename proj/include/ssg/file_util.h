// Copyright 2026 The SSG Coherence Authors.
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

#ifndef SSG_FILE_UTIL_H_
#define SSG_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace ssg {

// Writes to "<path>.tmp" and renames over `path`, so readers never observe
// a partially written file. Throws Error(kIoError).
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace ssg

#endif  // SSG_FILE_UTIL_H_
