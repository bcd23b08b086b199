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

#ifndef SSG_UNICODE_H_
#define SSG_UNICODE_H_

// Minimal UTF-8 helpers covering Latin, Greek and Cyrillic scripts, which is
// what the tokenizer and sentence splitter need for Ukrainian and English.

#include <cstddef>
#include <string>
#include <string_view>

namespace ssg::unicode {

// Decodes the code point starting at text[pos] and advances pos. Malformed
// bytes decode as U+FFFD and consume one byte.
char32_t DecodeNext(std::string_view text, std::size_t& pos);

void AppendUtf8(std::string& out, char32_t cp);

bool IsAlpha(char32_t cp);
bool IsUpper(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);
char32_t ToLower(char32_t cp);

std::string ToLower(std::string_view text);

// Apostrophe variants used inside Ukrainian words: ' U+2019 U+02BC.
bool IsApostrophe(char32_t cp);
bool IsHyphen(char32_t cp);

std::string_view Trim(std::string_view text);

}  // namespace ssg::unicode

#endif  // SSG_UNICODE_H_
