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

#ifndef SSG_PREPROCESS_H_
#define SSG_PREPROCESS_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ssg/document.h"

namespace ssg {

// Surface form -> lemma. Keys are stored lowercased, so lookups are
// case-insensitive.
class LemmaDictionary {
 public:
  LemmaDictionary() = default;

  // One "surface<TAB>lemma" pair per line. Blank lines and lines starting
  // with '#' are ignored. Throws Error(kFormatError) on malformed lines.
  static LemmaDictionary Load(std::istream& in);
  static LemmaDictionary LoadFile(const std::filesystem::path& path);

  void Add(std::string_view surface, std::string_view lemma);
  std::optional<std::string_view> Lookup(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::string> entries_;
};

class StopwordList {
 public:
  StopwordList() = default;
  StopwordList(std::initializer_list<std::string_view> words);

  // One word per line; blank lines and '#' comments are ignored.
  static StopwordList Load(std::istream& in);
  static StopwordList LoadFile(const std::filesystem::path& path);

  void Add(std::string_view word);
  // Exact match against the lowercased argument.
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct SplitterOptions {
  // Lowercased, including the trailing period ("табл.", "e.g.").
  std::vector<std::string> abbreviations = DefaultAbbreviations();
  // A single capital letter followed by a period is an initial ("С. Д. Ім'я").
  bool keep_initials = true;

  static std::vector<std::string> DefaultAbbreviations();
};

class SentenceSplitter {
 public:
  SentenceSplitter() : SentenceSplitter(SplitterOptions{}) {}
  explicit SentenceSplitter(const SplitterOptions& options);

  // Splits after a run of terminal punctuation (. ! ? …), optionally
  // followed by closing quotes or brackets, when the next non-space
  // character is an uppercase letter or a digit. Pieces are trimmed and
  // never empty.
  std::vector<std::string> Split(std::string_view text) const;

 private:
  bool IsAbbreviation(std::string_view text, std::size_t period_pos) const;

  std::unordered_set<std::string> abbreviations_;
  bool keep_initials_;
};

std::vector<std::string> SplitSentences(std::string_view text);

// Tokens are maximal letter runs; an apostrophe or hyphen joins two letters.
// Digits, punctuation and everything else separate tokens and are dropped.
std::vector<Token> TokenizeAndLemmatize(std::string_view sentence_text,
                                        const LemmaDictionary& dict,
                                        const StopwordList& stops);

EntitySet ExtractEntities(const std::vector<Token>& tokens);

// Full pipeline. Sentences without tokens are dropped. Throws
// Error(kEmptyDocument) when nothing survives.
Document BuildDocument(std::string id, std::string_view text,
                       const LemmaDictionary& dict, const StopwordList& stops,
                       const SentenceSplitter& splitter = SentenceSplitter());

}  // namespace ssg

#endif  // SSG_PREPROCESS_H_
