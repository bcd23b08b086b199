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

#include "ssg/preprocess.h"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "ssg/error.h"
#include "ssg/unicode.h"

namespace ssg {

namespace {

bool IsTerminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

bool IsClosing(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' ||
         cp == 0xBB || cp == 0x201D || cp == 0x2019;
}

bool IsOpening(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U'(' || cp == U'[' ||
         cp == 0xAB || cp == 0x201C || cp == 0x201E;
}

bool HasWhitespace(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (unicode::IsSpace(unicode::DecodeNext(text, pos))) return true;
  }
  return false;
}

template <typename Fn>
void ForEachLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = unicode::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    fn(line_no, std::string_view(line), trimmed);
  }
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                fmt::format("cannot open '{}'", path.string()));
  }
  return in;
}

}  // namespace

void RepackIndices(Document& doc) {
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    doc.sentences[i].index = i;
  }
}

LemmaDictionary LemmaDictionary::Load(std::istream& in) {
  LemmaDictionary dict;
  ForEachLine(in, [&](std::size_t line_no, std::string_view line,
                      std::string_view) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kFormatError,
                  fmt::format("lemma dictionary line {}: expected "
                              "'surface<TAB>lemma'", line_no));
    }
    const auto surface = unicode::Trim(line.substr(0, tab));
    const auto lemma = unicode::Trim(line.substr(tab + 1));
    if (surface.empty() || lemma.empty() || HasWhitespace(lemma)) {
      throw Error(ErrorCode::kFormatError,
                  fmt::format("lemma dictionary line {}: empty field or "
                              "whitespace in lemma", line_no));
    }
    dict.Add(surface, lemma);
  });
  return dict;
}

LemmaDictionary LemmaDictionary::LoadFile(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return Load(in);
}

void LemmaDictionary::Add(std::string_view surface, std::string_view lemma) {
  entries_.insert_or_assign(unicode::ToLower(surface), unicode::ToLower(lemma));
}

std::optional<std::string_view> LemmaDictionary::Lookup(
    std::string_view surface) const {
  const auto it = entries_.find(unicode::ToLower(surface));
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

StopwordList::StopwordList(std::initializer_list<std::string_view> words) {
  for (const auto word : words) Add(word);
}

StopwordList StopwordList::Load(std::istream& in) {
  StopwordList stops;
  ForEachLine(in, [&](std::size_t, std::string_view, std::string_view word) {
    stops.Add(word);
  });
  return stops;
}

StopwordList StopwordList::LoadFile(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return Load(in);
}

void StopwordList::Add(std::string_view word) {
  words_.insert(unicode::ToLower(word));
}

bool StopwordList::Contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::vector<std::string> SplitterOptions::DefaultAbbreviations() {
  return {
      // Ukrainian
      "табл.", "рис.", "мал.", "див.", "напр.", "пор.", "ін.", "інш.",
      "т.", "д.", "п.", "ст.", "р.", "рр.", "с.", "св.", "вул.", "м.",
      "обл.", "тис.", "млн.", "млрд.", "грн.", "коп.", "проф.", "акад.",
      "доц.", "канд.", "д-р.", "ім.", "укр.", "англ.", "рос.", "лат.",
      "зб.", "вип.", "вид.", "т.д.", "т.п.", "т.ч.", "зокр.", "прим.",
      "розд.", "підрозд.", "гл.", "арк.", "ред.",
      // English
      "e.g.", "i.e.", "etc.", "vs.", "fig.", "figs.", "tab.", "eq.",
      "eqs.", "no.", "vol.", "pp.", "cf.", "al.", "dr.", "mr.", "mrs.",
      "ms.", "prof.", "sec.", "ch.",
  };
}

SentenceSplitter::SentenceSplitter(const SplitterOptions& options)
    : keep_initials_(options.keep_initials) {
  for (const auto& abbr : options.abbreviations) {
    abbreviations_.insert(unicode::ToLower(abbr));
  }
}

bool SentenceSplitter::IsAbbreviation(std::string_view text,
                                      std::size_t period_pos) const {
  // The candidate runs from the previous whitespace up to and including the
  // period, minus any opening punctuation.
  std::size_t begin = period_pos;
  while (begin > 0) {
    std::size_t start = begin - 1;
    while (start > 0 &&
           (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) {
      --start;
    }
    std::size_t pos = start;
    if (unicode::IsSpace(unicode::DecodeNext(text, pos))) break;
    begin = start;
  }
  std::string_view word = text.substr(begin, period_pos + 1 - begin);
  while (!word.empty()) {
    std::size_t pos = 0;
    const char32_t cp = unicode::DecodeNext(word, pos);
    if (!IsOpening(cp)) break;
    word.remove_prefix(pos);
  }
  if (word.size() <= 1) return false;
  if (abbreviations_.count(unicode::ToLower(word)) > 0) return true;
  if (keep_initials_) {
    std::size_t pos = 0;
    const char32_t cp = unicode::DecodeNext(word, pos);
    if (unicode::IsUpper(cp) && pos == word.size() - 1) return true;
  }
  return false;
}

std::vector<std::string> SentenceSplitter::Split(std::string_view text) const {
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    const auto piece = unicode::Trim(text.substr(begin, end - begin));
    if (!piece.empty()) sentences.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t here = pos;
    const char32_t cp = unicode::DecodeNext(text, pos);
    if (!IsTerminator(cp)) continue;

    std::size_t run_end = pos;
    std::size_t terminators = 1;
    while (run_end < text.size()) {
      std::size_t next = run_end;
      const char32_t c = unicode::DecodeNext(text, next);
      if (IsTerminator(c)) {
        ++terminators;
      } else if (!IsClosing(c)) {
        break;
      }
      run_end = next;
    }

    std::size_t after = run_end;
    bool saw_space = false;
    char32_t following = 0;
    while (after < text.size()) {
      std::size_t next = after;
      following = unicode::DecodeNext(text, next);
      if (!unicode::IsSpace(following)) break;
      saw_space = true;
      after = next;
    }
    pos = run_end;
    if (!saw_space || after >= text.size()) continue;
    if (!unicode::IsUpper(following) && !unicode::IsDigit(following)) continue;
    if (terminators == 1 && cp == U'.' && IsAbbreviation(text, here)) continue;

    emit(start, run_end);
    start = after;
    pos = after;
  }
  emit(start, text.size());
  return sentences;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  static const SentenceSplitter kSplitter;
  return kSplitter.Split(text);
}

std::vector<Token> TokenizeAndLemmatize(std::string_view sentence_text,
                                        const LemmaDictionary& dict,
                                        const StopwordList& stops) {
  std::vector<Token> tokens;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    Token token;
    token.surface = std::move(word);
    word.clear();
    const std::string lowered = unicode::ToLower(token.surface);
    const auto lemma = dict.Lookup(lowered);
    token.lemma = lemma ? std::string(*lemma) : lowered;
    token.is_stopword = stops.Contains(token.lemma) || stops.Contains(lowered);
    tokens.push_back(std::move(token));
  };

  std::size_t pos = 0;
  while (pos < sentence_text.size()) {
    const std::size_t here = pos;
    const char32_t cp = unicode::DecodeNext(sentence_text, pos);
    if (unicode::IsAlpha(cp)) {
      word.append(sentence_text.substr(here, pos - here));
      continue;
    }
    if (!word.empty() && (unicode::IsApostrophe(cp) || unicode::IsHyphen(cp)) &&
        pos < sentence_text.size()) {
      std::size_t next = pos;
      if (unicode::IsAlpha(unicode::DecodeNext(sentence_text, next))) {
        word.append(sentence_text.substr(here, pos - here));
        continue;
      }
    }
    flush();
  }
  flush();
  return tokens;
}

EntitySet ExtractEntities(const std::vector<Token>& tokens) {
  EntitySet entities;
  for (const auto& token : tokens) {
    if (!token.is_stopword) entities.push_back(token.lemma);
  }
  std::sort(entities.begin(), entities.end());
  entities.erase(std::unique(entities.begin(), entities.end()),
                 entities.end());
  return entities;
}

Document BuildDocument(std::string id, std::string_view text,
                       const LemmaDictionary& dict, const StopwordList& stops,
                       const SentenceSplitter& splitter) {
  Document doc;
  doc.id = std::move(id);
  for (const auto& piece : splitter.Split(text)) {
    Sentence sentence;
    sentence.tokens = TokenizeAndLemmatize(piece, dict, stops);
    if (sentence.tokens.empty()) continue;
    sentence.entities = ExtractEntities(sentence.tokens);
    doc.sentences.push_back(std::move(sentence));
  }
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                fmt::format("document '{}' has no sentence with tokens",
                            doc.id));
  }
  RepackIndices(doc);
  return doc;
}

}  // namespace ssg
