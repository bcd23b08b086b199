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

#include "ssg/corpus_io.h"

#include <fstream>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "ssg/error.h"
#include "ssg/preprocess.h"
#include "ssg/unicode.h"

namespace ssg {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kFormatError,
              fmt::format("corpus line {}: {}", line_no, what));
}

Sentence ParseSentence(const json& value, std::size_t line_no) {
  if (!value.is_array() || value.empty()) {
    Fail(line_no, "sentence must be a non-empty array of tokens");
  }
  Sentence sentence;
  for (const auto& triple : value) {
    if (!triple.is_array() || triple.size() != 3 || !triple[0].is_string() ||
        !triple[1].is_string() || !triple[2].is_boolean()) {
      Fail(line_no, "token must be [surface, lemma, is_stopword]");
    }
    Token token{triple[0].get<std::string>(), triple[1].get<std::string>(),
                triple[2].get<bool>()};
    if (token.lemma.empty()) Fail(line_no, "empty lemma");
    sentence.tokens.push_back(std::move(token));
  }
  sentence.entities = ExtractEntities(sentence.tokens);
  return sentence;
}

}  // namespace

Corpus ReadCorpus(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::Trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      Fail(line_no, e.what());
    }
    if (!record.is_object()) Fail(line_no, "record must be an object");
    const auto id = record.find("id");
    if (id == record.end() || !id->is_string() ||
        id->get_ref<const std::string&>().empty()) {
      Fail(line_no, "missing document id");
    }
    Document doc;
    doc.id = id->get<std::string>();
    if (!seen.insert(doc.id).second) {
      Fail(line_no, fmt::format("duplicate document id '{}'", doc.id));
    }
    const auto sentences = record.find("sentences");
    if (sentences == record.end() || !sentences->is_array() ||
        sentences->empty()) {
      Fail(line_no, fmt::format("document '{}' has no sentences", doc.id));
    }
    for (const auto& value : *sentences) {
      doc.sentences.push_back(ParseSentence(value, line_no));
    }
    RepackIndices(doc);
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

Corpus ReadCorpusFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                fmt::format("cannot open corpus '{}'", path.string()));
  }
  return ReadCorpus(in);
}

std::string DocumentToJsonLine(const Document& doc) {
  json sentences = json::array();
  for (const auto& sentence : doc.sentences) {
    json tokens = json::array();
    for (const auto& token : sentence.tokens) {
      tokens.push_back({token.surface, token.lemma, token.is_stopword});
    }
    sentences.push_back(std::move(tokens));
  }
  json record = {{"id", doc.id}, {"sentences", std::move(sentences)}};
  return record.dump();
}

void WriteCorpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& doc : corpus) out << DocumentToJsonLine(doc) << '\n';
}

}  // namespace ssg
