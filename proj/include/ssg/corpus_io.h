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

#ifndef SSG_CORPUS_IO_H_
#define SSG_CORPUS_IO_H_

// Canonical corpus: JSON Lines, one document per line.
//
//   {"id":"doc-1","sentences":[[["Коти","кіт",false],["сплять","спати",false]]]}
//
// Each sentence is an array of [surface, lemma, is_stopword] triples. Entity
// sets are not stored; they are recomputed from the tokens on read.
// See docs/FORMATS.md.

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "ssg/document.h"

namespace ssg {

// Throws Error(kFormatError) on malformed records, missing or duplicate ids,
// documents without sentences and sentences without tokens.
Corpus ReadCorpus(std::istream& in);
Corpus ReadCorpusFile(const std::filesystem::path& path);

std::string DocumentToJsonLine(const Document& doc);
void WriteCorpus(std::ostream& out, const Corpus& corpus);

}  // namespace ssg

#endif  // SSG_CORPUS_IO_H_
