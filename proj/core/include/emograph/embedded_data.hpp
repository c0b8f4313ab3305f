// Copyright 2026 The Emograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOGRAPH_EMBEDDED_DATA_HPP_
#define EMOGRAPH_EMBEDDED_DATA_HPP_

namespace emograph::detail {

// Byte-for-byte copies of core/data/sentiment_lexicon.tsv and
// core/data/stopwords.txt, embedded at build time.
extern const char* const kSentimentLexiconTsv;
extern const char* const kStopwordsTxt;

}  // namespace emograph::detail

#endif  // EMOGRAPH_EMBEDDED_DATA_HPP_
