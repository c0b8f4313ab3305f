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

#ifndef EMOGRAPH_INGEST_HPP_
#define EMOGRAPH_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emograph/graph.hpp"
#include "emograph/sentiment.hpp"

namespace emograph {

// One interaction row: source_user replied to target_user inside post_id.
struct InteractionRecord {
  std::string source_user;
  std::string target_user;
  std::string post_id;
  std::string text;
  std::optional<std::string> processed;
  std::optional<std::string> external_label;  // precomputed sentiment label
  std::optional<double> external_score;
  std::size_t line = 0;  // 1-based input line for diagnostics
};

struct RejectionReport {
  std::size_t missing_field = 0;
  std::size_t empty_text = 0;
  std::size_t duplicate = 0;
  std::vector<std::string> details;  // one line per rejected record

  std::size_t total() const { return missing_field + empty_text + duplicate; }
};

enum class RecordFormat { Csv, Jsonl };

RecordFormat record_format_from_string(std::string_view text);

struct ParsedRecords {
  std::vector<InteractionRecord> records;  // valid rows, input order
  RejectionReport report;
};

// Reads interaction records. CSV uses RFC-4180 quoting with header columns
// source_user,target_user,post_id,text (order free; optional columns:
// processed, vader_score, vader_label, roberta_label, roberta_score). JSONL
// uses the same keys. Rows with missing user/post fields or empty text are
// rejected with a reason; exact duplicate rows are rejected from the second
// occurrence on. Unreadable files and malformed headers are fatal.
ParsedRecords parse_interaction_records(const std::filesystem::path& path,
                                        RecordFormat format);
ParsedRecords parse_interaction_records_text(std::string_view content,
                                             RecordFormat format);

struct IngestOptions {
  // Use precomputed labels from the file instead of the bundled classifier
  // whenever a record carries one.
  bool trust_external_labels = false;
  // Interaction records carry no credibility or susceptibility signal.
  double default_credibility = 0.5;
  double default_susceptibility = 0.5;
};

// Directed real-interaction graph: one node per distinct user, one reply
// edge per record annotated with the record's sentiment label. A node's
// post_frequency counts records it authored; its emotion is the label of its
// most recent authored record (input order), neutral for receive-only users.
// Self-reply records are skipped with a warning.
Graph build_real_graph(const std::vector<InteractionRecord>& records,
                       const SentimentClassifier& classifier,
                       const IngestOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);

// Maps "positive"/"neutral"/"negative" (any case) or the transformer tags
// LABEL_0/1/2 (negative/neutral/positive) onto labels.
std::optional<EmotionLabel> parse_external_label(std::string_view text);

}  // namespace emograph

#endif  // EMOGRAPH_INGEST_HPP_
