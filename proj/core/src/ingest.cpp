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

#include "emograph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"

namespace emograph {

namespace {

struct CsvRow {
  std::vector<std::string> cells;
  std::size_t line = 0;  // line the row starts on
};

// RFC-4180 reader: quoted cells may contain commas, doubled quotes and
// newlines. Rows are split on LF with optional preceding CR.
std::vector<CsvRow> read_csv(std::string_view content) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < content.size()) {
    CsvRow row;
    row.line = line;
    bool row_done = false;
    while (!row_done) {
      std::string cell;
      if (i < content.size() && content[i] == '"') {
        const std::size_t opened_on = line;
        ++i;
        bool closed = false;
        while (i < content.size()) {
          if (content[i] == '"') {
            if (i + 1 < content.size() && content[i + 1] == '"') {
              cell.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            closed = true;
            break;
          }
          if (content[i] == '\n') ++line;
          cell.push_back(content[i]);
          ++i;
        }
        if (!closed)
          throw ParseError("unterminated quoted cell starting at line " +
                           std::to_string(opened_on));
      } else {
        while (i < content.size() && content[i] != ',' &&
               content[i] != '\n' && content[i] != '\r') {
          cell.push_back(content[i]);
          ++i;
        }
      }
      row.cells.push_back(std::move(cell));

      if (i >= content.size()) {
        row_done = true;
      } else if (content[i] == ',') {
        ++i;
      } else {
        if (content[i] == '\r') ++i;
        if (i < content.size() && content[i] == '\n') {
          ++i;
          ++line;
        }
        row_done = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::string duplicate_key(const InteractionRecord& r) {
  std::ostringstream key;
  key << r.source_user << '\x1f' << r.target_user << '\x1f' << r.post_id
      << '\x1f' << r.text << '\x1f' << r.processed.value_or("") << '\x1f'
      << r.external_label.value_or("");
  return key.str();
}

// Validates one assembled record against the removal rules and either files
// it or counts the rejection.
void admit_record(InteractionRecord record, ParsedRecords& out,
                  std::set<std::string>& seen) {
  const std::string where = "line " + std::to_string(record.line);
  if (record.source_user.empty() || record.target_user.empty() ||
      record.post_id.empty()) {
    ++out.report.missing_field;
    out.report.details.push_back(where + ": missing field");
    return;
  }
  if (is_blank(record.text)) {
    ++out.report.empty_text;
    out.report.details.push_back(where + ": empty text");
    return;
  }
  if (!seen.insert(duplicate_key(record)).second) {
    ++out.report.duplicate;
    out.report.details.push_back(where + ": duplicate");
    return;
  }
  out.records.push_back(std::move(record));
}

ParsedRecords parse_csv_records(std::string_view content) {
  ParsedRecords out;
  const std::vector<CsvRow> rows = read_csv(content);
  if (rows.empty() || (rows.size() == 1 && rows[0].cells.size() == 1 &&
                       rows[0].cells[0].empty()))
    return out;

  std::map<std::string, std::size_t> columns;
  for (std::size_t c = 0; c < rows[0].cells.size(); ++c)
    columns[rows[0].cells[c]] = c;
  for (const char* required :
       {"source_user", "target_user", "post_id", "text"}) {
    if (!columns.contains(required))
      throw ParseError("malformed header at line 1: missing column '" +
                       std::string(required) + "'");
  }

  auto cell = [&](const CsvRow& row, const char* name) -> std::string {
    auto it = columns.find(name);
    if (it == columns.end() || it->second >= row.cells.size()) return "";
    return row.cells[it->second];
  };

  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    // Trailing blank row from a final newline.
    if (row.cells.size() == 1 && row.cells[0].empty()) continue;

    InteractionRecord record;
    record.line = row.line;
    record.source_user = cell(row, "source_user");
    record.target_user = cell(row, "target_user");
    record.post_id = cell(row, "post_id");
    record.text = cell(row, "text");
    if (std::string processed = cell(row, "processed"); !processed.empty())
      record.processed = std::move(processed);
    if (std::string label = cell(row, "roberta_label"); !label.empty())
      record.external_label = std::move(label);
    else if (std::string vader = cell(row, "vader_label"); !vader.empty())
      record.external_label = std::move(vader);
    if (std::string score = cell(row, "roberta_score"); !score.empty()) {
      try {
        record.external_score = std::stod(score);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(row.line) +
                         ": non-numeric roberta_score");
      }
    } else if (std::string vscore = cell(row, "vader_score");
               !vscore.empty()) {
      try {
        record.external_score = std::stod(vscore);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(row.line) +
                         ": non-numeric vader_score");
      }
    }
    admit_record(std::move(record), out, seen);
  }
  return out;
}

ParsedRecords parse_jsonl_records(std::string_view content) {
  ParsedRecords out;
  std::set<std::string> seen;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_number) +
                       " is not valid JSON: " + e.what());
    }
    if (!j.is_object())
      throw ParseError("line " + std::to_string(line_number) +
                       " is not a JSON object");

    auto field = [&](const char* name) -> std::string {
      if (!j.contains(name) || !j[name].is_string()) return "";
      return j[name].get<std::string>();
    };

    InteractionRecord record;
    record.line = line_number;
    record.source_user = field("source_user");
    record.target_user = field("target_user");
    record.post_id = field("post_id");
    record.text = field("text");
    if (std::string processed = field("processed"); !processed.empty())
      record.processed = std::move(processed);
    if (std::string label = field("roberta_label"); !label.empty())
      record.external_label = std::move(label);
    else if (std::string vader = field("vader_label"); !vader.empty())
      record.external_label = std::move(vader);
    if (j.contains("roberta_score") && j["roberta_score"].is_number())
      record.external_score = j["roberta_score"].get<double>();
    else if (j.contains("vader_score") && j["vader_score"].is_number())
      record.external_score = j["vader_score"].get<double>();
    admit_record(std::move(record), out, seen);
  }
  return out;
}

}  // namespace

RecordFormat record_format_from_string(std::string_view text) {
  if (text == "csv") return RecordFormat::Csv;
  if (text == "jsonl") return RecordFormat::Jsonl;
  throw ParseError("unknown record format: '" + std::string(text) + "'");
}

ParsedRecords parse_interaction_records(const std::filesystem::path& path,
                                        RecordFormat format) {
  return parse_interaction_records_text(read_text_file(path), format);
}

ParsedRecords parse_interaction_records_text(std::string_view content,
                                             RecordFormat format) {
  return format == RecordFormat::Csv ? parse_csv_records(content)
                                     : parse_jsonl_records(content);
}

std::optional<EmotionLabel> parse_external_label(std::string_view text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text)
    lower.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "positive" || lower == "label_2") return EmotionLabel::Positive;
  if (lower == "neutral" || lower == "label_1") return EmotionLabel::Neutral;
  if (lower == "negative" || lower == "label_0") return EmotionLabel::Negative;
  return std::nullopt;
}

Graph build_real_graph(const std::vector<InteractionRecord>& records,
                       const SentimentClassifier& classifier,
                       const IngestOptions& options,
                       std::vector<std::string>* warnings) {
  Graph graph(/*directed=*/true, Provenance::Real);

  for (const InteractionRecord& record : records) {
    for (const std::string& user : {record.source_user, record.target_user}) {
      if (!graph.has_node(user)) {
        graph.add_node(NodeState{.id = user,
                                 .credibility = options.default_credibility,
                                 .susceptibility =
                                     options.default_susceptibility});
      }
    }
  }

  for (const InteractionRecord& record : records) {
    EmotionLabel label = EmotionLabel::Neutral;
    std::optional<EmotionLabel> external;
    if (options.trust_external_labels && record.external_label)
      external = parse_external_label(*record.external_label);
    if (external) {
      label = *external;
    } else {
      label = classifier.classify(record.text).label;
    }

    NodeState& author = graph.node(record.source_user);
    ++author.post_frequency;
    author.emotion = label;  // most recent authored record wins

    if (record.source_user == record.target_user) {
      if (warnings != nullptr)
        warnings->push_back("line " + std::to_string(record.line) +
                            ": self-reply from '" + record.source_user +
                            "' skipped");
      continue;
    }

    graph.add_edge(Edge{.source = record.source_user,
                        .target = record.target_user,
                        .kind = EdgeKind::Reply,
                        .weight = 1.0,
                        .text_length = static_cast<int>(record.text.size()),
                        .emotion = label});
  }
  return graph;
}

}  // namespace emograph
