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

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/ingest.hpp"
#include "emograph/metrics.hpp"
#include "emograph/rng.hpp"
#include "emograph/text_normalize.hpp"

using namespace emograph;

namespace {

const SentimentClassifier& classifier() {
  static const SentimentClassifier instance;
  return instance;
}

std::string fixture(const char* name) {
  return std::string(EMOGRAPH_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("fixture parses with the hand-counted rejection report") {
  ParsedRecords parsed = parse_interaction_records(
      fixture("reddit_interactions.csv"), RecordFormat::Csv);
  CHECK(parsed.records.size() == 10);
  CHECK(parsed.report.missing_field == 1);
  CHECK(parsed.report.empty_text == 1);
  CHECK(parsed.report.duplicate == 1);
  CHECK(parsed.report.total() == 3);

  // Quoted cells keep their embedded commas.
  CHECK(parsed.records[3].text == "Great news, I love this outcome");
  // Line numbers point at the raw file (header is line 1).
  CHECK(parsed.records[0].line == 2);
  REQUIRE(parsed.report.details.size() == 3);
  CHECK(parsed.report.details[0].find("line 12") != std::string::npos);
  CHECK(parsed.report.details[0].find("missing field") != std::string::npos);
  CHECK(parsed.report.details[1].find("empty text") != std::string::npos);
  CHECK(parsed.report.details[2].find("duplicate") != std::string::npos);

  // External labels ride along.
  REQUIRE(parsed.records[0].external_label.has_value());
  CHECK(*parsed.records[0].external_label == "LABEL_2");
  CHECK(parsed.records[0].external_score ==
        doctest::Approx(0.5849699378013611));
}

TEST_CASE("csv parsing failure modes") {
  CHECK_THROWS_AS(
      parse_interaction_records("/nonexistent/file.csv", RecordFormat::Csv),
      IoError);
  CHECK_THROWS_WITH_AS(
      parse_interaction_records_text("source_user,target_user\n",
                                     RecordFormat::Csv),
      doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_interaction_records_text(
          "source_user,target_user,post_id,text\na,b,p,\"unterminated\n",
          RecordFormat::Csv),
      doctest::Contains("line 2"), ParseError);

  ParsedRecords empty =
      parse_interaction_records_text("", RecordFormat::Csv);
  CHECK(empty.records.empty());
  CHECK(empty.report.total() == 0);
}

TEST_CASE("jsonl records parse with the same rules") {
  const char* jsonl =
      R"({"source_user":"a","target_user":"b","post_id":"p1","text":"good stuff"})"
      "\n"
      R"({"source_user":"a","target_user":"","post_id":"p2","text":"x"})"
      "\n"
      R"({"source_user":"a","target_user":"b","post_id":"p3","text":"","roberta_label":"LABEL_0"})"
      "\n"
      R"({"source_user":"a","target_user":"b","post_id":"p1","text":"good stuff"})"
      "\n";
  ParsedRecords parsed =
      parse_interaction_records_text(jsonl, RecordFormat::Jsonl);
  CHECK(parsed.records.size() == 1);
  CHECK(parsed.report.missing_field == 1);
  CHECK(parsed.report.empty_text == 1);
  CHECK(parsed.report.duplicate == 1);

  CHECK_THROWS_AS(
      parse_interaction_records_text("{broken\n", RecordFormat::Jsonl),
      ParseError);
  CHECK_THROWS_AS(record_format_from_string("xml"), ParseError);
}

TEST_CASE("external label mapping") {
  CHECK(parse_external_label("positive") == EmotionLabel::Positive);
  CHECK(parse_external_label("NEGATIVE") == EmotionLabel::Negative);
  CHECK(parse_external_label("LABEL_0") == EmotionLabel::Negative);
  CHECK(parse_external_label("LABEL_1") == EmotionLabel::Neutral);
  CHECK(parse_external_label("LABEL_2") == EmotionLabel::Positive);
  CHECK_FALSE(parse_external_label("unknown").has_value());
}

TEST_CASE("build_real_graph: fixture hand counts") {
  ParsedRecords parsed = parse_interaction_records(
      fixture("reddit_interactions.csv"), RecordFormat::Csv);
  std::vector<std::string> warnings;
  Graph graph =
      build_real_graph(parsed.records, classifier(), {}, &warnings);

  CHECK(graph.node_count() == 6);
  CHECK(graph.edge_count() == 10);
  CHECK(graph.directed());
  CHECK(graph.provenance() == Provenance::Real);
  CHECK(warnings.empty());

  // post_frequency sums to the accepted record count.
  std::size_t frequency_sum = 0;
  for (const auto& [id, state] : graph.nodes())
    frequency_sum += state.post_frequency;
  CHECK(frequency_sum == 10);
  CHECK(graph.node("worldnews_mod").post_frequency == 0);

  // Receive-only users stay neutral; authors take their latest label.
  CHECK(graph.node("worldnews_mod").emotion == EmotionLabel::Neutral);
  CHECK(graph.node("alice").emotion == EmotionLabel::Neutral);
  CHECK(graph.node("bob").emotion == EmotionLabel::Positive);
  CHECK(graph.node("dave").emotion == EmotionLabel::Negative);
  CHECK(graph.node("emma").emotion == EmotionLabel::Positive);

  // Every edge carries a label.
  for (const Edge& e : graph.edges()) {
    REQUIRE(e.emotion.has_value());
    CHECK(e.kind == EdgeKind::Reply);
  }
  // Bundled classifier reads record 1 as negative.
  CHECK(*graph.edges()[0].emotion == EmotionLabel::Negative);
}

TEST_CASE("build_real_graph: trust-external mode uses file labels") {
  ParsedRecords parsed = parse_interaction_records(
      fixture("reddit_interactions.csv"), RecordFormat::Csv);
  IngestOptions options;
  options.trust_external_labels = true;
  Graph graph = build_real_graph(parsed.records, classifier(), options);
  // Record 1 says LABEL_2 even though the lexicon reads it negative.
  CHECK(*graph.edges()[0].emotion == EmotionLabel::Positive);
  // Records without an external label still use the classifier.
  CHECK(*graph.edges()[1].emotion == EmotionLabel::Negative);
}

TEST_CASE("build_real_graph: single record and self-replies") {
  std::vector<InteractionRecord> records;
  records.push_back({.source_user = "A",
                     .target_user = "B",
                     .post_id = "p",
                     .text = "good",
                     .line = 2});
  Graph pair = build_real_graph(records, classifier());
  CHECK(pair.node_count() == 2);
  CHECK(pair.edge_count() == 1);
  CHECK(reciprocity(pair) == 0.0);

  records.push_back({.source_user = "A",
                     .target_user = "A",
                     .post_id = "p2",
                     .text = "talking to myself",
                     .line = 3});
  std::vector<std::string> warnings;
  Graph with_self = build_real_graph(records, classifier(), {}, &warnings);
  CHECK(with_self.edge_count() == 1);  // self-reply skipped
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("self-reply") != std::string::npos);
  // The self-reply still counts as an authored post.
  CHECK(with_self.node("A").post_frequency == 2);
}

TEST_CASE("ingestion is deterministic byte-for-byte") {
  ParsedRecords a = parse_interaction_records(
      fixture("reddit_interactions.csv"), RecordFormat::Csv);
  ParsedRecords b = parse_interaction_records(
      fixture("reddit_interactions.csv"), RecordFormat::Csv);
  CHECK(serialize_graph(build_real_graph(a.records, classifier())) ==
        serialize_graph(build_real_graph(b.records, classifier())));
}

TEST_CASE("normalize_text pipeline") {
  CHECK(normalize_text("").empty());
  CHECK(normalize_text("   \t\n ").empty());

  NormalizedText tokens = normalize_text("Check https://x.com NOW");
  CHECK(tokens == NormalizedText{"check"});

  // URLs, digits and punctuation never survive.
  for (const std::string& token :
       normalize_text("Visit www.site.org/path?q=1 and read 42 stories!!")) {
    CHECK(!token.empty());
    for (char c : token) {
      CHECK(std::isalpha(static_cast<unsigned char>(c)));
      CHECK(std::islower(static_cast<unsigned char>(c)));
    }
    CHECK(token.find("www") == std::string::npos);
  }

  // Stopwords are gone even when stemming lands on one.
  CHECK(normalize_text("the and was being").empty());
  CHECK(normalize_text("beings").empty());
}

TEST_CASE("stemmer rules and fixpoint behavior") {
  CHECK(stem_token("flies") == "fly");
  CHECK(stem_token("studies") == "study");
  CHECK(stem_token("caresses") == "caress");
  CHECK(stem_token("running") == "runn");
  CHECK(stem_token("agreed") == "agre");
  CHECK(stem_token("stories") == "story");
  CHECK(stem_token("class") == "class");    // double-s guard
  CHECK(stem_token("is") == "is");          // too short to strip
  CHECK(stem_token("words") == "word");
  CHECK(stem_token("supposedly") == "suppo");
  // Fixpoint: stemming its own output changes nothing.
  for (const char* token :
       {"flies", "families", "running", "classes", "beings", "hopelessly"}) {
    const std::string once = stem_token(token);
    CHECK(stem_token(once) == once);
  }
}

TEST_CASE("normalization is idempotent on random strings") {
  Rng rng(404);
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ "
      "0123456789.,!?:/#@'\"-_ ";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const std::size_t length = rng.uniform_index(60);
    for (std::size_t i = 0; i < length; ++i)
      text.push_back(alphabet[rng.uniform_index(alphabet.size())]);
    if (trial % 5 == 0) text += " https://example.com/x?q=1";
    if (trial % 7 == 0) text += " running flies classes beings";

    NormalizedText once = normalize_text(text);
    std::string joined = std::accumulate(
        once.begin(), once.end(), std::string(),
        [](std::string acc, const std::string& token) {
          return acc.empty() ? token : std::move(acc) + " " + token;
        });
    CHECK(normalize_text(joined) == once);
  }
}

TEST_CASE("stopword list is bundled and versioned") {
  const auto& stopwords = stopword_set();
  CHECK(stopwords.size() > 100);
  CHECK(stopwords.contains("the"));
  CHECK(stopwords.contains("now"));
  CHECK(!stopwords.contains("terrible"));
}
