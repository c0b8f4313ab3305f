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

#include "emograph/gcn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/rng.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

namespace {

// Edge kinds folded into adjacency weights; a plain GCN has no edge-feature
// channel.
double kind_multiplier(EdgeKind kind) {
  return kind == EdgeKind::Mention ? 0.8 : 1.0;
}

std::map<NodeId, int> row_index(const Graph& graph) {
  std::map<NodeId, int> index;
  int row = 0;
  for (const auto& [id, state] : graph.nodes()) index[id] = row++;
  return index;
}

// Symmetrized (max of both directions) adjacency with self-connections.
Eigen::MatrixXd self_loop_adjacency(const Graph& graph, bool edge_weighting) {
  const auto index = row_index(graph);
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : graph.edges()) {
    const double value =
        edge_weighting ? e.weight * kind_multiplier(e.kind) : 1.0;
    const int i = index.at(e.source);
    const int j = index.at(e.target);
    a(i, j) = std::max(a(i, j), value);
    a(j, i) = std::max(a(j, i), value);
  }
  return a;
}

int argmax_row(const Eigen::MatrixXd& matrix, Eigen::Index row) {
  int best = 0;
  for (int c = 1; c < matrix.cols(); ++c) {
    if (matrix(row, c) > matrix(row, best)) best = c;
  }
  return best;
}

}  // namespace

std::string_view to_string(LayerKind kind) noexcept {
  return kind == LayerKind::Gcn ? "gcn" : "mean-aggregate";
}

LayerKind layer_kind_from_string(std::string_view text) {
  if (text == "gcn") return LayerKind::Gcn;
  if (text == "mean-aggregate") return LayerKind::MeanAggregate;
  throw ParseError("unknown layer kind: '" + std::string(text) + "'");
}

FeatureMatrix build_features(const Graph& graph) {
  FeatureMatrix features;
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  features.x = Eigen::MatrixXd::Zero(n, kFeatureDim);
  features.labels = Eigen::VectorXi::Zero(n);
  features.row_ids.reserve(graph.node_count());

  int max_frequency = 0;
  for (const auto& [id, state] : graph.nodes())
    max_frequency = std::max(max_frequency, state.post_frequency);

  Eigen::Index row = 0;
  for (const auto& [id, state] : graph.nodes()) {
    if (!state.credibility.has_value())
      throw ContractError("node '" + id + "' has no credibility attribute");
    features.x(row, emotion_index(state.emotion)) = 1.0;
    features.x(row, 3) = *state.credibility;
    features.x(row, 4) =
        max_frequency == 0
            ? 0.0
            : static_cast<double>(state.post_frequency) / max_frequency;
    features.labels(row) = emotion_index(state.emotion);
    features.row_ids.push_back(id);
    ++row;
  }
  return features;
}

Eigen::MatrixXd normalized_adjacency(const Graph& graph, bool edge_weighting) {
  if (graph.node_count() == 0)
    throw ContractError("adjacency requires a nonempty graph");
  Eigen::MatrixXd a = self_loop_adjacency(graph, edge_weighting);
  Eigen::VectorXd inverse_sqrt_degree =
      a.rowwise().sum().array().rsqrt().matrix();
  return inverse_sqrt_degree.asDiagonal() * a *
         inverse_sqrt_degree.asDiagonal();
}

Eigen::MatrixXd mean_aggregation_matrix(const Graph& graph,
                                        bool edge_weighting) {
  if (graph.node_count() == 0)
    throw ContractError("adjacency requires a nonempty graph");
  Eigen::MatrixXd a = self_loop_adjacency(graph, edge_weighting);
  Eigen::VectorXd inverse_degree = a.rowwise().sum().array().inverse().matrix();
  return inverse_degree.asDiagonal() * a;
}

Eigen::MatrixXd propagation_matrix(const Graph& graph, LayerKind kind,
                                   bool edge_weighting) {
  return kind == LayerKind::Gcn
             ? normalized_adjacency(graph, edge_weighting)
             : mean_aggregation_matrix(graph, edge_weighting);
}

Eigen::MatrixXd aggregate_sorted(const Eigen::MatrixXd& m,
                                 const Eigen::MatrixXd& x) {
  const Eigen::Index n = m.rows();
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, d);

  std::vector<Eigen::Index> nonzero;
  std::vector<double> terms;
  for (Eigen::Index i = 0; i < n; ++i) {
    nonzero.clear();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (m(i, k) != 0.0) nonzero.push_back(k);
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      terms.clear();
      for (Eigen::Index k : nonzero) terms.push_back(m(i, k) * x(k, j));
      std::sort(terms.begin(), terms.end());
      double sum = 0.0;
      for (double t : terms) sum += t;
      out(i, j) = sum;
    }
  }
  return out;
}

GcnParams init_params(int input_dim, int hidden, int output_dim,
                      LayerKind kind, std::uint64_t init_seed) {
  if (input_dim < 1 || hidden < 1 || output_dim < 1)
    throw ArgumentError("layer dimensions must be positive");
  GcnParams params;
  params.layer_kind = kind;
  params.w0 = Eigen::MatrixXd::Zero(input_dim, hidden);
  params.w1 = Eigen::MatrixXd::Zero(hidden, output_dim);

  Rng rng(init_seed);
  auto fill_glorot = [&rng](Eigen::MatrixXd& w) {
    const double bound =
        std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j)
        w(i, j) = (rng.uniform() * 2.0 - 1.0) * bound;
    }
  };
  fill_glorot(params.w0);
  fill_glorot(params.w1);
  return params;
}

ForwardCache gcn_forward(const GcnParams& params, const Eigen::MatrixXd& x,
                         const Eigen::MatrixXd& m) {
  if (x.cols() != params.w0.rows())
    throw ContractError("feature dimension " + std::to_string(x.cols()) +
                        " does not match W0 rows " +
                        std::to_string(params.w0.rows()));
  if (m.rows() != m.cols() || m.rows() != x.rows())
    throw ContractError("propagation matrix shape does not match features");

  ForwardCache cache;
  cache.xhat = aggregate_sorted(m, x);
  cache.z1 = cache.xhat * params.w0;
  cache.h1 = cache.z1.cwiseMax(0.0);
  cache.hhat = aggregate_sorted(m, cache.h1);
  cache.logits = cache.hhat * params.w1;
  return cache;
}

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double row_max = logits.row(i).maxCoeff();
    Eigen::ArrayXd shifted = (logits.row(i).array() - row_max).exp();
    out.row(i) = (shifted / shifted.sum()).matrix();
  }
  return out;
}

LossGrads loss_and_gradients(const GcnParams& params, const Eigen::MatrixXd& x,
                             const Eigen::MatrixXd& m,
                             const Eigen::VectorXi& labels,
                             const std::vector<int>& mask) {
  if (mask.empty()) throw ContractError("loss mask selects no nodes");
  for (int i : mask) {
    if (i < 0 || i >= labels.size())
      throw ContractError("mask index out of range: " + std::to_string(i));
  }

  const ForwardCache cache = gcn_forward(params, x, m);
  const Eigen::MatrixXd probabilities = softmax_rows(cache.logits);
  const auto count = static_cast<double>(mask.size());

  double loss = 0.0;
  Eigen::MatrixXd grad_logits =
      Eigen::MatrixXd::Zero(cache.logits.rows(), cache.logits.cols());
  for (int i : mask) {
    const int label = labels(i);
    loss -= std::log(std::max(probabilities(i, label), 1e-300));
    grad_logits.row(i) = probabilities.row(i) / count;
    grad_logits(i, label) -= 1.0 / count;
  }
  loss /= count;

  LossGrads grads;
  grads.loss = loss;
  grads.dw1 = cache.hhat.transpose() * grad_logits;
  const Eigen::MatrixXd grad_hhat = grad_logits * params.w1.transpose();
  const Eigen::MatrixXd mt = m.transpose();
  Eigen::MatrixXd grad_h1 = aggregate_sorted(mt, grad_hhat);
  for (Eigen::Index i = 0; i < grad_h1.rows(); ++i) {
    for (Eigen::Index j = 0; j < grad_h1.cols(); ++j) {
      if (cache.z1(i, j) <= 0.0) grad_h1(i, j) = 0.0;
    }
  }
  grads.dw0 = cache.xhat.transpose() * grad_h1;
  return grads;
}

std::pair<std::vector<int>, std::vector<int>> stratified_split(
    const Eigen::VectorXi& labels, double train_fraction,
    std::uint64_t split_seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ArgumentError("train_fraction must be in (0, 1)");

  std::vector<int> train;
  std::vector<int> test;
  for (int c = 0; c < kNumClasses; ++c) {
    std::vector<int> members;
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
      if (labels(i) == c) members.push_back(static_cast<int>(i));
    }
    if (members.empty()) continue;

    Rng rng(derive_seed(split_seed, 0x51, static_cast<std::uint64_t>(c)));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.uniform_index(i)]);
    }

    auto train_count = static_cast<std::size_t>(std::llround(
        train_fraction * static_cast<double>(members.size())));
    train_count = std::clamp<std::size_t>(train_count, 1, members.size());
    train.insert(train.end(), members.begin(),
                 members.begin() + static_cast<long>(train_count));
    test.insert(test.end(), members.begin() + static_cast<long>(train_count),
                members.end());
  }
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {train, test};
}

TrainResult train(const Graph& graph, const TrainConfig& config) {
  if (config.epochs < 1) throw ArgumentError("epochs must be >= 1");
  if (!(config.lr > 0.0)) throw ArgumentError("learning rate must be > 0");

  const FeatureMatrix features = build_features(graph);
  std::set<int> distinct;
  for (Eigen::Index i = 0; i < features.labels.size(); ++i)
    distinct.insert(features.labels(i));
  if (distinct.size() < 2)
    throw ContractError(
        "degenerate single-class graph: prediction task needs at least two "
        "label classes");

  auto [train_mask, test_mask] = stratified_split(
      features.labels, config.train_fraction, config.split_seed);
  if (test_mask.empty())
    throw ContractError("train_fraction leaves no test nodes");

  const Eigen::MatrixXd m =
      propagation_matrix(graph, config.layer_kind, config.edge_weighting);

  TrainResult result;
  result.model.params = init_params(kFeatureDim, config.hidden, kNumClasses,
                                    config.layer_kind, config.init_seed);
  result.model.edge_weighting = config.edge_weighting;
  result.model.config = config;
  result.report.config = config;
  result.report.train_size = train_mask.size();
  result.report.test_size = test_mask.size();

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    LossGrads grads = loss_and_gradients(result.model.params, features.x, m,
                                         features.labels, train_mask);
    result.report.loss_per_epoch.push_back(grads.loss);
    result.model.params.w0 -= config.lr * grads.dw0;
    result.model.params.w1 -= config.lr * grads.dw1;
  }

  result.report.train_accuracy =
      evaluate(result.model, graph, train_mask).accuracy;
  result.report.test = evaluate(result.model, graph, test_mask);
  return result;
}

EvalMetrics evaluate(const GcnModel& model, const Graph& graph,
                     const std::vector<int>& mask) {
  if (mask.empty()) throw ContractError("evaluation mask selects no nodes");

  const FeatureMatrix features = build_features(graph);
  if (features.x.cols() != model.params.w0.rows())
    throw ContractError("feature layout does not match the fitted model");

  const Eigen::MatrixXd m = propagation_matrix(
      graph, model.params.layer_kind, model.edge_weighting);
  const ForwardCache cache = gcn_forward(model.params, features.x, m);

  std::vector<int> truth;
  std::vector<int> predicted;
  for (int i : mask) {
    if (i < 0 || i >= features.labels.size())
      throw ContractError("mask index out of range: " + std::to_string(i));
    truth.push_back(features.labels(i));
    predicted.push_back(argmax_row(cache.logits, i));
  }
  return metrics_from_predictions(truth, predicted);
}

EvalMetrics cross_domain_eval(const GcnModel& model, const Graph& graph) {
  std::vector<int> all(graph.node_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return evaluate(model, graph, all);
}

EvalMetrics metrics_from_predictions(const std::vector<int>& truth,
                                     const std::vector<int>& predicted) {
  if (truth.size() != predicted.size() || truth.empty())
    throw ContractError("metric inputs must be nonempty and aligned");

  EvalMetrics metrics;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++metrics.confusion[truth[i]][predicted[i]];
    if (truth[i] == predicted[i]) ++correct;
  }
  metrics.accuracy = static_cast<double>(correct) / truth.size();

  double f1_sum = 0.0;
  for (int c = 0; c < kNumClasses; ++c) {
    const std::size_t tp = metrics.confusion[c][c];
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (int o = 0; o < kNumClasses; ++o) {
      if (o == c) continue;
      fp += metrics.confusion[o][c];
      fn += metrics.confusion[c][o];
    }
    ClassMetrics& cm = metrics.per_class[c];
    cm.support = tp + fn;
    cm.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    cm.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    cm.f1 = cm.precision + cm.recall == 0.0
                ? 0.0
                : 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall);
    f1_sum += cm.f1;
  }
  metrics.macro_f1 = f1_sum / kNumClasses;
  return metrics;
}

std::string render_confusion_matrix(const EvalMetrics& metrics) {
  std::ostringstream out;
  out << "true\\pred   positive    neutral   negative\n";
  for (int r = 0; r < kNumClasses; ++r) {
    std::string name(to_string(emotion_from_index(r)));
    out << name << std::string(10 - name.size(), ' ');
    for (int c = 0; c < kNumClasses; ++c) {
      std::string cell = std::to_string(metrics.confusion[r][c]);
      out << std::string(11 - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const ordered_json& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  if (r == 0) throw ParseError("weight matrix has no rows");
  const auto c = static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw ParseError("ragged weight matrix");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

ordered_json config_to_json(const TrainConfig& config) {
  return {{"hidden", config.hidden},
          {"lr", config.lr},
          {"epochs", config.epochs},
          {"split_seed", config.split_seed},
          {"train_fraction", config.train_fraction},
          {"init_seed", config.init_seed},
          {"layer_kind", to_string(config.layer_kind)},
          {"edge_weighting", config.edge_weighting}};
}

TrainConfig config_from_json(const ordered_json& j) {
  TrainConfig config;
  config.hidden = j.at("hidden").get<int>();
  config.lr = j.at("lr").get<double>();
  config.epochs = j.at("epochs").get<int>();
  config.split_seed = j.at("split_seed").get<std::uint64_t>();
  config.train_fraction = j.at("train_fraction").get<double>();
  config.init_seed = j.at("init_seed").get<std::uint64_t>();
  config.layer_kind =
      layer_kind_from_string(j.at("layer_kind").get<std::string>());
  config.edge_weighting = j.at("edge_weighting").get<bool>();
  return config;
}

ordered_json metrics_to_json(const EvalMetrics& metrics) {
  ordered_json per_class = ordered_json::array();
  for (int c = 0; c < kNumClasses; ++c) {
    per_class.push_back(
        {{"label", to_string(emotion_from_index(c))},
         {"precision", metrics.per_class[c].precision},
         {"recall", metrics.per_class[c].recall},
         {"f1", metrics.per_class[c].f1},
         {"support", metrics.per_class[c].support}});
  }
  ordered_json confusion = ordered_json::array();
  for (int r = 0; r < kNumClasses; ++r) {
    confusion.push_back(std::vector<std::size_t>(
        metrics.confusion[r].begin(), metrics.confusion[r].end()));
  }
  return {{"accuracy", metrics.accuracy},
          {"macro_f1", metrics.macro_f1},
          {"per_class", std::move(per_class)},
          {"confusion", std::move(confusion)}};
}

}  // namespace

std::string serialize_model(const GcnModel& model) {
  ordered_json doc;
  doc["layer_kind"] = to_string(model.params.layer_kind);
  doc["shapes"] = {{"w0", {model.params.w0.rows(), model.params.w0.cols()}},
                   {"w1", {model.params.w1.rows(), model.params.w1.cols()}}};
  doc["w0"] = matrix_to_json(model.params.w0);
  doc["w1"] = matrix_to_json(model.params.w1);
  doc["edge_weighting"] = model.edge_weighting;
  doc["config"] = config_to_json(model.config);
  return doc.dump(2) + "\n";
}

GcnModel deserialize_model(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model document is not valid JSON: ") +
                     e.what());
  }
  try {
    GcnModel model;
    model.params.layer_kind =
        layer_kind_from_string(doc.at("layer_kind").get<std::string>());
    model.params.w0 = matrix_from_json(doc.at("w0"));
    model.params.w1 = matrix_from_json(doc.at("w1"));
    model.edge_weighting = doc.at("edge_weighting").get<bool>();
    model.config = config_from_json(doc.at("config"));
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what());
  }
}

void write_model_file(const GcnModel& model,
                      const std::filesystem::path& path) {
  write_text_file(path, serialize_model(model));
}

GcnModel read_model_file(const std::filesystem::path& path) {
  return deserialize_model(read_text_file(path));
}

std::string serialize_train_report(const TrainReport& report) {
  ordered_json doc;
  doc["loss_per_epoch"] = report.loss_per_epoch;
  doc["train_accuracy"] = report.train_accuracy;
  doc["train_size"] = report.train_size;
  doc["test_size"] = report.test_size;
  doc["test"] = metrics_to_json(report.test);
  doc["config"] = config_to_json(report.config);
  return doc.dump(2) + "\n";
}

}  // namespace emograph
