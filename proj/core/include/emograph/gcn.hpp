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

#ifndef EMOGRAPH_GCN_HPP_
#define EMOGRAPH_GCN_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "emograph/graph.hpp"

namespace emograph {

inline constexpr int kFeatureDim = 5;  // emotion one-hot (3) + cred + freq
inline constexpr int kNumClasses = 3;

// Dense node features in ascending-node-id row order. Columns: emotion
// one-hot (class-index order), credibility, post_frequency scaled to [0,1]
// by the maximum.
struct FeatureMatrix {
  Eigen::MatrixXd x;            // n x 5
  Eigen::VectorXi labels;       // emotion class index per row
  std::vector<NodeId> row_ids;  // row -> node id
};

// Throws ContractError naming the node when credibility is missing.
FeatureMatrix build_features(const Graph& graph);

enum class LayerKind { Gcn, MeanAggregate };

std::string_view to_string(LayerKind kind) noexcept;
LayerKind layer_kind_from_string(std::string_view text);

// Symmetric propagation matrix A_hat = D^{-1/2} (A + I) D^{-1/2}, where A is
// the undirected max-of-both-directions adjacency, optionally valued by
// edge weight times a kind multiplier. Rows/columns follow ascending node id.
Eigen::MatrixXd normalized_adjacency(const Graph& graph, bool edge_weighting);

// Row-stochastic variant D^{-1} (A + I) used by the mean-aggregation layer.
Eigen::MatrixXd mean_aggregation_matrix(const Graph& graph,
                                        bool edge_weighting);

Eigen::MatrixXd propagation_matrix(const Graph& graph, LayerKind kind,
                                   bool edge_weighting);

// M * X with each output entry accumulated over value-sorted terms. The sum
// order then depends only on the multiset of term values, so relabeling
// nodes permutes rows of the result bit-exactly.
Eigen::MatrixXd aggregate_sorted(const Eigen::MatrixXd& m,
                                 const Eigen::MatrixXd& x);

struct GcnParams {
  Eigen::MatrixXd w0;  // d x hidden
  Eigen::MatrixXd w1;  // hidden x 3
  LayerKind layer_kind = LayerKind::Gcn;
};

// Glorot-uniform seeded init: entries uniform in +-sqrt(6/(fan_in+fan_out)).
GcnParams init_params(int input_dim, int hidden, int output_dim,
                      LayerKind kind, std::uint64_t init_seed);

struct ForwardCache {
  Eigen::MatrixXd xhat;    // M X
  Eigen::MatrixXd z1;      // M X W0
  Eigen::MatrixXd h1;      // relu(z1)
  Eigen::MatrixXd hhat;    // M h1
  Eigen::MatrixXd logits;  // M h1 W1
};

// Two-layer forward pass: logits = M relu(M X W0) W1.
ForwardCache gcn_forward(const GcnParams& params, const Eigen::MatrixXd& x,
                         const Eigen::MatrixXd& m);

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits);

struct LossGrads {
  double loss = 0.0;
  Eigen::MatrixXd dw0;
  Eigen::MatrixXd dw1;
};

// Mean softmax cross-entropy over the masked rows with analytic
// backpropagation through both layers. Throws ContractError on empty mask.
LossGrads loss_and_gradients(const GcnParams& params, const Eigen::MatrixXd& x,
                             const Eigen::MatrixXd& m,
                             const Eigen::VectorXi& labels,
                             const std::vector<int>& mask);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct EvalMetrics {
  double accuracy = 0.0;
  std::array<ClassMetrics, kNumClasses> per_class{};
  double macro_f1 = 0.0;
  // confusion[true][predicted]
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> confusion{};
};

struct TrainConfig {
  int hidden = 16;
  double lr = 0.05;
  int epochs = 200;
  std::uint64_t split_seed = 1;
  double train_fraction = 0.7;
  std::uint64_t init_seed = 1;
  LayerKind layer_kind = LayerKind::Gcn;
  bool edge_weighting = true;
};

// Fitted parameters plus everything needed to evaluate them elsewhere.
struct GcnModel {
  GcnParams params;
  bool edge_weighting = true;
  TrainConfig config;
};

struct TrainReport {
  std::vector<double> loss_per_epoch;
  double train_accuracy = 0.0;
  EvalMetrics test;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  TrainConfig config;
};

struct TrainResult {
  GcnModel model;
  TrainReport report;
};

// Per-class shuffled split; each class contributes round(fraction * count)
// train nodes (at least one). Deterministic in split_seed.
std::pair<std::vector<int>, std::vector<int>> stratified_split(
    const Eigen::VectorXi& labels, double train_fraction,
    std::uint64_t split_seed);

// Full-batch gradient descent. Refuses single-class graphs with
// ContractError (degenerate task).
TrainResult train(const Graph& graph, const TrainConfig& config);

// Accuracy, per-class precision/recall/F1 (F1 = 0 whenever a class has no
// true positives and either no predictions or no support) and macro-F1 over
// the masked rows.
EvalMetrics evaluate(const GcnModel& model, const Graph& graph,
                     const std::vector<int>& mask);

// Evaluates fitted parameters on every node of another graph, with no
// refitting. Throws ContractError on feature-dimension mismatch.
EvalMetrics cross_domain_eval(const GcnModel& model, const Graph& graph);

// Metric computation on plain label vectors, shared by evaluate and tests.
EvalMetrics metrics_from_predictions(const std::vector<int>& truth,
                                     const std::vector<int>& predicted);

std::string render_confusion_matrix(const EvalMetrics& metrics);

// Model file: JSON {layer kind, shapes, row-major weights, config echo}.
std::string serialize_model(const GcnModel& model);
GcnModel deserialize_model(std::string_view text);
void write_model_file(const GcnModel& model,
                      const std::filesystem::path& path);
GcnModel read_model_file(const std::filesystem::path& path);

std::string serialize_train_report(const TrainReport& report);

}  // namespace emograph

#endif  // EMOGRAPH_GCN_HPP_
