#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etm/features.hpp"

namespace etm {

struct ForestParams {
  int n_trees = 500;
  int mtry = 0;       // 0 means floor(sqrt(p)) at training time
  int min_node = 2;   // minimum samples to attempt a split
  int max_depth = 0;  // 0 means no cap
  std::uint64_t seed = 0;
  int n_threads = 1;  // tree-level parallelism; results identical regardless
  bool compute_oob = false;
};

// Numeric design matrix, column-major. Categorical covariates arrive here
// already one-hot expanded.
struct DesignMatrix {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> columns;
  std::size_t row_count = 0;

  std::size_t feature_count() const { return columns.size(); }
};

// Expands a CovariateTable into the training schema: numeric and binary
// columns as-is, one indicator column per topic level.
DesignMatrix expand_design(const CovariateTable& table);

DesignMatrix subset_rows(const DesignMatrix& m,
                         const std::vector<std::size_t>& rows);

// Binary decision tree with threshold splits (x <= threshold goes left).
// Leaves keep the training class counts.
struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::uint32_t n_true = 0;
  std::uint32_t n_false = 0;

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;

  // Leaf-majority prediction; a tied leaf votes for the positive class.
  bool predict(const DesignMatrix& data, std::size_t row) const;
  bool predict(std::span<const double> row) const;
};

struct Forest {
  std::vector<std::string> feature_names;
  std::vector<Tree> trees;
  std::optional<double> oob_error;
  std::size_t oob_rows_scored = 0;

  // Majority vote over the trees; an exact tie resolves to true.
  bool predict(const DesignMatrix& data, std::size_t row) const;
  bool predict(std::span<const double> row) const;
  std::vector<std::uint8_t> predict_rows(const DesignMatrix& data) const;
};

// 1 - sum((c_i / total)^2). Throws when both counts are zero.
double gini_impurity(std::uint64_t count_false, std::uint64_t count_true);

// Bootstrap-per-tree CART ensemble: mtry features sampled without
// replacement at every node, best split by exact Gini-decrease comparison,
// splits with no positive decrease become leaves. Per-tree seeds derive from
// params.seed, so the result does not depend on thread scheduling.
Forest train_forest(const DesignMatrix& data,
                    const std::vector<std::uint8_t>& labels,
                    const ForestParams& params);
Forest train_forest(const CovariateTable& table,
                    const std::vector<std::uint8_t>& labels,
                    const ForestParams& params);

// Self-describing text serialization (schema, nodes, thresholds as
// hexfloats for exact round-trips).
void save_forest(const Forest& forest, const std::string& path);
Forest load_forest(const std::string& path);

}  // namespace etm
