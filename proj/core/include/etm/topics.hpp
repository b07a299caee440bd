#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etm/textprep.hpp"

namespace etm {

struct LdaParams {
  int k = 10;
  double alpha = 0.0;  // <= 0 means the 50/k default
  double beta = 0.1;
  int iterations = 2000;
  int burn_in = 1500;
  std::uint64_t seed = 0;
  // When set, recount all Gibbs bookkeeping every sweep and throw on any
  // mismatch with the token mass. Slow; meant for tests.
  bool check_invariants = false;

  double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / k; }
  void validate() const;
};

// Fitted LDA state. phi rows and theta rows are probability distributions;
// dominant[d] is the argmax of theta row d with ties broken toward the
// lowest topic index.
struct TopicModel {
  int k = 0;
  std::vector<std::vector<double>> phi;    // k x V
  std::vector<std::vector<double>> theta;  // D x k
  std::vector<int> dominant;               // D
};

struct LdaFitInfo {
  std::vector<std::string> warnings;
  int sweeps_checked = 0;
};

// Collapsed Gibbs sampling over token-topic assignments. phi and theta are
// estimated from smoothed counts averaged over the post-burn-in sweeps.
// Deterministic given the seed. Throws on an empty matrix; k larger than
// the token mass warns and proceeds.
TopicModel fit_lda(const FrequencyMatrix& matrix, const LdaParams& params,
                   LdaFitInfo* info = nullptr);

// Per-document argmax of theta, lowest index on ties. Rows whose maximum
// membership falls below min_membership get -1; the default never triggers.
std::vector<int> dominant_topics(
    const std::vector<std::vector<double>>& theta,
    double min_membership = 0.0);

// Spearman's rank correlation with average ranks for ties. Zero variance in
// either ranked vector has no defined value and yields nullopt.
std::optional<double> spearman_rho(const std::vector<int>& a,
                                   const std::vector<int>& b);

// Diff-friendly text dump of phi, theta and the dominant vector.
void write_topic_model(const TopicModel& model, const std::string& path);

}  // namespace etm
