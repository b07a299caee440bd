#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etm/corpus.hpp"

namespace etm {

// The most productive exploit authors, ranked by descending exploit count
// with lexicographic tie order.
struct DeveloperRanking {
  struct Entry {
    std::string author;
    std::size_t exploit_count;
  };
  std::vector<Entry> entries;

  // Position of the author in the ranking, or -1.
  int index_of(const std::string& author) const;
};

DeveloperRanking top_developers(const CorpusSet& corpus, std::size_t n = 30);

// Dominant-topic assignments together with the number of topic levels.
struct TopicAssignments {
  std::vector<int> dominant;  // values in [0, k)
  int k = 0;
};

inline constexpr std::size_t kDeveloperDummies = 30;

// Per-exploit covariate rows: 5 numeric columns, 3 + 30 binary columns, and
// two categorical topic columns when topics are enabled (38 covariates
// without topics, 40 with).
struct CovariateTable {
  std::vector<std::string> doc_ids;

  std::vector<double> osvdb_refs;
  std::vector<double> cve_refs;
  std::vector<double> mean_cvss;
  std::vector<double> year;
  std::vector<double> month;

  std::vector<std::uint8_t> verified;
  std::vector<std::uint8_t> application;
  std::vector<std::uint8_t> screenshot;
  std::vector<std::vector<std::uint8_t>> dev;  // kDeveloperDummies columns

  bool has_topics = false;
  int word_topic_levels = 0;
  int term_topic_levels = 0;
  std::vector<int> word_topic;
  std::vector<int> term_topic;

  std::size_t row_count() const { return doc_ids.size(); }
  int covariate_count() const { return has_topics ? 40 : 38; }
};

struct FeatureDiagnostics {
  // CVE ids referenced by some record but absent from the CVSS map,
  // deduplicated and sorted; each is reported exactly once per run.
  std::vector<std::string> missing_cves;
};

// One row per corpus record, in corpus order. Mean CVSS is the arithmetic
// mean over the scored CVE references and exactly 0 when there are no CVE
// references; a referenced CVE without a score contributes nothing. Topic
// columns are included iff both assignment sets are supplied.
CovariateTable build_covariates(
    const CorpusSet& corpus, const CvssMap& cvss,
    const DeveloperRanking& ranking,
    const std::optional<TopicAssignments>& word_topics,
    const std::optional<TopicAssignments>& term_topics,
    FeatureDiagnostics* diag = nullptr);

// CSV export, header row, documented column order: numeric, binary,
// categorical last.
void write_covariates_csv(const CovariateTable& table,
                          const std::string& path);

}  // namespace etm
