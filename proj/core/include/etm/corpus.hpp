#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace etm {

// The four EDB exploit categories.
enum class Category { kDos, kLocal, kRemote, kWeb };

// Binary classification targets: web exploits against the rest, or
// PHP-platform exploits against the rest.
enum class Target { kWeb, kPhp };

// One archived exploit entry: raw text plus database meta-data.
struct ExploitRecord {
  std::string id;
  std::string raw_text;
  Category category = Category::kDos;
  std::string platform;
  bool verified = false;
  bool application_available = false;
  bool screenshot_available = false;
  int osvdb_ref_count = 0;
  std::vector<std::string> cve_ids;  // no duplicates
  std::string author;
  int published_year = 0;
  int published_month = 0;  // 1..12
};

struct CorpusSet {
  std::vector<ExploitRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  // Records with the given ids, in the order the ids are listed.
  // Throws on an unknown id.
  CorpusSet subset(const std::vector<std::string>& ids) const;
};

enum class CorpusFormat { kJsonLines, kCsv };

struct LoadOptions {
  bool lenient = false;  // report invalid records but keep loading
  int min_year = 1988;
  int max_year = 2030;
};

struct LoadDiagnostics {
  std::vector<std::string> warnings;
  std::size_t records_skipped = 0;
};

// Reads a corpus file. In strict mode (default) any invalid record fails the
// whole load with a message naming the offending line; in lenient mode the
// record is skipped and reported through `diag`.
CorpusSet load_corpus(const std::string& path, CorpusFormat format,
                      const LoadOptions& opts = {},
                      LoadDiagnostics* diag = nullptr);

// Maps an EDB category label onto the enum. Labels are trimmed and
// lowercased first; "webapps" is an alias for web.
std::optional<Category> parse_category(std::string_view label);

std::string_view category_name(Category c);
std::string_view target_name(Target t);

// CVE id -> CVSS base score in [0, 10].
struct CvssMap {
  std::unordered_map<std::string, double> entries;

  std::optional<double> score(const std::string& cve_id) const;
};

// Reads a tab-separated `cve_id<TAB>base_score` feed. '#' lines are
// comments. A later row for the same CVE overwrites the earlier one with a
// warning.
CvssMap load_cvss(const std::string& path, LoadDiagnostics* diag = nullptr);

// Binary response: web -> category == web; php -> platform == "php"
// (case-insensitive, trimmed).
bool make_response(const ExploitRecord& record, Target target);

}  // namespace etm
